#include "cwt/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "cwt/errors.hpp"
#include "cwt/parallel.hpp"

namespace cwt {

namespace detail {

namespace {

struct PlanKey {
    std::array<int, kMaxGridDim> dims;
    int rank;
    int sign;
    bool operator<(const PlanKey& o) const {
        if (rank != o.rank) return rank < o.rank;
        if (sign != o.sign) return sign < o.sign;
        return dims < o.dims;
    }
};

// FFTW planning is not thread-safe; executing a cached plan on fresh
// fftw_malloc'ed buffers via fftw_execute_dft is.
class PlanCache {
public:
    fftw_plan get(const GridSpec& spec, int sign, fftw_complex* in, fftw_complex* out) {
        PlanKey key{};
        key.rank = spec.dim();
        key.sign = sign;
        for (int a = 0; a < spec.dim(); ++a) key.dims[a] = spec.size(a);
        std::lock_guard lock(mutex_);
        auto it = plans_.find(key);
        if (it == plans_.end()) {
            fftw_plan plan = fftw_plan_dft(key.rank, key.dims.data(), in, out, sign, FFTW_ESTIMATE);
            if (!plan) throw Error("fftw_plan_dft failed");
            it = plans_.emplace(key, plan).first;
        }
        return it->second;
    }

    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::mutex mutex_;
    std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& plan_cache() {
    static PlanCache cache;
    return cache;
}

struct FftwBuffer {
    explicit FftwBuffer(std::size_t n)
        : data(static_cast<fftw_complex*>(fftw_malloc(n * sizeof(fftw_complex)))) {
        if (!data) throw std::bad_alloc();
    }
    ~FftwBuffer() { fftw_free(data); }
    FftwBuffer(const FftwBuffer&) = delete;
    FftwBuffer& operator=(const FftwBuffer&) = delete;
    fftw_complex* data;
};

}  // namespace

void fft(const GridSpec& spec, const std::complex<double>* in, std::complex<double>* out,
         int sign) {
    const std::size_t n = spec.total_size();
    FftwBuffer a(n), b(n);
    std::copy(in, in + n, reinterpret_cast<std::complex<double>*>(a.data));
    fftw_plan plan = plan_cache().get(spec, sign == 1 ? FFTW_BACKWARD : FFTW_FORWARD, a.data, b.data);
    fftw_execute_dft(plan, a.data, b.data);
    std::copy(reinterpret_cast<std::complex<double>*>(b.data),
              reinterpret_cast<std::complex<double>*>(b.data) + n, out);
}

}  // namespace detail

namespace {

// Parity of the raw index sum; carries the phase from the -L grid origin.
double origin_phase(const GridSpec& spec, std::size_t flat) {
    int idx[kMaxGridDim];
    spec.unflatten(flat, idx);
    int parity = 0;
    for (int a = 0; a < spec.dim(); ++a) parity ^= (idx[a] & 1);
    return parity ? -1.0 : 1.0;
}

}  // namespace

GridFunction dft(const GridFunction& f) {
    if (f.domain() != Domain::Spatial) throw DomainError("dft: expected spatial input");
    GridFunction out(f.spec(), Domain::Frequency);
    detail::fft(f.spec(), f.values().data(), out.values().data(), +1);
    const double scale = f.spec().cell_volume();
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out[i] *= scale * origin_phase(f.spec(), i);
    return out;
}

GridFunction idft(const GridFunction& F) {
    if (F.domain() != Domain::Frequency) throw DomainError("idft: expected frequency input");
    GridFunction phased = F;
    const std::size_t n = F.size();
    for (std::size_t i = 0; i < n; ++i) phased[i] *= origin_phase(F.spec(), i);
    GridFunction out(F.spec(), Domain::Spatial);
    detail::fft(F.spec(), phased.values().data(), out.values().data(), -1);
    const double scale = 1.0 / F.spec().box_volume();
    for (auto& v : out.values()) v *= scale;
    return out;
}

GridFunction apply_multiplier_values(const GridFunction& f,
                                     std::span<const std::complex<double>> m) {
    if (f.domain() != Domain::Spatial) throw DomainError("apply_multiplier: expected spatial input");
    const std::size_t n = f.size();
    if (m.size() != n) throw SpecMismatch("apply_multiplier: multiplier table size mismatch");
    std::vector<std::complex<double>> work(n);
    detail::fft(f.spec(), f.values().data(), work.data(), +1);
    for (std::size_t i = 0; i < n; ++i) work[i] *= m[i];
    GridFunction out(f.spec(), Domain::Spatial);
    detail::fft(f.spec(), work.data(), out.values().data(), -1);
    const double scale = 1.0 / static_cast<double>(n);
    for (auto& v : out.values()) v *= scale;
    return out;
}

GridFunction apply_multiplier(const GridFunction& f, const SpectralMultiplier& m) {
    if (!m.eval) throw DomainError("apply_multiplier: multiplier has no eval function");
    if (m.singular_at_zero && !m.zero_frequency_policy)
        throw SingularZeroFrequency("apply_multiplier: singular multiplier without zero-frequency policy");

    const GridSpec& spec = f.spec();
    const std::size_t n = spec.total_size();
    std::vector<std::complex<double>> table(n);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        double xi[kMaxGridDim];
        for (std::size_t i = begin; i < end; ++i) {
            spec.frequency_point(i, xi);
            bool zero = true;
            for (int a = 0; a < spec.dim(); ++a) zero = zero && xi[a] == 0.0;
            if (zero && m.zero_frequency_policy) {
                table[i] = *m.zero_frequency_policy;
            } else {
                table[i] = m.eval(std::span<const double>(xi, spec.dim()));
            }
        }
    });

    const bool real_input = f.is_real(1e-13);
    GridFunction out = apply_multiplier_values(f, table);
    if (real_input && out.max_imag_abs() > 1e-10 * std::max(f.max_abs(), 1e-300)) {
        warn("NonHermitianMultiplier: real input produced imaginary part above 1e-10*||f||_inf");
    }
    return out;
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
    if (!(f.spec() == g.spec())) throw SpecMismatch("convolve: mismatched grids");
    if (f.domain() != Domain::Spatial || g.domain() != Domain::Spatial)
        throw DomainError("convolve: expected spatial inputs");
    const GridSpec& spec = f.spec();
    const std::size_t n = spec.total_size();
    std::vector<std::complex<double>> fa(n), gb(n);
    detail::fft(spec, f.values().data(), fa.data(), +1);
    detail::fft(spec, g.values().data(), gb.data(), +1);
    for (std::size_t i = 0; i < n; ++i) fa[i] *= gb[i] * origin_phase(spec, i);
    GridFunction out(spec, Domain::Spatial);
    detail::fft(spec, fa.data(), out.values().data(), -1);
    const double scale = spec.cell_volume() / static_cast<double>(n);
    for (auto& v : out.values()) v *= scale;
    return out;
}

std::vector<double> frequency_table(const GridSpec& spec,
                                    const std::function<double(std::span<const double>)>& fn) {
    const std::size_t n = spec.total_size();
    std::vector<double> table(n);
    parallel_for(n, [&](std::size_t begin, std::size_t end) {
        double xi[kMaxGridDim];
        for (std::size_t i = begin; i < end; ++i) {
            spec.frequency_point(i, xi);
            table[i] = fn(std::span<const double>(xi, spec.dim()));
        }
    });
    return table;
}

}  // namespace cwt
