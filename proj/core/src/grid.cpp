#include "cwt/grid.hpp"

#include <cmath>

#include "cwt/errors.hpp"

namespace cwt {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

GridSpec::GridSpec(std::span<const int> sizes, std::span<const double> box_halfwidth) {
    if (sizes.empty() || sizes.size() > kMaxGridDim)
        throw DomainError("GridSpec: dim must be 1..4");
    if (sizes.size() != box_halfwidth.size())
        throw DomainError("GridSpec: sizes/box_halfwidth length mismatch");
    dim_ = static_cast<int>(sizes.size());
    for (int a = 0; a < dim_; ++a) {
        if (!power_of_two(sizes[a]) || sizes[a] < 8)
            throw DomainError("GridSpec: sizes must be powers of two >= 8");
        if (!(box_halfwidth[a] > 0))
            throw DomainError("GridSpec: box halfwidth must be positive");
        sizes_[a] = sizes[a];
        half_[a] = box_halfwidth[a];
    }
}

GridSpec::GridSpec(std::initializer_list<int> sizes, std::initializer_list<double> box_halfwidth)
    : GridSpec(std::span<const int>(sizes.begin(), sizes.size()),
               std::span<const double>(box_halfwidth.begin(), box_halfwidth.size())) {}

std::size_t GridSpec::total_size() const {
    std::size_t n = 1;
    for (int a = 0; a < dim_; ++a) n *= static_cast<std::size_t>(sizes_[a]);
    return n;
}

double GridSpec::cell_volume() const {
    double v = 1;
    for (int a = 0; a < dim_; ++a) v *= spacing(a);
    return v;
}

double GridSpec::box_volume() const {
    double v = 1;
    for (int a = 0; a < dim_; ++a) v *= 2.0 * half_[a];
    return v;
}

void GridSpec::unflatten(std::size_t flat, int* indices) const {
    for (int a = dim_ - 1; a >= 0; --a) {
        indices[a] = static_cast<int>(flat % sizes_[a]);
        flat /= sizes_[a];
    }
}

std::size_t GridSpec::flatten(std::span<const int> indices) const {
    std::size_t flat = 0;
    for (int a = 0; a < dim_; ++a) flat = flat * sizes_[a] + static_cast<std::size_t>(indices[a]);
    return flat;
}

void GridSpec::point(std::size_t flat, double* x) const {
    int idx[kMaxGridDim];
    unflatten(flat, idx);
    for (int a = 0; a < dim_; ++a) x[a] = coordinate(a, idx[a]);
}

void GridSpec::frequency_point(std::size_t flat, double* xi) const {
    int idx[kMaxGridDim];
    unflatten(flat, idx);
    for (int a = 0; a < dim_; ++a) xi[a] = frequency(a, idx[a]);
}

bool GridSpec::operator==(const GridSpec& other) const {
    if (dim_ != other.dim_) return false;
    for (int a = 0; a < dim_; ++a)
        if (sizes_[a] != other.sizes_[a] || half_[a] != other.half_[a]) return false;
    return true;
}

GridFunction::GridFunction(GridSpec spec, Domain domain)
    : spec_(spec), domain_(domain), values_(spec.total_size()) {}

GridFunction GridFunction::sample(
    const GridSpec& spec,
    const std::function<std::complex<double>(std::span<const double>)>& f) {
    GridFunction out(spec, Domain::Spatial);
    const std::size_t n = spec.total_size();
    double x[kMaxGridDim];
    for (std::size_t i = 0; i < n; ++i) {
        spec.point(i, x);
        out.values_[i] = f(std::span<const double>(x, spec.dim()));
    }
    return out;
}

GridFunction GridFunction::sample_real(const GridSpec& spec,
                                       const std::function<double(std::span<const double>)>& f) {
    return sample(spec, [&f](std::span<const double> x) {
        return std::complex<double>(f(x), 0.0);
    });
}

double GridFunction::max_abs() const {
    double m = 0;
    for (const auto& v : values_) m = std::max(m, std::abs(v));
    return m;
}

double GridFunction::max_imag_abs() const {
    double m = 0;
    for (const auto& v : values_) m = std::max(m, std::abs(v.imag()));
    return m;
}

bool GridFunction::is_real(double rel_tol) const {
    return max_imag_abs() <= rel_tol * std::max(max_abs(), 1e-300);
}

std::complex<double> GridFunction::mean() const {
    std::complex<double> sum = 0;
    for (const auto& v : values_) sum += v;
    return sum / static_cast<double>(values_.size());
}

GridFunction& GridFunction::subtract_mean() {
    const std::complex<double> m = mean();
    for (auto& v : values_) v -= m;
    return *this;
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
    if (!(spec_ == other.spec_)) throw SpecMismatch("GridFunction: mismatched grids");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
    if (!(spec_ == other.spec_)) throw SpecMismatch("GridFunction: mismatched grids");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

GridFunction& GridFunction::operator*=(std::complex<double> scale) {
    for (auto& v : values_) v *= scale;
    return *this;
}

double norms(const GridFunction& f, NormKind p) {
    if (f.domain() != Domain::Spatial) throw DomainError("norms: expected spatial function");
    switch (p) {
        case NormKind::L1: {
            double s = 0;
            for (const auto& v : f.values()) s += std::abs(v);
            return s * f.spec().cell_volume();
        }
        case NormKind::L2: {
            double s = 0;
            for (const auto& v : f.values()) s += std::norm(v);
            return std::sqrt(s * f.spec().cell_volume());
        }
        case NormKind::LInf:
            return f.max_abs();
    }
    return 0;
}

double rel_l2_error(const GridFunction& got, const GridFunction& want) {
    if (!(got.spec() == want.spec())) throw SpecMismatch("rel_l2_error: mismatched grids");
    double num = 0, den = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num += std::norm(got[i] - want[i]);
        den += std::norm(want[i]);
    }
    return std::sqrt(num / std::max(den, 1e-300));
}

double rel_linf_error(const GridFunction& got, const GridFunction& want) {
    if (!(got.spec() == want.spec())) throw SpecMismatch("rel_linf_error: mismatched grids");
    double num = 0, den = 0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        num = std::max(num, std::abs(got[i] - want[i]));
        den = std::max(den, std::abs(want[i]));
    }
    return num / std::max(den, 1e-300);
}

}  // namespace cwt
