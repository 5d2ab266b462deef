#include "cwt/semigroups.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "cwt/errors.hpp"
#include "cwt/special_functions.hpp"
#include "cwt/spectral.hpp"

namespace cwt {

namespace {

double norm2(std::span<const double> v) {
    double s = 0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

bool even_integer(double beta) {
    const double half = beta / 2.0;
    return std::abs(half - std::round(half)) < 1e-12 && std::round(half) >= 1;
}

int next_pow2(double x) {
    int n = 8;
    while (n < x) n *= 2;
    return n;
}

}  // namespace

SemigroupFamily SemigroupFamily::beta_family(double beta, int n) {
    if (!(beta > 0)) throw DomainError("SemigroupFamily: beta must be positive");
    return {SemigroupKind::Beta, beta, n};
}

double semigroup_sigma(const SemigroupFamily& family, double xi_norm) {
    switch (family.kind) {
        case SemigroupKind::Poisson:
            return xi_norm;
        case SemigroupKind::GaussWeierstrass:
            return xi_norm * xi_norm;
        case SemigroupKind::Metaharmonic:
            return std::sqrt(1.0 + xi_norm * xi_norm);
        case SemigroupKind::Beta:
            return std::pow(xi_norm, family.beta);
    }
    return 0;
}

double semigroup_sigma(const SemigroupFamily& family, std::span<const double> xi) {
    return semigroup_sigma(family, norm2(xi));
}

double beta_tail_constant(double beta, int dim) {
    if (!(beta > 0)) throw DomainError("beta_tail_constant: beta must be positive");
    if (even_integer(beta)) return 0.0;
    return -std::pow(2.0, beta) * std::pow(M_PI, -0.5 * dim) *
           gamma_fn(0.5 * (dim + beta)) / gamma_fn(-0.5 * beta);
}

BetaKernelTable beta_kernel(double beta, int dim, const BetaKernelParams& params) {
    if (!(beta > 0)) throw DomainError("beta_kernel: beta must be positive");
    if (dim < 1 || dim > 3) throw DomainError("beta_kernel: dim must be 1..3");
    if (!(params.tail_radius > 0)) throw DomainError("beta_kernel: tail_radius must be positive");

    // Box size: at least 4x the tail radius, enlarged until the periodic
    // images c_beta (2L - R)^{-n-beta} fit inside the absolute-error budget.
    const double c_abs = std::abs(beta_tail_constant(beta, dim));
    double L = 4.0 * params.tail_radius;
    if (c_abs > 0) {
        const double needed =
            std::pow(4.0 * c_abs / params.abs_tol, 1.0 / (dim + beta)) + params.tail_radius;
        L = std::max(L, 0.5 * needed);
    }

    // Frequency cutoff: e^{-ximax^beta} below 1e-18 (1e-14 for dim >= 2).
    const double log_cut = dim == 1 ? 18.0 : 14.0;
    const double xi_max = std::pow(log_cut * std::log(10.0), 1.0 / beta);
    double points = std::max(2.0 * L * xi_max / M_PI, 2.0 * L * params.oversampling);
    const std::size_t per_axis_cap =
        dim == 1 ? params.max_points : (dim == 2 ? 2048 : 256);
    int n = next_pow2(points);
    if (static_cast<std::size_t>(n) > per_axis_cap)
        throw ResolutionError("beta_kernel: requested tail range/tolerance needs " +
                              std::to_string(n) + " points per axis (cap " +
                              std::to_string(per_axis_cap) + ")");

    std::vector<int> sizes(dim, n);
    std::vector<double> halves(dim, L);
    GridSpec spec(sizes, halves);

    // w^(beta) = F^{-1}[e^{-|xi|^beta}]: inverse transform of the sampled
    // symbol, i.e. (1/(2L)^n) * sum_j e^{-|xi_j|^beta} e^{-i x xi_j}.
    GridFunction symbol(spec, Domain::Frequency);
    const std::size_t total = spec.total_size();
    double xi[kMaxGridDim];
    for (std::size_t i = 0; i < total; ++i) {
        spec.frequency_point(i, xi);
        symbol[i] = std::exp(-std::pow(norm2(std::span<const double>(xi, dim)), beta));
    }
    GridFunction kernel = idft(symbol);

    BetaKernelTable table;
    table.beta = beta;
    table.dim = dim;
    table.tail_constant = beta_tail_constant(beta, dim);
    table.box_halfwidth = L;
    table.grid_spacing = spec.spacing(0);

    const double r_max = std::min(2.0 * params.tail_radius, 0.5 * L);
    if (r_max < params.tail_radius)
        throw ResolutionError("beta_kernel: box too small for requested tail radius");

    if (dim == 1) {
        // Snap log-spaced targets to exact grid radii; near-field targets land
        // on consecutive grid points so no information is lost.
        const double h = spec.spacing(0);
        const std::size_t origin = static_cast<std::size_t>(n / 2);
        table.radii.push_back(0.0);
        table.values.push_back(kernel[origin].real());
        const int per_decade = 600;
        const double lo = std::log10(h), hi = std::log10(r_max);
        const int steps = static_cast<int>(std::ceil((hi - lo) * per_decade));
        long last_k = 0;
        for (int s = 0; s <= steps; ++s) {
            const double r_target = std::pow(10.0, lo + (hi - lo) * s / steps);
            long k = std::lround(r_target / h);
            if (k <= last_k || k >= n / 2) continue;
            last_k = k;
            const double vplus = kernel[origin + static_cast<std::size_t>(k)].real();
            const double vminus = kernel[origin - static_cast<std::size_t>(k)].real();
            table.radii.push_back(k * h);
            table.values.push_back(0.5 * (vplus + vminus));
        }
    } else {
        // Radial binning: average samples whose radius falls in each log bin.
        const int per_decade = 300;
        const double h = spec.spacing(0);
        const double lo = std::log10(0.5 * h), hi = std::log10(r_max);
        const int bins = static_cast<int>(std::ceil((hi - lo) * per_decade)) + 1;
        std::vector<double> sum(bins, 0.0), count(bins, 0.0);
        double origin_value = 0;
        double x[kMaxGridDim];
        for (std::size_t i = 0; i < total; ++i) {
            spec.point(i, x);
            const double r = norm2(std::span<const double>(x, dim));
            if (r == 0) {
                origin_value = kernel[i].real();
                continue;
            }
            if (r > r_max) continue;
            int b = static_cast<int>((std::log10(r) - lo) / (hi - lo) * (bins - 1) + 0.5);
            b = std::clamp(b, 0, bins - 1);
            sum[b] += kernel[i].real();
            count[b] += 1.0;
        }
        table.radii.push_back(0.0);
        table.values.push_back(origin_value);
        for (int b = 0; b < bins; ++b) {
            if (count[b] == 0) continue;
            table.radii.push_back(std::pow(10.0, lo + (hi - lo) * b / (bins - 1)));
            table.values.push_back(sum[b] / count[b]);
        }
    }
    return table;
}

double BetaKernelTable::value_at(double r) const {
    if (radii.empty()) throw DomainError("BetaKernelTable: empty table");
    r = std::abs(r);
    if (r >= radii.back()) throw ResolutionError("BetaKernelTable: radius beyond resolved range");
    auto it = std::lower_bound(radii.begin(), radii.end(), r);
    if (it == radii.begin()) return values.front();
    const std::size_t hi = static_cast<std::size_t>(it - radii.begin());
    const std::size_t lo = hi - 1;
    const double t = (r - radii[lo]) / (radii[hi] - radii[lo]);
    return values[lo] * (1.0 - t) + values[hi] * t;
}

std::pair<double, double> verify_beta_tail(const BetaKernelTable& table, double r_min,
                                           double r_max) {
    if (even_integer(table.beta))
        throw DomainError("verify_beta_tail: even integer beta has no power tail");
    if (!(r_min > 0) || !(r_max > r_min)) throw DomainError("verify_beta_tail: bad range");
    if (r_max > table.max_radius())
        throw ResolutionError("verify_beta_tail: r_max beyond resolved range");
    std::vector<double> rs, ws;
    for (std::size_t i = 0; i < table.radii.size(); ++i) {
        const double r = table.radii[i];
        if (r < r_min || r > r_max) continue;
        if (std::abs(table.values[i]) < 1e-14)
            throw InsufficientDecay("verify_beta_tail: samples below the 1e-14 noise floor");
        rs.push_back(r);
        ws.push_back(table.values[i]);
    }
    if (rs.size() < 8) throw InsufficientDecay("verify_beta_tail: too few samples in range");
    const LineFit fit = fit_loglog(rs, ws);
    return {fit.slope, std::exp(fit.intercept)};
}

namespace {

const BetaKernelTable& cached_beta_table(double beta, int dim) {
    static std::map<std::pair<double, int>, std::unique_ptr<BetaKernelTable>> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(beta, dim);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(key, std::make_unique<BetaKernelTable>(beta_kernel(beta, dim))).first;
    }
    return *it->second;
}

}  // namespace

double kernel_eval_radial(const SemigroupFamily& family, double r, double t) {
    if (!(t > 0)) throw DomainError("kernel_eval: requires t > 0");
    const int n = family.dim;
    switch (family.kind) {
        case SemigroupKind::Poisson:
            return gamma_fn(0.5 * (n + 1)) / std::pow(M_PI, 0.5 * (n + 1)) * t /
                   std::pow(t * t + r * r, 0.5 * (n + 1));
        case SemigroupKind::GaussWeierstrass:
            return std::pow(4.0 * M_PI * t, -0.5 * n) * std::exp(-r * r / (4.0 * t));
        case SemigroupKind::Metaharmonic: {
            const double w = std::sqrt(r * r + t * t);
            return 2.0 * t / std::pow(2.0 * M_PI, 0.5 * (n + 1)) *
                   mcdonald_k(0.5 * (n + 1), w) / std::pow(w, 0.5 * (n + 1));
        }
        case SemigroupKind::Beta: {
            const auto& table = cached_beta_table(family.beta, n);
            const double scale = std::pow(t, -1.0 / family.beta);
            return std::pow(t, -static_cast<double>(n) / family.beta) *
                   table.value_at(scale * r);
        }
    }
    return 0;
}

double kernel_eval(const SemigroupFamily& family, std::span<const double> y, double t) {
    return kernel_eval_radial(family, norm2(y), t);
}

GridFunction apply_semigroup(const SemigroupFamily& family, const GridFunction& f, double t) {
    if (!(t > 0)) throw DomainError("apply_semigroup: requires t > 0");
    SpectralMultiplier m;
    m.eval = [family, t](std::span<const double> xi) {
        return std::complex<double>(std::exp(-t * semigroup_sigma(family, xi)), 0.0);
    };
    return apply_multiplier(f, m);
}

}  // namespace cwt
