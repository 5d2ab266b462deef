#include "cwt/potentials.hpp"

#include <cmath>

#include "cwt/errors.hpp"
#include "cwt/parallel.hpp"
#include "cwt/quadrature.hpp"
#include "cwt/special_functions.hpp"
#include "cwt/spectral.hpp"

namespace cwt {

void PotentialSpec::validate() const {
    if (!(alpha > 0)) throw DomainError("PotentialSpec: alpha must be positive");
    if (kind == PotentialKind::Riesz && !(alpha < dim))
        throw DomainError("PotentialSpec: Riesz requires 0 < alpha < n");
    if (kind == PotentialKind::BesselBeta && !(beta > 0))
        throw DomainError("PotentialSpec: BesselBeta requires beta > 0");
    if (kind == PotentialKind::Riesz && beta < 0)
        throw DomainError("PotentialSpec: negative beta");
}

void TimeQuadrature::validate() const {
    if (!(t_min > 0) || !(t_min < t_max)) throw DomainError("TimeQuadrature: need 0 < t_min < t_max");
    if (nodes_per_decade < 16) throw DomainError("TimeQuadrature: nodes_per_decade must be >= 16");
}

namespace {

double vec_norm(std::span<const double> xi) {
    double s = 0;
    for (double x : xi) s += x * x;
    return std::sqrt(s);
}

void require_mean_zero(const GridFunction& f) {
    if (std::abs(f.mean()) > 1e-12 * std::max(f.max_abs(), 1e-300))
        throw NonZeroMean("Riesz potential requires a mean-zero input on the periodic box");
}

struct SemigroupIntegral {
    SemigroupFamily family;
    double exponent;          // e in t^{e-1}
    bool exp_weight;          // include e^{-t}
};

SemigroupIntegral integral_form(const PotentialSpec& spec, BesselRoute route) {
    switch (spec.kind) {
        case PotentialKind::Riesz:
            if (spec.beta > 0)
                return {SemigroupFamily::beta_family(spec.beta, spec.dim),
                        spec.alpha / spec.beta, false};
            return {SemigroupFamily::poisson(spec.dim), spec.alpha, false};
        case PotentialKind::Bessel:
            if (route == BesselRoute::Metaharmonic)
                return {SemigroupFamily::metaharmonic(spec.dim), spec.alpha, false};
            return {SemigroupFamily::gauss_weierstrass(spec.dim), spec.alpha / 2.0, true};
        case PotentialKind::Flett:
            return {SemigroupFamily::poisson(spec.dim), spec.alpha, true};
        case PotentialKind::BesselBeta:
            return {SemigroupFamily::beta_family(spec.beta, spec.dim),
                    spec.alpha / spec.beta, true};
    }
    throw DomainError("potential: unknown kind");
}

// Geometric-trapezoid multiplier of (1/Gamma(e)) ∫ t^{e-1} [e^{-t}] e^{-t sigma} dt,
// with the analytic [0, t_min) head where the semigroup is first order in t.
std::vector<std::complex<double>> semigroup_route_table(
    const GridSpec& grid, const SemigroupIntegral& form, const TimeQuadrature& tq,
    int nodes_per_decade) {
    const double e = form.exponent;
    const double inv_gamma = 1.0 / gamma_fn(e);
    const auto nodes = geometric_nodes(tq.t_min, tq.t_max, nodes_per_decade);
    const double du = (std::log(tq.t_max) - std::log(tq.t_min)) / (nodes.size() - 1);

    const std::vector<double> sigma = frequency_table(
        grid, [&form](std::span<const double> xi) { return semigroup_sigma(form.family, xi); });

    std::vector<std::complex<double>> table(sigma.size());
    const double head_base = std::pow(tq.t_min, e) / e;
    parallel_for(sigma.size(), [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double decay = sigma[i] + (form.exp_weight ? 1.0 : 0.0);
            double acc = 0;
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                const double t = nodes[k];
                const double w = (k == 0 || k + 1 == nodes.size()) ? 0.5 : 1.0;
                acc += w * std::pow(t, e) * std::exp(-t * decay);
            }
            acc *= du;
            // ∫_0^{t_min} t^{e-1} e^{-t decay} dt ≈ t_min^e/e (1 - decay t_min e/(e+1))
            acc += head_base * (1.0 - decay * tq.t_min * e / (e + 1.0));
            table[i] = inv_gamma * acc;
        }
    });
    return table;
}

}  // namespace

GridFunction potential_multiplier(const PotentialSpec& spec, const GridFunction& f) {
    spec.validate();
    if (spec.dim != f.spec().dim()) throw SpecMismatch("potential_multiplier: dim mismatch");
    if (spec.kind == PotentialKind::Riesz) require_mean_zero(f);

    SpectralMultiplier m;
    const double alpha = spec.alpha;
    const double beta = spec.beta;
    switch (spec.kind) {
        case PotentialKind::Riesz:
            m.singular_at_zero = true;
            m.zero_frequency_policy = 0.0;  // project out the mean
            m.eval = [alpha](std::span<const double> xi) {
                return std::complex<double>(std::pow(vec_norm(xi), -alpha), 0.0);
            };
            break;
        case PotentialKind::Bessel:
            m.eval = [alpha](std::span<const double> xi) {
                const double r = vec_norm(xi);
                return std::complex<double>(std::pow(1.0 + r * r, -0.5 * alpha), 0.0);
            };
            break;
        case PotentialKind::Flett:
            m.eval = [alpha](std::span<const double> xi) {
                return std::complex<double>(std::pow(1.0 + vec_norm(xi), -alpha), 0.0);
            };
            break;
        case PotentialKind::BesselBeta:
            m.eval = [alpha, beta](std::span<const double> xi) {
                return std::complex<double>(
                    std::pow(1.0 + std::pow(vec_norm(xi), beta), -alpha / beta), 0.0);
            };
            break;
    }
    return apply_multiplier(f, m);
}

GridFunction potential_semigroup(const PotentialSpec& spec, const GridFunction& f,
                                 const TimeQuadrature& tq, BesselRoute route) {
    spec.validate();
    tq.validate();
    if (tq.t_min > 1e-4 || tq.t_max < 40.0)
        throw DomainError("potential_semigroup: quadrature must span [<=1e-4, >=40]");
    if (spec.dim != f.spec().dim()) throw SpecMismatch("potential_semigroup: dim mismatch");
    if (spec.kind == PotentialKind::Riesz) require_mean_zero(f);

    const SemigroupIntegral form = integral_form(spec, route);
    auto coarse = semigroup_route_table(f.spec(), form, tq, tq.nodes_per_decade);
    auto fine = semigroup_route_table(f.spec(), form, tq, 2 * tq.nodes_per_decade);

    GridFunction out_coarse = apply_multiplier_values(f, coarse);
    GridFunction out = apply_multiplier_values(f, fine);
    if (rel_l2_error(out_coarse, out) > 1e-6)
        throw QuadratureUnderresolved(
            "potential_semigroup: doubling nodes_per_decade moved the result by > 1e-6");
    return out;
}

}  // namespace cwt
