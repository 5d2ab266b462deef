#pragma once

#include <span>
#include <vector>

#include "cwt/grid.hpp"

namespace cwt {

enum class SemigroupKind { Poisson, GaussWeierstrass, Metaharmonic, Beta };

// Convolution family S_t with Fourier multiplier e^{-t sigma(xi)} where
// sigma = |xi|, |xi|^2, sqrt(1+|xi|^2), |xi|^beta respectively.
struct SemigroupFamily {
    SemigroupKind kind = SemigroupKind::Poisson;
    double beta = 0;  // Beta only
    int dim = 1;

    static SemigroupFamily poisson(int n) { return {SemigroupKind::Poisson, 0, n}; }
    static SemigroupFamily gauss_weierstrass(int n) {
        return {SemigroupKind::GaussWeierstrass, 0, n};
    }
    static SemigroupFamily metaharmonic(int n) { return {SemigroupKind::Metaharmonic, 0, n}; }
    static SemigroupFamily beta_family(double beta, int n);
};

// sigma(xi) for the family's multiplier e^{-t sigma(xi)}.
double semigroup_sigma(const SemigroupFamily& family, double xi_norm);
double semigroup_sigma(const SemigroupFamily& family, std::span<const double> xi);

// Radial profile of the Beta-semigroup kernel w^{(beta)}(y) at t = 1, obtained
// from an oversampled inverse DFT of e^{-|xi|^beta}, radially reduced.
struct BetaKernelTable {
    double beta = 0;
    int dim = 1;
    std::vector<double> radii;   // log-spaced (snapped to grid radii), radii[0] = 0
    std::vector<double> values;  // w^{(beta)}(r)
    double tail_constant = 0;    // c_beta from the large-|y| expansion; 0 for even integer beta
    double box_halfwidth = 0;
    double grid_spacing = 0;

    // linear-in-r interpolation of the profile
    double value_at(double r) const;
    double max_radius() const { return radii.empty() ? 0.0 : radii.back(); }
};

struct BetaKernelParams {
    double tail_radius = 40.0;   // largest |y| the table must resolve
    int oversampling = 8;        // minimum samples per unit length
    double abs_tol = 1e-4;       // periodization/truncation budget on the resolved range
    std::size_t max_points = std::size_t(1) << 22;  // per-axis DFT size cap
};

// c_beta = -2^beta pi^{-n/2} Gamma((n+beta)/2) / Gamma(-beta/2); zero for even
// integer beta, where the kernel decays faster than any power.
double beta_tail_constant(double beta, int dim);

BetaKernelTable beta_kernel(double beta, int dim, const BetaKernelParams& params = {});

// Log-log least-squares fit of |w^{(beta)}| over [r_min, r_max]. Returns
// (slope, prefactor); expected (-(n+beta), c_beta).
std::pair<double, double> verify_beta_tail(const BetaKernelTable& table, double r_min,
                                           double r_max);

// Closed-form spatial kernels (Poisson, Gauss-Weierstrass, metaharmonic); the
// Beta kind goes through a cached BetaKernelTable with the scaling
// w(y, t) = t^{-n/beta} w(t^{-1/beta} y).
double kernel_eval(const SemigroupFamily& family, std::span<const double> y, double t);
double kernel_eval_radial(const SemigroupFamily& family, double r, double t);

// Multiplier application e^{-t sigma(xi)} on the grid.
GridFunction apply_semigroup(const SemigroupFamily& family, const GridFunction& f, double t);

}  // namespace cwt
