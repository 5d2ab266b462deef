#pragma once

namespace cwt {

// Gamma for real arguments, negative non-integers included (reflection
// formula). Throws PoleError at 0, -1, -2, ...
double gamma_fn(double x);

// log Gamma for x > 0.
double log_gamma(double x);

// McDonald function K_nu(x) from the integral representation
// K_nu(x) = ∫_0^∞ e^{-x cosh u} cosh(nu u) du, trapezoid on the doubly
// exponentially decaying integrand. Throws DomainError for x <= 0 or nu < 0.
double mcdonald_k(double nu, double x);

struct SiegelGammaInput {
    int m;          // cone rank, >= 1
    double alpha;   // > (m-1)/2
};

// Siegel gamma of the positive definite cone:
// Gamma_m(a) = pi^{m(m-1)/4} prod_{j=0}^{m-1} Gamma(a - j/2).
double siegel_gamma(const SiegelGammaInput& in);
inline double siegel_gamma(int m, double alpha) { return siegel_gamma({m, alpha}); }

// B_m(a, b) = Gamma_m(a) Gamma_m(b) / Gamma_m(a + b).
double siegel_beta(int m, double alpha, double beta);

}  // namespace cwt
