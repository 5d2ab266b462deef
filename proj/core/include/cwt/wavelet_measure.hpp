#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cwt {

// Finite signed Borel measure on [0, inf): atoms plus an optional smooth
// density with fixed Gauss-Legendre quadrature nodes on (0, eta_max].
class WaveletMeasure {
public:
    struct Atom {
        double location;  // >= 0
        double weight;
    };

    struct Density {
        std::string name;  // "smooth_h" for the h^{(m)} family
        int order = 0;     // derivative order m
        std::function<double(double)> f;
        std::vector<double> nodes;
        std::vector<double> weights;
        double eta_max = 12.0;
    };

    WaveletMeasure() = default;
    explicit WaveletMeasure(std::vector<Atom> atoms, std::optional<Density> density = {});

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::optional<Density>& density() const { return density_; }

    double total_variation() const;
    double total_mass() const;
    double atom_at_zero() const;
    // mu([0, s)); integrals over [a, b) follow the half-open convention.
    double mass_below(double s) const;

private:
    std::vector<Atom> atoms_;       // sorted by location, locations distinct
    std::optional<Density> density_;
};

struct AdmissibilityReport {
    double total_mass = 0;
    double log_moment = 0;               // +inf when an atom sits at eta = 0
    std::vector<double> moments;         // ∫ eta^j dmu, j = 0..J
    double gamma_moment = 0;             // ∫_1^inf eta^gamma d|mu|
    bool passes = false;
};

// Reproducing-formula admissibility: total mass zero and finite log-moment.
AdmissibilityReport check_calderon(const WaveletMeasure& mu);

// Inversion admissibility for order alpha: moments j = 0..floor(alpha) vanish
// (tolerance 1e-10 * total variation) and the gamma-moment is finite.
AdmissibilityReport check_inversion(const WaveletMeasure& mu, double alpha, double gamma);

// lambda_alpha(s) = s^{-1} I_+^{alpha+1} mu (s)
//                 = (1/(s Gamma(alpha+1))) ∫_{[0,s)} (s-eta)^alpha dmu(eta).
double lambda_alpha(const WaveletMeasure& mu, double alpha, double s);

// k(s) = s^{-1} mu([0, s)); requires check_calderon to pass.
double calderon_k(const WaveletMeasure& mu, double s);

// Laplace transform mu~(t) = ∫ e^{-t eta} dmu(eta).
double laplace_transform(const WaveletMeasure& mu, double t);
std::complex<double> laplace_transform(const WaveletMeasure& mu, std::complex<double> t);

// Normalizing constant of the inversion formulas:
//   alpha not in N0:  Gamma(-alpha) ∫ eta^alpha dmu
//   alpha in N0:      ((-1)^{alpha+1} / alpha!) ∫ eta^alpha log(eta) dmu
double c_constant(const WaveletMeasure& mu, double alpha);

// c_mu = ∫ log(1/eta) dmu — the reproducing-formula constant (the alpha = 0
// integer branch of c_constant).
double calderon_constant(const WaveletMeasure& mu);

// Example measures. make_fd_measure(m) = sum_j binom(m,j) (-1)^j delta_j;
// make_smooth_measure(m, alpha) = h^{(m)}(eta) d eta with
// h(eta) = exp(-eta^2 - 1/eta^2), closed-form derivatives, m <= 4.
WaveletMeasure make_fd_measure(int m);
WaveletMeasure make_smooth_measure(int m, double alpha);

// JSON measure format:
// {"atoms": [[loc, weight], ...], "density": {"name": "smooth_h", "m": k} | null}
std::string measure_to_json(const WaveletMeasure& mu);
WaveletMeasure measure_from_json(const std::string& text);

}  // namespace cwt
