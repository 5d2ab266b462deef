#include "cwt/wavelet_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "cwt/errors.hpp"
#include "cwt/quadrature.hpp"
#include "cwt/special_functions.hpp"

namespace cwt {

namespace {

constexpr double kMomentTolFactor = 1e-10;

bool near_integer(double x) { return std::abs(x - std::round(x)) < 1e-9; }

// ∫ g dmu over the density part (atoms excluded), using the stored nodes.
double integrate_density(const WaveletMeasure::Density& d,
                         const std::function<double(double)>& g) {
    double sum = 0;
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        sum += d.weights[i] * d.f(d.nodes[i]) * g(d.nodes[i]);
    return sum;
}

double integrate_density_abs(const WaveletMeasure::Density& d,
                             const std::function<double(double)>& g) {
    double sum = 0;
    for (std::size_t i = 0; i < d.nodes.size(); ++i)
        sum += d.weights[i] * std::abs(d.f(d.nodes[i])) * g(d.nodes[i]);
    return sum;
}

WaveletMeasure::Density make_smooth_density(int m) {
    if (m < 1 || m > 4)
        throw DomainError("make_smooth_measure: closed-form derivatives are coded for m <= 4");
    WaveletMeasure::Density d;
    d.name = "smooth_h";
    d.order = m;
    d.eta_max = 12.0;
    d.f = [m](double eta) -> double {
        if (eta <= 0) return 0.0;
        const double ie2 = 1.0 / (eta * eta);
        const double expo = -eta * eta - ie2;
        if (expo < -700.0) return 0.0;
        const double h = std::exp(expo);
        const double u1 = -2.0 * eta + 2.0 * ie2 / eta;          // -2 eta + 2 eta^-3
        const double u2 = -2.0 - 6.0 * ie2 * ie2;                // -2 - 6 eta^-4
        const double u3 = 24.0 * ie2 * ie2 / eta;                // 24 eta^-5
        const double u4 = -120.0 * ie2 * ie2 * ie2;              // -120 eta^-6
        switch (m) {
            case 1: return h * u1;
            case 2: return h * (u1 * u1 + u2);
            case 3: return h * (u1 * u1 * u1 + 3.0 * u1 * u2 + u3);
            case 4:
                return h * (u1 * u1 * u1 * u1 + 6.0 * u1 * u1 * u2 + 4.0 * u1 * u3 +
                            3.0 * u2 * u2 + u4);
        }
        return 0.0;
    };
    // Gauss-Legendre panels on (0, eta_max], 64 nodes per unit interval.
    const auto& rule = gauss_legendre(64);
    const int units = static_cast<int>(d.eta_max);
    for (int u = 0; u < units; ++u) {
        for (int k = 0; k < 64; ++k) {
            d.nodes.push_back(u + 0.5 + 0.5 * rule.nodes[k]);
            d.weights.push_back(0.5 * rule.weights[k]);
        }
    }
    return d;
}

}  // namespace

WaveletMeasure::WaveletMeasure(std::vector<Atom> atoms, std::optional<Density> density)
    : atoms_(std::move(atoms)), density_(std::move(density)) {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.location < b.location; });
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        if (atoms_[i].location < 0)
            throw DomainError("WaveletMeasure: atom locations must be >= 0");
        if (i > 0 && atoms_[i].location == atoms_[i - 1].location)
            throw DomainError("WaveletMeasure: atom locations must be distinct");
    }
    if (density_ && density_->nodes.size() != density_->weights.size())
        throw DomainError("WaveletMeasure: density nodes/weights mismatch");
}

double WaveletMeasure::total_variation() const {
    double tv = 0;
    for (const auto& a : atoms_) tv += std::abs(a.weight);
    if (density_) tv += integrate_density_abs(*density_, [](double) { return 1.0; });
    return tv;
}

double WaveletMeasure::total_mass() const {
    double m = 0;
    for (const auto& a : atoms_) m += a.weight;
    if (density_) m += integrate_density(*density_, [](double) { return 1.0; });
    return m;
}

double WaveletMeasure::atom_at_zero() const {
    for (const auto& a : atoms_) {
        if (a.location == 0) return a.weight;
        if (a.location > 0) break;
    }
    return 0;
}

double WaveletMeasure::mass_below(double s) const {
    double m = 0;
    for (const auto& a : atoms_) {
        if (a.location < s) m += a.weight;
        else break;
    }
    if (density_) {
        const double hi = std::min(s, density_->eta_max);
        if (hi > 0)
            m += integrate_panels([this](double eta) { return density_->f(eta); }, 0.0, hi,
                                  std::max(1, static_cast<int>(std::ceil(hi))), 32);
    }
    return m;
}

AdmissibilityReport check_calderon(const WaveletMeasure& mu) {
    AdmissibilityReport rep;
    rep.total_mass = mu.total_mass();
    if (mu.atom_at_zero() != 0) {
        rep.log_moment = std::numeric_limits<double>::infinity();
    } else {
        double lm = 0;
        for (const auto& a : mu.atoms()) lm += std::abs(a.weight) * std::abs(std::log(a.location));
        if (mu.density())
            lm += integrate_density_abs(*mu.density(),
                                        [](double eta) { return std::abs(std::log(eta)); });
        rep.log_moment = lm;
    }
    const double tol = kMomentTolFactor * std::max(mu.total_variation(), 1.0);
    rep.passes = std::abs(rep.total_mass) <= tol && std::isfinite(rep.log_moment);
    return rep;
}

AdmissibilityReport check_inversion(const WaveletMeasure& mu, double alpha, double gamma) {
    if (!(alpha >= 0)) throw DomainError("check_inversion: alpha must be >= 0");
    if (!(gamma > alpha)) throw DomainError("check_inversion: requires gamma > alpha");
    AdmissibilityReport rep;
    rep.total_mass = mu.total_mass();
    rep.log_moment = check_calderon(mu).log_moment;

    double gm = 0;
    for (const auto& a : mu.atoms())
        if (a.location >= 1) gm += std::abs(a.weight) * std::pow(a.location, gamma);
    if (mu.density())
        gm += integrate_density_abs(*mu.density(), [gamma](double eta) {
            return eta >= 1 ? std::pow(eta, gamma) : 0.0;
        });
    rep.gamma_moment = gm;

    const int top = static_cast<int>(std::floor(alpha));
    for (int j = 0; j <= top; ++j) {
        double mj = 0;
        for (const auto& a : mu.atoms())
            mj += a.weight * (j == 0 ? 1.0 : std::pow(a.location, j));  // 0^0 = 1
        if (mu.density())
            mj += integrate_density(*mu.density(),
                                    [j](double eta) { return j == 0 ? 1.0 : std::pow(eta, j); });
        rep.moments.push_back(mj);
    }

    const double tol = kMomentTolFactor * std::max(mu.total_variation(), 1.0);
    rep.passes = std::isfinite(rep.gamma_moment) &&
                 std::all_of(rep.moments.begin(), rep.moments.end(),
                             [tol](double m) { return std::abs(m) <= tol; });
    return rep;
}

double lambda_alpha(const WaveletMeasure& mu, double alpha, double s) {
    if (!(s > 0)) throw DomainError("lambda_alpha: requires s > 0");
    if (!(alpha >= 0)) throw DomainError("lambda_alpha: alpha must be >= 0");
    const double norm = gamma_fn(alpha + 1.0);
    double acc = 0;
    for (const auto& a : mu.atoms()) {
        if (a.location < s)
            acc += a.weight * (alpha == 0.0 ? 1.0 : std::pow(s - a.location, alpha));
    }
    if (mu.density()) {
        const auto& d = *mu.density();
        const double hi = std::min(s, d.eta_max);
        if (hi > 0) {
            acc += integrate_panels(
                [&](double eta) { return d.f(eta) * std::pow(s - eta, alpha); }, 0.0, hi,
                std::max(2, static_cast<int>(std::ceil(2 * hi))), 32);
        }
    }
    return acc / (s * norm);
}

double calderon_k(const WaveletMeasure& mu, double s) {
    if (!(s > 0)) throw DomainError("calderon_k: requires s > 0");
    if (!check_calderon(mu).passes)
        throw NotAdmissible("calderon_k: measure fails the reproducing-formula conditions");
    return mu.mass_below(s) / s;
}

double laplace_transform(const WaveletMeasure& mu, double t) {
    if (!(t > 0)) throw DomainError("laplace_transform: requires t > 0");
    double acc = 0;
    for (const auto& a : mu.atoms()) acc += a.weight * std::exp(-t * a.location);
    if (mu.density())
        acc += integrate_density(*mu.density(), [t](double eta) { return std::exp(-t * eta); });
    return acc;
}

std::complex<double> laplace_transform(const WaveletMeasure& mu, std::complex<double> t) {
    std::complex<double> acc = 0;
    for (const auto& a : mu.atoms()) acc += a.weight * std::exp(-t * a.location);
    if (mu.density()) {
        const auto& d = *mu.density();
        for (std::size_t i = 0; i < d.nodes.size(); ++i)
            acc += d.weights[i] * d.f(d.nodes[i]) * std::exp(-t * d.nodes[i]);
    }
    return acc;
}

double c_constant(const WaveletMeasure& mu, double alpha) {
    if (!(alpha >= 0)) throw DomainError("c_constant: alpha must be >= 0");
    if (near_integer(alpha)) {
        const int k = static_cast<int>(std::round(alpha));
        if (k == 0 && mu.atom_at_zero() != 0)
            throw DivergentConstant("c_constant: log eta diverges on the atom at zero");
        double integral = 0;
        for (const auto& a : mu.atoms()) {
            if (a.location == 0) continue;  // eta^k log eta -> 0 for k >= 1
            integral += a.weight * std::pow(a.location, k) * std::log(a.location);
        }
        if (mu.density())
            integral += integrate_density(*mu.density(), [k](double eta) {
                return std::pow(eta, k) * std::log(eta);
            });
        double factorial = 1;
        for (int j = 2; j <= k; ++j) factorial *= j;
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
        return sign * integral / factorial;
    }
    double integral = 0;
    for (const auto& a : mu.atoms()) {
        if (a.location == 0) continue;
        integral += a.weight * std::pow(a.location, alpha);
    }
    if (mu.density())
        integral += integrate_density(*mu.density(),
                                      [alpha](double eta) { return std::pow(eta, alpha); });
    return gamma_fn(-alpha) * integral;
}

double calderon_constant(const WaveletMeasure& mu) {
    // c_mu = ∫ log(1/eta) dmu = -∫ log(eta) dmu, the alpha = 0 branch.
    return c_constant(mu, 0.0);
}

WaveletMeasure make_fd_measure(int m) {
    if (m < 1) throw DomainError("make_fd_measure: m must be >= 1");
    std::vector<WaveletMeasure::Atom> atoms;
    double binom = 1;
    for (int j = 0; j <= m; ++j) {
        atoms.push_back({static_cast<double>(j), (j % 2 == 0 ? 1.0 : -1.0) * binom});
        binom = binom * (m - j) / (j + 1);
    }
    return WaveletMeasure(std::move(atoms));
}

WaveletMeasure make_smooth_measure(int m, double alpha) {
    if (!(m > alpha)) throw DomainError("make_smooth_measure: requires m > alpha");
    return WaveletMeasure({}, make_smooth_density(m));
}

std::string measure_to_json(const WaveletMeasure& mu) {
    nlohmann::json j;
    j["atoms"] = nlohmann::json::array();
    for (const auto& a : mu.atoms()) j["atoms"].push_back({a.location, a.weight});
    if (mu.density()) {
        j["density"] = {{"name", mu.density()->name}, {"m", mu.density()->order}};
    } else {
        j["density"] = nullptr;
    }
    return j.dump();
}

WaveletMeasure measure_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<WaveletMeasure::Atom> atoms;
    for (const auto& pair : j.at("atoms"))
        atoms.push_back({pair.at(0).get<double>(), pair.at(1).get<double>()});
    std::optional<WaveletMeasure::Density> density;
    if (j.contains("density") && !j["density"].is_null()) {
        const auto& d = j["density"];
        if (d.at("name").get<std::string>() != "smooth_h")
            throw DomainError("measure_from_json: unknown density name");
        density = make_smooth_density(d.at("m").get<int>());
    }
    return WaveletMeasure(std::move(atoms), std::move(density));
}

}  // namespace cwt
