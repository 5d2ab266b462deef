#pragma once

#include <functional>
#include <span>
#include <vector>

namespace cwt {

struct GaussLegendre {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

// Cached Gauss-Legendre rule of the given order (1..128).
const GaussLegendre& gauss_legendre(int order);

// Composite Gauss-Legendre over [a, b] split into equal panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int order = 16);

// Log-uniform nodes from a to b (inclusive), at least nodes_per_decade per
// decade. Both endpoints are exact.
std::vector<double> geometric_nodes(double a, double b, int nodes_per_decade);

// Trapezoid rule for ∫_a^b f(t) dt on the log axis: ∫ f(e^u) e^u du.
double geometric_trapezoid(const std::function<double(double)>& f, double a, double b,
                           int nodes_per_decade);

struct LineFit {
    double slope = 0;
    double intercept = 0;
};

// Least-squares line through (log x_i, log |y_i|).
LineFit fit_loglog(std::span<const double> x, std::span<const double> y);

LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace cwt
