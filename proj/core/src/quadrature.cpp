#include "cwt/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "cwt/errors.hpp"

namespace cwt {

namespace {

GaussLegendre compute_gauss_legendre(int n) {
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton iteration on P_n, Chebyshev initial guesses.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
    if (order < 1 || order > 128) throw DomainError("gauss_legendre: order out of range");
    static std::map<int, GaussLegendre> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto it = cache.find(order);
    if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
    return it->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int order) {
    if (panels < 1) throw DomainError("integrate_panels: panels < 1");
    const auto& rule = gauss_legendre(order);
    const double width = (b - a) / panels;
    double total = 0;
    for (int p = 0; p < panels; ++p) {
        double lo = a + p * width;
        double mid = lo + 0.5 * width;
        double half = 0.5 * width;
        double sum = 0;
        for (int k = 0; k < order; ++k) sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
        total += half * sum;
    }
    return total;
}

std::vector<double> geometric_nodes(double a, double b, int nodes_per_decade) {
    if (!(a > 0) || !(b > a)) throw DomainError("geometric_nodes: need 0 < a < b");
    if (nodes_per_decade < 1) throw DomainError("geometric_nodes: nodes_per_decade < 1");
    const double ua = std::log10(a), ub = std::log10(b);
    const int steps = std::max(1, static_cast<int>(std::ceil((ub - ua) * nodes_per_decade)));
    std::vector<double> nodes(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        double u = ua + (ub - ua) * i / steps;
        nodes[i] = std::pow(10.0, u);
    }
    nodes.front() = a;
    nodes.back() = b;
    return nodes;
}

double geometric_trapezoid(const std::function<double(double)>& f, double a, double b,
                           int nodes_per_decade) {
    auto nodes = geometric_nodes(a, b, nodes_per_decade);
    const std::size_t n = nodes.size();
    const double du = (std::log(b) - std::log(a)) / static_cast<double>(n - 1);
    double sum = 0.5 * (f(nodes.front()) * nodes.front() + f(nodes.back()) * nodes.back());
    for (std::size_t i = 1; i + 1 < n; ++i) sum += f(nodes[i]) * nodes[i];
    return sum * du;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw DomainError("fit_line: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double denom = n * sxx - sx * sx;
    LineFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    return fit;
}

LineFit fit_loglog(std::span<const double> x, std::span<const double> y) {
    std::vector<double> lx, ly;
    lx.reserve(x.size());
    ly.reserve(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || y[i] == 0) continue;
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(std::abs(y[i])));
    }
    return fit_line(lx, ly);
}

}  // namespace cwt
