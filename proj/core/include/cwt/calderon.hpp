#pragma once

#include <filesystem>
#include <functional>
#include <utility>
#include <vector>

#include "cwt/grid.hpp"
#include "cwt/semigroups.hpp"
#include "cwt/wavelet_measure.hpp"

namespace cwt {

// W_a f(x,t) = ∫_0^∞ S_{t eta} f(x) e^{-a t eta} dmu(eta); the eta = 0 atom
// contributes weight * f.
struct CompositeTransform {
    SemigroupFamily family;
    WaveletMeasure mu;
    double a = 0;
};

struct ConvergenceRow {
    double epsilon;
    double rel_l2;
    double rel_linf;
};

struct ConvergenceRecord {
    std::vector<ConvergenceRow> rows;
    bool cauchy = false;  // rows hold Cauchy differences when no reference was given

    // CSV columns: epsilon, rel_l2, rel_linf
    void write_csv(const std::filesystem::path& path) const;
};

struct InversionJob {
    double order_exponent = 0;          // the alpha (or alpha/beta, alpha/2) in dt/t^{1+.}
    std::vector<double> epsilons;       // strictly decreasing
    double t_max = 60.0;
    int nodes_per_decade = 32;

    void validate() const;
};

GridFunction composite_transform(const CompositeTransform& ct, const GridFunction& f, double t);

// Theorem-style reproduction: I_eps f = ∫_eps^{t_max} W_a f(.,t) dt/t compared
// against c_mu f for each epsilon. Requires check_calderon to pass.
ConvergenceRecord reproduce(const CompositeTransform& ct, const GridFunction& f,
                            const InversionJob& job);

// f_eps = (1/c_{e,mu}) ∫_eps^{t_max} W phi(.,t) dt/t^{1+e}. Returns the best
// reconstruction and the per-epsilon record (errors against the reference when
// supplied, Cauchy differences otherwise).
std::pair<GridFunction, ConvergenceRecord> invert_potential(const CompositeTransform& ct,
                                                            const GridFunction& phi,
                                                            const InversionJob& job,
                                                            const GridFunction* reference = nullptr);

// Effective weight profile of the truncated integral after the change of
// variables t -> eps s: s -> lambda_exponent(s) e^{-a eps s} (exponent zero
// reduces to the reproducing kernel k(s)).
std::function<double(double)> kuku_reduction(const CompositeTransform& ct, double exponent,
                                             double epsilon);

}  // namespace cwt
