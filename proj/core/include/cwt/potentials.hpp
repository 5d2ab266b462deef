#pragma once

#include <optional>

#include "cwt/grid.hpp"
#include "cwt/semigroups.hpp"

namespace cwt {

enum class PotentialKind { Riesz, Bessel, Flett, BesselBeta };

// Negative fractional powers realized as Fourier multipliers:
//   Riesz       |xi|^{-alpha}            (zero frequency projected out)
//   Bessel      (1+|xi|^2)^{-alpha/2}
//   Flett       (1+|xi|)^{-alpha}
//   BesselBeta  (1+|xi|^beta)^{-alpha/beta}
struct PotentialSpec {
    PotentialKind kind;
    double alpha;
    double beta = 0;  // BesselBeta order; for Riesz, selects the Beta-semigroup route
    int dim = 1;

    void validate() const;
};

// Which semigroup realizes the Bessel potential time integral: the
// Gauss-Weierstrass weight t^{alpha/2-1} e^{-t} or the metaharmonic t^{alpha-1}.
enum class BesselRoute { GaussWeierstrass, Metaharmonic };

struct TimeQuadrature {
    double t_min = 1e-6;
    double t_max = 60.0;
    int nodes_per_decade = 32;

    void validate() const;
};

GridFunction potential_multiplier(const PotentialSpec& spec, const GridFunction& f);

GridFunction potential_semigroup(const PotentialSpec& spec, const GridFunction& f,
                                 const TimeQuadrature& tq,
                                 BesselRoute route = BesselRoute::GaussWeierstrass);

}  // namespace cwt
