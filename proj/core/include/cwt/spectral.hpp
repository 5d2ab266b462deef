#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <span>

#include "cwt/grid.hpp"

namespace cwt {

// Pointwise function of the frequency vector, applied in the DFT domain.
// Frequency convention: F f(xi) = ∫ f(x) e^{i x·xi} dx, inverse with the
// conjugate sign, so a semigroup multiplier e^{-t sigma(xi)} acts as the
// corresponding spatial convolution.
struct SpectralMultiplier {
    std::function<std::complex<double>(std::span<const double>)> eval;
    bool singular_at_zero = false;
    std::optional<std::complex<double>> zero_frequency_policy;
};

// Continuum-normalized transforms: dft(f)[j] approximates F f(xi_j), and
// idft inverts it. apply_multiplier(f, m) == idft(m .* dft(f)) up to roundoff
// but skips the normalization passes.
GridFunction dft(const GridFunction& f);
GridFunction idft(const GridFunction& F);

GridFunction apply_multiplier(const GridFunction& f, const SpectralMultiplier& m);

// Same, with the multiplier already evaluated on the flat frequency grid.
GridFunction apply_multiplier_values(const GridFunction& f,
                                     std::span<const std::complex<double>> m);

// Circular convolution scaled by the cell volume, approximating ∫ f(x-y) g(y) dy.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

// sigma(|xi| vector) tabulated over the flat frequency grid; the workhorse for
// semigroup and potential multipliers.
std::vector<double> frequency_table(const GridSpec& spec,
                                    const std::function<double(std::span<const double>)>& fn);

namespace detail {
// Raw unnormalized c2c transform; sign +1 is the analysis direction under the
// e^{+i x·xi} convention.
void fft(const GridSpec& spec, const std::complex<double>* in, std::complex<double>* out,
         int sign);
}  // namespace detail

}  // namespace cwt
