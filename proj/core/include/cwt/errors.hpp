#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace cwt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define CWT_ERROR_TYPE(NAME)                                                   \
    struct NAME : Error {                                                      \
        using Error::Error;                                                    \
    }

// spectral-core
CWT_ERROR_TYPE(SpecMismatch);
CWT_ERROR_TYPE(SingularZeroFrequency);
// special-functions / generic argument violations
CWT_ERROR_TYPE(DomainError);
CWT_ERROR_TYPE(PoleError);
// semigroups
CWT_ERROR_TYPE(ResolutionError);
CWT_ERROR_TYPE(InsufficientDecay);
// wavelet-measures
CWT_ERROR_TYPE(NotAdmissible);
CWT_ERROR_TYPE(DivergentConstant);
// potentials
CWT_ERROR_TYPE(NonZeroMean);
CWT_ERROR_TYPE(QuadratureUnderresolved);
// calderon
CWT_ERROR_TYPE(DivergentTail);
CWT_ERROR_TYPE(ZeroConstant);
// parabolic
CWT_ERROR_TYPE(AtomAtZero);
// radon
CWT_ERROR_TYPE(SupportOverflow);
CWT_ERROR_TYPE(DegenerateFit);
// cone-utils
CWT_ERROR_TYPE(SingularScale);

#undef CWT_ERROR_TYPE

// Non-fatal diagnostics (e.g. NonHermitianMultiplier) go through a process-wide
// handler. The default prints to stderr; tests install a capturing handler.
using WarningHandler = std::function<void(const std::string&)>;

WarningHandler set_warning_handler(WarningHandler handler);
void warn(const std::string& message);

}  // namespace cwt
