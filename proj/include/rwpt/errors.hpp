#pragma once
#include <stdexcept>
#include <string>

namespace rwpt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define RWPT_ERROR_TYPE(Name)                                                  \
    class Name : public Error {                                               \
    public:                                                                    \
        using Error::Error;                                                    \
    };

// stepdist
RWPT_ERROR_TYPE(NotSymmetric)
RWPT_ERROR_TYPE(AnisotropicCovariance)
RWPT_ERROR_TYPE(NotAProbability)
RWPT_ERROR_TYPE(DivergentMoment)

// lattice
RWPT_ERROR_TYPE(UnboundedRegion)

// kernel
RWPT_ERROR_TYPE(SingularSystem)
RWPT_ERROR_TYPE(DomainTooLarge)
RWPT_ERROR_TYPE(SourceOutsideDomain)
RWPT_ERROR_TYPE(SourceInsideTarget)
RWPT_ERROR_TYPE(SourceOutsideAnnulus)
RWPT_ERROR_TYPE(PointOutsideAnnulus)

// asymptotic
RWPT_ERROR_TYPE(NotAperiodic)
RWPT_ERROR_TYPE(GridLeakage)
RWPT_ERROR_TYPE(InsufficientSpread)
RWPT_ERROR_TYPE(MissingFittedConstant)

// config / preconditions
RWPT_ERROR_TYPE(InvalidArgument)

#undef RWPT_ERROR_TYPE

} // namespace rwpt
