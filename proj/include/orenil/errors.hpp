#pragma once

#include <stdexcept>
#include <string>

namespace orenil {

/// Base class for all orenil errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define ORENIL_ERROR_TYPE(Name)                                                \
    class Name : public Error {                                               \
      public:                                                                  \
        using Error::Error;                                                    \
    }

ORENIL_ERROR_TYPE(DimensionMismatch);
ORENIL_ERROR_TYPE(AssociativityViolation);
ORENIL_ERROR_TYPE(ParentMismatch);
ORENIL_ERROR_TYPE(LeibnizViolation);
ORENIL_ERROR_TYPE(NotLocallyNilpotent);
ORENIL_ERROR_TYPE(NTooSmall);
ORENIL_ERROR_TYPE(NotNilpotentWithinBound);
ORENIL_ERROR_TYPE(PreconditionViolated);
ORENIL_ERROR_TYPE(DuplicatePoint);
ORENIL_ERROR_TYPE(InconsistentSamples);
ORENIL_ERROR_TYPE(SizeExceeded);
ORENIL_ERROR_TYPE(TraceAssertionFailure);
ORENIL_ERROR_TYPE(ExponentOverflow);
ORENIL_ERROR_TYPE(ParseError);

#undef ORENIL_ERROR_TYPE

} // namespace orenil
