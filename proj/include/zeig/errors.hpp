#pragma once

#include <stdexcept>
#include <string>

namespace zeig {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define ZEIG_DEFINE_ERROR(Name)                                  \
    class Name : public Error {                                  \
    public:                                                      \
        explicit Name(const std::string& msg) : Error(msg) {}    \
    }

// Input-shape and format errors.
ZEIG_DEFINE_ERROR(DimMismatch);
ZEIG_DEFINE_ERROR(SizeMismatch);
ZEIG_DEFINE_ERROR(DegreeMismatch);
ZEIG_DEFINE_ERROR(SizeGuard);
ZEIG_DEFINE_ERROR(ParseError);
ZEIG_DEFINE_ERROR(AsymmetricInput);
ZEIG_DEFINE_ERROR(ConflictingEntries);
ZEIG_DEFINE_ERROR(IoError);
ZEIG_DEFINE_ERROR(DimNot3);

// Numerical-state errors.
ZEIG_DEFINE_ERROR(SingularMatrix);
ZEIG_DEFINE_ERROR(NonFinite);
ZEIG_DEFINE_ERROR(NotUnit);
ZEIG_DEFINE_ERROR(ZeroIterate);
ZEIG_DEFINE_ERROR(StepFailure);
ZEIG_DEFINE_ERROR(NotEigenpair);
ZEIG_DEFINE_ERROR(InsufficientTrace);
ZEIG_DEFINE_ERROR(BudgetExhausted);

#undef ZEIG_DEFINE_ERROR

}  // namespace zeig
