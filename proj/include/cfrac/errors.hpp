#ifndef CFRAC_ERRORS_HPP
#define CFRAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cfrac {

// Base of all library errors. `code()` is the stable machine-readable tag
// used in CLI error objects; `what()` carries a human-readable message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* code() const noexcept { return "Error"; }
};

#define CFRAC_DEFINE_ERROR(NAME)                                           \
    class NAME : public Error {                                            \
    public:                                                                \
        explicit NAME(const std::string& msg) : Error(msg) {}              \
        const char* code() const noexcept override { return #NAME; }       \
    }

CFRAC_DEFINE_ERROR(DomainMismatch);
CFRAC_DEFINE_ERROR(DivisionByZero);
CFRAC_DEFINE_ERROR(NonExactDivision);
CFRAC_DEFINE_ERROR(NotInvertible);
CFRAC_DEFINE_ERROR(NonUnitConstantTerm);
CFRAC_DEFINE_ERROR(NonzeroLowCoefficients);
CFRAC_DEFINE_ERROR(OrderUnderflow);
CFRAC_DEFINE_ERROR(ConstantTermViolation);
CFRAC_DEFINE_ERROR(BadGMinus1);
CFRAC_DEFINE_ERROR(BadConstantTerm);
CFRAC_DEFINE_ERROR(StrictShapeViolation);
CFRAC_DEFINE_ERROR(ShapeMismatch);
CFRAC_DEFINE_ERROR(SingularPivot);
CFRAC_DEFINE_ERROR(InsufficientDepth);
CFRAC_DEFINE_ERROR(InconsistentExtension);
CFRAC_DEFINE_ERROR(SizeLimit);
CFRAC_DEFINE_ERROR(UnknownFamily);
CFRAC_DEFINE_ERROR(BadParams);
CFRAC_DEFINE_ERROR(IndexOutOfRange);
CFRAC_DEFINE_ERROR(ParseError);

#undef CFRAC_DEFINE_ERROR

// A zero coefficient pattern (some p_k > 1) hit during a positivity scan.
class PEncountered : public Error {
public:
    PEncountered(const std::string& msg, int index) : Error(msg), index(index) {}
    const char* code() const noexcept override { return "PEncountered"; }
    int index;
};

} // namespace cfrac

#endif
