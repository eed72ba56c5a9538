#ifndef BORELWKB_ERRORS_HPP
#define BORELWKB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace borelwkb {

// Error taxonomy. Exit-code classes used by the CLI:
//   2 = validation failure (bad inputs, preconditions)
//   3 = numerical failure (a computation could not meet its contract)
//   4 = acceptance-style violation (a certified inequality was breached)
class Error : public std::runtime_error {
public:
    Error(std::string what, int exit_class) : std::runtime_error(std::move(what)), exit_class_(exit_class) {}
    int exit_class() const { return exit_class_; }
private:
    int exit_class_;
};

#define BORELWKB_DEFINE_ERROR(NAME, CLASS)                                  \
    class NAME : public Error {                                             \
    public:                                                                 \
        explicit NAME(const std::string& m) : Error(#NAME ": " + m, CLASS) {} \
    }

BORELWKB_DEFINE_ERROR(DomainError, 2);
BORELWKB_DEFINE_ERROR(ParameterOrder, 2);
BORELWKB_DEFINE_ERROR(ValidationError, 2);

BORELWKB_DEFINE_ERROR(BranchAmbiguity, 3);
BORELWKB_DEFINE_ERROR(SingularityHit, 3);
BORELWKB_DEFINE_ERROR(StepFailure, 3);
BORELWKB_DEFINE_ERROR(TruncationError, 3);
BORELWKB_DEFINE_ERROR(DegeneratePade, 3);
BORELWKB_DEFINE_ERROR(PoleOnContour, 3);
BORELWKB_DEFINE_ERROR(GridTooCoarse, 3);
BORELWKB_DEFINE_ERROR(Overflow, 3);
BORELWKB_DEFINE_ERROR(PrecisionLoss, 3);
BORELWKB_DEFINE_ERROR(TailNotNegligible, 3);
BORELWKB_DEFINE_ERROR(BranchMismatch, 2);

BORELWKB_DEFINE_ERROR(ConditionViolated, 4);
BORELWKB_DEFINE_ERROR(BoundViolated, 4);

#undef BORELWKB_DEFINE_ERROR

} // namespace borelwkb

#endif
