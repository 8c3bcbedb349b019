#pragma once

#include <stdexcept>
#include <string>

namespace weave {

// Exit-code families used by the command line front end.
enum class ErrorKind {
    invalid = 1,
    verification = 2,
    unsupported = 3,
    cap = 4,
};

class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what, ErrorKind kind = ErrorKind::invalid)
        : std::runtime_error(name + ": " + what), name_(std::move(name)), kind_(kind) {}
    const std::string& name() const { return name_; }
    ErrorKind kind() const { return kind_; }

private:
    std::string name_;
    ErrorKind kind_;
};

#define WEAVE_ERROR(Cls, Kind)                                                   \
    class Cls : public Error {                                                   \
    public:                                                                      \
        explicit Cls(const std::string& what) : Error(#Cls, what, Kind) {}       \
    }

WEAVE_ERROR(InvalidArgument, ErrorKind::invalid);
WEAVE_ERROR(NonLaurentDivision, ErrorKind::verification);
WEAVE_ERROR(CoefficientOverflow, ErrorKind::unsupported);
WEAVE_ERROR(NotBipartite, ErrorKind::unsupported);
WEAVE_ERROR(CapExceeded, ErrorKind::cap);
WEAVE_ERROR(OddCoxeterNumber, ErrorKind::unsupported);
WEAVE_ERROR(DivisionByZero, ErrorKind::verification);
WEAVE_ERROR(NotAdmissible, ErrorKind::unsupported);
WEAVE_ERROR(NonCommuting, ErrorKind::verification);
WEAVE_ERROR(UnsupportedConfiguration, ErrorKind::unsupported);
WEAVE_ERROR(BoundaryMismatch, ErrorKind::unsupported);
WEAVE_ERROR(BoundaryNotRotationInvariant, ErrorKind::unsupported);
WEAVE_ERROR(NotRaySymmetric, ErrorKind::unsupported);
WEAVE_ERROR(SiteMismatch, ErrorKind::unsupported);
WEAVE_ERROR(InvalidGraph, ErrorKind::verification);
WEAVE_ERROR(DegenerateDraw, ErrorKind::verification);
WEAVE_ERROR(InconsistentClosure, ErrorKind::unsupported);
WEAVE_ERROR(InteriorFace, ErrorKind::unsupported);
WEAVE_ERROR(ConstraintViolated, ErrorKind::verification);
WEAVE_ERROR(ZeroWedge, ErrorKind::verification);
WEAVE_ERROR(ZeroPairing, ErrorKind::verification);

#undef WEAVE_ERROR

}  // namespace weave
