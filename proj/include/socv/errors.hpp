#ifndef SOCV_ERRORS_HPP
#define SOCV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace socv {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

// Spectrum of an operand escapes the open interval a scalar function lives on.
struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error(what) {}
};

// Atom placed on the wrong side of the representation endpoint, negative
// weight, or an empty measure with zero constant.
struct RepresentationViolation : Error {
    explicit RepresentationViolation(const std::string& what) : Error(what) {}
};

struct NonInvertible : Error {
    explicit NonInvertible(const std::string& what) : Error(what) {}
};

struct PreconditionViolation : Error {
    explicit PreconditionViolation(const std::string& what) : Error(what) {}
};

// Random instance generator ran out of redraw budget.
struct GenerationFailure : Error {
    explicit GenerationFailure(const std::string& what) : Error(what) {}
};

struct EighFailure : Error {
    explicit EighFailure(const std::string& what) : Error(what) {}
};

} // namespace socv

#endif
