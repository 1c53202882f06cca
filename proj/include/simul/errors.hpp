#ifndef SIMUL_ERRORS_HPP
#define SIMUL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simul {

/// Root of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition.
struct PreconditionViolation : Error {
    using Error::Error;
};

/// Two input events coincide where distinct events are required.
struct DegenerateInput : PreconditionViolation {
    using PreconditionViolation::PreconditionViolation;
};

/// Arithmetic between quadratic scalars over distinct irrational radicands.
struct IncommensurableRadicands : Error {
    using Error::Error;
};

/// phi_f applied to an event whose adapted radius is not rational.
struct IrrationalRadius : PreconditionViolation {
    using PreconditionViolation::PreconditionViolation;
};

/// SVG viewport has zero area.
struct ViewportError : Error {
    using Error::Error;
};

/// Malformed input document; message names the offending field.
struct ParseError : Error {
    ParseError(const std::string& field, const std::string& what)
        : Error("field '" + field + "': " + what), field(field) {}
    std::string field;
};

} // namespace simul

#endif
