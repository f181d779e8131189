#ifndef PSOMOTIF_ERROR_HPP
#define PSOMOTIF_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace psomotif {

// Exception hierarchy. The C API maps each family onto a status code:
// ContractViolation/NumericError -> 1, IoError -> 2, ValidationError (and its
// ParseError/LinkError refinements) -> 3.

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ContractViolation : public Error {
public:
    using Error::Error;
};

/// Non-finite objective value during an optimizer run.
class NumericError : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

class IoError : public Error {
public:
    using Error::Error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t line)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
    ParseError(const std::string& file, const ParseError& inner)
        : ValidationError(file + ": " + inner.what()), line_(inner.line_) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class LinkError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

inline void require(bool cond, const char* what) {
    if (!cond) throw ContractViolation(what);
}

} // namespace psomotif

#endif
