#pragma once

#include <stdexcept>
#include <string>

namespace cqx {

// Failure categories; the CLI maps them onto exit codes
// (validation -> 2, numeric -> 3, overflow -> 4).
enum class ErrorKind { validation, numeric, overflow };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& w) : Error(ErrorKind::validation, w) {}
};

struct NumericError : Error {
    explicit NumericError(const std::string& w) : Error(ErrorKind::numeric, w) {}
};

struct NotHermitian : ValidationError {
    using ValidationError::ValidationError;
};

struct NotPsd : ValidationError {
    using ValidationError::ValidationError;
};

struct InvalidState : ValidationError {
    using ValidationError::ValidationError;
};

struct NotBinary : ValidationError {
    using ValidationError::ValidationError;
};

struct DimensionMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct LengthMismatch : ValidationError {
    using ValidationError::ValidationError;
};

struct IndexOutOfRange : ValidationError {
    using ValidationError::ValidationError;
};

struct OutOfRange : ValidationError {
    using ValidationError::ValidationError;
};

// Degenerate channel parameter (c = 0 or c = 1) where a binary closed form
// has no finite implicit solution.
struct Degenerate : ValidationError {
    using ValidationError::ValidationError;
};

struct ParseError : ValidationError {
    using ValidationError::ValidationError;
};

struct NoConvergence : NumericError {
    using NumericError::NumericError;
};

struct DimensionOverflow : Error {
    explicit DimensionOverflow(const std::string& w) : Error(ErrorKind::overflow, w) {}
};

}  // namespace cqx
