#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace singcoh {

enum class ErrorCode {
  InvalidArgument,   // precondition on a domain value violated
  Unsupported,       // combination the theory gives no answer for
  Parse,             // malformed polynomial or matrix text
  Verification,      // a witness or certificate failed its symbolic check
  Numerical,         // tolerance-driven failure in floating point routines
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(ErrorCode::Parse,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a witness or certificate fails; `constraint()` names the
/// violated condition (e.g. "left*left_inverse=I", "det(left)=1").
class VerificationError : public Error {
 public:
  VerificationError(std::string constraint, const std::string& detail)
      : Error(ErrorCode::Verification,
              "constraint " + constraint + " violated: " + detail),
        constraint_(std::move(constraint)) {}

  const std::string& constraint() const noexcept { return constraint_; }

 private:
  std::string constraint_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::InvalidArgument, message);
}

}  // namespace singcoh
