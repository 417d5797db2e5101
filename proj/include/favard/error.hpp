#pragma once

#include <stdexcept>
#include <string>

namespace favard {

// Failure categories surfaced through the C API and mapped to CLI exit codes.
enum class ErrorCode {
  argument,       // caller passed an out-of-range or malformed value
  precondition,   // numerical precondition violated (axis mismatch, zero curvature, ...)
  parse,          // curve specification string does not match the grammar
  internal        // invariant violation; a bug, not a usage error
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_argument(const std::string& message) {
  throw Error(ErrorCode::argument, message);
}

[[noreturn]] inline void throw_precondition(const std::string& message) {
  throw Error(ErrorCode::precondition, message);
}

[[noreturn]] inline void throw_parse(const std::string& message) {
  throw Error(ErrorCode::parse, message);
}

[[noreturn]] inline void throw_internal(const std::string& message) {
  throw Error(ErrorCode::internal, message);
}

}  // namespace favard
