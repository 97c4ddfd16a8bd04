#pragma once

#include <stdexcept>
#include <string>

namespace tuttekit {

/// Machine-readable failure categories. The CLI maps `parse` to exit code 1
/// and everything else to exit code 2.
enum class ErrorCode {
  parse,
  invalid_argument,
  unknown_variable,
  non_central,
  bad_prime,
  budget_exceeded,
  inconsistent,
  internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tuttekit
