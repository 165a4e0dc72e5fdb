#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gcat {

// Failure categories. Each one maps to a distinct CLI diagnostic code.
enum class ErrorCode {
  file_not_found,
  parse,
  validation,
  domain,
  non_convergence,
  resource_guard,
  usage,
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

}  // namespace gcat
