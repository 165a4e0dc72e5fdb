#include "gcat/error.hpp"

namespace gcat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::file_not_found: return "file-not-found";
    case ErrorCode::parse: return "parse";
    case ErrorCode::validation: return "validation";
    case ErrorCode::domain: return "domain";
    case ErrorCode::non_convergence: return "non-convergence";
    case ErrorCode::resource_guard: return "resource-guard";
    case ErrorCode::usage: return "usage";
  }
  return "unknown";
}

}  // namespace gcat
