#pragma once

#include <iosfwd>

namespace gcat {

// Entry point shared by the gcat binary and the tests. Returns the process
// exit status: 0 on success, 1 with "gcat: error[<code>]: ..." on err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gcat
