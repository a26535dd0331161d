#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obr {

/// Runs the obr command line (args exclude the program name) against the
/// given streams and returns the process exit code: 0 success, 1 usage or
/// file-format errors, 2 recognition failures.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace obr
