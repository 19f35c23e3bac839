#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psmono {

/// Entry point of the psmono command-line tool; argv excludes the program
/// name. Returns the process exit code: 0 all checks passed, 1 numeric
/// failure, 2 usage error.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace psmono
