#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spinsw {

/* Entry point shared by the binary and the tests.  args excludes the program
 * name.  Returns the process exit code: 0 success, 1 validation/hypothesis
 * failure, 2 parse error, 3 internal consistency failure. */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace spinsw
