#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trifree::cli {

// Full command-line front end. args excludes the program name. Returns the
// process exit code: 0 success, 1 semantic failure, 2 usage or parse error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace trifree::cli
