#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specht {

/// Command-line front end behind main(). args excludes the program name.
/// Returns the process exit code: 0 success, 1 verification failure or
/// series mismatch, 2 usage or parse error, 3 unsupported family, 4
/// resource cap hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err, std::istream& in);

}  // namespace specht
