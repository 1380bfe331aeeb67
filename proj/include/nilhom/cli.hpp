// Batch command-line front end: counting, algebra and verification commands
// with JSON (default) or TSV output on the given stream.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilhom {

// args excludes the program name.  Exit codes: 0 = success / all checks pass,
// 1 = verification mismatch, 2 = usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilhom
