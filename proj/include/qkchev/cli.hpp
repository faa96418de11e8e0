#pragma once

#include <iosfwd>

namespace qkchev {

// Command-line front end. Exit codes: 0 success (full agreement for verify),
// 1 verification mismatch, 2 usage or input error.
int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qkchev
