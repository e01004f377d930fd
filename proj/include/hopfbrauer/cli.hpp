#pragma once

#include <iosfwd>

namespace hopfbrauer {

/// Exit codes: 0 success, 1 a verified property failed, 2 usage or input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hopfbrauer
