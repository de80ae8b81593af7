#pragma once

#include <iosfwd>

namespace zariski::cli {

/// Exit codes: 0 success, 1 domain error (or a failing suite), 2 parse error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace zariski::cli
