#pragma once

#include <iosfwd>

namespace digitroot::cli {

/// Command-line entry point. Results go to `out`, diagnostics to `err`.
/// Exit codes: 0 success, 1 usage error, 2 malformed number,
/// 3 verification mismatch.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace digitroot::cli
