#pragma once

#include <iosfwd>

namespace riderlab {

/// Entry point of the riderlab tool. Exit codes: 0 all checks pass,
/// 1 mismatch, 2 usage or budget error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace riderlab
