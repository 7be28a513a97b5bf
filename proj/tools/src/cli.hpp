#pragma once

#include <iosfwd>

namespace qcarlitz::cli {

/// Entry point shared by the executable and the tests. Returns the process
/// exit status: 0 on success, 1 when a verification fails, 2 on bad input.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qcarlitz::cli
