#pragma once

#include <ostream>

namespace algeq {

/// Entry point of the `algeq` tool. Returns 0 for a true verdict or plain
/// success, 1 for a false verdict, 2 for usage and input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace algeq
