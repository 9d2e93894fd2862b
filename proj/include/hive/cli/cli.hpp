#pragma once

namespace hive::cli {

// Full command-line entry point. Returns the process exit code:
// 0 success, 1 configuration/usage, 2 reply parsing, 3 provider transport,
// 4 input validation.
int run(int argc, const char* const* argv);

}  // namespace hive::cli
