#pragma once

namespace kbforge {

// Entry point behind the kbforge binary. Exit codes: 0 success,
// 1 validation or diff mismatch, 2 usage or parse error.
int run_cli(int argc, const char* const* argv);

}  // namespace kbforge
