#pragma once

namespace qblob {

/// Command-line entry point. Exit codes: 0 success, 1 input validation
/// failure, 2 numerical (certification) failure, 3 I/O failure.
int run_cli(int argc, const char* const* argv);

}  // namespace qblob
