// Command-line front end. run() parses argv, dispatches to one of the
// subcommands (analyze, paper-verify, mpc-demo, curve-info, field-info) and
// returns the process exit code: 0 success, 1 invalid config or usage, 2
// budget exhaustion, 3 precondition failure.
#pragma once

namespace agss::cli {

int run(int argc, const char* const* argv);

}  // namespace agss::cli
