#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace narayana {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitUsage = 2 };

/**
 * Runs the `narayana` command line.  `args` excludes the program name.
 * Everything the tool prints goes to `out` or `err`, so tests can drive it
 * in-process.  `threads` caps verify's worker count; the executable reads it
 * from NARAYANA_THREADS.
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, unsigned threads = 0);

/// Parses a NARAYANA_THREADS value; unset, empty or unparsable means 0.
unsigned threads_from_env(const char* value);

}  // namespace narayana
