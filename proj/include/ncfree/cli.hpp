#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncfree {

/// Exit status of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs `ncfree <subcommand> ...`; args excludes the program name. Results go to
/// `out` as TSV, diagnostics to `err`; failed checks print a `WITNESS<TAB>` line on `out`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncfree
