#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clonal::cli {

enum ExitCode : int { Ok = 0, Failure = 1, ParseFailure = 2, InvariantFailure = 3 };

/// Runs one `clonal` invocation; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clonal::cli
