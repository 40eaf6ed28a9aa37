#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lca {

enum ExitCode : int { kExitOk = 0, kExitViolated = 1, kExitUsage = 2, kExitPrecondition = 3 };

/// Entry point of the lcaorient tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lca
