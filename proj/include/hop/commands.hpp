#pragma once

// Subcommands behind hopctl. Each returns the process exit code:
//   0 ok, 1 invariant violation or integrity error, 2 config error, 3 resource limit.
// The output document (or a JSON failure record) goes to cfg.out, or to `out`
// when cfg.out is empty, written once at the end.

#include "hop/config.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace hop {

enum ExitCode : int { kExitOk = 0, kExitInvariant = 1, kExitConfig = 2, kExitResource = 3 };

const std::vector<std::string>& command_names();

int run_command(const std::string& name, const RunConfig& cfg, std::ostream& out);

}  // namespace hop
