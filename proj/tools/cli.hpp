#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hsu::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kData = 3, kDiverged = 4 };

/// Entry point of the `hsu` tool: gen-data, unmix, eval, sweep.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hsu::cli
