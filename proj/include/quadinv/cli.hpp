#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadinv::cli {

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kInternalError = 2;

// Runs one subcommand. `args` excludes the program name. JSON goes to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quadinv::cli
