#ifndef PERMSTAT_CLI_HPP
#define PERMSTAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace permstat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // a verification did not pass
inline constexpr int kExitUsage = 2;

// Runs one command line (args exclude the program name). Results go to `out`
// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli

#endif  // PERMSTAT_CLI_HPP
