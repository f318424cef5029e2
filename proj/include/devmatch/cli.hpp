#ifndef DEVMATCH_CLI_HPP
#define DEVMATCH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace devmatch {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitInputError = 2;

/// Entry point of the `devmatch` tool. `args` excludes the program name.
/// Reports go to `out`, diagnostics to `err`; `in` backs `--catalog -`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

} // namespace devmatch

#endif // DEVMATCH_CLI_HPP
