#ifndef EVSYM_TOOLS_CLI_HPP
#define EVSYM_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "evsym/partition.hpp"

namespace evsym::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,       // UNEQUAL theorem check or unexpected error
  kUsage = 2,
  kResourceGuard = 3,
  kCrossCheck = 4,
};

/// Runs one invocation; `args` excludes the program name. All output goes
/// through `out` and `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Row/column specification for `chartable`: items separated by ';', each
/// either an explicit partition or a family (all, ev:<λ>, even-rows:<N>,
/// even-cols:<N>). Without ';', comma-separated family items are accepted
/// and the parts following "ev:" belong to it.
std::vector<Partition> parse_family_spec(const std::string& spec, int degree, const Limits& limits);

}  // namespace evsym::cli

#endif  // EVSYM_TOOLS_CLI_HPP
