#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gammasym/index_set.hpp"
#include "gammasym/roots.hpp"

namespace gammasym::cli {

enum class Command { classify, check, two_number, orbit, subgroups, verify_all };
enum class Format { json, markdown, plain };

enum ExitCode : int {
  kOk = 0,
  kDiscrepancy = 1,
  kUsage = 2,
  kBudgetExceeded = 3,
};

/// Environment variable holding the default orbit budget.
inline constexpr const char* kBudgetEnv = "GAMMASYM_ORBIT_BUDGET";

struct RunConfig {
  Command command = Command::classify;
  std::optional<RootSystemType> type;
  std::optional<IndexSet> set;
  Format format = Format::json;
  bool enumerate = false;
  std::uint64_t budget = 0;  // 0: take the environment or the library default
  bool strict = false;
  bool all = false;
  std::optional<std::string> preset;
  std::vector<int> params;
  std::optional<std::vector<IndexSet>> generators;
  std::optional<std::string> fixtures_dir;
  std::optional<std::string> dump_path;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses arguments (without the program name). Throws UsageError; a help
/// request is reported through `help_text` instead.
RunConfig parse_args(const std::vector<std::string>& args, std::string* help_text = nullptr);

/// Checks the cross-field rules: set required by check/two-number/subgroups
/// (a preset supplies it), type required except for verify-all and
/// classify --all, budget positive.
void validate(const RunConfig& config);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with usage errors mapped to exit code 2.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammasym::cli
