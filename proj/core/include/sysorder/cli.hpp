#ifndef SYSORDER_CLI_HPP
#define SYSORDER_CLI_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace sysorder::cli {

/// Flag-level overrides applied on top of the config file.
struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_dir;
  std::optional<int> jobs;
  std::optional<std::string> tolerance_profile;  // "default" | "strict"
};

/// Exit codes: 0 all asserted checks passed; 1 a check failed or a theorem
/// was refuted; 2 configuration/schema error; 3 I/O error.
int run_file(const std::string& config_path, const Overrides& o = {});

/// Same engine on an in-memory config; the report JSON is returned through
/// `report_out` when given (and still written to out_dir if configured).
int run_text(const std::string& config_json, const Overrides& o = {},
             std::string* report_out = nullptr);

}  // namespace sysorder::cli

#endif
