#pragma once

#include "atmofv/cases.hpp"
#include "atmofv/error.hpp"
#include "atmofv/riemann.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace atmofv {

/// Bad command line or config file; exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct OutputPlan {
  std::filesystem::path out_dir = ".";
  /// Unset: snapshots at t = 0 and t_end only.
  std::optional<std::int64_t> snapshot_every;
  std::int64_t diag_every = 10;
  std::optional<double> line_z;
  bool csv = true;
  bool vtk = true;
  bool progress = true;
};

struct RunCommand {
  CaseConfig cfg;
  OutputPlan plan;
};

struct ShockTubeCommand {
  std::vector<int> cells{100, 200, 400};
  std::vector<FluxScheme> schemes{std::begin(kAllSchemes), std::end(kAllSchemes)};
  /// Overrides the per-scheme default cut-off Mach number.
  std::optional<double> m_inf;
};

struct HelpRequest {
  std::string text;
};

using Command = std::variant<RunCommand, ShockTubeCommand, HelpRequest>;

/// Parses the arguments after the program name. A `--config <file>` option
/// loads `key = value` lines (keys are the long flag names without dashes,
/// `#` starts a comment); flags on the command line win over file values.
/// Throws UsageError naming the offending token.
Command parse_cli(const std::vector<std::string>& args);

/// Runs a case and writes <out>/<case>_<flux>_diagnostics.csv plus
/// snapshots. Returns the process exit code.
int execute(const RunCommand& cmd, std::ostream& out, std::ostream& err);
int execute(const ShockTubeCommand& cmd, std::ostream& out, std::ostream& err);

/// Full entry point: 0 success, 2 usage error, 1 runtime failure.
int main_entry(int argc, const char* const* argv);

}  // namespace atmofv
