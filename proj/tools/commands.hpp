#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wgrover/amplitudes.hpp"
#include "wgrover/analysis.hpp"
#include "wgrover/csv_io.hpp"

namespace wgrover::cli {

// Process exit codes; stable for scripting.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIo = 2,
  kExitNumeric = 3,
};

struct RunConfig {
  std::string spec_json;  // distribution spec, see distribution_spec.hpp
  std::optional<Label> target;
  int r_max = kDefaultRMax;
  std::filesystem::path out_dir = "out";
  bool svg = false;
  double x_step = kDefaultContinuumStep;
};

struct CommandResult {
  std::string summary;
  std::vector<std::filesystem::path> files;
};

// Default output directory: $WGROVER_OUT, else "out".
std::filesystem::path default_out_dir();

CommandResult cmd_dist(const RunConfig& config);
CommandResult cmd_simulate(const RunConfig& config);
CommandResult cmd_continuum(const RunConfig& config);
CommandResult cmd_compare(const RunConfig& config);

// Figure ids: fig2 .. fig6. Writes under <out_root>/<figure>/.
CommandResult cmd_repro(const std::string& figure, const std::filesystem::path& out_root);

inline const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {"fig2", "fig3", "fig4", "fig5", "fig6"};
  return ids;
}

// Maps an exception thrown by a command onto an exit code.
int exit_code_for(const std::exception& e) noexcept;

}  // namespace wgrover::cli
