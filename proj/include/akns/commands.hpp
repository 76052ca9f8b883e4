#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "akns/config.hpp"
#include "akns/direct.hpp"
#include "akns/inverse.hpp"

namespace akns {

/// Where a command is and where it reports to. `stage` names the pipeline
/// step in progress so failures can say where they happened.
struct CommandContext {
  unsigned threads = 1;
  std::ostream* log = nullptr;
  std::string stage;
};

struct DirectOutcome {
  ScatteringData data;
  SeriesColumn a_column;  // family A coefficients at x = 0
  double max_unitarity = 0.0;
  double max_wronskian = 0.0;  // max |W[phi; phi~] + 1| over the sampled rho
};

/// potential -> seeds -> four coefficient families -> entries, eigenvalues, norming constants.
DirectOutcome run_direct(const RunConfig& config, CommandContext& ctx);

/// Writes scattering.csv, discrete.json, coefficients.csv, diagnostics.json and config.json.
DirectOutcome cmd_direct(const RunConfig& config, const std::filesystem::path& out_dir, CommandContext& ctx);

/// Reads the scattering CSV and, if given and present, the discrete JSON; writes potential.csv
/// (and residual.csv when residual_report is set).
RecoveredPotential cmd_inverse(const RunConfig& config, const std::filesystem::path& scattering_csv,
                               const std::optional<std::filesystem::path>& discrete_json,
                               const std::filesystem::path& out_dir, CommandContext& ctx);

struct RoundtripReport {
  double max_abs_err_q = 0.0;
  double max_abs_err_r = 0.0;
};

/// Direct then inverse; errors against the configured potential on the reconstruction nodes.
/// Writes everything cmd_direct and cmd_inverse write plus errors.json and errors.csv.
RoundtripReport cmd_roundtrip(const RunConfig& config, const std::filesystem::path& out_dir, CommandContext& ctx);

struct ValidationReport {
  double max_residual = 0.0;
  double rho_at_max = 0.0;
  bool passed = false;
};

/// |a a~ + b b~ - 1| for every row of the scattering CSV. Per-rho values go to
/// out_dir/unitarity.csv when out_dir is non-empty.
ValidationReport cmd_validate(const std::filesystem::path& scattering_csv, double tolerance,
                              const std::filesystem::path& out_dir, CommandContext& ctx);

/// Process exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

inline constexpr int kExitValidationFailed = 6;

}  // namespace akns
