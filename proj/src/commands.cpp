#include "akns/commands.hpp"

#include <cmath>
#include <ostream>

#include "json.hpp"

#include "akns/errors.hpp"
#include "akns/io.hpp"
#include "akns/jost_seed.hpp"
#include "akns/potential.hpp"

namespace akns {

namespace {

void note(CommandContext& ctx, const std::string& line) {
  if (ctx.log) *ctx.log << line << '\n';
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

DirectOutcome run_direct(const RunConfig& config, CommandContext& ctx) {
  ctx.stage = "potential-model";
  const auto grid = Grid::make(config.grid.x_min, config.grid.x_max, config.grid.nodes_per_unit);
  const PotentialPair p = sample_potential(config.potential, grid);

  ctx.stage = "jost-seed";
  SeedOptions seed_options;
  seed_options.threads = ctx.threads;
  const SeedSet seeds = compute_seed_set(p, seed_options);

  ctx.stage = "spps-engine";
  const FamilyTables tables = compute_all_families(p, seeds, config.direct.N, {}, ctx.threads);

  ctx.stage = "direct-solver";
  DirectOutcome out;
  const auto rhos = sample_rhos(config.direct.rho_sampling);
  out.data.samples = scattering_entries(tables, rhos, ctx.threads);
  for (const auto& s : out.data.samples) {
    out.max_unitarity = std::max(out.max_unitarity, s.unitarity_residual());
    out.max_wronskian = std::max(out.max_wronskian, std::abs(wronskian_phi_phitil(tables, s.rho) + 1.0));
  }
  Eigenvalues eig = find_eigenvalues(tables);
  norming_constants(tables, eig.upper);
  norming_constants(tables, eig.lower);
  out.data.upper = std::move(eig.upper);
  out.data.lower = std::move(eig.lower);
  out.a_column = probe_at(tables[static_cast<int>(Family::A)], 0.0);
  note(ctx, "direct: " + std::to_string(out.data.upper.size()) + " upper and " +
                std::to_string(out.data.lower.size()) + " lower eigenvalues; max |a a~ + b b~ - 1| = " +
                fmt(out.max_unitarity));
  return out;
}

DirectOutcome cmd_direct(const RunConfig& config, const std::filesystem::path& out_dir, CommandContext& ctx) {
  DirectOutcome out = run_direct(config, ctx);
  ctx.stage = "output";
  write_text(out_dir / "config.json", config_to_json(config));
  write_scattering_csv(out_dir / "scattering.csv", out.data.samples);
  write_discrete_json(out_dir / "discrete.json", out.data);
  write_coefficient_csv(out_dir / "coefficients.csv", out.a_column);
  nlohmann::ordered_json diag;
  diag["N"] = config.direct.N;
  diag["samples"] = out.data.samples.size();
  diag["upper_eigenvalues"] = out.data.upper.size();
  diag["lower_eigenvalues"] = out.data.lower.size();
  diag["max_unitarity_residual"] = out.max_unitarity;
  diag["max_wronskian_residual"] = out.max_wronskian;
  write_text(out_dir / "diagnostics.json", diag.dump(2) + "\n");
  return out;
}

namespace {

RecoveredPotential inverse_from_data(const RunConfig& config, const ScatteringData& sd,
                                     const std::filesystem::path& out_dir, CommandContext& ctx) {
  ctx.stage = "inverse-solver";
  InverseConfig ic;
  ic.N = config.inverse.N;
  ic.l = config.inverse.l;
  ic.x_nodes_per_unit = config.inverse.x_nodes_per_unit;
  ic.residual_report = config.inverse.residual_report;
  ic.threads = ctx.threads;
  std::vector<std::string> warnings;
  RecoveredPotential rec = solve_inverse(sd, ic, &warnings);
  for (const auto& w : warnings) note(ctx, "warning: " + w);

  ctx.stage = "output";
  PotentialSamples s{rec.x, rec.q, rec.r};
  write_potential_csv(out_dir / "potential.csv", s);
  if (ic.residual_report) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < rec.x.size(); ++i) rows.push_back({rec.x[i], rec.residual1[i], rec.residual2[i]});
    write_table_csv(out_dir / "residual.csv", {"x", "res1", "res2"}, rows);
  }
  return rec;
}

}  // namespace

RecoveredPotential cmd_inverse(const RunConfig& config, const std::filesystem::path& scattering_csv,
                               const std::optional<std::filesystem::path>& discrete_json,
                               const std::filesystem::path& out_dir, CommandContext& ctx) {
  ctx.stage = "input";
  ScatteringData sd;
  sd.samples = read_scattering_csv(scattering_csv);
  if (discrete_json && std::filesystem::exists(*discrete_json)) {
    read_discrete_json(*discrete_json, sd);
  } else {
    note(ctx, "warning: no discrete data file; solving with continuum rows only, which is inexact if eigenvalues exist");
  }
  write_text(out_dir / "config.json", config_to_json(config));
  return inverse_from_data(config, sd, out_dir, ctx);
}

RoundtripReport cmd_roundtrip(const RunConfig& config, const std::filesystem::path& out_dir, CommandContext& ctx) {
  const DirectOutcome direct = cmd_direct(config, out_dir, ctx);
  const RecoveredPotential rec = inverse_from_data(config, direct.data, out_dir, ctx);

  ctx.stage = "roundtrip";
  const PotentialFunction truth(config.potential);
  RoundtripReport report;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < rec.x.size(); ++i) {
    const auto [q, r] = truth(rec.x[i]);
    const double eq = std::abs(rec.q[i] - q);
    const double er = std::abs(rec.r[i] - r);
    report.max_abs_err_q = std::max(report.max_abs_err_q, eq);
    report.max_abs_err_r = std::max(report.max_abs_err_r, er);
    rows.push_back({rec.x[i], eq, er});
  }
  ctx.stage = "output";
  write_table_csv(out_dir / "errors.csv", {"x", "err_q", "err_r"}, rows);
  nlohmann::ordered_json doc;
  doc["max_abs_err_q"] = report.max_abs_err_q;
  doc["max_abs_err_r"] = report.max_abs_err_r;
  write_text(out_dir / "errors.json", doc.dump(2) + "\n");
  note(ctx, "roundtrip: max |q error| = " + fmt(report.max_abs_err_q) + ", max |r error| = " +
                fmt(report.max_abs_err_r));
  return report;
}

ValidationReport cmd_validate(const std::filesystem::path& scattering_csv, double tolerance,
                              const std::filesystem::path& out_dir, CommandContext& ctx) {
  ctx.stage = "input";
  const auto samples = read_scattering_csv(scattering_csv);
  ctx.stage = "validate";
  ValidationReport report;
  std::vector<std::vector<double>> rows;
  for (const auto& s : samples) {
    const double res = s.unitarity_residual();
    if (!(res <= report.max_residual)) {
      report.max_residual = res;
      report.rho_at_max = s.rho;
    }
    rows.push_back({s.rho, res});
  }
  report.passed = report.max_residual <= tolerance;
  if (!out_dir.empty()) {
    write_table_csv(out_dir / "unitarity.csv", {"rho", "residual"}, rows);
  } else if (ctx.log) {
    *ctx.log << "rho,residual\n";
    for (const auto& row : rows) *ctx.log << fmt(row[0]) << ',' << fmt(row[1]) << '\n';
  }
  note(ctx, "max |a a~ + b b~ - 1| = " + fmt(report.max_residual) + " at rho = " + fmt(report.rho_at_max) +
                " (tolerance " + fmt(tolerance) + "): " + (report.passed ? "ok" : "FAILED"));
  return report;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DecayError*>(&e)) return 2;
  if (dynamic_cast<const NonvanishingAssumptionViolated*>(&e)) return 3;
  if (dynamic_cast<const RankDeficiency*>(&e)) return 4;
  if (dynamic_cast<const DegenerateDenominator*>(&e)) return 5;
  return 1;
}

}  // namespace akns
