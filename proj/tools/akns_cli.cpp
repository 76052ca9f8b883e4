// Command-line front end: direct, inverse, roundtrip and validate subcommands.
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "akns/commands.hpp"
#include "akns/errors.hpp"
#include "akns/parallel.hpp"

namespace {

struct Flags {
  std::string config;
  std::string out;
  unsigned threads = 0;
  std::string scattering;
  std::string discrete;
  double tolerance = -1.0;
};

akns::RunConfig load(const Flags& f) {
  akns::RunConfig c = f.config.empty() ? akns::RunConfig{} : akns::load_config(f.config);
  if (!f.out.empty()) c.output_dir = f.out;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Direct and inverse scattering for the AKNS system by spectral parameter power series"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub, bool needs_config) {
    auto* opt = sub->add_option("--config", f.config, "JSON run configuration");
    if (needs_config) opt->required();
    opt->check(CLI::ExistingFile);
    sub->add_option("--out", f.out, "output directory (overrides output_dir)");
    sub->add_option("--threads", f.threads, "worker threads (0 = all cores)");
  };

  auto* direct = app.add_subcommand("direct", "scattering data from a potential");
  common(direct, true);
  auto* inverse = app.add_subcommand("inverse", "potential from scattering data");
  common(inverse, true);
  inverse->add_option("--scattering", f.scattering, "scattering CSV")->required()->check(CLI::ExistingFile);
  inverse->add_option("--discrete", f.discrete, "discrete data JSON");
  auto* roundtrip = app.add_subcommand("roundtrip", "direct then inverse, with errors against the potential");
  common(roundtrip, true);
  auto* validate = app.add_subcommand("validate", "unitarity check of a scattering CSV");
  common(validate, false);
  validate->add_option("--scattering", f.scattering, "scattering CSV")->required()->check(CLI::ExistingFile);
  validate->add_option("--tolerance", f.tolerance, "pass threshold for max |a a~ + b b~ - 1|");

  CLI11_PARSE(app, argc, argv);

  akns::CommandContext ctx;
  ctx.log = &std::cerr;
  const char* name = app.get_subcommands().front()->get_name().c_str();
  try {
    if (f.threads == 0) f.threads = akns::default_threads();
    ctx.threads = f.threads;
    ctx.stage = "config";
    if (direct->parsed()) {
      const auto c = load(f);
      akns::cmd_direct(c, c.output_dir, ctx);
    } else if (inverse->parsed()) {
      const auto c = load(f);
      std::optional<std::filesystem::path> discrete;
      if (!f.discrete.empty()) discrete = f.discrete;
      akns::cmd_inverse(c, f.scattering, discrete, c.output_dir, ctx);
    } else if (roundtrip->parsed()) {
      const auto c = load(f);
      const auto report = akns::cmd_roundtrip(c, c.output_dir, ctx);
      std::cout << "max_abs_err_q " << report.max_abs_err_q << "\nmax_abs_err_r " << report.max_abs_err_r << '\n';
    } else if (validate->parsed()) {
      double tolerance = f.tolerance;
      if (tolerance <= 0.0) tolerance = f.config.empty() ? akns::RunConfig{}.validate_tolerance
                                                         : akns::load_config(f.config).validate_tolerance;
      ctx.log = &std::cout;
      const auto report = akns::cmd_validate(f.scattering, tolerance, f.out, ctx);
      return report.passed ? 0 : akns::kExitValidationFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "akns " << name << ": " << ctx.stage << " failed: " << e.what() << '\n';
    return akns::exit_code_for(e);
  }
  return 0;
}
