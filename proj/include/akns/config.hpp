#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "akns/potential.hpp"

namespace akns {

struct UniformSampling {
  double min = -30.0;
  double max = 30.0;
  std::size_t count = 2000;
};

/// count / 2 points 10^alpha, alpha uniform on [min_exp, max_exp], plus their mirror images.
struct LogSymmetricSampling {
  double min_exp = -3.0;
  double max_exp = 1.845;
  std::size_t count = 5000;
};

using RhoSampling = std::variant<UniformSampling, LogSymmetricSampling>;

std::vector<double> sample_rhos(const RhoSampling& sampling);

struct GridConfig {
  double x_min = -35.0;
  double x_max = 35.0;
  int nodes_per_unit = 2500;
};

struct DirectConfig {
  int N = 160;
  RhoSampling rho_sampling = UniformSampling{};
};

struct InverseSection {
  int N = 50;
  double l = 5.0;
  int x_nodes_per_unit = 10;
  bool residual_report = false;
};

struct RunConfig {
  PotentialSpec potential = SechChirp{};
  GridConfig grid;
  DirectConfig direct;
  InverseSection inverse;
  double validate_tolerance = 1e-8;
  std::filesystem::path output_dir = "out";
};

/// Parses the JSON config. Relative paths (sampled potential file, output_dir)
/// resolve against base_dir. Missing sections take the defaults above.
/// Throws ParseError on unknown keys, wrong types or invalid values.
RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

/// Canonical JSON of the resolved config, two-space indented.
std::string config_to_json(const RunConfig& config);

}  // namespace akns
