#include "akns/config.hpp"

#include <set>

#include "json.hpp"

#include "akns/direct.hpp"
#include "akns/errors.hpp"
#include "akns/io.hpp"

namespace akns {

namespace {

using json = nlohmann::ordered_json;

void check_keys(const json& obj, const char* where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ParseError(std::string("config: '") + where + "' must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) throw ParseError(std::string("config: unknown key '") + key + "' in '" + where + "'");
  }
}

template <class T>
T get(const json& obj, const char* key, T fallback, const char* where) {
  if (!obj.contains(key)) return fallback;
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("config: '") + where + "." + key + "' has the wrong type");
  }
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError("config: " + what);
}

PotentialSpec parse_potential(const json& j, const std::filesystem::path& base) {
  const auto kind = get<std::string>(j, "kind", "", "potential");
  if (kind == "sech_chirp") {
    check_keys(j, "potential", {"kind", "A", "gamma"});
    SechChirp s;
    s.amplitude = get(j, "A", s.amplitude, "potential");
    s.chirp = get(j, "gamma", s.chirp, "potential");
    require(s.amplitude > 0.0, "potential.A must be positive");
    return s;
  }
  if (kind == "gauss_pair") {
    check_keys(j, "potential", {"kind"});
    return GaussPair{};
  }
  if (kind == "gauss_phase_pair") {
    check_keys(j, "potential", {"kind"});
    return GaussPhasePair{};
  }
  if (kind == "sampled") {
    check_keys(j, "potential", {"kind", "file"});
    std::filesystem::path file = get<std::string>(j, "file", "", "potential");
    require(!file.empty(), "potential.file is required for a sampled potential");
    if (file.is_relative() && !base.empty()) file = base / file;
    return Sampled{file};
  }
  throw ParseError("config: potential.kind must be sech_chirp, gauss_pair, gauss_phase_pair or sampled");
}

RhoSampling parse_sampling(const json& j) {
  const auto kind = get<std::string>(j, "kind", "uniform", "direct.rho_sampling");
  if (kind == "uniform") {
    check_keys(j, "direct.rho_sampling", {"kind", "min", "max", "count"});
    UniformSampling s;
    s.min = get(j, "min", s.min, "direct.rho_sampling");
    s.max = get(j, "max", s.max, "direct.rho_sampling");
    s.count = get(j, "count", s.count, "direct.rho_sampling");
    require(s.min < s.max && s.count >= 2, "uniform sampling needs min < max and count >= 2");
    return s;
  }
  if (kind == "log_symmetric") {
    check_keys(j, "direct.rho_sampling", {"kind", "min_exp", "max_exp", "count"});
    LogSymmetricSampling s;
    s.min_exp = get(j, "min_exp", s.min_exp, "direct.rho_sampling");
    s.max_exp = get(j, "max_exp", s.max_exp, "direct.rho_sampling");
    s.count = get(j, "count", s.count, "direct.rho_sampling");
    require(s.min_exp < s.max_exp, "log_symmetric sampling needs min_exp < max_exp");
    require(s.count >= 4 && s.count % 2 == 0, "log_symmetric sampling needs an even count >= 4");
    return s;
  }
  throw ParseError("config: direct.rho_sampling.kind must be uniform or log_symmetric");
}

}  // namespace

std::vector<double> sample_rhos(const RhoSampling& sampling) {
  return std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSampling>) {
          return uniform_rhos(s.min, s.max, s.count);
        } else {
          return log_symmetric_rhos(s.min_exp, s.max_exp, s.count);
        }
      },
      sampling);
}

RunConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  check_keys(doc, "config", {"potential", "grid", "direct", "inverse", "validate", "output_dir"});
  RunConfig c;
  if (doc.contains("potential")) c.potential = parse_potential(doc["potential"], base_dir);
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    check_keys(g, "grid", {"x_min", "x_max", "nodes_per_unit"});
    c.grid.x_min = get(g, "x_min", c.grid.x_min, "grid");
    c.grid.x_max = get(g, "x_max", c.grid.x_max, "grid");
    c.grid.nodes_per_unit = get(g, "nodes_per_unit", c.grid.nodes_per_unit, "grid");
    require(c.grid.x_min < 0.0 && c.grid.x_max > 0.0, "grid needs x_min < 0 < x_max");
    require(c.grid.nodes_per_unit > 0, "grid.nodes_per_unit must be positive");
  }
  if (doc.contains("direct")) {
    const auto& d = doc["direct"];
    check_keys(d, "direct", {"N", "rho_sampling"});
    c.direct.N = get(d, "N", c.direct.N, "direct");
    require(c.direct.N >= 0, "direct.N must be non-negative");
    if (d.contains("rho_sampling")) c.direct.rho_sampling = parse_sampling(d["rho_sampling"]);
  }
  if (doc.contains("inverse")) {
    const auto& v = doc["inverse"];
    check_keys(v, "inverse", {"N", "l", "x_nodes_per_unit", "residual_report"});
    c.inverse.N = get(v, "N", c.inverse.N, "inverse");
    c.inverse.l = get(v, "l", c.inverse.l, "inverse");
    c.inverse.x_nodes_per_unit = get(v, "x_nodes_per_unit", c.inverse.x_nodes_per_unit, "inverse");
    c.inverse.residual_report = get(v, "residual_report", c.inverse.residual_report, "inverse");
    require(c.inverse.N >= 1, "inverse.N must be at least 1");
    require(c.inverse.l > 0.0, "inverse.l must be positive");
    require(c.inverse.x_nodes_per_unit > 0, "inverse.x_nodes_per_unit must be positive");
  }
  if (doc.contains("validate")) {
    const auto& v = doc["validate"];
    check_keys(v, "validate", {"tolerance"});
    c.validate_tolerance = get(v, "tolerance", c.validate_tolerance, "validate");
    require(c.validate_tolerance > 0.0, "validate.tolerance must be positive");
  }
  if (doc.contains("output_dir")) {
    c.output_dir = get<std::string>(doc, "output_dir", "out", "config");
  }
  if (c.output_dir.is_relative() && !base_dir.empty()) c.output_dir = base_dir / c.output_dir;
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_text(path), path.parent_path());
}

std::string config_to_json(const RunConfig& c) {
  json doc;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SechChirp>) {
          doc["potential"] = {{"kind", "sech_chirp"}, {"A", s.amplitude}, {"gamma", s.chirp}};
        } else if constexpr (std::is_same_v<T, GaussPair>) {
          doc["potential"] = {{"kind", "gauss_pair"}};
        } else if constexpr (std::is_same_v<T, GaussPhasePair>) {
          doc["potential"] = {{"kind", "gauss_phase_pair"}};
        } else {
          doc["potential"] = {{"kind", "sampled"}, {"file", s.file.string()}};
        }
      },
      c.potential);
  doc["grid"] = {{"x_min", c.grid.x_min}, {"x_max", c.grid.x_max}, {"nodes_per_unit", c.grid.nodes_per_unit}};
  json sampling;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, UniformSampling>) {
          sampling = {{"kind", "uniform"}, {"min", s.min}, {"max", s.max}, {"count", s.count}};
        } else {
          sampling = {{"kind", "log_symmetric"}, {"min_exp", s.min_exp}, {"max_exp", s.max_exp}, {"count", s.count}};
        }
      },
      c.direct.rho_sampling);
  doc["direct"] = {{"N", c.direct.N}, {"rho_sampling", sampling}};
  doc["inverse"] = {{"N", c.inverse.N},
                    {"l", c.inverse.l},
                    {"x_nodes_per_unit", c.inverse.x_nodes_per_unit},
                    {"residual_report", c.inverse.residual_report}};
  doc["validate"] = {{"tolerance", c.validate_tolerance}};
  doc["output_dir"] = c.output_dir.string();
  return doc.dump(2) + "\n";
}

}  // namespace akns
