#pragma once

#include <filesystem>
#include <random>

#include "akns/direct.hpp"
#include "akns/jost_seed.hpp"
#include "akns/potential.hpp"
#include "akns/spps.hpp"

namespace fixture {

using akns::cplx;

/// Example 1 on a coarse grid, shared by several suites.
struct Solved {
  akns::PotentialPair p;
  akns::SeedSet seeds;
  akns::FamilyTables tables;
};

inline Solved solve(const akns::PotentialSpec& spec, double L, int npu, int N) {
  auto grid = akns::Grid::make(-L, L, npu);
  auto p = akns::sample_potential(spec, grid);
  auto seeds = akns::compute_seed_set(p);
  auto tables = akns::compute_all_families(p, seeds, N);
  return {std::move(p), std::move(seeds), std::move(tables)};
}

inline const Solved& sech_coarse() {
  static const Solved s = solve(akns::SechChirp{}, 35.0, 500, 160);
  return s;
}

inline const Solved& gauss_coarse() {
  static const Solved s = solve(akns::GaussPair{}, 8.0, 1000, 120);
  return s;
}

inline akns::PotentialPair zero_potential(double L = 10.0, int npu = 100) {
  auto grid = akns::Grid::make(-L, L, npu);
  return akns::PotentialPair::from_samples(akns::ComplexField(grid), akns::ComplexField(grid));
}

inline std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("akns_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace fixture
