#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "akns/scattering.hpp"

namespace akns {

struct InverseConfig {
  int N = 50;
  double l = 5.0;
  int x_nodes_per_unit = 10;
  bool residual_report = false;
  unsigned threads = 1;
};

/// Reconstruction nodes: x_nodes_per_unit per unit on [-l, l], endpoints included.
std::vector<double> reconstruction_nodes(double l, int x_nodes_per_unit);

/// A is (2K + M + M~) x 4N; B holds the two right-hand sides as columns.
struct LinearSystem {
  Eigen::MatrixXcd A;
  Eigen::MatrixXcd B;
};

/// Unknown ordering in each solution vector: b_{.,0..N-1}, b~, a, a~.
LinearSystem assemble_system(const ScatteringData& sd, double x, int N);

struct CoefficientVectors {
  double x = 0.0;
  Eigen::VectorXcd X1;
  Eigen::VectorXcd X2;
  /// Euclidean residual norms, NaN unless requested.
  double residual1;
  double residual2;

  int N() const noexcept { return static_cast<int>(X1.size() / 4); }
  cplx b1_0() const { return X1(0); }
  cplx b2_0() const { return X2(0); }
  cplx btil1_0() const { return X1(N()); }
  cplx btil2_0() const { return X2(N()); }
};

/// One Householder QR of A shared by both right-hand sides.
/// Throws RankDeficiency when min |R_ii| < 1e-10 max |R_ii|.
CoefficientVectors solve_coefficient_vectors(const LinearSystem& system, bool residual_report = false);

struct RecoveredPotential {
  std::vector<double> x;
  std::vector<cplx> q;
  std::vector<cplx> r;
  std::vector<double> residual1;
  std::vector<double> residual2;
};

/// r = (phi_2' + phi_2 / 2) / phi_1 at rho = i/2 and q = (phi~_1' + phi~_1 / 2) / phi~_2 at
/// rho = -i/2, with derivatives from a 9-point finite-difference stencil across nodes.
/// Throws DegenerateDenominator.
RecoveredPotential recover_potentials(const std::vector<CoefficientVectors>& vectors);

/// Validates shapes, assembles and solves at every node, recovers q and r.
/// Advisory messages (too few samples, missing discrete data) are appended to warnings.
RecoveredPotential solve_inverse(const ScatteringData& sd, const InverseConfig& config,
                                 std::vector<std::string>* warnings = nullptr);

}  // namespace akns
