#include "akns/inverse.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "akns/errors.hpp"
#include "akns/mobius.hpp"
#include "akns/parallel.hpp"
#include "akns/spline.hpp"

namespace akns {

namespace {

constexpr cplx kI(0.0, 1.0);
constexpr double kRankTol = 1e-10;
constexpr double kDenominatorFloor = 1e-10;
// Eighth-order differentiation; the cubic spline limits the reconstruction error to about 2e-4 on a 0.1 grid.
constexpr int kStencilPoints = 9;

// Fills row[col0 .. col0 + N) with factor * (z + 1) * (-z)^n.
template <class Row>
void fill_series(Row&& row, int col0, int N, cplx factor, cplx z) {
  cplx term = factor * (z + 1.0);
  for (int n = 0; n < N; ++n) {
    row(col0 + n) = term;
    term *= -z;
  }
}

}  // namespace

std::vector<double> reconstruction_nodes(double l, int x_nodes_per_unit) {
  if (!(l > 0.0) || x_nodes_per_unit <= 0) throw DomainError("reconstruction needs l > 0 and a positive density");
  const long half = std::lround(l * x_nodes_per_unit);
  if (half < 3) throw DomainError("reconstruction interval has too few nodes");
  std::vector<double> out;
  for (long k = -half; k <= half; ++k) out.push_back(static_cast<double>(k) / x_nodes_per_unit);
  return out;
}

LinearSystem assemble_system(const ScatteringData& sd, double x, int N) {
  if (N < 1) throw ShapeError("inverse truncation N must be at least 1");
  const auto K = static_cast<Eigen::Index>(sd.samples.size());
  const auto M = static_cast<Eigen::Index>(sd.upper.size());
  const auto Mt = static_cast<Eigen::Index>(sd.lower.size());
  const Eigen::Index rows = 2 * K + M + Mt;
  if (rows < 4 * N) {
    std::ostringstream msg;
    msg << "system has " << rows << " equations for " << 4 * N << " unknowns";
    throw ShapeError(msg.str());
  }
  LinearSystem sys{Eigen::MatrixXcd::Zero(rows, 4 * N), Eigen::MatrixXcd::Zero(rows, 2)};
  auto& A = sys.A;
  auto& B = sys.B;
  const int b0 = 0, bt0 = N, a0 = 2 * N, at0 = 3 * N;

  for (Eigen::Index k = 0; k < K; ++k) {
    const auto& s = sd.samples[static_cast<std::size_t>(k)];
    if (!std::isfinite(s.rho)) throw ShapeError("continuum sample with non-finite rho");
    const cplx z = mobius_z(s.rho);
    const cplx zt = std::conj(z);
    const cplx em = std::exp(-kI * s.rho * x);
    const cplx ep = std::conj(em);
    auto r1 = A.row(k);
    fill_series(r1, b0, N, em, z);
    fill_series(r1, a0, N, -s.b * ep, z);
    fill_series(r1, at0, N, -s.a * em, zt);
    B(k, 0) = (s.a - 1.0) * em;
    B(k, 1) = s.b * ep;

    auto r2 = A.row(K + k);
    fill_series(r2, bt0, N, ep, zt);
    fill_series(r2, a0, N, s.atil * ep, z);
    fill_series(r2, at0, N, -s.btil * em, zt);
    B(K + k, 0) = s.btil * em;
    B(K + k, 1) = (1.0 - s.atil) * ep;
  }
  for (Eigen::Index m = 0; m < M; ++m) {
    const auto& d = sd.upper[static_cast<std::size_t>(m)];
    if (!(d.rho_m.imag() > 0.0)) throw ShapeError("upper discrete datum must have Im rho > 0");
    const cplx z = mobius_z(d.rho_m);
    const cplx em = std::exp(-kI * d.rho_m * x);
    const cplx ep = std::exp(kI * d.rho_m * x);
    auto row = A.row(2 * K + m);
    fill_series(row, b0, N, em, z);
    fill_series(row, a0, N, -d.c_m * ep, z);
    B(2 * K + m, 0) = -em;
    B(2 * K + m, 1) = d.c_m * ep;
  }
  for (Eigen::Index m = 0; m < Mt; ++m) {
    const auto& d = sd.lower[static_cast<std::size_t>(m)];
    if (!(d.rho_m.imag() < 0.0)) throw ShapeError("lower discrete datum must have Im rho < 0");
    const cplx zt = mobius_ztil(d.rho_m);
    const cplx em = std::exp(-kI * d.rho_m * x);
    const cplx ep = std::exp(kI * d.rho_m * x);
    auto row = A.row(2 * K + M + m);
    fill_series(row, bt0, N, ep, zt);
    fill_series(row, at0, N, -d.c_m * em, zt);
    B(2 * K + M + m, 0) = d.c_m * em;
    B(2 * K + M + m, 1) = ep;
  }
  return sys;
}

CoefficientVectors solve_coefficient_vectors(const LinearSystem& system, bool residual_report) {
  const auto& A = system.A;
  if (A.rows() < A.cols()) throw ShapeError("least squares needs at least as many rows as columns");
  if (system.B.rows() != A.rows() || system.B.cols() != 2) throw ShapeError("right-hand sides do not match A");
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(A);
  const auto R = qr.matrixQR().diagonal().cwiseAbs();
  const double rmax = R.maxCoeff();
  const double rmin = R.minCoeff();
  if (!(rmin >= kRankTol * rmax)) {
    std::ostringstream msg;
    msg << "least-squares matrix is numerically rank deficient (min |R_ii| / max |R_ii| = " << rmin / rmax << ")";
    throw RankDeficiency(msg.str());
  }
  const Eigen::MatrixXcd X = qr.solve(system.B);
  CoefficientVectors out;
  out.X1 = X.col(0);
  out.X2 = X.col(1);
  out.residual1 = out.residual2 = std::numeric_limits<double>::quiet_NaN();
  if (residual_report) {
    const Eigen::MatrixXcd res = A * X - system.B;
    out.residual1 = res.col(0).norm();
    out.residual2 = res.col(1).norm();
  }
  return out;
}

RecoveredPotential recover_potentials(const std::vector<CoefficientVectors>& vectors) {
  const std::size_t n = vectors.size();
  if (n < static_cast<std::size_t>(kStencilPoints)) throw ShapeError("recovery needs at least 9 reconstruction nodes");
  std::vector<double> x(n);
  std::vector<cplx> b20(n), bt10(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = vectors[i].x;
    b20[i] = vectors[i].b2_0();
    bt10[i] = vectors[i].btil1_0();
  }
  const auto db20 = stencil_derivative(x, b20, kStencilPoints);
  const auto dbt10 = stencil_derivative(x, bt10, kStencilPoints);

  RecoveredPotential out;
  out.x = x;
  for (std::size_t i = 0; i < n; ++i) {
    // phi(i/2) = e^{x/2} (1 + b_{1,0}, b_{2,0}), phi~(-i/2) = e^{x/2} (b~_{1,0}, b~_{2,0} - 1);
    // the common factor e^{x/2} cancels from both quotients.
    const double scale = std::exp(x[i] / 2.0);
    const cplx phi1 = 1.0 + vectors[i].b1_0();
    const cplx phitil2 = vectors[i].btil2_0() - 1.0;
    if (!(std::abs(scale * phi1) >= kDenominatorFloor)) {
      std::ostringstream msg;
      msg << "phi_1(i/2, x) nearly vanishes at x = " << x[i];
      throw DegenerateDenominator(msg.str(), x[i]);
    }
    if (!(std::abs(scale * phitil2) >= kDenominatorFloor)) {
      std::ostringstream msg;
      msg << "phi~_2(-i/2, x) nearly vanishes at x = " << x[i];
      throw DegenerateDenominator(msg.str(), x[i]);
    }
    out.r.push_back((db20[i] + b20[i]) / phi1);
    out.q.push_back((dbt10[i] + bt10[i]) / phitil2);
    out.residual1.push_back(vectors[i].residual1);
    out.residual2.push_back(vectors[i].residual2);
  }
  return out;
}

RecoveredPotential solve_inverse(const ScatteringData& sd, const InverseConfig& config,
                                 std::vector<std::string>* warnings) {
  const auto K = static_cast<long>(sd.samples.size());
  if (K < config.N) {
    std::ostringstream msg;
    msg << K << " continuum samples cannot determine N = " << config.N << " coefficients per family";
    throw ShapeError(msg.str());
  }
  if (warnings && K < 2L * config.N) {
    std::ostringstream msg;
    msg << "only " << K << " continuum samples for N = " << config.N << "; at least 2N are advisable";
    warnings->push_back(msg.str());
  }
  const auto nodes = reconstruction_nodes(config.l, config.x_nodes_per_unit);
  std::vector<CoefficientVectors> vectors(nodes.size());
  parallel_for(nodes.size(), config.threads, [&](std::size_t i) {
    vectors[i] = solve_coefficient_vectors(assemble_system(sd, nodes[i], config.N), config.residual_report);
    vectors[i].x = nodes[i];
  });
  return recover_potentials(vectors);
}

}  // namespace akns
