#include "akns/jost_seed.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "akns/errors.hpp"
#include "akns/parallel.hpp"
#include "akns/quadrature.hpp"

namespace akns {

namespace {

// Adams-Moulton weights, newest sample first; row k has order k + 2.
constexpr std::array<std::array<double, 6>, 5> kAdamsMoulton = {{
    {1.0 / 2, 1.0 / 2, 0, 0, 0, 0},
    {5.0 / 12, 8.0 / 12, -1.0 / 12, 0, 0, 0},
    {9.0 / 24, 19.0 / 24, -5.0 / 24, 1.0 / 24, 0, 0},
    {251.0 / 720, 646.0 / 720, -264.0 / 720, 106.0 / 720, -19.0 / 720, 0},
    {475.0 / 1440, 1427.0 / 1440, -798.0 / 1440, 482.0 / 1440, -173.0 / 1440, 27.0 / 1440},
}};

// Weighted seed system u1' = alpha u1 + q u2, u2' = r u1 + beta u2.
struct SeedSystem {
  double alpha;
  double beta;
  bool from_right;
  cplx start1;
  cplx start2;
};

struct SeedSolution {
  ComplexField u1;
  ComplexField u2;
};

SeedSolution integrate_seed(const PotentialPair& p, const SeedSystem& sys) {
  const Grid& grid = *p.grid;
  const std::size_t n = grid.size();
  const double hs = sys.from_right ? -grid.h() : grid.h();
  auto node = [&](std::size_t k) { return sys.from_right ? n - 1 - k : k; };

  SeedSolution out{ComplexField(p.grid), ComplexField(p.grid)};
  // Ring of the last five right-hand sides, newest at index (k % 5).
  std::array<cplx, 5> f1{}, f2{};
  cplx u1 = sys.start1;
  cplx u2 = sys.start2;
  {
    const std::size_t i = node(0);
    out.u1[i] = u1;
    out.u2[i] = u2;
    f1[0] = sys.alpha * u1 + p.q[i] * u2;
    f2[0] = p.r[i] * u1 + sys.beta * u2;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const auto& w = kAdamsMoulton[std::min<std::size_t>(k, 4)];
    const std::size_t history = std::min<std::size_t>(k + 1, 5);
    cplx rhs1 = u1;
    cplx rhs2 = u2;
    for (std::size_t j = 0; j < history; ++j) {
      const std::size_t slot = (k - j) % 5;
      rhs1 += hs * w[j + 1] * f1[slot];
      rhs2 += hs * w[j + 1] * f2[slot];
    }
    const std::size_t i = node(k + 1);
    const cplx q = p.q[i];
    const cplx r = p.r[i];
    const double c = hs * w[0];
    // (I - c M) u = rhs, M = [[alpha, q], [r, beta]]
    const cplx m11 = 1.0 - c * sys.alpha;
    const cplx m12 = -c * q;
    const cplx m21 = -c * r;
    const cplx m22 = 1.0 - c * sys.beta;
    const cplx det = m11 * m22 - m12 * m21;
    u1 = (m22 * rhs1 - m12 * rhs2) / det;
    u2 = (m11 * rhs2 - m21 * rhs1) / det;
    out.u1[i] = u1;
    out.u2[i] = u2;
    const std::size_t slot = (k + 1) % 5;
    f1[slot] = sys.alpha * u1 + q * u2;
    f2[slot] = r * u1 + sys.beta * u2;
  }
  return out;
}

double min_abs(const ComplexField& f, std::size_t& where) {
  double m = std::abs(f[0]);
  where = 0;
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (std::abs(f[i]) < m) {
      m = std::abs(f[i]);
      where = i;
    }
  }
  return m;
}

void check_nonvanishing(const ComplexField& f, const char* name, double tol) {
  std::size_t where = 0;
  const double m = min_abs(f, where);
  if (!(m >= tol)) {
    std::ostringstream msg;
    msg << "seed solution " << name << " nearly vanishes (|" << name << "| = " << m
        << " at x = " << f.grid()[where] << "); the nonvanishing assumption fails";
    throw NonvanishingAssumptionViolated(msg.str());
  }
}

ComplexField product(const ComplexField& a, const ComplexField& b) {
  ComplexField out(a.grid_ptr());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

}  // namespace

double seed_panel_residual(const PotentialPair& p, double alpha, double beta, const ComplexField& u1,
                           const ComplexField& u2) {
  const Grid& grid = *p.grid;
  const auto w = panel_subweights(0, Grid::kPanelIntervals);
  double worst = 0.0;
  for (std::size_t start = 0; start + Grid::kPanelIntervals < grid.size(); start += Grid::kPanelIntervals) {
    cplx int1 = 0.0;
    cplx int2 = 0.0;
    double scale = 0.0;
    for (int m = 0; m <= Grid::kPanelIntervals; ++m) {
      const std::size_t i = start + m;
      int1 += w[m] * (alpha * u1[i] + p.q[i] * u2[i]);
      int2 += w[m] * (p.r[i] * u1[i] + beta * u2[i]);
      scale = std::max({scale, std::abs(u1[i]), std::abs(u2[i])});
    }
    const std::size_t end = start + Grid::kPanelIntervals;
    const double res = std::max(std::abs(u1[end] - u1[start] - grid.h() * int1),
                                std::abs(u2[end] - u2[start] - grid.h() * int2));
    worst = std::max(worst, res / std::max(scale, 1e-300));
  }
  return worst;
}

SeedSet compute_seed_set(const PotentialPair& p, const SeedOptions& options) {
  // psi(i/2):   u = e^{x/2} psi,    u1' = u1 + q u2,  u2' = r u1,       u(+inf) = (0, 1)
  // psi~(-i/2): u = e^{x/2} psi~,   u1' = q u2,       u2' = r u1 + u2,  u(+inf) = (1, 0)
  // phi(i/2):   u = e^{-x/2} phi,   u1' = q u2,       u2' = r u1 - u2,  u(-inf) = (1, 0)
  // phi~(-i/2): u = e^{-x/2} phi~,  u1' = -u1 + q u2, u2' = r u1,       u(-inf) = (0, -1)
  const std::array<SeedSystem, 4> systems = {{
      {1.0, 0.0, true, 0.0, 1.0},
      {0.0, 1.0, true, 1.0, 0.0},
      {0.0, -1.0, false, 1.0, 0.0},
      {-1.0, 0.0, false, 0.0, -1.0},
  }};
  std::array<SeedSolution, 4> sol;
  std::array<double, 4> residual{};
  parallel_for(systems.size(), options.threads, [&](std::size_t k) {
    sol[k] = integrate_seed(p, systems[k]);
    residual[k] = seed_panel_residual(p, systems[k].alpha, systems[k].beta, sol[k].u1, sol[k].u2);
  });
  constexpr std::array<const char*, 4> names = {"psi(i/2)", "psi~(-i/2)", "phi(i/2)", "phi~(-i/2)"};
  for (std::size_t k = 0; k < 4; ++k) {
    if (!sol[k].u1.all_finite() || !sol[k].u2.all_finite() || !(residual[k] <= options.residual_tol)) {
      std::ostringstream msg;
      msg << "seed integration for " << names[k] << " failed the residual check (" << residual[k] << ")";
      throw SolverDivergence(msg.str());
    }
  }

  SeedSet s;
  s.grid = p.grid;
  s.psi1_half = std::move(sol[0].u1);
  s.f = std::move(sol[0].u2);
  s.f_prime = product(p.r, s.psi1_half);
  s.ftil = std::move(sol[1].u1);
  s.psitil2_half = std::move(sol[1].u2);
  s.ftil_prime = product(p.q, s.psitil2_half);
  s.g = std::move(sol[2].u1);
  s.phi2_half = std::move(sol[2].u2);
  s.g_prime = product(p.q, s.phi2_half);
  s.phitil1_half = std::move(sol[3].u1);
  s.gtil = std::move(sol[3].u2);
  s.gtil_prime = product(p.r, s.phitil1_half);

  check_nonvanishing(s.f, "f", options.nonvanish_tol);
  check_nonvanishing(s.ftil, "f~", options.nonvanish_tol);
  check_nonvanishing(s.g, "g", options.nonvanish_tol);
  check_nonvanishing(s.gtil, "g~", options.nonvanish_tol);
  return s;
}

}  // namespace akns
