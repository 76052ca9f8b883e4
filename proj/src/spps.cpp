#include "akns/spps.hpp"

#include <cmath>
#include <sstream>

#include "akns/errors.hpp"
#include "akns/mobius.hpp"
#include "akns/parallel.hpp"
#include "akns/quadrature.hpp"

namespace akns {

namespace {

// Every family is the same recurrence in the roles below. X is the component
// obtained by double integration, Y the other one, and direction +1 (-1)
// means the integrals run from the right (left) end of the grid.
//
//   X_0 = F - base, Y_0 = S, X'_0 = w S, Y'_0 = d S + v F
//   H   = Y'_{n-1} + d Y_{n-1} - v X_{n-1}
//   J   = int exp(-|s - t|) F H ds        (towards the anchored end)
//   I   = int w J / F^2 dt
//   X_n = F I,  Y_n = S I - d J / F,  X'_n = w Y_n
//   Y'_n = Y'_{n-1} + d (Y_n + Y_{n-1}) + v (X_n - X_{n-1})
struct Roles {
  int direction;          // d
  bool x_is_first;        // X is c1 (true) or c2 (false)
  const ComplexField* F;  // seed
  const ComplexField* S;  // seed ratio field
  const ComplexField* w;  // potential multiplying Y in X' = w Y
  const ComplexField* v;  // the other potential
  double base;            // asymptotic value of F
};

Roles roles_for(Family family, const PotentialPair& p, const SeedSet& s) {
  switch (family) {
    case Family::A:
      return {+1, false, &s.f, &s.psi1_half, &p.r, &p.q, 1.0};
    case Family::ATIL:
      return {+1, true, &s.ftil, &s.psitil2_half, &p.q, &p.r, 1.0};
    case Family::B:
      return {-1, true, &s.g, &s.phi2_half, &p.q, &p.r, 1.0};
    case Family::BTIL:
      return {-1, false, &s.gtil, &s.phitil1_half, &p.r, &p.q, -1.0};
  }
  throw DomainError("unknown family");
}

void check_magnitude(double max_norm, double limit, Family family, int n) {
  if (!(max_norm <= limit * limit)) {
    std::ostringstream msg;
    msg << "family " << family_name(family) << ": coefficient row " << n
        << " exceeds the overflow limit " << limit;
    throw OverflowError(msg.str());
  }
}

}  // namespace

std::string_view family_name(Family family) {
  switch (family) {
    case Family::A:
      return "a";
    case Family::ATIL:
      return "atil";
    case Family::B:
      return "b";
    case Family::BTIL:
      return "btil";
  }
  return "?";
}

const ComplexField& CoefficientTable::c1(int n) const {
  if (!has_rows()) throw DomainError("coefficient rows were not retained");
  return c1_.at(static_cast<std::size_t>(n));
}
const ComplexField& CoefficientTable::c2(int n) const {
  if (!has_rows()) throw DomainError("coefficient rows were not retained");
  return c2_.at(static_cast<std::size_t>(n));
}
const ComplexField& CoefficientTable::c1_prime(int n) const {
  if (!has_rows()) throw DomainError("coefficient rows were not retained");
  return c1p_.at(static_cast<std::size_t>(n));
}
const ComplexField& CoefficientTable::c2_prime(int n) const {
  if (!has_rows()) throw DomainError("coefficient rows were not retained");
  return c2p_.at(static_cast<std::size_t>(n));
}

SeriesColumn CoefficientTable::column(std::size_t x_index) const {
  for (std::size_t k = 0; k < probe_index_.size(); ++k) {
    if (probe_index_[k] == x_index) return probes_[k];
  }
  if (!has_rows()) throw DomainError("no probe at the requested node and rows were not retained");
  SeriesColumn col;
  col.x = (*grid_)[x_index];
  for (int n = 0; n <= order_; ++n) {
    col.c1.push_back(c1_[n][x_index]);
    col.c2.push_back(c2_[n][x_index]);
    col.c1_prime.push_back(c1p_[n][x_index]);
    col.c2_prime.push_back(c2p_[n][x_index]);
  }
  return col;
}

CoefficientTable compute_family(Family family, const PotentialPair& p, const SeedSet& seeds, int N,
                                const TableOptions& options) {
  if (N < 0) throw DomainError("series order must be non-negative");
  if (seeds.grid != p.grid) throw ShapeError("seeds and potential must share the grid");
  const Roles roles = roles_for(family, p, seeds);
  const Grid& grid = *p.grid;
  const std::size_t size = grid.size();
  const double d = roles.direction;
  const ComplexField& F = *roles.F;
  const ComplexField& S = *roles.S;
  const ComplexField& w = *roles.w;
  const ComplexField& v = *roles.v;

  CoefficientTable table;
  table.family_ = family;
  table.order_ = N;
  table.grid_ = p.grid;
  for (double x : options.probe_x) {
    table.probe_index_.push_back(grid.index_of(x));
    SeriesColumn col;
    col.x = grid[table.probe_index_.back()];
    table.probes_.push_back(std::move(col));
  }

  std::vector<cplx> inv_f(size), w_over_f2(size);
  for (std::size_t i = 0; i < size; ++i) {
    inv_f[i] = 1.0 / F[i];
    w_over_f2[i] = w[i] * inv_f[i] * inv_f[i];
  }

  // Current rows (X, Y, X', Y') and the next ones.
  std::vector<cplx> X(size), Y(size), Xp(size), Yp(size);
  std::vector<cplx> Xn(size), Yn(size), Xpn(size), Ypn(size);
  std::vector<cplx> work(size), J(size), I(size);
  for (std::size_t i = 0; i < size; ++i) {
    X[i] = F[i] - roles.base;
    Y[i] = S[i];
    Xp[i] = w[i] * S[i];
    Yp[i] = d * S[i] + v[i] * F[i];
  }

  auto record = [&](int n) {
    const auto& c1 = roles.x_is_first ? X : Y;
    const auto& c2 = roles.x_is_first ? Y : X;
    const auto& c1p = roles.x_is_first ? Xp : Yp;
    const auto& c2p = roles.x_is_first ? Yp : Xp;
    for (std::size_t k = 0; k < table.probes_.size(); ++k) {
      const std::size_t i = table.probe_index_[k];
      auto& col = table.probes_[k];
      col.c1.push_back(c1[i]);
      col.c2.push_back(c2[i]);
      col.c1_prime.push_back(c1p[i]);
      col.c2_prime.push_back(c2p[i]);
    }
    if (options.keep_rows) {
      table.c1_.emplace_back(p.grid, c1);
      table.c2_.emplace_back(p.grid, c2);
      table.c1p_.emplace_back(p.grid, c1p);
      table.c2p_.emplace_back(p.grid, c2p);
    }
    (void)n;
  };
  record(0);

  const CumulativeIntegrator damped(grid.h(), 1.0);
  const CumulativeIntegrator plain(grid.h(), 0.0);
  for (int n = 1; n <= N; ++n) {
    for (std::size_t i = 0; i < size; ++i) {
      work[i] = F[i] * (Yp[i] + d * Y[i] - v[i] * X[i]);
    }
    if (d > 0) {
      damped.tail_right(work, J);
    } else {
      damped.tail_left(work, J);
    }
    for (std::size_t i = 0; i < size; ++i) work[i] = w_over_f2[i] * J[i];
    if (d > 0) {
      plain.tail_right(work, I);
    } else {
      plain.tail_left(work, I);
    }
    double max_norm = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
      Xn[i] = F[i] * I[i];
      Yn[i] = S[i] * I[i] - d * J[i] * inv_f[i];
      Xpn[i] = w[i] * Yn[i];
      Ypn[i] = Yp[i] + d * (Yn[i] + Y[i]) + v[i] * (Xn[i] - X[i]);
      max_norm = std::max({max_norm, std::norm(Xn[i]), std::norm(Yn[i]), std::norm(Ypn[i])});
    }
    check_magnitude(max_norm, options.overflow_limit, family, n);
    X.swap(Xn);
    Y.swap(Yn);
    Xp.swap(Xpn);
    Yp.swap(Ypn);
    record(n);
  }
  return table;
}

std::array<CoefficientTable, 4> compute_all_families(const PotentialPair& p, const SeedSet& seeds, int N,
                                                     const TableOptions& options, unsigned threads) {
  std::array<CoefficientTable, 4> out;
  parallel_for(4, threads, [&](std::size_t k) {
    out[k] = compute_family(static_cast<Family>(k), p, seeds, N, options);
  });
  return out;
}

JostValue evaluate_series(Family family, const SeriesColumn& column, cplx rho) {
  const bool tilde = family == Family::ATIL || family == Family::BTIL;
  if (!tilde && rho.imag() < 0.0) {
    throw DomainError("series for phi and psi require Im rho >= 0");
  }
  if (tilde && rho.imag() > 0.0) {
    throw DomainError("series for phi~ and psi~ require Im rho <= 0");
  }
  const cplx z = tilde ? mobius_ztil(rho) : mobius_z(rho);
  const cplx mz = -z;
  cplx s1 = 0.0;
  cplx s2 = 0.0;
  for (std::size_t n = column.c1.size(); n > 0; --n) {
    s1 = s1 * mz + column.c1[n - 1];
    s2 = s2 * mz + column.c2[n - 1];
  }
  s1 *= z + 1.0;
  s2 *= z + 1.0;
  const cplx i(0.0, 1.0);
  switch (family) {
    case Family::A: {
      const cplx e = std::exp(i * rho * column.x);
      return {e * s1, e * (1.0 + s2)};
    }
    case Family::ATIL: {
      const cplx e = std::exp(-i * rho * column.x);
      return {e * (1.0 + s1), e * s2};
    }
    case Family::B: {
      const cplx e = std::exp(-i * rho * column.x);
      return {e * (1.0 + s1), e * s2};
    }
    case Family::BTIL: {
      const cplx e = std::exp(i * rho * column.x);
      return {e * s1, e * (s2 - 1.0)};
    }
  }
  throw DomainError("unknown family");
}

JostValue evaluate_jost(const CoefficientTable& table, cplx rho, std::size_t x_index) {
  return evaluate_series(table.family(), table.column(x_index), rho);
}

const SeriesColumn& probe_at(const CoefficientTable& table, double x) {
  const auto& probes = table.probes();
  if (probes.empty()) throw DomainError("table has no probes");
  std::size_t best = 0;
  for (std::size_t k = 1; k < probes.size(); ++k) {
    if (std::abs(probes[k].x - x) < std::abs(probes[best].x - x)) best = k;
  }
  return probes[best];
}

}  // namespace akns
