#include "akns/direct.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "akns/errors.hpp"
#include "akns/mobius.hpp"
#include "akns/parallel.hpp"

namespace akns {

namespace {

constexpr double kQuotientFloor = 1e-8;

const SeriesColumn& at_zero(const FamilyTables& t, Family f) {
  const auto& table = t[static_cast<int>(f)];
  const auto& col = probe_at(table, 0.0);
  if (col.x != 0.0) throw DomainError("coefficient tables carry no probe at x = 0");
  return col;
}

cplx wronskian(const JostValue& u, const JostValue& v) { return u.first * v.second - u.second * v.first; }

// sum_n (-1)^n c_n z^n as a polynomial in z.
Polynomial alternating(const std::vector<cplx>& c) {
  Polynomial p;
  p.coefficients.resize(c.size());
  for (std::size_t n = 0; n < c.size(); ++n) p.coefficients[n] = (n % 2 ? -1.0 : 1.0) * c[n];
  return p;
}

const Polynomial kOne{{1.0}};
const Polynomial kZPlusOne{{1.0, 1.0}};

}  // namespace

double ScatteringSample::unitarity_residual() const noexcept { return std::abs(a * atil + b * btil - 1.0); }

std::vector<ScatteringSample> scattering_entries(const FamilyTables& tables, std::span<const double> rhos,
                                                 unsigned threads) {
  const auto& ca = at_zero(tables, Family::A);
  const auto& cat = at_zero(tables, Family::ATIL);
  const auto& cb = at_zero(tables, Family::B);
  const auto& cbt = at_zero(tables, Family::BTIL);
  std::vector<ScatteringSample> out(rhos.size());
  parallel_for(rhos.size(), threads, [&](std::size_t k) {
    const cplx rho = rhos[k];
    const JostValue psi = evaluate_series(Family::A, ca, rho);
    const JostValue psitil = evaluate_series(Family::ATIL, cat, rho);
    const JostValue phi = evaluate_series(Family::B, cb, rho);
    const JostValue phitil = evaluate_series(Family::BTIL, cbt, rho);
    ScatteringSample& s = out[k];
    s.rho = rhos[k];
    s.z = mobius_z(rho);
    s.ztil = mobius_ztil(rho);
    s.a = wronskian(phi, psi);
    s.atil = wronskian(phitil, psitil);
    s.b = -wronskian(phi, psitil);
    s.btil = wronskian(phitil, psi);
  });
  return out;
}

cplx evaluate_a(const FamilyTables& tables, cplx rho) {
  return wronskian(evaluate_series(Family::B, at_zero(tables, Family::B), rho),
                   evaluate_series(Family::A, at_zero(tables, Family::A), rho));
}

cplx evaluate_atil(const FamilyTables& tables, cplx rho) {
  return wronskian(evaluate_series(Family::BTIL, at_zero(tables, Family::BTIL), rho),
                   evaluate_series(Family::ATIL, at_zero(tables, Family::ATIL), rho));
}

cplx wronskian_phi_phitil(const FamilyTables& tables, double rho) {
  return wronskian(evaluate_series(Family::B, at_zero(tables, Family::B), rho),
                   evaluate_series(Family::BTIL, at_zero(tables, Family::BTIL), rho));
}

Polynomial a_polynomial(const FamilyTables& tables) {
  const auto& ca = at_zero(tables, Family::A);
  const auto& cb = at_zero(tables, Family::B);
  const Polynomial phi1 = kOne + kZPlusOne * alternating(cb.c1);
  const Polynomial phi2 = kZPlusOne * alternating(cb.c2);
  const Polynomial psi1 = kZPlusOne * alternating(ca.c1);
  const Polynomial psi2 = kOne + kZPlusOne * alternating(ca.c2);
  return phi1 * psi2 - phi2 * psi1;
}

Polynomial atil_polynomial(const FamilyTables& tables) {
  const auto& cat = at_zero(tables, Family::ATIL);
  const auto& cbt = at_zero(tables, Family::BTIL);
  const Polynomial phitil1 = kZPlusOne * alternating(cbt.c1);
  const Polynomial phitil2 = kZPlusOne * alternating(cbt.c2) - kOne;
  const Polynomial psitil1 = kOne + kZPlusOne * alternating(cat.c1);
  const Polynomial psitil2 = kZPlusOne * alternating(cat.c2);
  return phitil1 * psitil2 - phitil2 * psitil1;
}

namespace {

std::vector<cplx> roots_in_disk(const Polynomial& p, const EigenOptions& options) {
  const Polynomial t = p.trimmed();
  if (t.degree() < 1) return {};
  std::vector<cplx> kept;
  for (cplx z : polynomial_roots(t, options.degree_cap)) {
    if (std::abs(z) > 1.0 - options.disk_margin) continue;
    z = polish_root(t, z);
    if (std::abs(z) > 1.0 - options.disk_margin) continue;
    if (!(std::abs(t(z)) <= options.root_residual_tol)) continue;
    kept.push_back(z);
  }
  return kept;
}

}  // namespace

Eigenvalues find_eigenvalues(const FamilyTables& tables, const EigenOptions& options) {
  Eigenvalues out;
  for (cplx z : roots_in_disk(a_polynomial(tables), options)) {
    out.upper.push_back({rho_of_z(z), 0.0, HalfPlane::upper});
  }
  for (cplx z : roots_in_disk(atil_polynomial(tables), options)) {
    out.lower.push_back({rho_of_ztil(z), 0.0, HalfPlane::lower});
  }
  auto by_imag = [](const DiscreteDatum& u, const DiscreteDatum& v) {
    return std::abs(u.rho_m.imag()) > std::abs(v.rho_m.imag());
  };
  std::sort(out.upper.begin(), out.upper.end(), by_imag);
  std::sort(out.lower.begin(), out.lower.end(), by_imag);
  return out;
}

std::pair<cplx, cplx> norming_quotients(const FamilyTables& tables, const DiscreteDatum& d) {
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  JostValue num;
  JostValue den;
  if (d.half_plane == HalfPlane::upper) {
    num = evaluate_series(Family::B, at_zero(tables, Family::B), d.rho_m);
    den = evaluate_series(Family::A, at_zero(tables, Family::A), d.rho_m);
  } else {
    num = evaluate_series(Family::BTIL, at_zero(tables, Family::BTIL), d.rho_m);
    den = evaluate_series(Family::ATIL, at_zero(tables, Family::ATIL), d.rho_m);
  }
  const cplx first = std::abs(den.first) >= kQuotientFloor ? num.first / den.first : cplx(nan, nan);
  const cplx second = std::abs(den.second) >= kQuotientFloor ? num.second / den.second : cplx(nan, nan);
  return {first, second};
}

void norming_constants(const FamilyTables& tables, std::vector<DiscreteDatum>& data) {
  for (auto& d : data) {
    const auto [first, second] = norming_quotients(tables, d);
    if (std::isfinite(first.real())) {
      d.c_m = first;
    } else if (std::isfinite(second.real())) {
      d.c_m = second;
    } else {
      std::ostringstream msg;
      msg << "both norming quotients are degenerate at rho = " << d.rho_m;
      throw DegenerateQuotient(msg.str());
    }
  }
}

std::vector<double> uniform_rhos(double lo, double hi, std::size_t count) {
  if (count < 2 || !(lo < hi)) throw DomainError("uniform sampling needs count >= 2 and lo < hi");
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> log_symmetric_rhos(double min_exp, double max_exp, std::size_t count) {
  if (count < 4 || count % 2 != 0 || !(min_exp < max_exp)) {
    throw DomainError("log-symmetric sampling needs an even count >= 4 and min_exp < max_exp");
  }
  const std::size_t half = count / 2;
  std::vector<double> pos(half);
  for (std::size_t k = 0; k < half; ++k) {
    const double alpha = min_exp + (max_exp - min_exp) * static_cast<double>(k) / static_cast<double>(half - 1);
    pos[k] = std::pow(10.0, alpha);
  }
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t k = half; k > 0; --k) out.push_back(-pos[k - 1]);
  out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

}  // namespace akns
