#include "akns/polynomial.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "akns/errors.hpp"

namespace akns {

long Polynomial::degree() const noexcept {
  for (std::size_t i = coefficients.size(); i > 0; --i) {
    if (coefficients[i - 1] != cplx(0.0)) return static_cast<long>(i) - 1;
  }
  return -1;
}

cplx Polynomial::operator()(cplx z) const noexcept {
  cplx acc = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::pair<cplx, cplx> Polynomial::value_and_derivative(cplx z) const noexcept {
  cplx value = 0.0;
  cplx deriv = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
  return {value, deriv};
}

double Polynomial::l1_norm() const noexcept {
  double s = 0.0;
  for (const auto& c : coefficients) s += std::abs(c);
  return s;
}

Polynomial Polynomial::trimmed() const {
  Polynomial out = *this;
  out.coefficients.resize(static_cast<std::size_t>(std::max(degree(), 0L) + 1));
  if (out.coefficients.empty()) out.coefficients.push_back(0.0);
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  if (coefficients.empty() || other.coefficients.empty()) return {};
  Polynomial out;
  out.coefficients.assign(coefficients.size() + other.coefficients.size() - 1, 0.0);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients.size(); ++j) {
      out.coefficients[i + j] += coefficients[i] * other.coefficients[j];
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out = *this;
  if (out.coefficients.size() < other.coefficients.size()) out.coefficients.resize(other.coefficients.size());
  for (std::size_t i = 0; i < other.coefficients.size(); ++i) out.coefficients[i] += other.coefficients[i];
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out = *this;
  if (out.coefficients.size() < other.coefficients.size()) out.coefficients.resize(other.coefficients.size());
  for (std::size_t i = 0; i < other.coefficients.size(); ++i) out.coefficients[i] -= other.coefficients[i];
  return out;
}

std::vector<cplx> polynomial_roots(const Polynomial& p, std::size_t degree_cap) {
  const long deg = p.degree();
  if (deg < 1) throw DegenerateError("polynomial_roots: polynomial is constant");
  if (static_cast<std::size_t>(deg) > degree_cap) {
    throw RootCapError("polynomial_roots: degree " + std::to_string(deg) + " exceeds cap " +
                       std::to_string(degree_cap));
  }
  // Zero roots are split off exactly so the companion matrix stays nonsingular.
  std::size_t zeros = 0;
  while (p.coefficients[zeros] == cplx(0.0)) ++zeros;
  const auto n = static_cast<lapack_int>(deg - static_cast<long>(zeros));
  std::vector<cplx> roots(zeros, cplx(0.0));
  if (n == 0) return roots;

  const cplx lead = p.coefficients[static_cast<std::size_t>(deg)];
  // Column-major companion matrix: ones on the subdiagonal, -c_k / c_n in the last column.
  std::vector<cplx> companion(static_cast<std::size_t>(n) * n, 0.0);
  for (lapack_int i = 1; i < n; ++i) companion[static_cast<std::size_t>(i - 1) * n + i] = 1.0;
  for (lapack_int i = 0; i < n; ++i) {
    companion[static_cast<std::size_t>(n - 1) * n + i] = -p.coefficients[zeros + i] / lead;
  }
  auto* a = reinterpret_cast<lapack_complex_double*>(companion.data());
  lapack_int ilo = 0;
  lapack_int ihi = 0;
  std::vector<double> scale(static_cast<std::size_t>(n));
  if (LAPACKE_zgebal(LAPACK_COL_MAJOR, 'B', n, a, n, &ilo, &ihi, scale.data()) != 0) {
    throw DegenerateError("polynomial_roots: balancing failed");
  }
  std::vector<cplx> w(static_cast<std::size_t>(n));
  const lapack_int info = LAPACKE_zhseqr(LAPACK_COL_MAJOR, 'E', 'N', n, ilo, ihi, a, n,
                                         reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1);
  if (info != 0) throw DegenerateError("polynomial_roots: QR iteration did not converge");
  roots.insert(roots.end(), w.begin(), w.end());
  return roots;
}

cplx polish_root(const Polynomial& p, cplx z, int max_steps) {
  cplx best = z;
  double best_abs = std::abs(p(z));
  for (int step = 0; step < max_steps && best_abs > 0.0; ++step) {
    const auto [value, deriv] = p.value_and_derivative(best);
    if (deriv == cplx(0.0)) break;
    const cplx next = best - value / deriv;
    const double next_abs = std::abs(p(next));
    if (!(next_abs < best_abs)) break;
    best = next;
    best_abs = next_abs;
  }
  return best;
}

}  // namespace akns
