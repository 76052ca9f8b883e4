#pragma once

#include <cstddef>
#include <vector>

#include "akns/grid.hpp"

namespace akns {

/// Complex polynomial, coefficients in ascending degree.
struct Polynomial {
  std::vector<cplx> coefficients;

  static constexpr std::size_t kDefaultDegreeCap = 2048;

  /// Degree after ignoring exactly-zero leading coefficients; -1 for the zero polynomial.
  long degree() const noexcept;
  cplx operator()(cplx z) const noexcept;
  /// Value and first derivative by Horner's scheme.
  std::pair<cplx, cplx> value_and_derivative(cplx z) const noexcept;
  double l1_norm() const noexcept;

  Polynomial trimmed() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
};

/// All roots of p with multiplicity, from the eigenvalues of the balanced
/// companion matrix. Throws DegenerateError for constants and RootCapError
/// when the degree exceeds degree_cap.
std::vector<cplx> polynomial_roots(const Polynomial& p,
                                   std::size_t degree_cap = Polynomial::kDefaultDegreeCap);

/// Newton refinement of an approximate root; keeps the input if a step does not
/// reduce |p|.
cplx polish_root(const Polynomial& p, cplx z, int max_steps = 8);

}  // namespace akns
