#pragma once

#include <array>
#include <span>

#include "akns/grid.hpp"

namespace akns {

/// Cumulative integrals built from closed 6-point Newton-Cotes panels.
///
/// Inside a panel, the value at an interior node integrates the degree-5
/// interpolant of the panel's six samples, so every node carries the full
/// order of the rule. An optional kernel exp(-decay * |s - t|) is folded into
/// the weights; it turns the integrals exp(t) * int_t^b exp(-s) F(s) ds that
/// appear in the coefficient recurrences into bounded convolutions.
class CumulativeIntegrator {
 public:
  explicit CumulativeIntegrator(double h, double decay = 0.0);

  /// out[j] = int_{x_j}^{x_last} exp(-decay (s - x_j)) f(s) ds, out[last] = 0.
  void tail_right(std::span<const cplx> f, std::span<cplx> out) const;

  /// out[j] = int_{x_0}^{x_j} exp(-decay (x_j - s)) f(s) ds, out[0] = 0.
  void tail_left(std::span<const cplx> f, std::span<cplx> out) const;

  /// Plain composite integral over all panels (decay ignored).
  cplx total(std::span<const cplx> f) const;

  double h() const noexcept { return h_; }
  double decay() const noexcept { return decay_; }

 private:
  double h_;
  double decay_;
  // right_[k][m]: weight of sample m for the integral from node k to node 5.
  std::array<std::array<double, 6>, 5> right_{};
  std::array<double, 5> right_carry_{};
  // left_[k][m]: weight of sample m for the integral from node 0 to node k (k = 1..5).
  std::array<std::array<double, 6>, 6> left_{};
  std::array<double, 6> left_carry_{};
  std::array<double, 6> panel_{};
};

/// Exact Lagrange-interpolant weights on nodes 0..5: int_from^to L_m(u) du.
std::array<double, 6> panel_subweights(int from, int to);

/// Composite 6-point Newton-Cotes integral of the field over the whole grid.
cplx integrate(const ComplexField& field);

/// F(x_j) = int_{x_j}^{x_max} field.
ComplexField cumulative_tail_right(const ComplexField& field);

/// F(x_j) = int_{x_min}^{x_j} field.
ComplexField cumulative_tail_left(const ComplexField& field);

}  // namespace akns
