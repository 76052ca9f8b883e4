#pragma once

#include <span>
#include <vector>

#include "akns/grid.hpp"

namespace akns {

/// Complex-valued cubic interpolating spline with not-a-knot end conditions.
/// Knots need not be uniform but must be strictly increasing (at least 4).
class CubicSpline {
 public:
  CubicSpline(std::vector<double> knots, std::vector<cplx> values);

  cplx operator()(double x) const;
  /// First derivative of the spline at every knot.
  std::span<const cplx> knot_slopes() const noexcept { return slopes_; }
  double front() const noexcept { return knots_.front(); }
  double back() const noexcept { return knots_.back(); }

 private:
  std::vector<double> knots_;
  std::vector<cplx> values_;
  std::vector<cplx> slopes_;
};

/// d/dx of a field via its interpolating cubic spline, evaluated at the nodes.
ComplexField spline_derivative(const ComplexField& field);

/// Same, for samples on arbitrary strictly increasing abscissae.
std::vector<cplx> spline_derivative(std::span<const double> x, std::span<const cplx> y);

/// d/dx from the interpolating polynomial through `points` neighbouring nodes
/// (centred where possible, one-sided near the ends). Exact for degree < points.
std::vector<cplx> stencil_derivative(std::span<const double> x, std::span<const cplx> y, int points = 7);

}  // namespace akns
