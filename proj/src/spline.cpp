#include "akns/spline.hpp"

#include <algorithm>

#include "akns/errors.hpp"

namespace akns {

namespace {

// Not-a-knot slopes, same linear system as the classic de Boor formulation.
std::vector<cplx> not_a_knot_slopes(std::span<const double> x, std::span<const cplx> y) {
  const std::size_t n = x.size();
  std::vector<double> dx(n - 1);
  std::vector<cplx> d(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    dx[i] = x[i + 1] - x[i];
    if (!(dx[i] > 0.0)) throw GridShapeError("spline knots must be strictly increasing");
    d[i] = (y[i + 1] - y[i]) / dx[i];
  }
  std::vector<double> sub(n, 0.0), diag(n, 0.0), sup(n, 0.0);
  std::vector<cplx> rhs(n);

  const double x31 = x[2] - x[0];
  diag[0] = dx[1];
  sup[0] = x31;
  rhs[0] = ((dx[0] + 2.0 * x31) * dx[1] * d[0] + dx[0] * dx[0] * d[1]) / x31;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    sub[i] = dx[i];
    diag[i] = 2.0 * (dx[i - 1] + dx[i]);
    sup[i] = dx[i - 1];
    rhs[i] = 3.0 * (dx[i] * d[i - 1] + dx[i - 1] * d[i]);
  }
  const double xn = x[n - 1] - x[n - 3];
  sub[n - 1] = xn;
  diag[n - 1] = dx[n - 3];
  rhs[n - 1] = (dx[n - 2] * dx[n - 2] * d[n - 3] + (2.0 * xn + dx[n - 2]) * dx[n - 3] * d[n - 2]) / xn;

  // Thomas algorithm.
  for (std::size_t i = 1; i < n; ++i) {
    const double m = sub[i] / diag[i - 1];
    diag[i] -= m * sup[i - 1];
    rhs[i] -= m * rhs[i - 1];
  }
  std::vector<cplx> s(n);
  s[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) s[i - 1] = (rhs[i - 1] - sup[i - 1] * s[i]) / diag[i - 1];
  return s;
}

}  // namespace

CubicSpline::CubicSpline(std::vector<double> knots, std::vector<cplx> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() != values_.size()) throw GridShapeError("spline: knots and values differ in length");
  if (knots_.size() < 4) throw GridShapeError("spline: at least 4 knots are required");
  slopes_ = not_a_knot_slopes(knots_, values_);
}

cplx CubicSpline::operator()(double x) const {
  auto it = std::upper_bound(knots_.begin(), knots_.end(), x);
  std::size_t i = it == knots_.begin() ? 0 : static_cast<std::size_t>(it - knots_.begin()) - 1;
  i = std::min(i, knots_.size() - 2);
  const double dx = knots_[i + 1] - knots_[i];
  const double t = x - knots_[i];
  const cplx d = (values_[i + 1] - values_[i]) / dx;
  const cplx c2 = (3.0 * d - 2.0 * slopes_[i] - slopes_[i + 1]) / dx;
  const cplx c3 = (slopes_[i] + slopes_[i + 1] - 2.0 * d) / (dx * dx);
  return values_[i] + t * (slopes_[i] + t * (c2 + t * c3));
}

std::vector<cplx> spline_derivative(std::span<const double> x, std::span<const cplx> y) {
  if (x.size() != y.size()) throw GridShapeError("spline_derivative: length mismatch");
  if (x.size() < 6) throw GridShapeError("spline_derivative: at least 6 nodes are required");
  return not_a_knot_slopes(x, y);
}

ComplexField spline_derivative(const ComplexField& field) {
  return ComplexField(field.grid_ptr(), spline_derivative(field.grid().nodes(), field.values()));
}

}  // namespace akns

namespace akns {

std::vector<cplx> stencil_derivative(std::span<const double> x, std::span<const cplx> y, int points) {
  const auto n = static_cast<long>(x.size());
  if (static_cast<long>(y.size()) != n) throw GridShapeError("stencil_derivative: length mismatch");
  if (points < 2 || n < points) throw GridShapeError("stencil_derivative: too few nodes for the stencil");
  std::vector<cplx> out(x.size());
  std::vector<double> c0(points), c1(points);
  for (long i = 0; i < n; ++i) {
    const long first = std::clamp(i - points / 2, 0L, n - points);
    // Fornberg's recursion for the weights of the first derivative at x[i].
    const double x0 = x[i];
    std::fill(c0.begin(), c0.end(), 0.0);
    std::fill(c1.begin(), c1.end(), 0.0);
    c0[0] = 1.0;
    double prod = 1.0;
    for (int j = 1; j < points; ++j) {
      const double xj = x[first + j];
      double p2 = 1.0;
      for (int k = 0; k < j; ++k) {
        const double diff = xj - x[first + k];
        p2 *= diff;
        if (k == j - 1) {
          c1[j] = prod * (c0[j - 1] - (x[first + j - 1] - x0) * c1[j - 1]) / p2;
          c0[j] = -prod * (x[first + j - 1] - x0) * c0[j - 1] / p2;
        }
        c1[k] = ((xj - x0) * c1[k] - c0[k]) / diff;
        c0[k] = (xj - x0) * c0[k] / diff;
      }
      prod = p2;
    }
    cplx d = 0.0;
    for (int j = 0; j < points; ++j) d += c1[j] * y[first + j];
    out[i] = d;
  }
  return out;
}

}  // namespace akns
