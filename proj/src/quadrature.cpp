#include "akns/quadrature.hpp"

#include <cmath>

#include "akns/errors.hpp"

namespace akns {

namespace {

constexpr int kNodes = 6;

void check_shape(std::size_t n) {
  if (n < static_cast<std::size_t>(kNodes) || (n - 1) % (kNodes - 1) != 0) {
    throw GridShapeError("field length " + std::to_string(n) +
                         " does not split into closed 6-point panels");
  }
}

// Monomial coefficients of the Lagrange basis polynomial for node m on 0..5.
std::array<long double, kNodes> lagrange_basis(int m) {
  std::array<long double, kNodes> c{};
  c[0] = 1.0L;
  long double denom = 1.0L;
  int degree = 0;
  for (int j = 0; j < kNodes; ++j) {
    if (j == m) continue;
    // multiply by (u - j)
    for (int p = degree + 1; p > 0; --p) c[p] = c[p - 1] - j * c[p];
    c[0] = -j * c[0];
    ++degree;
    denom *= static_cast<long double>(m - j);
  }
  for (auto& v : c) v /= denom;
  return c;
}

}  // namespace

std::array<double, 6> panel_subweights(int from, int to) {
  std::array<double, 6> w{};
  for (int m = 0; m < kNodes; ++m) {
    const auto c = lagrange_basis(m);
    long double acc = 0.0L;
    for (int p = 0; p < kNodes; ++p) {
      acc += c[p] * (std::pow(static_cast<long double>(to), p + 1) -
                     std::pow(static_cast<long double>(from), p + 1)) /
             (p + 1);
    }
    w[m] = static_cast<double>(acc);
  }
  return w;
}

CumulativeIntegrator::CumulativeIntegrator(double h, double decay) : h_(h), decay_(decay) {
  for (int k = 0; k < kNodes - 1; ++k) {
    const auto w = panel_subweights(k, kNodes - 1);
    for (int m = 0; m < kNodes; ++m) right_[k][m] = h * w[m] * std::exp(-decay * (m - k) * h);
    right_carry_[k] = std::exp(-decay * (kNodes - 1 - k) * h);
  }
  for (int k = 1; k < kNodes; ++k) {
    const auto w = panel_subweights(0, k);
    for (int m = 0; m < kNodes; ++m) left_[k][m] = h * w[m] * std::exp(-decay * (k - m) * h);
    left_carry_[k] = std::exp(-decay * k * h);
  }
  const auto w = panel_subweights(0, kNodes - 1);
  for (int m = 0; m < kNodes; ++m) panel_[m] = h * w[m];
}

void CumulativeIntegrator::tail_right(std::span<const cplx> f, std::span<cplx> out) const {
  check_shape(f.size());
  if (out.size() != f.size()) throw GridShapeError("output length mismatch");
  const std::size_t last = f.size() - 1;
  out[last] = 0.0;
  for (std::size_t end = last; end >= kNodes - 1; end -= kNodes - 1) {
    const std::size_t p = end - (kNodes - 1);
    const cplx* s = f.data() + p;
    const cplx carry = out[end];
    for (int k = kNodes - 2; k >= 0; --k) {
      const auto& w = right_[k];
      cplx acc = right_carry_[k] * carry;
      for (int m = 0; m < kNodes; ++m) acc += w[m] * s[m];
      out[p + k] = acc;
    }
    if (p == 0) break;
  }
}

void CumulativeIntegrator::tail_left(std::span<const cplx> f, std::span<cplx> out) const {
  check_shape(f.size());
  if (out.size() != f.size()) throw GridShapeError("output length mismatch");
  out[0] = 0.0;
  for (std::size_t p = 0; p + (kNodes - 1) < f.size(); p += kNodes - 1) {
    const cplx* s = f.data() + p;
    const cplx carry = out[p];
    for (int k = 1; k < kNodes; ++k) {
      const auto& w = left_[k];
      cplx acc = left_carry_[k] * carry;
      for (int m = 0; m < kNodes; ++m) acc += w[m] * s[m];
      out[p + k] = acc;
    }
  }
}

cplx CumulativeIntegrator::total(std::span<const cplx> f) const {
  check_shape(f.size());
  cplx acc = 0.0;
  for (std::size_t p = 0; p + (kNodes - 1) < f.size(); p += kNodes - 1) {
    cplx panel = 0.0;
    for (int m = 0; m < kNodes; ++m) panel += panel_[m] * f[p + m];
    acc += panel;
  }
  return acc;
}

cplx integrate(const ComplexField& field) {
  return CumulativeIntegrator(field.grid().h()).total(field.values());
}

ComplexField cumulative_tail_right(const ComplexField& field) {
  ComplexField out(field.grid_ptr());
  CumulativeIntegrator(field.grid().h()).tail_right(field.values(), out.values());
  return out;
}

ComplexField cumulative_tail_left(const ComplexField& field) {
  ComplexField out(field.grid_ptr());
  CumulativeIntegrator(field.grid().h()).tail_left(field.values(), out.values());
  return out;
}

}  // namespace akns
