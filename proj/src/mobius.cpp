#include "akns/mobius.hpp"

#include "akns/errors.hpp"

namespace akns {

namespace {
constexpr cplx kI(0.0, 1.0);
}

cplx mobius_z(cplx rho) {
  const cplx den = 0.5 - kI * rho;
  if (den == 0.0) throw PoleError("mobius_z has a pole at rho = -i/2");
  return (0.5 + kI * rho) / den;
}

cplx mobius_ztil(cplx rho) {
  const cplx den = 0.5 + kI * rho;
  if (den == 0.0) throw PoleError("mobius_ztil has a pole at rho = i/2");
  return (0.5 - kI * rho) / den;
}

cplx rho_of_z(cplx z) {
  if (z == -1.0) throw PoleError("rho_of_z has a pole at z = -1");
  return (z - 1.0) / (2.0 * kI * (z + 1.0));
}

cplx rho_of_ztil(cplx ztil) {
  if (ztil == -1.0) throw PoleError("rho_of_ztil has a pole at z~ = -1");
  return (1.0 - ztil) / (2.0 * kI * (ztil + 1.0));
}

}  // namespace akns
