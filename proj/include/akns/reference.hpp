#pragma once

#include <vector>

#include "akns/grid.hpp"
#include "akns/potential.hpp"

namespace akns {

/// Closed-form scattering data of the chirped sech potential
/// q = -iA sech(x) exp(-i gamma A ln cosh x), r = -conj(q).
class SechChirpScattering {
 public:
  explicit SechChirpScattering(const SechChirp& params = {});

  cplx a(cplx rho) const;
  cplx b(cplx rho) const;

  /// Zeros of a in the upper half-plane, rho_m = AT - i(m - 1/2), m = 1..M.
  std::vector<cplx> eigenvalues() const;
  /// c_m = b(rho_m), same order as eigenvalues().
  std::vector<cplx> norming_constants() const;
  /// floor(1/2 + A|T|).
  int eigenvalue_count() const;

  cplx T() const noexcept { return T_; }
  cplx omega(cplx rho) const;
  cplx omega_plus() const noexcept { return omega_plus_; }
  cplx omega_minus() const noexcept { return omega_minus_; }

 private:
  SechChirp params_;
  cplx T_;
  cplx omega_plus_;
  cplx omega_minus_;
};

cplx analytic_a(cplx rho, const SechChirp& params = {});
cplx analytic_b(cplx rho, const SechChirp& params = {});

}  // namespace akns
