#include "akns/reference.hpp"

#include <cmath>

#include "akns/errors.hpp"
#include "akns/gamma.hpp"

namespace akns {

namespace {
constexpr cplx kI(0.0, 1.0);
}

SechChirpScattering::SechChirpScattering(const SechChirp& params) : params_(params) {
  if (!(params.amplitude > 0.0)) throw DomainError("sech_chirp requires A > 0");
  const double g = params.chirp;
  const double A = params.amplitude;
  T_ = std::sqrt(cplx(g * g / 4.0 - 1.0, 0.0));
  omega_plus_ = -kI * A * (T_ + g / 2.0);
  omega_minus_ = kI * A * (T_ - g / 2.0);
}

cplx SechChirpScattering::omega(cplx rho) const {
  return -kI * rho - kI * params_.amplitude * params_.chirp / 2.0 + 0.5;
}

// Reciprocal Gamma in the denominators makes a vanish exactly at its zeros.
cplx SechChirpScattering::a(cplx rho) const {
  const cplx w = omega(rho);
  return complex_gamma(w) * complex_gamma(w - omega_minus_ - omega_plus_) *
         reciprocal_gamma(w - omega_plus_) * reciprocal_gamma(w - omega_minus_);
}

cplx SechChirpScattering::b(cplx rho) const {
  const double A = params_.amplitude;
  const cplx w = omega(rho);
  const cplx prefactor = kI / A * std::exp(-kI * params_.chirp * A * std::log(2.0));
  return prefactor * complex_gamma(w) * complex_gamma(1.0 - w + omega_minus_ + omega_plus_) *
         reciprocal_gamma(omega_plus_) * reciprocal_gamma(omega_minus_);
}

int SechChirpScattering::eigenvalue_count() const {
  return static_cast<int>(std::floor(0.5 + params_.amplitude * std::abs(T_)));
}

std::vector<cplx> SechChirpScattering::eigenvalues() const {
  std::vector<cplx> out;
  for (int m = 1; m <= eigenvalue_count(); ++m) {
    out.push_back(params_.amplitude * T_ - kI * (m - 0.5));
  }
  return out;
}

std::vector<cplx> SechChirpScattering::norming_constants() const {
  std::vector<cplx> out;
  for (cplx rho : eigenvalues()) out.push_back(b(rho));
  return out;
}

cplx analytic_a(cplx rho, const SechChirp& params) { return SechChirpScattering(params).a(rho); }
cplx analytic_b(cplx rho, const SechChirp& params) { return SechChirpScattering(params).b(rho); }

}  // namespace akns
