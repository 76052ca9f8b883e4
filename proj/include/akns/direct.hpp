#pragma once

#include <array>
#include <span>
#include <vector>

#include "akns/polynomial.hpp"
#include "akns/scattering.hpp"
#include "akns/spps.hpp"

namespace akns {

/// Tables of all four families (index = static_cast<int>(Family)), each with a probe at x = 0.
using FamilyTables = std::array<CoefficientTable, 4>;

/// Jost solutions at x = 0 from the truncated series. phi, psi need Im rho >= 0;
/// phi~, psi~ need Im rho <= 0.
struct JostAtZero {
  JostValue phi, psi, phitil, psitil;
};

/// Scattering entries at real rho values, with z and z~ filled.
std::vector<ScatteringSample> scattering_entries(const FamilyTables& tables, std::span<const double> rhos,
                                                 unsigned threads = 1);

/// a(rho) = W[phi; psi](0) for Im rho >= 0.
cplx evaluate_a(const FamilyTables& tables, cplx rho);
/// a~(rho) = W[phi~; psi~](0) for Im rho <= 0.
cplx evaluate_atil(const FamilyTables& tables, cplx rho);
/// W[phi; phi~](0) for real rho; equals -1 for exact Jost solutions.
cplx wronskian_phi_phitil(const FamilyTables& tables, double rho);

/// a_N(z) and a~_N(z~) as polynomials built by coefficient convolution.
Polynomial a_polynomial(const FamilyTables& tables);
Polynomial atil_polynomial(const FamilyTables& tables);

struct EigenOptions {
  double disk_margin = 1e-6;
  double root_residual_tol = 1e-7;
  std::size_t degree_cap = Polynomial::kDefaultDegreeCap;
};

struct Eigenvalues {
  std::vector<DiscreteDatum> upper;
  std::vector<DiscreteDatum> lower;
};

/// Roots of a_N in |z| <= 1 - margin and of a~_N in |z~| <= 1 - margin, mapped
/// back to rho. Norming constants are left at zero.
Eigenvalues find_eigenvalues(const FamilyTables& tables, const EigenOptions& options = {});

/// Fills c_m = phi_1 / psi_1 (upper) and c~_m = phi~_1 / psi~_1 (lower), falling back to
/// second components when the first denominator is below 1e-8. Throws DegenerateQuotient.
void norming_constants(const FamilyTables& tables, std::vector<DiscreteDatum>& data);

/// Both quotients for one datum; NaN when a denominator is degenerate.
std::pair<cplx, cplx> norming_quotients(const FamilyTables& tables, const DiscreteDatum& datum);

/// count points uniformly on [lo, hi], endpoints included.
std::vector<double> uniform_rhos(double lo, double hi, std::size_t count);
/// count / 2 points 10^alpha with alpha uniform on [min_exp, max_exp], mirrored to negative rho.
std::vector<double> log_symmetric_rhos(double min_exp, double max_exp, std::size_t count);

}  // namespace akns
