#pragma once

#include "akns/potential.hpp"

namespace akns {

/// The four Jost solutions at rho = i/2 (phi, psi) and rho = -i/2 (phi~, psi~),
/// stored with their plane-wave exponentials removed so every field is O(1).
///
///   f  = e^{x/2}  psi_2(i/2, x),   psi1_half    = e^{x/2}  psi_1(i/2, x),   f'  = r psi1_half
///   f~ = e^{x/2}  psi~_1(-i/2, x), psitil2_half = e^{x/2}  psi~_2(-i/2, x), f~' = q psitil2_half
///   g  = e^{-x/2} phi_1(i/2, x),   phi2_half    = e^{-x/2} phi_2(i/2, x),   g'  = q phi2_half
///   g~ = e^{-x/2} phi~_2(-i/2, x), phitil1_half = e^{-x/2} phi~_1(-i/2, x), g~' = r phitil1_half
///
/// f, f~ -> 1 as x -> +inf; g -> 1 and g~ -> -1 as x -> -inf.
struct SeedSet {
  GridPtr grid;
  ComplexField f, f_prime, psi1_half;
  ComplexField ftil, ftil_prime, psitil2_half;
  ComplexField g, g_prime, phi2_half;
  ComplexField gtil, gtil_prime, phitil1_half;
};

struct SeedOptions {
  double nonvanish_tol = 1e-8;
  /// Bound on the per-panel integral-form residual, relative to the local solution size.
  double residual_tol = 1e-9;
  unsigned threads = 1;
};

/// Integrates the first-order system inward from the asymptotic plane waves
/// with a 6th-order Adams-Moulton scheme on the potential's grid.
/// Throws NonvanishingAssumptionViolated or SolverDivergence.
SeedSet compute_seed_set(const PotentialPair& p, const SeedOptions& options = {});

/// Largest per-panel residual |u(x_{p+5}) - u(x_p) - int M u| / max|u| of a
/// weighted two-component solution u' = [[alpha, q], [r, beta]] u.
double seed_panel_residual(const PotentialPair& p, double alpha, double beta, const ComplexField& u1,
                           const ComplexField& u2);

}  // namespace akns
