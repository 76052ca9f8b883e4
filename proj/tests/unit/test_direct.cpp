#include "doctest.h"

#include <random>

#include "akns/direct.hpp"
#include "akns/errors.hpp"
#include "akns/mobius.hpp"
#include "akns/reference.hpp"
#include "fixtures.hpp"
#include "oracles/values.hpp"

using namespace akns;

TEST_SUITE("direct") {
  TEST_CASE("mobius maps") {
    CHECK(std::abs(mobius_z(0.0) - 1.0) < 1e-16);
    CHECK(std::abs(mobius_z(cplx(0.0, 0.5))) < 1e-16);
    CHECK(std::abs(mobius_z(oracle::kSechRho2) - (0.5 - oracle::kSechRho2.imag()) / (0.5 + oracle::kSechRho2.imag())) < 1e-15);
    CHECK(std::abs(mobius_ztil(cplx(0.0, -0.5))) < 1e-16);
    CHECK_THROWS_AS(mobius_z(cplx(0.0, -0.5)), PoleError);
    CHECK_THROWS_AS(mobius_ztil(cplx(0.0, 0.5)), PoleError);
    CHECK_THROWS_AS(rho_of_z(-1.0), PoleError);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> u(-40.0, 40.0), v(0.0, 5.0);
    for (int k = 0; k < 50; ++k) {
      const double x = u(rng);
      CHECK(std::abs(std::abs(mobius_z(x)) - 1.0) < 1e-14);
      CHECK(std::abs(std::abs(mobius_ztil(x)) - 1.0) < 1e-14);
      const cplx rho(u(rng), v(rng));
      CHECK(std::abs(rho_of_z(mobius_z(rho)) - rho) < 1e-13 * std::max(1.0, std::abs(rho)));
      CHECK(std::abs(rho_of_ztil(mobius_ztil(std::conj(rho))) - std::conj(rho)) < 1e-13 * std::max(1.0, std::abs(rho)));
      CHECK(std::abs(mobius_z(rho)) <= 1.0);
    }
  }

  TEST_CASE("zero potential: a = 1, b = 0, no eigenvalues") {
    const auto p = fixture::zero_potential();
    const auto seeds = compute_seed_set(p);
    const auto tables = compute_all_families(p, seeds, 10);
    const std::vector<double> rhos{-3.0, 0.0, 0.4, 12.0};
    for (const auto& s : scattering_entries(tables, rhos)) {
      CHECK(std::abs(s.a - 1.0) < 1e-14);
      CHECK(std::abs(s.atil - 1.0) < 1e-14);
      CHECK(std::abs(s.b) < 1e-14);
      CHECK(std::abs(s.btil) < 1e-14);
    }
    const auto ev = find_eigenvalues(tables);
    CHECK(ev.upper.empty());
    CHECK(ev.lower.empty());
  }

  TEST_CASE("sech example on a coarse grid: entries") {
    const auto& t = fixture::sech_coarse().tables;
    const std::vector<double> rhos{0.7, -12.5};
    const auto s = scattering_entries(t, rhos, 2);
    CHECK(std::abs(s[0].a - oracle::kSechA_07) < 1e-9);
    CHECK(std::abs(s[0].b - oracle::kSechB_07) < 1e-9);
    CHECK(std::abs(s[1].a - oracle::kSechA_m125) < 1e-9);
    for (const auto& e : s) CHECK(e.unitarity_residual() < 1e-9);
    CHECK(std::abs(evaluate_a(t, oracle::kSechRho1)) < 1e-8);
    CHECK(std::abs(evaluate_a(t, oracle::kSechRho2)) < 1e-8);
    CHECK(std::abs(evaluate_atil(t, std::conj(oracle::kSechRho1))) < 1e-8);
    for (double rho : {-20.0, -3.3, -0.2, 0.0, 0.01, 1.5, 7.0, 29.0}) {
      CHECK(std::abs(wronskian_phi_phitil(t, rho) + 1.0) < 1e-7);
    }
  }

  TEST_CASE("sech example on a coarse grid: discrete spectrum") {
    const auto& t = fixture::sech_coarse().tables;
    auto ev = find_eigenvalues(t);
    REQUIRE(ev.upper.size() == 2);
    REQUIRE(ev.lower.size() == 2);
    CHECK(std::abs(ev.upper[0].rho_m - oracle::kSechRho1) < 1e-9);
    CHECK(std::abs(ev.upper[1].rho_m - oracle::kSechRho2) < 1e-9);
    CHECK(std::abs(ev.lower[0].rho_m - std::conj(oracle::kSechRho1)) < 1e-9);
    CHECK(ev.lower[0].half_plane == HalfPlane::lower);
    norming_constants(t, ev.upper);
    CHECK(std::abs(ev.upper[0].c_m - oracle::kSechC1) < 1e-8);
    CHECK(std::abs(ev.upper[1].c_m - oracle::kSechC2) < 1e-8);
    for (const auto& d : ev.upper) {
      const auto [first, second] = norming_quotients(t, d);
      CHECK(std::abs(first - second) < 1e-7);
    }
  }

  TEST_CASE("polynomial form agrees with direct evaluation") {
    const auto& t = fixture::sech_coarse().tables;
    const Polynomial a = a_polynomial(t);
    const Polynomial at = atil_polynomial(t);
    for (cplx rho : {cplx(0.3, 0.2), cplx(-1.0, 2.0), cplx(0.0, 0.5)}) {
      CHECK(std::abs(a(mobius_z(rho)) - evaluate_a(t, rho)) < 1e-12);
      CHECK(std::abs(at(mobius_ztil(std::conj(rho))) - evaluate_atil(t, std::conj(rho))) < 1e-12);
    }
  }

  TEST_CASE("sampling helpers") {
    const auto u = uniform_rhos(-30.0, 30.0, 2000);
    CHECK(u.size() == 2000);
    CHECK(u.front() == -30.0);
    CHECK(u.back() == 30.0);
    const auto l = log_symmetric_rhos(-3.0, 1.845, 5000);
    CHECK(l.size() == 5000);
    CHECK(std::abs(*std::max_element(l.begin(), l.end()) - std::pow(10.0, 1.845)) < 1e-12);
    CHECK(std::abs(*std::min_element(l.begin(), l.end()) + std::pow(10.0, 1.845)) < 1e-12);
  }
}
