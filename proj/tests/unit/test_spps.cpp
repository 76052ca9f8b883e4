#include "doctest.h"

#include "akns/errors.hpp"
#include "akns/quadrature.hpp"
#include "akns/spps.hpp"
#include "fixtures.hpp"
#include "oracles/ode_oracle.hpp"

using namespace akns;

namespace {

double dist(const JostValue& v, const oracle::Vec2& w) {
  return std::max(std::abs(v.first - w[0]), std::abs(v.second - w[1]));
}

const fixture::Solved& gauss_deep() {
  static const fixture::Solved s = fixture::solve(GaussPair{}, 8.0, 1000, 400);
  return s;
}

}  // namespace

TEST_SUITE("spps") {
  TEST_CASE("zero potential has vanishing higher coefficients") {
    const auto p = fixture::zero_potential();
    const auto seeds = compute_seed_set(p);
    TableOptions opt;
    opt.keep_rows = true;
    for (int k = 0; k < 4; ++k) {
      const auto t = compute_family(static_cast<Family>(k), p, seeds, 6, opt);
      for (int n = 0; n <= 6; ++n) {
        CHECK(t.c1(n).max_abs() < 1e-15);
        CHECK(t.c2(n).max_abs() < 1e-15);
      }
    }
  }

  TEST_CASE("order-zero rows are the seeds") {
    const auto& sol = fixture::gauss_coarse();
    const std::size_t k = sol.p.grid->index_of(0.0);
    const auto& a = sol.tables[0].probes().front();
    const auto& b = sol.tables[2].probes().front();
    const auto& bt = sol.tables[3].probes().front();
    CHECK(std::abs(a.c2[0] - (sol.seeds.f[k] - 1.0)) < 1e-15);
    CHECK(std::abs(a.c1[0] - sol.seeds.psi1_half[k]) < 1e-15);
    CHECK(std::abs(b.c1[0] - (sol.seeds.g[k] - 1.0)) < 1e-15);
    CHECK(std::abs(bt.c2[0] - (sol.seeds.gtil[k] + 1.0)) < 1e-15);
    CHECK(a.c1.size() == 121);
  }

  TEST_CASE("series match the ODE oracle at rho = i") {
    const auto& sol = fixture::solve(GaussPair{}, 8.0, 1000, 60);
    const oracle::JostOracle ode{PotentialFunction(GaussPair{})};
    const std::size_t k = sol.p.grid->index_of(0.0);
    const cplx up(0.0, 1.0), down(0.0, -1.0);
    CHECK(dist(evaluate_jost(sol.tables[0], up, k), ode.psi(up)) < 1e-8);
    CHECK(dist(evaluate_jost(sol.tables[1], down, k), ode.psitil(down)) < 1e-8);
    CHECK(dist(evaluate_jost(sol.tables[2], up, k), ode.phi(up)) < 1e-8);
    CHECK(dist(evaluate_jost(sol.tables[3], down, k), ode.phitil(down)) < 1e-8);
  }

  TEST_CASE("series match the ODE oracle on the real line") {
    const auto& sol = gauss_deep();
    const oracle::JostOracle ode{PotentialFunction(GaussPair{})};
    const std::size_t k = sol.p.grid->index_of(0.0);
    for (double rho : {1.0, -2.5}) {
      CHECK(dist(evaluate_jost(sol.tables[0], rho, k), ode.psi(rho)) < 1e-7);
      CHECK(dist(evaluate_jost(sol.tables[1], rho, k), ode.psitil(rho)) < 1e-7);
      CHECK(dist(evaluate_jost(sol.tables[2], rho, k), ode.phi(rho)) < 1e-7);
      CHECK(dist(evaluate_jost(sol.tables[3], rho, k), ode.phitil(rho)) < 1e-7);
    }
  }

  TEST_CASE("anchored ends carry the plane waves") {
    TableOptions opt;
    opt.probe_x = {-8.0, 0.0, 8.0};
    const auto& sol = fixture::gauss_coarse();
    const cplx i(0.0, 1.0);
    const double rho = 0.8;
    const auto a = compute_family(Family::A, sol.p, sol.seeds, 40, opt);
    const auto psi = evaluate_series(Family::A, probe_at(a, 8.0), rho);
    CHECK(std::abs(psi.first) < 1e-8);
    CHECK(std::abs(psi.second - std::exp(i * rho * 8.0)) < 1e-8);
    const auto b = compute_family(Family::B, sol.p, sol.seeds, 40, opt);
    const auto phi = evaluate_series(Family::B, probe_at(b, -8.0), rho);
    CHECK(std::abs(phi.first - std::exp(i * rho * 8.0)) < 1e-8);
    CHECK(std::abs(phi.second) < 1e-8);
    const auto bt = compute_family(Family::BTIL, sol.p, sol.seeds, 40, opt);
    const auto phitil = evaluate_series(Family::BTIL, probe_at(bt, -8.0), rho);
    CHECK(std::abs(phitil.first) < 1e-8);
    CHECK(std::abs(phitil.second + std::exp(-i * rho * 8.0)) < 1e-8);
    const auto at = compute_family(Family::ATIL, sol.p, sol.seeds, 40, opt);
    const auto psitil = evaluate_series(Family::ATIL, probe_at(at, 8.0), rho);
    CHECK(std::abs(psitil.first - std::exp(-i * rho * 8.0)) < 1e-8);
    CHECK(std::abs(psitil.second) < 1e-8);
  }

  TEST_CASE("retained rows satisfy the first recurrence relation") {
    // For family A (X = c2, Y = c1): c2_n' = r c1_n, so c2_n(x) = -int_x^b r c1_n.
    const auto p = sample_potential(GaussPair{}, Grid::make(-8.0, 8.0, 400));
    const auto seeds = compute_seed_set(p);
    TableOptions opt;
    opt.keep_rows = true;
    const auto t = compute_family(Family::A, p, seeds, 8, opt);
    for (int n = 1; n <= 8; ++n) {
      ComplexField integrand(p.grid);
      for (std::size_t i = 0; i < p.grid->size(); ++i) integrand[i] = p.r[i] * t.c1(n)[i];
      const auto tail = cumulative_tail_right(integrand);
      double worst = 0.0;
      for (std::size_t i = 0; i < p.grid->size(); ++i) worst = std::max(worst, std::abs(t.c2(n)[i] + tail[i]));
      CHECK(worst < 1e-10);
      CHECK(std::abs(t.column(p.grid->index_of(1.0)).c1[n] - t.c1(n)[p.grid->index_of(1.0)]) == 0.0);
    }
  }

  TEST_CASE("domain and storage errors") {
    const auto& sol = fixture::gauss_coarse();
    const auto& col = sol.tables[0].probes().front();
    CHECK_THROWS_AS(evaluate_series(Family::A, col, cplx(0.0, -0.1)), DomainError);
    CHECK_THROWS_AS(evaluate_series(Family::ATIL, col, cplx(0.0, 0.1)), DomainError);
    CHECK_THROWS_AS(sol.tables[0].c1(0), DomainError);
    CHECK_THROWS_AS(sol.tables[0].column(3), DomainError);
    CHECK_THROWS_AS(compute_family(Family::A, sol.p, sol.seeds, -1), DomainError);
    TableOptions tiny;
    tiny.overflow_limit = 1e-30;
    CHECK_THROWS_AS(compute_family(Family::B, sol.p, sol.seeds, 5, tiny), OverflowError);
    CHECK(family_name(Family::BTIL) == "btil");
  }
}
