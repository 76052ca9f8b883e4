#include "akns/potential.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "akns/errors.hpp"
#include "akns/io.hpp"
#include "akns/spline.hpp"

namespace akns {

namespace {

constexpr std::size_t kTailNodes = 4;

double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

std::pair<cplx, cplx> sech_chirp(const SechChirp& p, double x) {
  const cplx i(0.0, 1.0);
  const double sech = 1.0 / std::cosh(x);
  const cplx q = -i * p.amplitude * sech * std::exp(-i * p.chirp * p.amplitude * log_cosh(x));
  return {q, -std::conj(q)};
}

std::pair<cplx, cplx> gauss_pair(double x) {
  const double g = std::exp(-x * x);
  return {cplx(g, 0.0), -2.0 * g * std::polar(1.0, x)};
}

std::pair<cplx, cplx> gauss_phase_pair(double x) {
  const double pi = std::numbers::pi;
  const double g = pi * std::exp(-x * x);
  return {g * std::polar(1.0, std::sin(pi * x)), -g * std::polar(1.0, -std::cos(pi * x))};
}

}  // namespace

std::string describe(const PotentialSpec& spec) {
  std::ostringstream out;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SechChirp>) {
          out << "sech_chirp(A=" << s.amplitude << ", gamma=" << s.chirp << ")";
        } else if constexpr (std::is_same_v<T, GaussPair>) {
          out << "gauss_pair";
        } else if constexpr (std::is_same_v<T, GaussPhasePair>) {
          out << "gauss_phase_pair";
        } else {
          out << "sampled(" << s.file.string() << ")";
        }
      },
      spec);
  return out.str();
}

PotentialPair PotentialPair::from_samples(ComplexField q, ComplexField r, double decay_tol) {
  if (q.grid_ptr() != r.grid_ptr()) throw ShapeError("q and r must share the grid");
  PotentialPair p{q.grid_ptr(), std::move(q), std::move(r), decay_tol};
  if (!p.q.all_finite() || !p.r.all_finite()) throw ParseError("potential samples are not finite");
  const double tail = p.tail_magnitude();
  if (!(tail <= decay_tol)) {
    std::ostringstream msg;
    msg << "potential tail magnitude " << tail << " exceeds decay tolerance " << decay_tol
        << " on [" << p.grid->x_min() << ", " << p.grid->x_max() << "]; enlarge the interval";
    throw DecayError(msg.str());
  }
  return p;
}

double PotentialPair::tail_magnitude() const {
  const std::size_t n = grid->size();
  double m = 0.0;
  for (std::size_t k = 0; k < std::min(kTailNodes, n); ++k) {
    for (std::size_t i : {k, n - 1 - k}) m = std::max({m, std::abs(q[i]), std::abs(r[i])});
  }
  return m;
}

PotentialFunction::PotentialFunction(const PotentialSpec& spec) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  domain_ = {-inf, inf};
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SechChirp>) {
          if (!(s.amplitude > 0.0)) throw ParseError("sech_chirp requires A > 0");
          eval_ = [s](double x) { return sech_chirp(s, x); };
        } else if constexpr (std::is_same_v<T, GaussPair>) {
          eval_ = gauss_pair;
        } else if constexpr (std::is_same_v<T, GaussPhasePair>) {
          eval_ = gauss_phase_pair;
        } else {
          const PotentialSamples samples = read_potential_csv(s.file);
          auto qs = std::make_shared<CubicSpline>(samples.x, samples.q);
          auto rs = std::make_shared<CubicSpline>(samples.x, samples.r);
          domain_ = {samples.x.front(), samples.x.back()};
          eval_ = [qs, rs](double x) { return std::pair<cplx, cplx>{(*qs)(x), (*rs)(x)}; };
        }
      },
      spec);
}

PotentialPair sample_potential(const PotentialSpec& spec, GridPtr grid, double decay_tol) {
  const PotentialFunction fn(spec);
  const auto [lo, hi] = fn.domain();
  const double slack = 1e-9 * grid->h();
  if (grid->x_min() < lo - slack || grid->x_max() > hi + slack) {
    std::ostringstream msg;
    msg << "sampled potential covers [" << lo << ", " << hi << "] but the grid is ["
        << grid->x_min() << ", " << grid->x_max() << "]";
    throw ShapeError(msg.str());
  }
  ComplexField q(grid);
  ComplexField r(grid);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const auto [qv, rv] = fn((*grid)[i]);
    q[i] = qv;
    r[i] = rv;
  }
  return PotentialPair::from_samples(std::move(q), std::move(r), decay_tol);
}

}  // namespace akns
