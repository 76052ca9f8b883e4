#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <utility>
#include <variant>

#include "akns/grid.hpp"

namespace akns {

/// q(x) = -iA sech(x) exp(-i gamma A ln cosh x), r = -conj(q).
struct SechChirp {
  double amplitude = 1.65;
  double chirp = 0.1;
};

/// q(x) = exp(-x^2), r(x) = -2 exp(-x^2 + ix).
struct GaussPair {};

/// q(x) = pi exp(-x^2 + i sin(pi x)), r(x) = -pi exp(-x^2 - i cos(pi x)).
struct GaussPhasePair {};

/// Samples read from a potential CSV (x,re_q,im_q,re_r,im_r) and resampled by spline.
struct Sampled {
  std::filesystem::path file;
};

using PotentialSpec = std::variant<SechChirp, GaussPair, GaussPhasePair, Sampled>;

std::string describe(const PotentialSpec& spec);

inline constexpr double kDefaultDecayTol = 1e-14;

/// q and r sampled on a common grid, with tails below decay_tol.
struct PotentialPair {
  GridPtr grid;
  ComplexField q;
  ComplexField r;
  double decay_tol = kDefaultDecayTol;

  /// Validates the shared grid and the decay contract; throws DecayError.
  static PotentialPair from_samples(ComplexField q, ComplexField r, double decay_tol = kDefaultDecayTol);

  /// Largest |q|, |r| over the four outermost nodes at each end.
  double tail_magnitude() const;
};

/// Pointwise evaluation of (q(x), r(x)) for a spec.
class PotentialFunction {
 public:
  explicit PotentialFunction(const PotentialSpec& spec);
  std::pair<cplx, cplx> operator()(double x) const { return eval_(x); }
  /// Range on which the function is defined (the file range for Sampled).
  std::pair<double, double> domain() const noexcept { return domain_; }

 private:
  std::function<std::pair<cplx, cplx>(double)> eval_;
  std::pair<double, double> domain_;
};

PotentialPair sample_potential(const PotentialSpec& spec, GridPtr grid,
                               double decay_tol = kDefaultDecayTol);

}  // namespace akns
