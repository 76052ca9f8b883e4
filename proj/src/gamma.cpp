#include "akns/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "akns/errors.hpp"

namespace akns {

namespace {

constexpr double kG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

bool is_nonpositive_integer(cplx w) {
  return w.imag() == 0.0 && w.real() <= 0.0 && w.real() == std::floor(w.real());
}

// sin(pi w) with the argument reduced by the nearest integer, so values near
// the zeros keep full relative accuracy.
cplx sin_pi(cplx w) {
  const double n = std::round(w.real());
  const cplx s = std::sin(std::numbers::pi * cplx(w.real() - n, w.imag()));
  return std::fmod(std::abs(n), 2.0) == 1.0 ? -s : s;
}

// log Gamma(w) for Re w >= 1/2.
cplx log_gamma_right(cplx w) {
  const cplx z = w - 1.0;
  cplx series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (z + static_cast<double>(i));
  const cplx t = z + kG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

cplx log_gamma(cplx w) {
  if (is_nonpositive_integer(w)) throw PoleError("log_gamma: pole at non-positive integer");
  if (w.real() >= 0.5) return log_gamma_right(w);
  return std::log(std::numbers::pi) - std::log(sin_pi(w)) - log_gamma_right(1.0 - w);
}

cplx complex_gamma(cplx w) {
  if (is_nonpositive_integer(w)) throw PoleError("complex_gamma: pole at non-positive integer");
  if (w.real() >= 0.5) return std::exp(log_gamma_right(w));
  return std::numbers::pi / (sin_pi(w) * std::exp(log_gamma_right(1.0 - w)));
}

cplx reciprocal_gamma(cplx w) {
  if (w.real() >= 0.5) return std::exp(-log_gamma_right(w));
  if (is_nonpositive_integer(w)) return 0.0;
  return sin_pi(w) * std::exp(log_gamma_right(1.0 - w)) / std::numbers::pi;
}

}  // namespace akns
