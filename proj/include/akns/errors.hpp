#pragma once

#include <stdexcept>
#include <string>

namespace akns {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mesh does not split into whole 6-point panels, or has too few nodes.
class GridShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on a pole (Gamma at a non-positive integer, Mobius map at its pole).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Polynomial is constant after trimming.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class RootCapError : public Error {
 public:
  using Error::Error;
};

/// Potential is not below the decay tolerance at the ends of the mesh.
class DecayError : public Error {
 public:
  using Error::Error;
};

/// A seed solution (f, f~, g or g~) comes too close to zero on the mesh.
class NonvanishingAssumptionViolated : public Error {
 public:
  using Error::Error;
};

class SolverDivergence : public Error {
 public:
  using Error::Error;
};

/// An intermediate of the coefficient recurrences left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Spectral parameter in the wrong half-plane for the requested series.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateQuotient : public Error {
 public:
  using Error::Error;
};

/// Inconsistent sizes in scattering data or linear systems.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class RankDeficiency : public Error {
 public:
  using Error::Error;
};

/// Division by a (near) zero Jost component while recovering the potentials.
class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator(const std::string& what, double x) : Error(what), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Malformed input files or configuration.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace akns
