#include "akns/grid.hpp"

#include <cmath>
#include <sstream>

#include "akns/errors.hpp"

namespace akns {

namespace {

long to_tick(double x, int nodes_per_unit, const char* what) {
  const double scaled = x * nodes_per_unit;
  const double rounded = std::round(scaled);
  if (std::abs(scaled - rounded) > 1e-9 * std::max(1.0, std::abs(scaled))) {
    std::ostringstream msg;
    msg << what << " = " << x << " is not a multiple of the spacing 1/" << nodes_per_unit;
    throw GridShapeError(msg.str());
  }
  return static_cast<long>(rounded);
}

}  // namespace

Grid::Grid(double x_min, double x_max, int nodes_per_unit)
    : x_min_(x_min), x_max_(x_max), nodes_per_unit_(nodes_per_unit) {
  if (nodes_per_unit <= 0) throw GridShapeError("nodes_per_unit must be positive");
  if (!(x_min < 0.0 && 0.0 < x_max)) throw GridShapeError("grid must satisfy x_min < 0 < x_max");
  first_tick_ = to_tick(x_min, nodes_per_unit, "x_min");
  const long last_tick = to_tick(x_max, nodes_per_unit, "x_max");
  const long intervals = last_tick - first_tick_;
  if (intervals % kPanelIntervals != 0) {
    std::ostringstream msg;
    msg << "number of intervals " << intervals << " is not divisible by " << kPanelIntervals;
    throw GridShapeError(msg.str());
  }
  h_ = 1.0 / nodes_per_unit;
  nodes_.resize(static_cast<std::size_t>(intervals) + 1);
  // Nodes are tick / nodes_per_unit so that x = 0 is represented exactly.
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    nodes_[i] = static_cast<double>(first_tick_ + static_cast<long>(i)) / nodes_per_unit;
  }
}

std::shared_ptr<const Grid> Grid::make(double x_min, double x_max, int nodes_per_unit) {
  return std::make_shared<const Grid>(x_min, x_max, nodes_per_unit);
}

std::size_t Grid::index_of(double x) const {
  const double pos = x * nodes_per_unit_ - static_cast<double>(first_tick_);
  const double rounded = std::round(pos);
  if (rounded < 0.0 || rounded > static_cast<double>(nodes_.size() - 1) ||
      std::abs(pos - rounded) > 1e-6) {
    std::ostringstream msg;
    msg << "x = " << x << " is not a node of the grid";
    throw GridShapeError(msg.str());
  }
  return static_cast<std::size_t>(rounded);
}

ComplexField::ComplexField(GridPtr grid) : grid_(std::move(grid)), values_(grid_->size()) {}

ComplexField::ComplexField(GridPtr grid, std::vector<cplx> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_->size()) {
    throw GridShapeError("field length does not match the grid");
  }
}

bool ComplexField::all_finite() const noexcept {
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

double ComplexField::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace akns
