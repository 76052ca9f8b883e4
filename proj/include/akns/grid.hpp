#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace akns {

using cplx = std::complex<double>;

/// Uniform mesh on [x_min, x_max] with spacing 1/nodes_per_unit.
///
/// Both ends must be multiples of the spacing (so x = 0 is a node) and the
/// number of intervals must be a multiple of 5, so that the mesh splits into
/// closed 6-point Newton-Cotes panels.
class Grid {
 public:
  static constexpr int kPanelIntervals = 5;
  static constexpr int kDefaultNodesPerUnit = 2500;

  Grid(double x_min, double x_max, int nodes_per_unit = kDefaultNodesPerUnit);

  /// Shared, immutable grid; fields keep a reference to it.
  static std::shared_ptr<const Grid> make(double x_min, double x_max,
                                          int nodes_per_unit = kDefaultNodesPerUnit);

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  int nodes_per_unit() const noexcept { return nodes_per_unit_; }
  double h() const noexcept { return h_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t panels() const noexcept { return (nodes_.size() - 1) / kPanelIntervals; }
  double operator[](std::size_t i) const noexcept { return nodes_[i]; }
  std::span<const double> nodes() const noexcept { return nodes_; }

  /// Index of the node equal to x (within half a spacing); throws if x is off the mesh.
  std::size_t index_of(double x) const;

 private:
  double x_min_;
  double x_max_;
  int nodes_per_unit_;
  double h_;
  long first_tick_;
  std::vector<double> nodes_;
};

using GridPtr = std::shared_ptr<const Grid>;

/// Complex samples of an x-dependent quantity, one value per grid node.
class ComplexField {
 public:
  ComplexField() = default;
  explicit ComplexField(GridPtr grid);
  ComplexField(GridPtr grid, std::vector<cplx> values);

  template <class Fn>
  static ComplexField from_function(GridPtr grid, Fn&& fn) {
    ComplexField out(grid);
    for (std::size_t i = 0; i < grid->size(); ++i) out.values_[i] = fn((*grid)[i]);
    return out;
  }

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const noexcept { return grid_; }
  std::size_t size() const noexcept { return values_.size(); }

  cplx& operator[](std::size_t i) noexcept { return values_[i]; }
  const cplx& operator[](std::size_t i) const noexcept { return values_[i]; }

  std::span<cplx> values() noexcept { return values_; }
  std::span<const cplx> values() const noexcept { return values_; }

  bool all_finite() const noexcept;
  double max_abs() const noexcept;

 private:
  GridPtr grid_;
  std::vector<cplx> values_;
};

}  // namespace akns
