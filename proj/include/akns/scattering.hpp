#pragma once

#include <vector>

#include "akns/grid.hpp"

namespace akns {

/// Transfer-matrix entries at one real rho.
struct ScatteringSample {
  double rho = 0.0;
  cplx z;
  cplx ztil;
  cplx a, atil, b, btil;

  /// |a a~ + b b~ - 1|
  double unitarity_residual() const noexcept;
};

enum class HalfPlane { upper, lower };

struct DiscreteDatum {
  cplx rho_m;
  cplx c_m;
  HalfPlane half_plane = HalfPlane::upper;
};

struct ScatteringData {
  std::vector<ScatteringSample> samples;
  std::vector<DiscreteDatum> upper;
  std::vector<DiscreteDatum> lower;
};

}  // namespace akns
