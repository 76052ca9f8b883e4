#pragma once

#include "akns/grid.hpp"

namespace akns {

/// Gamma function of a complex argument (Lanczos, g = 607/128, with reflection
/// for Re w < 1/2). Throws PoleError at non-positive integers.
cplx complex_gamma(cplx w);

/// 1 / Gamma(w); entire, returns exactly zero at non-positive integers.
cplx reciprocal_gamma(cplx w);

/// A logarithm of Gamma(w). The branch is unspecified: use it only inside exp()
/// of sums and differences, where the branch drops out.
cplx log_gamma(cplx w);

}  // namespace akns
