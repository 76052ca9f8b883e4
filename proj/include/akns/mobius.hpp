#pragma once

#include "akns/grid.hpp"

namespace akns {

/// z(rho) = (1/2 + i rho) / (1/2 - i rho): closed upper half-plane -> closed unit disk.
cplx mobius_z(cplx rho);
/// z~(rho) = (1/2 - i rho) / (1/2 + i rho): closed lower half-plane -> closed unit disk.
cplx mobius_ztil(cplx rho);
/// Inverse of mobius_z: rho = (z - 1) / (2i (z + 1)).
cplx rho_of_z(cplx z);
/// Inverse of mobius_ztil: rho = (1 - z~) / (2i (z~ + 1)).
cplx rho_of_ztil(cplx ztil);

}  // namespace akns
