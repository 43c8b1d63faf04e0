// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pmdice/field.hpp"

namespace pmdice {

// Squared-distance value assigned to pixels that cannot reach any seed.
inline constexpr double kUnreachable = 1e20;

// Exact squared Euclidean distance from every pixel to the nearest set pixel
// of `seeds`, by the separable lower-envelope transform. Distances between
// integer grid points are integers, so the result is exact in double.
ScalarField squared_edt(const Mask& seeds);

// Mask pixels with a face-adjacent (4-connected in 2D, 6-connected in 3D)
// non-mask neighbor, or lying on the image edge.
Mask extract_boundary(const Mask& mask);

// Pixels whose Euclidean distance to the nearest boundary pixel is <= tau.
// An empty boundary yields an empty band.
Mask distance_band(const Mask& boundary, double tau);

// Normalized surface distance between two binary masks:
// (|S_t in B_p| + |S_p in B_t|) / (|S_t| + |S_p|) with S the boundaries and
// B their tau-bands. Both masks empty -> 1, exactly one empty -> 0.
double nsd(const Mask& pred, const Mask& truth, double tau);

}  // namespace pmdice
