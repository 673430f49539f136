#pragma once

#include <cstdint>
#include <vector>

#include "hball/circle.hpp"

namespace hball {

BoundarySample constant_sample(const BoundaryGrid& grid, Complex c);

/// zeta^k sampled at the nodes (k may be negative).
BoundarySample monomial_sample(const BoundaryGrid& grid, int k);

/// Finite Blaschke product prod (a_i - zeta)/(1 - conj(a_i) zeta); every
/// zero must lie strictly inside the disk.
BoundarySample blaschke_product(const BoundaryGrid& grid,
                                const std::vector<Complex>& zeros);

/// num(zeta)/den(zeta) for polynomials given by coefficient lists; den must
/// be zero-free on the closed disk (checked via the analyticity defect).
BoundarySample poly_fraction(const BoundaryGrid& grid,
                             const std::vector<Complex>& num,
                             const std::vector<Complex>& den);

/// w = exp(L) with L a random real trig polynomial of the given degree,
/// scaled so sup |L| = amplitude. Strictly positive, log band-limited.
BoundarySample random_smooth_modulus(const BoundaryGrid& grid, int degree,
                                     double amplitude, std::uint64_t seed);

}  // namespace hball
