#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hball/circle.hpp"

namespace hball {

inline constexpr double kDefaultTolKernel = 1e-9;

/// Functional on H^infty represented by a trigonometric-polynomial density:
/// phi(h) = int h(zeta) psi(zeta) dm(zeta), psi = sum_k a_k zeta^k.
struct Functional {
  std::vector<std::pair<int, Complex>> density;  // (frequency, coefficient)
};

struct ConstraintSet {
  std::vector<Functional> functionals;
  int size() const { return static_cast<int>(functionals.size()); }
};

/// Discrete quadrature of int h psi dm over the sample's grid.
Complex apply(const Functional& phi, const BoundarySample& h);

/// phi_k(h) = \hat h(k-1) for k = 1..N (densities psi_k = zeta^{-(k-1)}).
ConstraintSet fourier_constraints(int N);

/// N pairwise-distinct densities supported on [-degree, degree] with
/// seed-deterministic normal coefficients.
ConstraintSet random_constraints(int N, int degree, std::uint64_t seed);

/// Non-null p of degree <= N with phi_j(G p) = 0 for all j, normalized to
/// sup |p| = 1 on the circle. Exists by rank-nullity (N+1 unknowns, N
/// conditions); extracted as the smallest right singular vector of
/// T[j][i] = phi_j(G zeta^i).
struct KernelPolynomial {
  std::vector<Complex> coeffs;  // alpha_0 .. alpha_N
  double sup_norm;              // 1 within 1e-10 after normalization
  double residual;              // max_j |phi_j(G p)|
};

KernelPolynomial kernel_polynomial(const BoundarySample& G,
                                   const ConstraintSet& phi_set,
                                   double tol_kernel = kDefaultTolKernel);

/// max_j |phi_j(h)| over the set.
double membership_defect(const BoundarySample& h, const ConstraintSet& phi_set);

/// Sup of |p| on the circle: 64*(deg+1)-point scan plus golden-section
/// refinement of every near-maximal cell.
double polynomial_sup(const std::vector<Complex>& coeffs);

/// p evaluated at the grid nodes.
BoundarySample polynomial_sample(const std::vector<Complex>& coeffs,
                                 const BoundaryGrid& grid);

}  // namespace hball
