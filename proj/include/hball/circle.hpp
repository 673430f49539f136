#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "hball/errors.hpp"

namespace hball {

using Complex = std::complex<double>;

/// Uniform sampling grid on the unit circle: n_grid points
/// zeta_j = exp(2*pi*i*j/n_grid) carrying the normalized counting measure.
/// oversample controls the refinement factor used for sup-norm evaluation.
struct BoundaryGrid {
  int n_grid;
  int oversample;

  explicit BoundaryGrid(int n, int oversample_factor = 4);

  friend bool operator==(const BoundaryGrid&, const BoundaryGrid&) = default;
};

/// Complex values of a boundary function at the grid nodes.
struct BoundarySample {
  BoundaryGrid grid;
  std::vector<Complex> values;

  BoundarySample(const BoundaryGrid& g, std::vector<Complex> v);
};

/// Dense spectrum on frequencies [-n_grid/2, n_grid/2). Index m stores
/// frequency m for m < n_grid/2 and frequency m - n_grid otherwise, matching
/// the FFT bin layout.
struct Spectrum {
  int n_grid = 0;
  std::vector<Complex> coef;

  Spectrum() = default;
  explicit Spectrum(int n);

  bool in_range(int k) const {
    return k >= -n_grid / 2 && k < n_grid / 2;
  }
  Complex at(int k) const;
  void set(int k, Complex a);

  static Spectrum from_terms(int n,
                             const std::vector<std::pair<int, Complex>>& terms);
};

/// Subset of the grid nodes; measure is the fraction of members.
struct GridMask {
  BoundaryGrid grid;
  std::vector<std::uint8_t> member;

  GridMask(const BoundaryGrid& g, std::vector<std::uint8_t> m);
};

std::vector<Complex> grid_points(int n);

/// zeta_j = exp(2*pi*i*j/n) for the sample's own grid.
const std::vector<Complex>& cached_grid_points(int n);

/// Discrete Fourier coefficients c(k) = (1/n) sum_j zeta_j^{-k} s_j,
/// the quadrature of int zeta^{-k} s(zeta) dm.
Spectrum to_spectrum(const BoundarySample& s);

/// Inverse transform s_j = sum_k c(k) zeta_j^k. Throws std::out_of_range if
/// the spectrum carries a nonzero coefficient outside the target grid range.
BoundarySample from_spectrum(const Spectrum& sp, const BoundaryGrid& grid);

/// Values of the band-limited interpolant on the oversample-refined grid
/// (zero-padded spectrum; the Nyquist bin is split symmetrically).
std::vector<Complex> oversampled_values(const BoundarySample& s);
std::vector<Complex> oversampled_values(const BoundarySample& s,
                                        int oversample);

/// Sup norm: max modulus over the oversampled grid (never below the node max).
double sup_norm(const BoundarySample& s);

/// Min modulus over the oversampled grid (grid essential infimum surrogate).
double inf_modulus(const BoundarySample& s);

/// Conjugate function: spectrum multiplier -i*sgn(k), DC and Nyquist bins
/// zeroed so real samples map to real samples. Requires real input.
BoundarySample conjugate_function(const BoundarySample& u);

/// max_{k<0} |c(k)|; zero iff the sample is in H^infty at grid resolution.
double analyticity_defect(const BoundarySample& s);

double measure(const GridMask& mask);

// Pointwise arithmetic; grids must agree.
BoundarySample operator+(const BoundarySample& a, const BoundarySample& b);
BoundarySample operator-(const BoundarySample& a, const BoundarySample& b);
BoundarySample operator*(const BoundarySample& a, const BoundarySample& b);
BoundarySample operator*(Complex c, const BoundarySample& a);

}  // namespace hball
