#include "hball/functions.hpp"

#include <cmath>
#include <random>

namespace hball {

BoundarySample constant_sample(const BoundaryGrid& grid, Complex c) {
  return BoundarySample(
      grid, std::vector<Complex>(static_cast<std::size_t>(grid.n_grid), c));
}

BoundarySample monomial_sample(const BoundaryGrid& grid, int k) {
  Spectrum sp(grid.n_grid);
  sp.set(k, Complex(1.0, 0.0));
  return from_spectrum(sp, grid);
}

BoundarySample blaschke_product(const BoundaryGrid& grid,
                                const std::vector<Complex>& zeros) {
  for (const Complex& a : zeros)
    if (!(std::abs(a) < 1.0))
      throw ContractError("blaschke_product: zeros must lie inside the disk");
  const std::vector<Complex>& z = cached_grid_points(grid.n_grid);
  std::vector<Complex> v(z.size(), Complex(1.0, 0.0));
  for (const Complex& a : zeros)
    for (std::size_t j = 0; j < z.size(); ++j)
      v[j] *= (a - z[j]) / (Complex(1.0, 0.0) - std::conj(a) * z[j]);
  return BoundarySample(grid, std::move(v));
}

namespace {

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

}  // namespace

BoundarySample poly_fraction(const BoundaryGrid& grid,
                             const std::vector<Complex>& num,
                             const std::vector<Complex>& den) {
  if (den.empty()) throw ContractError("poly_fraction: empty denominator");
  const std::vector<Complex>& z = cached_grid_points(grid.n_grid);
  std::vector<Complex> v(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    const Complex d = horner(den, z[j]);
    if (std::abs(d) < 1e-12)
      throw ContractError("poly_fraction: denominator vanishes on the circle");
    v[j] = horner(num, z[j]) / d;
  }
  BoundarySample s(grid, std::move(v));
  // Interior denominator zeros surface as negative-frequency content.
  double scale = sup_norm(s);
  if (analyticity_defect(s) > 1e-6 * std::max(1.0, scale))
    throw ContractError(
        "poly_fraction: denominator appears to vanish inside the disk");
  return s;
}

BoundarySample random_smooth_modulus(const BoundaryGrid& grid, int degree,
                                     double amplitude, std::uint64_t seed) {
  if (degree < 1) throw ContractError("random_smooth_modulus: degree >= 1");
  if (!(amplitude > 0.0))
    throw ContractError("random_smooth_modulus: amplitude must be positive");
  if (degree >= grid.n_grid / 2)
    throw ContractError("random_smooth_modulus: degree exceeds grid range");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Spectrum sp(grid.n_grid);
  for (int k = 1; k <= degree; ++k) {
    const double damp = 1.0 / (1.0 + std::pow(k, 1.5));
    const Complex a(gauss(rng) * damp, gauss(rng) * damp);
    sp.set(k, a);
    sp.set(-k, std::conj(a));
  }
  BoundarySample L = from_spectrum(sp, grid);
  const double sup = sup_norm(L);
  const double scale = sup > 0.0 ? amplitude / sup : 0.0;
  std::vector<Complex> v(L.values.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = Complex(std::exp(scale * L.values[i].real()), 0.0);
  return BoundarySample(grid, std::move(v));
}

}  // namespace hball
