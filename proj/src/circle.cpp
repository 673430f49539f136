#include "hball/circle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "fft.hpp"

namespace hball {

namespace {

void require_same_grid(const BoundarySample& a, const BoundarySample& b) {
  if (!(a.grid == b.grid))
    throw ContractError("boundary samples live on different grids");
}

bool all_finite(const std::vector<Complex>& v) {
  for (const Complex& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

}  // namespace

BoundaryGrid::BoundaryGrid(int n, int oversample_factor)
    : n_grid(n), oversample(oversample_factor) {
  if (n < 64 || !detail::is_pow2(n))
    throw ContractError("n_grid must be a power of two >= 64, got " +
                        std::to_string(n));
  if (oversample < 1)
    throw ContractError("oversample must be >= 1");
}

BoundarySample::BoundarySample(const BoundaryGrid& g, std::vector<Complex> v)
    : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.n_grid)
    throw ContractError("sample length does not match grid");
  if (!all_finite(values))
    throw ContractError("sample contains non-finite values");
}

Spectrum::Spectrum(int n) : n_grid(n), coef(static_cast<std::size_t>(n)) {
  if (n < 2 || !detail::is_pow2(n))
    throw ContractError("spectrum size must be a power of two >= 2");
}

Complex Spectrum::at(int k) const {
  if (!in_range(k)) throw std::out_of_range("frequency out of spectrum range");
  return coef[static_cast<std::size_t>(k >= 0 ? k : k + n_grid)];
}

void Spectrum::set(int k, Complex a) {
  if (!in_range(k)) throw std::out_of_range("frequency out of spectrum range");
  coef[static_cast<std::size_t>(k >= 0 ? k : k + n_grid)] = a;
}

Spectrum Spectrum::from_terms(
    int n, const std::vector<std::pair<int, Complex>>& terms) {
  Spectrum sp(n);
  for (const auto& [k, a] : terms) sp.set(k, sp.at(k) + a);
  return sp;
}

std::vector<Complex> grid_points(int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n;
    z[static_cast<std::size_t>(j)] = Complex(std::cos(th), std::sin(th));
  }
  return z;
}

const std::vector<Complex>& cached_grid_points(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Complex>> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, grid_points(n)).first;
  return it->second;
}

Spectrum to_spectrum(const BoundarySample& s) {
  const int n = s.grid.n_grid;
  Spectrum sp(n);
  sp.coef = s.values;
  detail::fft_pow2(sp.coef, -1);
  const double inv = 1.0 / n;
  for (Complex& c : sp.coef) c *= inv;
  return sp;
}

BoundarySample from_spectrum(const Spectrum& sp, const BoundaryGrid& grid) {
  std::vector<Complex> dense;
  if (sp.n_grid == grid.n_grid) {
    dense = sp.coef;
  } else {
    // Re-grid: every nonzero coefficient must fit the target range.
    dense.assign(static_cast<std::size_t>(grid.n_grid), Complex(0, 0));
    const int half = sp.n_grid / 2;
    for (int m = 0; m < sp.n_grid; ++m) {
      const Complex a = sp.coef[static_cast<std::size_t>(m)];
      if (a == Complex(0, 0)) continue;
      const int k = m < half ? m : m - sp.n_grid;
      if (k < -grid.n_grid / 2 || k >= grid.n_grid / 2)
        throw std::out_of_range("frequency out of range for target grid");
      dense[static_cast<std::size_t>(k >= 0 ? k : k + grid.n_grid)] = a;
    }
  }
  detail::fft_pow2(dense, +1);
  return BoundarySample(grid, std::move(dense));
}

std::vector<Complex> oversampled_values(const BoundarySample& s,
                                        int oversample) {
  if (oversample < 1) throw ContractError("oversample must be >= 1");
  if (oversample == 1) return s.values;
  const int n = s.grid.n_grid;
  const int half = n / 2;
  const int nf = n * oversample;
  Spectrum sp = to_spectrum(s);
  std::vector<Complex> fine(static_cast<std::size_t>(nf), Complex(0, 0));
  for (int m = 0; m < half; ++m) fine[static_cast<std::size_t>(m)] = sp.coef[static_cast<std::size_t>(m)];
  for (int m = half + 1; m < n; ++m)
    fine[static_cast<std::size_t>(nf - n + m)] = sp.coef[static_cast<std::size_t>(m)];
  // Split the Nyquist bin across +-n/2 so real samples interpolate to real.
  fine[static_cast<std::size_t>(half)] = 0.5 * sp.coef[static_cast<std::size_t>(half)];
  fine[static_cast<std::size_t>(nf - half)] = 0.5 * sp.coef[static_cast<std::size_t>(half)];
  detail::fft_pow2(fine, +1);
  return fine;
}

std::vector<Complex> oversampled_values(const BoundarySample& s) {
  return oversampled_values(s, s.grid.oversample);
}

double sup_norm(const BoundarySample& s) {
  double m = 0.0;
  for (const Complex& z : s.values) m = std::max(m, std::abs(z));
  if (s.grid.oversample > 1) {
    for (const Complex& z : oversampled_values(s)) m = std::max(m, std::abs(z));
  }
  return m;
}

double inf_modulus(const BoundarySample& s) {
  const std::vector<Complex> fine =
      s.grid.oversample > 1 ? oversampled_values(s) : s.values;
  double m = std::abs(fine.front());
  for (const Complex& z : fine) m = std::min(m, std::abs(z));
  return m;
}

BoundarySample conjugate_function(const BoundarySample& u) {
  double scale = 1.0;
  for (const Complex& z : u.values) scale = std::max(scale, std::abs(z.real()));
  for (const Complex& z : u.values)
    if (std::abs(z.imag()) > 1e-12 * scale)
      throw ContractError("conjugate_function requires a real-valued sample");

  const int n = u.grid.n_grid;
  const int half = n / 2;
  Spectrum sp = to_spectrum(u);
  Spectrum out(n);
  const Complex mi(0.0, -1.0), pi(0.0, 1.0);
  for (int m = 1; m < half; ++m)
    out.coef[static_cast<std::size_t>(m)] = mi * sp.coef[static_cast<std::size_t>(m)];
  for (int m = half + 1; m < n; ++m)
    out.coef[static_cast<std::size_t>(m)] = pi * sp.coef[static_cast<std::size_t>(m)];
  BoundarySample v = from_spectrum(out, u.grid);
  for (Complex& z : v.values) z = Complex(z.real(), 0.0);  // clear roundoff
  return v;
}

double analyticity_defect(const BoundarySample& s) {
  const int n = s.grid.n_grid;
  const Spectrum sp = to_spectrum(s);
  double m = 0.0;
  for (int k = -n / 2; k < 0; ++k) m = std::max(m, std::abs(sp.at(k)));
  return m;
}

GridMask::GridMask(const BoundaryGrid& g, std::vector<std::uint8_t> m)
    : grid(g), member(std::move(m)) {
  if (static_cast<int>(member.size()) != grid.n_grid)
    throw ContractError("mask length does not match grid");
}

double measure(const GridMask& mask) {
  std::size_t c = 0;
  for (std::uint8_t b : mask.member) c += b ? 1 : 0;
  return static_cast<double>(c) / static_cast<double>(mask.grid.n_grid);
}

BoundarySample operator+(const BoundarySample& a, const BoundarySample& b) {
  require_same_grid(a, b);
  std::vector<Complex> v(a.values);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values[i];
  return BoundarySample(a.grid, std::move(v));
}

BoundarySample operator-(const BoundarySample& a, const BoundarySample& b) {
  require_same_grid(a, b);
  std::vector<Complex> v(a.values);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values[i];
  return BoundarySample(a.grid, std::move(v));
}

BoundarySample operator*(const BoundarySample& a, const BoundarySample& b) {
  require_same_grid(a, b);
  std::vector<Complex> v(a.values);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.values[i];
  return BoundarySample(a.grid, std::move(v));
}

BoundarySample operator*(Complex c, const BoundarySample& a) {
  std::vector<Complex> v(a.values);
  for (Complex& z : v) z *= c;
  return BoundarySample(a.grid, std::move(v));
}

}  // namespace hball
