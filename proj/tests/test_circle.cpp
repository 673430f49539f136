#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hball/circle.hpp"
#include "hball/functions.hpp"

using namespace hball;

namespace {

BoundarySample random_sample(const BoundaryGrid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> v(static_cast<std::size_t>(grid.n_grid));
  for (Complex& z : v) z = Complex(gauss(rng), gauss(rng));
  return BoundarySample(grid, std::move(v));
}

double max_abs_diff(const BoundarySample& a, const BoundarySample& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace

TEST_CASE("grid invariants") {
  CHECK_THROWS_AS(BoundaryGrid(63), ContractError);
  CHECK_THROWS_AS(BoundaryGrid(100), ContractError);
  CHECK_THROWS_AS(BoundaryGrid(32), ContractError);
  CHECK_THROWS_AS(BoundaryGrid(128, 0), ContractError);
  CHECK_NOTHROW(BoundaryGrid(64));
}

TEST_CASE("to_spectrum on monomials") {
  BoundaryGrid grid(256);
  SUBCASE("constant") {
    Spectrum sp = to_spectrum(constant_sample(grid, Complex(1, 0)));
    CHECK(std::abs(sp.at(0) - Complex(1, 0)) < 1e-14);
    for (int k = -128; k < 128; ++k)
      if (k != 0) CHECK(std::abs(sp.at(k)) < 1e-14);
  }
  SUBCASE("zeta") {
    Spectrum sp = to_spectrum(monomial_sample(grid, 1));
    CHECK(std::abs(sp.at(1) - Complex(1, 0)) < 1e-13);
    CHECK(std::abs(sp.at(0)) < 1e-13);
    CHECK(std::abs(sp.at(-1)) < 1e-13);
  }
  SUBCASE("conjugate monomial") {
    Spectrum sp = to_spectrum(monomial_sample(grid, -1));
    CHECK(std::abs(sp.at(-1) - Complex(1, 0)) < 1e-13);
  }
}

TEST_CASE("from_spectrum basics and range error") {
  BoundaryGrid grid(128);
  Spectrum sp(128);
  sp.set(0, Complex(1, 0));
  BoundarySample s = from_spectrum(sp, grid);
  for (const Complex& v : s.values) CHECK(std::abs(v - Complex(1, 0)) < 1e-14);

  Spectrum big(512);
  big.set(200, Complex(1, 0));
  CHECK_THROWS_AS(from_spectrum(big, grid), std::out_of_range);

  // In-range re-gridding is fine.
  Spectrum small(512);
  small.set(5, Complex(0, 1));
  BoundarySample t = from_spectrum(small, grid);
  CHECK(std::abs(t.values[0] - Complex(0, 1)) < 1e-13);
}

TEST_CASE("round trip is the identity") {
  BoundaryGrid grid(512);
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    BoundarySample s = random_sample(grid, seed);
    BoundarySample back = from_spectrum(to_spectrum(s), grid);
    double scale = 0.0;
    for (const Complex& z : s.values) scale = std::max(scale, std::abs(z));
    CHECK(max_abs_diff(s, back) < 1e-12 * scale);
  }
}

TEST_CASE("Parseval identity") {
  BoundaryGrid grid(1024);
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    BoundarySample s = random_sample(grid, seed);
    Spectrum sp = to_spectrum(s);
    double lhs = 0.0, rhs = 0.0;
    for (const Complex& c : sp.coef) lhs += std::norm(c);
    for (const Complex& v : s.values) rhs += std::norm(v);
    rhs /= grid.n_grid;
    CHECK(std::abs(lhs - rhs) < 1e-10 * rhs);
  }
}

TEST_CASE("sup_norm") {
  BoundaryGrid grid(1024);
  CHECK(sup_norm(constant_sample(grid, Complex(1, 0))) == doctest::Approx(1.0));
  CHECK(sup_norm(monomial_sample(grid, 5)) == doctest::Approx(1.0).epsilon(1e-12));

  // (1 + zeta)/2 has |f| = |cos(theta/2)|, maximized at 1.
  BoundarySample f = 0.5 * (constant_sample(grid, Complex(1, 0)) +
                            monomial_sample(grid, 1));
  CHECK(std::abs(sup_norm(f) - 1.0) < 1e-6);

  SUBCASE("never below the node max, monotone in oversample") {
    BoundarySample s = random_sample(grid, 77);
    double node_max = 0.0;
    for (const Complex& z : s.values) node_max = std::max(node_max, std::abs(z));
    CHECK(sup_norm(s) >= node_max);
    BoundarySample s2(BoundaryGrid(1024, 2), s.values);
    BoundarySample s8(BoundaryGrid(1024, 8), s.values);
    CHECK(sup_norm(s8) >= sup_norm(s2) - 1e-14);
  }

  SUBCASE("matches dense evaluation for band-limited samples") {
    Spectrum sp(1024);
    std::mt19937_64 rng(5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int k = -40; k <= 40; ++k) sp.set(k, Complex(gauss(rng), gauss(rng)));
    BoundarySample s = from_spectrum(sp, grid);
    // Independent dense oracle: evaluate the trig polynomial directly.
    double dense = 0.0;
    const int M = 1 << 16;
    for (int j = 0; j < M; ++j) {
      const double th = 2.0 * std::numbers::pi * j / M;
      Complex acc(0, 0);
      for (int k = -40; k <= 40; ++k)
        acc += sp.at(k) * Complex(std::cos(k * th), std::sin(k * th));
      dense = std::max(dense, std::abs(acc));
    }
    // The oversampled max reads true values of the band-limited function,
    // so it sits just under the dense sup, within the documented factor.
    CHECK(sup_norm(s) <= dense + 1e-9);
    CHECK(sup_norm(s) >= dense * (1.0 - 1e-4));
    CHECK(sup_norm(s) * (1.0 + 10.0 / 16.0) >= dense);
  }
}

TEST_CASE("conjugate_function") {
  BoundaryGrid grid(512);
  SUBCASE("constants map to zero") {
    BoundarySample u = constant_sample(grid, Complex(2.5, 0));
    CHECK(sup_norm(conjugate_function(u)) < 1e-13);
  }
  SUBCASE("cos maps to sin") {
    std::vector<Complex> cosv(512), sinv(512);
    for (int j = 0; j < 512; ++j) {
      const double th = 2.0 * std::numbers::pi * j / 512;
      cosv[static_cast<std::size_t>(j)] = Complex(std::cos(th), 0);
      sinv[static_cast<std::size_t>(j)] = Complex(std::sin(th), 0);
    }
    BoundarySample u(grid, cosv), expected(grid, sinv);
    CHECK(max_abs_diff(conjugate_function(u), expected) < 1e-13);
  }
  SUBCASE("u + i*conj(u) is analytic; double application negates") {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Spectrum sp(512);
    for (int k = 1; k <= 30; ++k) {
      const Complex a(gauss(rng), gauss(rng));
      sp.set(k, a);
      sp.set(-k, std::conj(a));  // real, zero mean
    }
    BoundarySample u = from_spectrum(sp, grid);
    BoundarySample ut = conjugate_function(u);
    std::vector<Complex> comb(512);
    for (int j = 0; j < 512; ++j)
      comb[static_cast<std::size_t>(j)] =
          u.values[static_cast<std::size_t>(j)] +
          Complex(0, 1) * ut.values[static_cast<std::size_t>(j)];
    CHECK(analyticity_defect(BoundarySample(grid, comb)) <
          1e-10 * sup_norm(u));
    BoundarySample utt = conjugate_function(ut);
    BoundarySample neg = Complex(-1, 0) * u;
    CHECK(max_abs_diff(utt, neg) < 1e-10 * sup_norm(u));
  }
  SUBCASE("linearity") {
    BoundarySample u1 = from_spectrum(
        Spectrum::from_terms(512, {{3, {0.5, 0}}, {-3, {0.5, 0}}}), grid);
    BoundarySample u2 = from_spectrum(
        Spectrum::from_terms(512, {{7, {0, 0.5}}, {-7, {0, -0.5}}}), grid);
    BoundarySample lhs = conjugate_function(Complex(2, 0) * u1 + u2);
    BoundarySample rhs =
        Complex(2, 0) * conjugate_function(u1) + conjugate_function(u2);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
  SUBCASE("rejects non-real input") {
    CHECK_THROWS_AS(conjugate_function(monomial_sample(grid, 1)),
                    ContractError);
  }
}

TEST_CASE("analyticity_defect") {
  BoundaryGrid grid(256);
  CHECK(analyticity_defect(monomial_sample(grid, 2)) < 1e-14);
  CHECK(analyticity_defect(monomial_sample(grid, -1)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("measure of masks") {
  BoundaryGrid grid(128);
  std::vector<std::uint8_t> all(128, 1), none(128, 0), alt(128, 0);
  for (int j = 0; j < 128; j += 2) alt[static_cast<std::size_t>(j)] = 1;
  CHECK(measure(GridMask(grid, all)) == 1.0);
  CHECK(measure(GridMask(grid, none)) == 0.0);
  CHECK(measure(GridMask(grid, alt)) == 0.5);
}

TEST_CASE("sample validation") {
  BoundaryGrid grid(64);
  std::vector<Complex> bad(64, Complex(0, 0));
  bad[3] = Complex(std::numeric_limits<double>::quiet_NaN(), 0);
  CHECK_THROWS_AS(BoundarySample(grid, bad), ContractError);
  CHECK_THROWS_AS(BoundarySample(grid, std::vector<Complex>(63)),
                  ContractError);
}
