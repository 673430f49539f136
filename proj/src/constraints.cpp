#include "hball/constraints.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace hball {

namespace {

Complex eval_poly(const std::vector<Complex>& coeffs, Complex z) {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

double abs_at_angle(const std::vector<Complex>& coeffs, double theta) {
  return std::abs(eval_poly(coeffs, Complex(std::cos(theta), std::sin(theta))));
}

// Golden-section maximization of |p(e^{i theta})| on [lo, hi].
double golden_max(const std::vector<Complex>& coeffs, double lo, double hi) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
  double f1 = abs_at_angle(coeffs, x1), f2 = abs_at_angle(coeffs, x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + invphi * (b - a); f2 = abs_at_angle(coeffs, x2);
    } else {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - invphi * (b - a); f1 = abs_at_angle(coeffs, x1);
    }
  }
  return std::max(f1, f2);
}

bool same_density(const Functional& a, const Functional& b) {
  return a.density == b.density;
}

}  // namespace

Complex apply(const Functional& phi, const BoundarySample& h) {
  const int n = h.grid.n_grid;
  const std::vector<Complex>& z = cached_grid_points(n);
  Complex acc(0.0, 0.0);
  for (int j = 0; j < n; ++j) {
    const std::size_t i = static_cast<std::size_t>(j);
    Complex psi(0.0, 0.0);
    for (const auto& [k, a] : phi.density) {
      // zeta_j^k with wraparound: zeta_j^k = z[(j*k) mod n]
      const long long idx = (static_cast<long long>(j) * k) % n;
      psi += a * z[static_cast<std::size_t>(idx < 0 ? idx + n : idx)];
    }
    acc += h.values[i] * psi;
  }
  return acc / static_cast<double>(n);
}

ConstraintSet fourier_constraints(int N) {
  if (N < 1) throw ContractError("fourier_constraints: N must be >= 1");
  ConstraintSet set;
  set.functionals.reserve(static_cast<std::size_t>(N));
  for (int k = 1; k <= N; ++k)
    set.functionals.push_back(Functional{{{-(k - 1), Complex(1.0, 0.0)}}});
  return set;
}

ConstraintSet random_constraints(int N, int degree, std::uint64_t seed) {
  if (N < 1) throw ContractError("random_constraints: N must be >= 1");
  if (degree < 0) throw ContractError("random_constraints: degree must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ConstraintSet set;
  for (int j = 0; j < N; ++j) {
    for (int attempt = 0;; ++attempt) {
      Functional f;
      for (int k = -degree; k <= degree; ++k) {
        const double re = gauss(rng), im = gauss(rng);
        f.density.emplace_back(k, Complex(re, im));
      }
      const bool dup = std::any_of(
          set.functionals.begin(), set.functionals.end(),
          [&](const Functional& g) { return same_density(f, g); });
      if (!dup) {
        set.functionals.push_back(std::move(f));
        break;
      }
      if (attempt > 100)
        throw ConditioningError("random_constraints: cannot draw distinct densities");
    }
  }
  return set;
}

double polynomial_sup(const std::vector<Complex>& coeffs) {
  if (coeffs.empty()) return 0.0;
  const int M = 64 * static_cast<int>(coeffs.size());
  const double step = 2.0 * std::numbers::pi / M;
  std::vector<double> vals(static_cast<std::size_t>(M));
  double best = 0.0;
  for (int i = 0; i < M; ++i) {
    vals[static_cast<std::size_t>(i)] = abs_at_angle(coeffs, i * step);
    best = std::max(best, vals[static_cast<std::size_t>(i)]);
  }
  if (best == 0.0) return 0.0;
  double refined = best;
  for (int i = 0; i < M; ++i) {
    if (vals[static_cast<std::size_t>(i)] >= 0.99 * best)
      refined = std::max(refined,
                         golden_max(coeffs, (i - 1) * step, (i + 1) * step));
  }
  return refined;
}

BoundarySample polynomial_sample(const std::vector<Complex>& coeffs,
                                 const BoundaryGrid& grid) {
  const std::vector<Complex>& z = cached_grid_points(grid.n_grid);
  std::vector<Complex> v(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) v[i] = eval_poly(coeffs, z[i]);
  return BoundarySample(grid, std::move(v));
}

KernelPolynomial kernel_polynomial(const BoundarySample& G,
                                   const ConstraintSet& phi_set,
                                   double tol_kernel) {
  const int N = phi_set.size();
  if (N < 1) throw ContractError("kernel_polynomial: empty constraint set");
  const int n = G.grid.n_grid;
  const std::vector<Complex>& z = cached_grid_points(n);

  Eigen::MatrixXcd T(N, N + 1);
  BoundarySample Gz = G;  // G * zeta^i, advanced in place
  for (int i = 0; i <= N; ++i) {
    for (int j = 0; j < N; ++j)
      T(j, i) = apply(phi_set.functionals[static_cast<std::size_t>(j)], Gz);
    if (i < N)
      for (int m = 0; m < n; ++m)
        Gz.values[static_cast<std::size_t>(m)] *= z[static_cast<std::size_t>(m)];
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(T, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  // Null direction: the trailing singular vector; ties among near-zero
  // singular values break toward the smallest index.
  int pick = N;
  const double tiny = 1e-12 * std::max(sv.size() > 0 ? sv(0) : 0.0, 1.0);
  for (int j = 0; j < sv.size(); ++j) {
    if (sv(j) <= tiny) {
      pick = j;
      break;
    }
  }
  Eigen::VectorXcd alpha = svd.matrixV().col(pick);

  // Canonical phase: largest coefficient becomes real positive.
  int big = 0;
  for (int i = 1; i <= N; ++i)
    if (std::abs(alpha(i)) > std::abs(alpha(big))) big = i;
  if (std::abs(alpha(big)) > 0.0) alpha *= std::conj(alpha(big)) / std::abs(alpha(big));

  std::vector<Complex> coeffs(static_cast<std::size_t>(N + 1));
  for (int i = 0; i <= N; ++i) coeffs[static_cast<std::size_t>(i)] = alpha(i);
  const double sup = polynomial_sup(coeffs);
  if (!(sup > 0.0))
    throw ConditioningError("kernel_polynomial: null vector collapsed to zero");
  for (Complex& c : coeffs) c /= sup;

  double residual = 0.0;
  const BoundarySample p = polynomial_sample(coeffs, G.grid);
  const BoundarySample Gp = G * p;
  for (const Functional& phi : phi_set.functionals)
    residual = std::max(residual, std::abs(apply(phi, Gp)));

  double gmax = 0.0;
  for (const Complex& v : G.values) gmax = std::max(gmax, std::abs(v));
  if (residual > tol_kernel * std::max(1.0, gmax))
    throw ConditioningError(
        "kernel_polynomial: residual " + std::to_string(residual) +
        " exceeds tolerance; constraint matrix is badly conditioned");

  const double normalized_sup = polynomial_sup(coeffs);
  return KernelPolynomial{std::move(coeffs), normalized_sup, residual};
}

double membership_defect(const BoundarySample& h,
                         const ConstraintSet& phi_set) {
  double d = 0.0;
  for (const Functional& phi : phi_set.functionals)
    d = std::max(d, std::abs(apply(phi, h)));
  return d;
}

}  // namespace hball
