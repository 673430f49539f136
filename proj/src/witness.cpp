#include "hball/witness.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace hball {

namespace {

constexpr double kCoreSlack = 1e-9;

Witness finish_witness(const BoundarySample& f, const BoundarySample& g,
                       const ConstraintSet& phi_set, double target,
                       double core_measure, WitnessKind kind) {
  const double ng = sup_norm(g);
  Witness w{g,
            ng,
            sup_norm(f + g),
            sup_norm(f - g),
            membership_defect(g, phi_set),
            analyticity_defect(g),
            target,
            ng >= target - 1e-12,
            core_measure,
            kind};
  return w;
}

}  // namespace

Witness extreme_violation_witness(const BoundarySample& f,
                                  const ConstraintSet& phi_set, double floor,
                                  const WitnessOptions& opts) {
  if (!(floor > 0.0))
    throw ContractError("extreme_violation_witness: floor must be positive");
  if (sup_norm(f) > 1.0 + opts.tol_sup)
    throw ContractError("extreme_violation_witness: ||f|| exceeds 1 + tol_sup");

  const int n = f.grid.n_grid;
  std::vector<double> w(static_cast<std::size_t>(n));
  double wmax = 0.0;
  for (int j = 0; j < n; ++j) {
    w[static_cast<std::size_t>(j)] =
        std::max(0.0, 1.0 - std::abs(f.values[static_cast<std::size_t>(j)]));
    wmax = std::max(wmax, w[static_cast<std::size_t>(j)]);
  }
  if (wmax <= floor)
    throw DegenerateInputError(
        "witness construction requires a non-inner f with convergent log "
        "integral; 1 - |f| is below the floor everywhere");

  const std::vector<double> wm = mollify_modulus(w, opts.moll);
  std::vector<Complex> wmc(wm.size());
  for (std::size_t i = 0; i < wm.size(); ++i) wmc[i] = Complex(wm[i], 0.0);
  const OuterResult G = make_outer(BoundarySample(f.grid, std::move(wmc)), floor);
  const KernelPolynomial p =
      kernel_polynomial(G.boundary, phi_set, opts.tol_kernel);
  const BoundarySample g =
      G.boundary * polynomial_sample(p.coeffs, f.grid);
  return finish_witness(f, g, phi_set, 0.0, 0.0,
                        WitnessKind::kExtremeViolation);
}

Witness strong_violation_witness(const BoundarySample& f,
                                 const ConstraintSet& phi_set, double eta,
                                 double delta, const WitnessOptions& opts) {
  if (!(delta > 0.0))
    throw ContractError("strong_violation_witness: delta must be positive");
  if (opts.tol_sup > delta / 4.0)
    throw ContractError(
        "strong_violation_witness: tol_sup must not exceed delta/4");
  if (sup_norm(f) > 1.0 + opts.tol_sup)
    throw ContractError("strong_violation_witness: ||f|| exceeds 1 + tol_sup");

  const SublevelSet E = sublevel_set(f, eta);
  if (E.measure <= 0.0)
    throw DegenerateInputError("f is numerically inner at level eta");

  const int n = f.grid.n_grid;
  const double high = 1.0 - eta, low = delta / 2.0;
  std::vector<double> u(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    u[static_cast<std::size_t>(j)] =
        E.mask.member[static_cast<std::size_t>(j)] ? high : low;
  const std::vector<double> um = mollify_modulus(u, opts.moll);

  // Level core: where the mollified modulus still sits at the E-side level.
  std::vector<std::uint8_t> core(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j)
    core[static_cast<std::size_t>(j)] =
        um[static_cast<std::size_t>(j)] >= high * (1.0 - kCoreSlack) ? 1 : 0;
  GridMask core_mask(f.grid, std::move(core));
  const double m_core = measure(core_mask);
  if (m_core <= 0.0)
    throw DegenerateInputError(
        "sublevel set vanishes under the mollification margin; reduce "
        "mollification width or refine the grid");

  std::vector<Complex> umc(um.size());
  for (std::size_t i = 0; i < um.size(); ++i) umc[i] = Complex(um[i], 0.0);
  const OuterResult G = make_outer(BoundarySample(f.grid, std::move(umc)),
                                   opts.floor);
  const KernelPolynomial p =
      kernel_polynomial(G.boundary, phi_set, opts.tol_kernel);
  const BoundarySample g =
      G.boundary * polynomial_sample(p.coeffs, f.grid);

  const double C = restricted_sup_constant(core_mask, phi_set.size(),
                                           opts.constant_method, opts.seed);
  const double eps0 = (1.0 - eta) / C;
  return finish_witness(f, g, phi_set, eps0, m_core,
                        WitnessKind::kStrongViolation);
}

double restricted_sup_constant(const GridMask& E, int N, ConstantMethod method,
                               std::uint64_t seed) {
  const double m = measure(E);
  if (!(m > 0.0))
    throw ContractError("restricted_sup_constant: set has measure zero");
  if (N < 0) throw ContractError("restricted_sup_constant: N must be >= 0");
  if (method == ConstantMethod::kNazarov)
    return std::pow(1.0 / (kNazarovC * m), N);

  // Empirical lower bound: maximize ||q|| / sup_E |q| over deg-<=N
  // polynomials by multi-start coordinate ascent on the coefficients.
  const int n = E.grid.n_grid;
  const std::vector<Complex>& z = cached_grid_points(n);
  std::vector<Complex> enodes;
  for (int j = 0; j < n; ++j)
    if (E.member[static_cast<std::size_t>(j)])
      enodes.push_back(z[static_cast<std::size_t>(j)]);

  auto ratio = [&](const std::vector<Complex>& coeffs) {
    double supE = 0.0;
    for (const Complex& zz : enodes) {
      Complex acc(0.0, 0.0);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * zz + *it;
      supE = std::max(supE, std::abs(acc));
    }
    if (supE <= 0.0) return 0.0;
    return polynomial_sup(coeffs) / supE;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 1.0;  // constants give ratio 1
  for (int start = 0; start < 32; ++start) {
    std::vector<Complex> c(static_cast<std::size_t>(N + 1));
    for (Complex& v : c) v = Complex(gauss(rng), gauss(rng));
    double cur = ratio(c);
    double step = 0.5;
    for (int sweep = 0; sweep < 200; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < c.size(); ++i) {
        for (const Complex d : {Complex(step, 0.0), Complex(-step, 0.0),
                                Complex(0.0, step), Complex(0.0, -step)}) {
          std::vector<Complex> trial = c;
          trial[i] += d;
          const double r = ratio(trial);
          if (r > cur) {
            cur = r;
            c = std::move(trial);
            improved = true;
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < 1e-8) break;
      }
    }
    best = std::max(best, cur);
  }
  return best;
}

TNReport turan_nazarov_check(const Spectrum& q, const GridMask& E) {
  const double m = measure(E);
  if (!(m > 0.0))
    throw ContractError("turan_nazarov_check: set has measure zero");
  int n_terms = 0;
  for (const Complex& c : q.coef)
    if (c != Complex(0.0, 0.0)) ++n_terms;
  if (n_terms == 0)
    throw ContractError("turan_nazarov_check: q has no nonzero terms");

  const BoundarySample qs = from_spectrum(q, E.grid);
  const double lhs = sup_norm(qs);
  double rsup = 0.0;
  for (int j = 0; j < E.grid.n_grid; ++j)
    if (E.member[static_cast<std::size_t>(j)])
      rsup = std::max(rsup, std::abs(qs.values[static_cast<std::size_t>(j)]));
  const double bound = std::pow(1.0 / (kNazarovC * m), n_terms - 1) * rsup;
  return TNReport{n_terms, m, lhs, rsup, bound, kNazarovC};
}

}  // namespace hball
