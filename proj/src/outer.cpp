#include "hball/outer.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace hball {

namespace {

// Rounding guard for level-set comparisons: exp(log(eta)) may land one ulp
// off eta and must still count as "<= eta".
constexpr double kLevelSlack = 1e-12;

std::vector<double> real_parts_checked(const BoundarySample& w,
                                       const char* who) {
  double scale = 1.0;
  for (const Complex& z : w.values) scale = std::max(scale, std::abs(z));
  std::vector<double> out(w.values.size());
  for (std::size_t i = 0; i < w.values.size(); ++i) {
    const Complex z = w.values[i];
    if (std::abs(z.imag()) > 1e-12 * scale)
      throw ContractError(std::string(who) + " requires a real-valued modulus");
    if (z.real() < -1e-12 * scale)
      throw ContractError(std::string(who) + " requires a nonnegative modulus");
    out[i] = std::max(0.0, z.real());
  }
  return out;
}

// Circular sliding-window minimum over radius r (monotonic deque).
std::vector<double> circular_erode(const std::vector<double>& w, int r) {
  const int n = static_cast<int>(w.size());
  if (r <= 0) return w;
  std::vector<double> out(w.size());
  std::deque<int> q;  // indices into the extended array, values increasing
  auto val = [&](int i) { return w[static_cast<std::size_t>(((i % n) + n) % n)]; };
  // Window for output j covers extended indices [j - r, j + r].
  for (int i = -r; i < n + r; ++i) {
    while (!q.empty() && val(q.back()) >= val(i)) q.pop_back();
    q.push_back(i);
    const int j = i - r;  // window [j-r, j+r] is complete once i == j + r
    if (j >= 0 && j < n) {
      while (q.front() < j - r) q.pop_front();
      out[static_cast<std::size_t>(j)] = val(q.front());
    }
  }
  return out;
}

double smoothstep9(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return ((((70.0 * t - 315.0) * t + 540.0) * t - 420.0) * t + 126.0) * t * t *
         t * t * t;
}

// Symmetric taps that sum to 1 exactly (telescoping differences of the
// smoothstep CDF); 2h+1 taps.
std::vector<double> kernel_taps(int h) {
  std::vector<double> taps(static_cast<std::size_t>(2 * h + 1));
  double prev = 0.0;
  for (int i = 0; i < 2 * h + 1; ++i) {
    const double next = smoothstep9(static_cast<double>(i + 1) / (2 * h + 1));
    taps[static_cast<std::size_t>(i)] = next - prev;
    prev = next;
  }
  return taps;
}

}  // namespace

std::vector<double> mollify_modulus(const std::vector<double>& w,
                                    const MollifyParams& p) {
  if (p.erode_cells < 0 || p.smooth_cells < 0)
    throw ContractError("mollification widths must be nonnegative");
  // One-sidedness needs the erosion window to cover the smoothing support:
  // then every smoothed value is a convex combination of window minima that
  // all sit at or below the original value.
  if (p.smooth_cells > p.erode_cells)
    throw ContractError(
        "mollify_modulus: smooth_cells must not exceed erode_cells");
  std::vector<double> er = circular_erode(w, p.erode_cells);
  const int h = p.smooth_cells;
  if (h == 0) return er;
  const std::vector<double> taps = kernel_taps(h);
  const int n = static_cast<int>(w.size());
  std::vector<double> out(w.size(), 0.0);
  for (int d = -h; d <= h; ++d) {
    const double k = taps[static_cast<std::size_t>(d + h)];
    for (int j = 0; j < n; ++j)
      out[static_cast<std::size_t>(j)] +=
          k * er[static_cast<std::size_t>(((j + d) % n + n) % n)];
  }
  return out;
}

BoundarySample mollify_modulus(const BoundarySample& w,
                               const MollifyParams& p) {
  const std::vector<double> in = real_parts_checked(w, "mollify_modulus");
  const std::vector<double> out = mollify_modulus(in, p);
  std::vector<Complex> v(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) v[i] = Complex(out[i], 0.0);
  return BoundarySample(w.grid, std::move(v));
}

OuterResult make_outer(const BoundarySample& modulus, double floor) {
  if (!(floor > 0.0)) throw ContractError("make_outer: floor must be positive");
  const std::vector<double> w = real_parts_checked(modulus, "make_outer");
  const int n = modulus.grid.n_grid;

  std::vector<Complex> logs(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    logs[static_cast<std::size_t>(j)] =
        Complex(std::log(std::max(w[static_cast<std::size_t>(j)], floor)), 0.0);
  const BoundarySample L(modulus.grid, logs);
  const BoundarySample Lt = conjugate_function(L);

  std::vector<Complex> b(static_cast<std::size_t>(n));
  double moderr = 0.0;
  for (int j = 0; j < n; ++j) {
    const std::size_t i = static_cast<std::size_t>(j);
    b[i] = std::exp(Complex(L.values[i].real(), Lt.values[i].real()));
    moderr = std::max(moderr,
                      std::abs(std::abs(b[i]) - std::max(w[i], floor)));
  }
  BoundarySample boundary(modulus.grid, std::move(b));
  const double defect = analyticity_defect(boundary);
  return OuterResult{std::move(boundary), moderr, defect};
}

std::vector<double> default_floor_ladder() {
  std::vector<double> ladder;
  for (int e = 4; e <= 40; e += 4) ladder.push_back(std::ldexp(1.0, -e));
  return ladder;
}

ExtremalityReport extremality_test(const BoundarySample& f,
                                   const std::vector<double>& ladder,
                                   double tol_sup) {
  if (ladder.empty()) throw ContractError("extremality_test: empty ladder");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    if (!(ladder[i] > 0.0) || (i > 0 && ladder[i] >= ladder[i - 1]))
      throw ContractError(
          "extremality_test: ladder must be strictly decreasing and positive");
  }
  if (sup_norm(f) > 1.0 + tol_sup)
    throw ContractError("extremality_test: ||f|| exceeds 1 + tol_sup");

  const int n = f.grid.n_grid;
  std::vector<double> oneminus(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    oneminus[static_cast<std::size_t>(j)] =
        1.0 - std::abs(f.values[static_cast<std::size_t>(j)]);

  ExtremalityReport rep;
  rep.floor_ladder = ladder;
  rep.integrals.reserve(ladder.size());
  for (double tau : ladder) {
    double acc = 0.0;
    for (double v : oneminus) acc += std::log(std::max(v, tau));
    rep.integrals.push_back(acc / n);
  }

  // Least-squares slope of I vs log(tau) over the last (up to) 4 rungs.
  const std::size_t m = rep.integrals.size();
  const std::size_t fit = std::min<std::size_t>(4, m);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = m - fit; i < m; ++i) {
    const double x = std::log(ladder[i]);
    const double y = rep.integrals[i];
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  const double denom = fit * sxx - sx * sx;
  rep.slope = denom != 0.0 ? (fit * sxy - sx * sy) / denom : 0.0;

  if (m < 2) {
    rep.verdict = ExtremalityVerdict::kInconclusive;
    return rep;
  }
  const double last_drop = rep.integrals[m - 2] - rep.integrals[m - 1];
  bool sustained = m >= 4;
  for (std::size_t i = m - std::min<std::size_t>(3, m - 1); i < m && sustained; ++i)
    sustained = rep.integrals[i - 1] - rep.integrals[i] >= kTolStab;
  if (last_drop < kTolStab)
    rep.verdict = ExtremalityVerdict::kNotExtreme;
  else if (sustained && rep.slope >= 0.05)
    rep.verdict = ExtremalityVerdict::kExtremeLikely;
  else
    rep.verdict = ExtremalityVerdict::kInconclusive;
  return rep;
}

ExtremalityReport extremality_test(const BoundarySample& f) {
  return extremality_test(f, default_floor_ladder());
}

SublevelSet sublevel_set(const BoundarySample& f, double eta) {
  if (!(eta > 0.0 && eta < 1.0))
    throw ContractError("sublevel_set: eta must lie in (0, 1)");
  const int n = f.grid.n_grid;
  std::vector<std::uint8_t> member(static_cast<std::size_t>(n), 0);
  const double cap = eta * (1.0 + kLevelSlack);
  for (int j = 0; j < n; ++j)
    member[static_cast<std::size_t>(j)] =
        std::abs(f.values[static_cast<std::size_t>(j)]) <= cap ? 1 : 0;
  GridMask mask(f.grid, std::move(member));
  const double m = measure(mask);
  return SublevelSet{eta, std::move(mask), m};
}

double inner_defect(const BoundarySample& f) {
  double d = 0.0;
  for (const Complex& z : f.values)
    d = std::max(d, std::abs(std::abs(z) - 1.0));
  return d;
}

double exposed_mass(const BoundarySample& f, double tol, double tol_sup) {
  if (!(tol > 0.0)) throw ContractError("exposed_mass: tol must be positive");
  if (sup_norm(f) > 1.0 + tol_sup)
    throw ContractError("exposed_mass: ||f|| exceeds 1 + tol_sup");
  const int n = f.grid.n_grid;
  std::size_t c = 0;
  for (const Complex& z : f.values)
    if (std::abs(std::abs(z) - 1.0) <= tol) ++c;
  return static_cast<double>(c) / n;
}

const char* to_string(ExtremalityVerdict v) {
  switch (v) {
    case ExtremalityVerdict::kExtremeLikely: return "EXTREME_LIKELY";
    case ExtremalityVerdict::kNotExtreme: return "NOT_EXTREME";
    case ExtremalityVerdict::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

}  // namespace hball
