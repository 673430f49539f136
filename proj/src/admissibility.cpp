#include "hball/admissibility.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

#include "hball/outer.hpp"

namespace hball {

namespace {

constexpr double kSandwichTol = 1e-9;
constexpr double kRhoRoundoff = 1e-12;

BoundarySample monomial_times(const BoundarySample& F, int N) {
  const std::vector<Complex>& z = cached_grid_points(F.grid.n_grid);
  std::vector<Complex> v(F.values);
  for (int j = 0; j < F.grid.n_grid; ++j) {
    Complex zp(1.0, 0.0);
    const Complex zj = z[static_cast<std::size_t>(j)];
    for (int k = 0; k < N; ++k) zp *= zj;
    v[static_cast<std::size_t>(j)] *= zp;
  }
  return BoundarySample(F.grid, std::move(v));
}

}  // namespace

MollifyParams theorem2_mollify_defaults(int n_grid) {
  const int w = std::max(16, n_grid / 64);
  return MollifyParams{w, w};
}

Theorem2Result theorem2_construction(int N, double eta, double gamma,
                                     const BoundaryGrid& grid,
                                     const std::optional<GridMask>& E,
                                     const std::optional<MollifyParams>& moll,
                                     double floor) {
  if (N < 1) throw ContractError("theorem2_construction: N must be >= 1");
  if (!(eta > 0.0 && eta < 1.0))
    throw ContractError("theorem2_construction: eta must lie in (0, 1)");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw ContractError("theorem2_construction: gamma must lie in (0, 1)");

  const int n = grid.n_grid;
  GridMask base = [&]() {
    if (E) {
      if (!(E->grid == grid))
        throw ContractError("theorem2_construction: E lives on another grid");
      if (std::abs(measure(*E) - gamma) > 1.0 / n + 1e-12)
        throw ContractError(
            "theorem2_construction: measure(E) must equal gamma within 1/n");
      return *E;
    }
    const int cells = static_cast<int>(std::ceil(gamma * n - 1e-12));
    std::vector<std::uint8_t> member(static_cast<std::size_t>(n), 0);
    for (int j = 0; j < cells; ++j) member[static_cast<std::size_t>(j)] = 1;
    return GridMask(grid, std::move(member));
  }();

  std::vector<double> u(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    u[static_cast<std::size_t>(j)] =
        base.member[static_cast<std::size_t>(j)] ? eta : 1.0;
  const MollifyParams mp = moll ? *moll : theorem2_mollify_defaults(n);
  const std::vector<double> um = mollify_modulus(u, mp);

  std::vector<Complex> umc(um.size());
  for (std::size_t i = 0; i < um.size(); ++i) umc[i] = Complex(um[i], 0.0);
  const OuterResult F = make_outer(BoundarySample(grid, std::move(umc)), floor);
  BoundarySample f = monomial_times(F.boundary, N);
  return Theorem2Result{fourier_constraints(N), std::move(f), std::move(base)};
}

double eps_upper(const BoundarySample& f, double tol_sup) {
  if (sup_norm(f) > 1.0 + tol_sup)
    throw ContractError("eps_upper: ||f|| exceeds 1 + tol_sup");
  const double rho = inf_modulus(f);
  const double gap = 1.0 - rho;
  if (gap <= kRhoRoundoff) return 0.0;  // inner at rounding resolution
  return std::sqrt(std::max(0.0, gap * (1.0 + rho)));
}

std::vector<double> default_eta_grid() {
  std::vector<double> rungs;
  rungs.reserve(33);
  for (int i = 0; i < 33; ++i) rungs.push_back(0.02 + 0.03 * i);
  return rungs;
}

std::pair<double, double> eps_lower(const BoundarySample& f, int N,
                                    const std::vector<double>& eta_grid) {
  if (N < 1) throw ContractError("eps_lower: N must be >= 1");
  double best = 0.0, best_eta = eta_grid.empty() ? 0.0 : eta_grid.front();
  for (double eta : eta_grid) {
    if (!(eta > 0.0 && eta < 1.0)) continue;
    const SublevelSet E = sublevel_set(f, eta);
    const double v = std::pow(kNazarovC * E.measure, N) * (1.0 - eta);
    if (v > best) {
      best = v;
      best_eta = eta;
    }
  }
  return {best, best_eta};
}

std::pair<double, double> eps_lower(const BoundarySample& f, int N) {
  return eps_lower(f, N, default_eta_grid());
}

ProbeResult probe_admissibility(const BoundarySample& f,
                                const ConstraintSet& phi_set, double eps,
                                double delta, int trials, std::uint64_t seed) {
  if (!(delta > 0.0))
    throw ContractError("probe_admissibility: delta must be positive");
  if (trials < 1)
    throw ContractError("probe_admissibility: trials must be >= 1");

  const int N = phi_set.size();
  const int M = N + 8;  // analytic monomial basis z^0 .. z^{M-1}
  const BoundaryGrid& grid = f.grid;
  const std::vector<Complex>& z = cached_grid_points(grid.n_grid);

  Eigen::MatrixXcd A(N, M);
  {
    std::vector<Complex> mono(static_cast<std::size_t>(grid.n_grid),
                              Complex(1.0, 0.0));
    for (int i = 0; i < M; ++i) {
      const BoundarySample s(grid, mono);
      for (int j = 0; j < N; ++j)
        A(j, i) = apply(phi_set.functionals[static_cast<std::size_t>(j)], s);
      for (int m = 0; m < grid.n_grid; ++m)
        mono[static_cast<std::size_t>(m)] *= z[static_cast<std::size_t>(m)];
    }
  }

  // Orthonormal basis of the numerical null space of A.
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  const int dim = M - rank;
  if (dim <= 0)
    throw DegenerateInputError(
        "probe_admissibility: constraints leave no kernel directions in the "
        "probe basis");
  const Eigen::MatrixXcd kernel_basis = svd.matrixV().rightCols(dim);

  const std::vector<Complex> ffine = oversampled_values(f);
  const double cap = 1.0 + delta;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double best = 0.0;
  for (int t = 0; t < trials; ++t) {
    Eigen::VectorXcd v(M);
    for (int i = 0; i < M; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    const Eigen::VectorXcd y = kernel_basis * (kernel_basis.adjoint() * v);
    if (y.norm() < 1e-12) continue;

    Spectrum sp(grid.n_grid);
    for (int i = 0; i < M; ++i) sp.set(i, y(i));
    const BoundarySample ys = from_spectrum(sp, grid);
    const std::vector<Complex> yfine = oversampled_values(ys);

    double ymax = 0.0;
    for (const Complex& c : yfine) ymax = std::max(ymax, std::abs(c));
    if (ymax <= 0.0) continue;

    auto feasible = [&](double t_) {
      double m = 0.0;
      for (std::size_t i = 0; i < ffine.size(); ++i) {
        const Complex ty = t_ * yfine[i];
        m = std::max(m, std::abs(ffine[i] + ty));
        m = std::max(m, std::abs(ffine[i] - ty));
        if (m > cap) return false;
      }
      return m <= cap;
    };

    double lo = 0.0, hi = (cap + sup_norm(f)) / ymax + 1.0;
    for (int it = 0; it < 40; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (feasible(mid))
        lo = mid;
      else
        hi = mid;
    }
    best = std::max(best, lo * ymax);
  }
  return ProbeResult{best, best >= eps};
}

SweepReport run_sweep(const SweepConfig& config) {
  SweepReport report;
  report.config = config;
  const BoundaryGrid grid(config.n_grid);

  std::uint64_t cell_index = 0;
  for (int N : config.N_values) {
    for (double eta : config.eta_values) {
      for (double gamma : config.gamma_values) {
        SweepRow row{};
        row.N = N;
        row.eta = eta;
        row.gamma = gamma;
        row.lower_paper = std::pow(kNazarovC * gamma, N) * (1.0 - eta);
        row.upper_paper = std::sqrt(std::max(0.0, 1.0 - eta * eta));
        row.probe_best = 0.0;
        row.violation_count = 0;
        try {
          const Theorem2Result cell =
              theorem2_construction(N, eta, gamma, grid);

          // Lower bound via the Nazarov sweep, with the row's eta as an
          // extra rung so the paper bound is certified at exactly eta.
          std::vector<double> rungs = default_eta_grid();
          rungs.push_back(eta);
          std::sort(rungs.begin(), rungs.end());
          row.nazarov_lower = eps_lower(cell.f, N, rungs).first;

          const double rho = inf_modulus(cell.f);
          const double upper = eps_upper(cell.f);

          row.witness_lower = 0.0;
          bool witness_all_ok = true;
          for (std::size_t d = 0; d < config.delta_ladder.size(); ++d) {
            const double delta = config.delta_ladder[d];
            const Witness w = strong_violation_witness(
                cell.f, cell.phi, eta, delta);
            const bool ok = std::max(w.norm_plus, w.norm_minus) <= 1.0 + delta &&
                            w.target_met;
            row.witness.push_back(WitnessCellStats{
                delta, w.norm_g, w.target_bound, w.norm_plus, w.norm_minus, ok});
            if (!ok) {
              ++row.violation_count;
              witness_all_ok = false;
            }
            const double cand = w.norm_g;
            row.witness_lower = d == 0 ? cand : std::min(row.witness_lower, cand);
          }
          if (!witness_all_ok) row.witness_lower = 0.0;

          if (row.witness_lower > row.nazarov_lower) {
            row.bracket.lower = row.witness_lower;
            row.bracket.lower_provenance = LowerProvenance::kWitnessEmpirical;
          } else if (row.nazarov_lower > 0.0) {
            row.bracket.lower = row.nazarov_lower;
            row.bracket.lower_provenance = LowerProvenance::kNazarovSweep;
          } else {
            row.bracket.lower = 0.0;
            row.bracket.lower_provenance = LowerProvenance::kNone;
          }
          if (rho > kRhoRoundoff) {
            row.bracket.upper = upper;
            row.bracket.upper_provenance = UpperProvenance::kParallelogram;
          } else {
            row.bracket.upper = 2.0;
            row.bracket.upper_provenance = UpperProvenance::kTrivialTwo;
          }

          if (!config.delta_ladder.empty() && config.trials_per_cell > 0) {
            row.probe_best =
                probe_admissibility(cell.f, cell.phi, row.bracket.lower,
                                    config.delta_ladder.back(),
                                    config.trials_per_cell,
                                    config.seed + 1000003 * cell_index)
                    .best_norm;
          }

          row.sandwich_ok =
              row.lower_paper <= row.nazarov_lower + kSandwichTol &&
              row.nazarov_lower <= upper + kSandwichTol &&
              upper <= row.upper_paper + kSandwichTol;
          if (!row.sandwich_ok) ++report.sandwich_violations;
          report.witness_violations += row.violation_count;
        } catch (const std::exception& e) {
          row.error = e.what();
          row.sandwich_ok = false;
          ++report.sandwich_violations;
        }
        report.rows.push_back(std::move(row));
        ++cell_index;
      }
    }
  }
  return report;
}

const char* to_string(LowerProvenance p) {
  switch (p) {
    case LowerProvenance::kNazarovSweep: return "NAZAROV_SWEEP";
    case LowerProvenance::kWitnessEmpirical: return "WITNESS_EMPIRICAL";
    case LowerProvenance::kNone: return "NONE";
  }
  return "NONE";
}

const char* to_string(UpperProvenance p) {
  switch (p) {
    case UpperProvenance::kParallelogram: return "PARALLELOGRAM";
    case UpperProvenance::kTrivialTwo: return "TRIVIAL_2";
  }
  return "TRIVIAL_2";
}

}  // namespace hball
