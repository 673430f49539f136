#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hball/circle.hpp"
#include "hball/constraints.hpp"
#include "hball/witness.hpp"

namespace hball {

enum class LowerProvenance { kNazarovSweep, kWitnessEmpirical, kNone };
enum class UpperProvenance { kParallelogram, kTrivialTwo };

/// Two-sided bracket for eps_Phi(f) with provenance on both ends.
struct AdmissibilityBracket {
  double lower = 0.0;
  double upper = 2.0;
  LowerProvenance lower_provenance = LowerProvenance::kNone;
  UpperProvenance upper_provenance = UpperProvenance::kTrivialTwo;
};

/// The Theorem 2 extremal pair: Phi the first N Fourier coefficients and
/// f = zeta^N * F with F outer of (mollified) two-level modulus
/// eta on E, 1 off E.
struct Theorem2Result {
  ConstraintSet phi;
  BoundarySample f;
  GridMask E;
};

MollifyParams theorem2_mollify_defaults(int n_grid);

Theorem2Result theorem2_construction(
    int N, double eta, double gamma, const BoundaryGrid& grid,
    const std::optional<GridMask>& E = std::nullopt,
    const std::optional<MollifyParams>& moll = std::nullopt,
    double floor = kDefaultFloor);

/// sqrt(1 - rho^2) with rho the oversampled-grid min of |f|; every
/// eps above this value is admissible for f in any H^infty_Phi, by the
/// pointwise parallelogram bound. Values of 1 - rho below 1e-12 are treated
/// as rounding and give 0.
double eps_upper(const BoundarySample& f, double tol_sup = kDefaultTolSup);

std::vector<double> default_eta_grid();  // 33 rungs across [0.02, 0.98]

/// Best certified lower bound max_eta (c m(E_eta(f)))^N (1 - eta) over the
/// rung grid; returns (value, eta attaining it).
std::pair<double, double> eps_lower(const BoundarySample& f, int N,
                                    const std::vector<double>& eta_grid);
std::pair<double, double> eps_lower(const BoundarySample& f, int N);

struct ProbeResult {
  double best_norm = 0.0;        // largest ||t y|| over the trials
  bool certified_not_admissible = false;  // best_norm >= eps
};

/// Randomized falsification: random analytic candidates projected onto the
/// constraint null space, each rescaled by bisection to the largest t with
/// max ||f +- t y|| <= 1 + delta.
ProbeResult probe_admissibility(const BoundarySample& f,
                                const ConstraintSet& phi_set, double eps,
                                double delta, int trials, std::uint64_t seed);

struct SweepConfig {
  std::vector<int> N_values{1, 2, 3};
  std::vector<double> eta_values{0.3, 0.5, 0.8};
  std::vector<double> gamma_values{0.25, 0.5, 0.75};
  std::vector<double> delta_ladder{0.1, 0.03, 0.01, 0.003, 0.001};
  int n_grid = 4096;
  std::uint64_t seed = 1;
  int trials_per_cell = 4;
};

struct WitnessCellStats {
  double delta;
  double norm_g;
  double target;
  double norm_plus;
  double norm_minus;
  bool ok;  // norms <= 1 + delta and norm_g >= target
};

struct SweepRow {
  int N;
  double eta;
  double gamma;
  double lower_paper;  // (c gamma)^N (1 - eta)
  double upper_paper;  // sqrt(1 - eta^2)
  double nazarov_lower;
  double witness_lower;
  AdmissibilityBracket bracket;
  bool sandwich_ok;
  std::vector<WitnessCellStats> witness;
  double probe_best;
  int violation_count;
  std::string error;  // nonempty if the cell failed to build
};

struct SweepReport {
  SweepConfig config;
  std::vector<SweepRow> rows;
  int sandwich_violations = 0;
  int witness_violations = 0;
};

/// Runs the full (N, eta, gamma) grid; deterministic given config and seed.
SweepReport run_sweep(const SweepConfig& config);

const char* to_string(LowerProvenance p);
const char* to_string(UpperProvenance p);

}  // namespace hball
