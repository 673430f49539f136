#pragma once

#include <vector>

#include "hball/circle.hpp"

namespace hball {

inline constexpr double kDefaultFloor = 1e-9;
inline constexpr double kDefaultTolSup = 1e-6;
inline constexpr double kTolStab = 1e-3;

/// Boundary trace of the outer function with prescribed modulus, together
/// with the achieved modulus and analyticity errors.
struct OuterResult {
  BoundarySample boundary;
  double modulus_error;  // sup over nodes of ||G| - max(w, floor)|
  double analyticity;    // analyticity_defect of boundary
};

/// G = exp(L + i*conj(L)) with L = log(max(w, floor)). The analytic
/// completion has positive value at the origin (arg G(0) = 0).
OuterResult make_outer(const BoundarySample& modulus,
                       double floor = kDefaultFloor);

/// One-sided smoothing: circular min-filter erosion followed by convolution
/// with a C^4 smoothstep kernel. The result never exceeds the input, so
/// every inequality of the form |G| <= w survives mollification.
struct MollifyParams {
  int erode_cells = 8;
  int smooth_cells = 8;
};

BoundarySample mollify_modulus(const BoundarySample& w, const MollifyParams& p);
std::vector<double> mollify_modulus(const std::vector<double>& w,
                                    const MollifyParams& p);

enum class ExtremalityVerdict { kExtremeLikely, kNotExtreme, kInconclusive };

/// Floor-ladder diagnostic for the divergence of int log(1 - |f|) dm.
/// A divergent integral cannot be certified from samples; the report exposes
/// I(tau) = int log(max(1 - |f|, tau)) dm for each ladder rung and a verdict.
struct ExtremalityReport {
  std::vector<double> floor_ladder;
  std::vector<double> integrals;
  double slope;  // least-squares slope of I(tau) vs log(tau), last 4 rungs
  ExtremalityVerdict verdict;
};

std::vector<double> default_floor_ladder();  // 2^-4, 2^-8, ..., 2^-40

ExtremalityReport extremality_test(const BoundarySample& f,
                                   const std::vector<double>& ladder,
                                   double tol_sup = kDefaultTolSup);
ExtremalityReport extremality_test(const BoundarySample& f);

/// E_eta(f) = {zeta : |f(zeta)| <= eta} at grid resolution.
struct SublevelSet {
  double eta;
  GridMask mask;
  double measure;
};

SublevelSet sublevel_set(const BoundarySample& f, double eta);

/// sup over nodes of ||f| - 1|; f counts as inner at tolerance tol iff <= tol.
double inner_defect(const BoundarySample& f);

/// Measure of {||f| - 1| <= tol}: Amar-Lederer exposed-point surrogate.
double exposed_mass(const BoundarySample& f, double tol,
                    double tol_sup = kDefaultTolSup);

const char* to_string(ExtremalityVerdict v);

}  // namespace hball
