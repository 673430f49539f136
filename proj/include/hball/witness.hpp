#pragma once

#include <cstdint>
#include <numbers>

#include "hball/circle.hpp"
#include "hball/constraints.hpp"
#include "hball/outer.hpp"

namespace hball {

/// Nazarov's eligible constant in the Turan-Nazarov inequality.
inline constexpr double kNazarovC =
    std::numbers::pi / (16.0 * std::numbers::e);

inline constexpr double kDefaultTolAnalytic = 1e-4;

enum class WitnessKind { kExtremeViolation, kStrongViolation };

/// A perturbation g in H^infty_Phi certifying a failure of (strong)
/// extremality, with all measured norms and membership defects attached.
struct Witness {
  BoundarySample g;
  double norm_g;
  double norm_plus;   // ||f + g||
  double norm_minus;  // ||f - g||
  double membership;
  double analyticity;
  double target_bound;  // bound ||g|| must beat (0 for extreme violations)
  bool target_met;
  double core_measure;  // measure of the level core behind target_bound
  WitnessKind kind;
};

enum class ConstantMethod { kNazarov, kEmpirical };

struct WitnessOptions {
  MollifyParams moll{16, 16};
  double floor = kDefaultFloor;
  double tol_sup = kDefaultTolSup;
  double tol_kernel = kDefaultTolKernel;
  ConstantMethod constant_method = ConstantMethod::kNazarov;
  std::uint64_t seed = 20240801;  // only used by the empirical constant
};

/// Theorem 1(a) construction: G outer with (mollified) modulus 1 - |f|,
/// p the kernel polynomial, g = G p; then ||f +- g|| <= 1 at grid resolution.
Witness extreme_violation_witness(const BoundarySample& f,
                                  const ConstraintSet& phi_set,
                                  double floor = kDefaultFloor,
                                  const WitnessOptions& opts = {});

/// Theorem 1(b) construction: with E the eta-sublevel set of f, G outer with
/// (mollified) modulus (1-eta) on E and delta/2 off E, g = G p. Guarantees
/// max ||f +- g|| <= 1 + delta and targets ||g|| >= (1-eta)/C_{core,N}.
Witness strong_violation_witness(const BoundarySample& f,
                                 const ConstraintSet& phi_set, double eta,
                                 double delta,
                                 const WitnessOptions& opts = {
                                     .moll = MollifyParams{8, 8}});

/// Smallest-known constant C with ||q|| <= C sup_E |q| for deg-<=N
/// polynomials. kNazarov: (1/(c m(E)))^N from the Turan-Nazarov inequality
/// (n = N+1 terms). kEmpirical: multi-start coordinate ascent maximizing the
/// ratio; a lower bound on the true best constant.
double restricted_sup_constant(const GridMask& E, int N, ConstantMethod method,
                               std::uint64_t seed = 20240801);

/// Both sides of the Turan-Nazarov inequality for one sparse q and one set.
struct TNReport {
  int n_terms;
  double set_measure;
  double lhs;             // ||q|| over the oversampled grid
  double restricted_sup;  // sup over the member nodes
  double bound;           // (1/(c m(E)))^{n-1} * restricted_sup
  double c_used;
};

TNReport turan_nazarov_check(const Spectrum& q, const GridMask& E);

}  // namespace hball
