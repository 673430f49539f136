#include <doctest.h>

#include <cmath>
#include <random>

#include "hball/admissibility.hpp"
#include "hball/functions.hpp"
#include "hball/outer.hpp"
#include "hball/serialize.hpp"

using namespace hball;

TEST_CASE("theorem2_construction basics") {
  BoundaryGrid grid(4096);
  SUBCASE("N = 1, eta = 0.5, gamma = 0.5") {
    Theorem2Result r = theorem2_construction(1, 0.5, 0.5, grid);
    CHECK(membership_defect(r.f, r.phi) <= 1e-9);
    CHECK(std::abs(sup_norm(r.f) - 1.0) <= 1e-6);
    CHECK(inf_modulus(r.f) >= 0.5 - 1e-9);
    CHECK(inner_defect(r.f) == doctest::Approx(0.5).epsilon(1e-9));
    const SublevelSet E = sublevel_set(r.f, 0.5);
    const double margin =
        2.0 * theorem2_mollify_defaults(4096).erode_cells / 4096.0 + 1.0 / 4096.0;
    CHECK(E.measure >= 0.5);
    CHECK(E.measure <= 0.5 + margin);
  }
  SUBCASE("N = 3 kills the first three coefficients") {
    Theorem2Result r = theorem2_construction(3, 0.3, 0.25, grid);
    Spectrum sp = to_spectrum(r.f);
    for (int k : {0, 1, 2}) CHECK(std::abs(sp.at(k)) <= 1e-9);
  }
  SUBCASE("exposed mass reflects the high-level region") {
    Theorem2Result r = theorem2_construction(1, 0.9, 0.5, grid);
    const MollifyParams mp = theorem2_mollify_defaults(4096);
    const double lost = 2.0 * (mp.erode_cells + mp.smooth_cells) / 4096.0;
    const double em = exposed_mass(r.f, 1e-9);
    CHECK(em >= 0.5 - lost - 1e-9);
    CHECK(em <= 0.5 + 1.0 / 4096.0);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(theorem2_construction(0, 0.5, 0.5, grid), ContractError);
    CHECK_THROWS_AS(theorem2_construction(1, 0.0, 0.5, grid), ContractError);
    CHECK_THROWS_AS(theorem2_construction(1, 0.5, 1.0, grid), ContractError);
  }
  SUBCASE("custom E must match gamma") {
    std::vector<std::uint8_t> m(4096, 0);
    for (int j = 0; j < 1024; ++j) m[static_cast<std::size_t>(j)] = 1;
    GridMask E(grid, m);
    CHECK_NOTHROW(theorem2_construction(1, 0.5, 0.25, grid, E));
    CHECK_THROWS_AS(theorem2_construction(1, 0.5, 0.7, grid, E),
                    ContractError);
  }
}

TEST_CASE("eps_upper") {
  BoundaryGrid grid(1024);
  SUBCASE("inner functions give exactly zero") {
    CHECK(eps_upper(monomial_sample(grid, 3)) == 0.0);
    CHECK(eps_upper(blaschke_product(grid, {Complex(0.4, 0.2)})) == 0.0);
  }
  SUBCASE("theorem 2 construction gives sqrt(1 - eta^2)") {
    BoundaryGrid big(4096);
    for (double eta : {0.3, 0.5, 0.8}) {
      Theorem2Result r = theorem2_construction(1, eta, 0.5, big);
      CHECK(std::abs(eps_upper(r.f) - std::sqrt(1.0 - eta * eta)) < 1e-9);
    }
  }
  SUBCASE("zero on the grid gives 1") {
    // (1+z)/2 vanishes at the node theta = pi, so rho = 0.
    BoundarySample f = 0.5 * (constant_sample(grid, Complex(1, 0)) +
                              monomial_sample(grid, 1));
    CHECK(eps_upper(f) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("antitone under pointwise modulus increase") {
    BoundarySample w1 = random_smooth_modulus(grid, 10, 0.5, 3);
    // |f2| = 0.8 |f1| pointwise, so eps_upper(f1) <= eps_upper(f2).
    OuterResult f1 = make_outer(w1);
    BoundarySample big = 0.5 * f1.boundary;
    BoundarySample small = 0.8 * big;
    CHECK(eps_upper(big) <= eps_upper(small) + 1e-12);
  }
}

TEST_CASE("eps_lower") {
  BoundaryGrid grid(4096);
  SUBCASE("inner functions give zero") {
    auto [v, eta] = eps_lower(monomial_sample(grid, 1), 2);
    CHECK(v == 0.0);
  }
  SUBCASE("theorem 2 construction beats the paper bound at its own rung") {
    for (int N : {1, 2}) {
      const double eta = 0.5, gamma = 0.5;
      Theorem2Result r = theorem2_construction(N, eta, gamma, grid);
      std::vector<double> rungs = default_eta_grid();
      rungs.push_back(eta);
      auto [v, best_eta] = eps_lower(r.f, N, rungs);
      CHECK(v >= std::pow(kNazarovC * gamma, N) * (1.0 - eta) - 1e-12);
    }
  }
  SUBCASE("full-measure sublevel set at a single rung") {
    // |f| = 0.3 everywhere; at the rung eta = 0.5 the bound is c * 0.5.
    BoundarySample f = 0.3 * monomial_sample(grid, 1);
    auto [v, eta] = eps_lower(f, 1, {0.5});
    CHECK(v == doctest::Approx(0.036116479680966306).epsilon(1e-12));
    CHECK(eta == 0.5);
  }
  SUBCASE("monotone under pointwise modulus decrease") {
    Theorem2Result r1 = theorem2_construction(1, 0.5, 0.5, grid);
    std::vector<Complex> v(r1.f.values);
    for (Complex& z : v) z *= 0.9;
    auto [lo1, e1] = eps_lower(r1.f, 1);
    auto [lo2, e2] = eps_lower(BoundarySample(grid, v), 1);
    CHECK(lo2 >= lo1 - 1e-12);
  }
}

TEST_CASE("probe_admissibility") {
  BoundaryGrid grid(2048);
  SUBCASE("inner f obeys the parallelogram cap") {
    BoundarySample f = blaschke_product(grid, {Complex(0.5, 0)});
    const double delta = 1e-3;
    ProbeResult pr =
        probe_admissibility(f, fourier_constraints(2), 1.0, delta, 20, 7);
    CHECK(pr.best_norm <= std::sqrt((1 + delta) * (1 + delta) - 1.0) + 1e-9);
    CHECK(pr.best_norm <= 0.05);
    CHECK_FALSE(pr.certified_not_admissible);
  }
  SUBCASE("never exceeds the pointwise parallelogram bound") {
    Theorem2Result r = theorem2_construction(1, 0.5, 0.5, grid);
    const double delta = 0.01;
    const double rho = inf_modulus(r.f);
    ProbeResult pr = probe_admissibility(r.f, r.phi, 10.0, delta, 50, 3);
    CHECK(pr.best_norm <=
          std::sqrt((1 + delta) * (1 + delta) - rho * rho) + 1e-9);
  }
  SUBCASE("never certifies below the theorem upper bound") {
    Theorem2Result r = theorem2_construction(1, 0.5, 0.5, grid);
    const double eps = eps_upper(r.f) + 0.01;
    ProbeResult pr = probe_admissibility(r.f, r.phi, eps, 0.01, 50, 11);
    CHECK_FALSE(pr.certified_not_admissible);
  }
  SUBCASE("deterministic in the seed") {
    Theorem2Result r = theorem2_construction(1, 0.5, 0.5, grid);
    ProbeResult a = probe_admissibility(r.f, r.phi, 0.1, 0.01, 5, 42);
    ProbeResult b = probe_admissibility(r.f, r.phi, 0.1, 0.01, 5, 42);
    CHECK(a.best_norm == b.best_norm);
  }
}

TEST_CASE("run_sweep") {
  SUBCASE("single cell") {
    SweepConfig cfg;
    cfg.N_values = {1};
    cfg.eta_values = {0.5};
    cfg.gamma_values = {0.5};
    cfg.delta_ladder = {0.1, 0.01};
    cfg.n_grid = 4096;
    cfg.trials_per_cell = 2;
    SweepReport rep = run_sweep(cfg);
    REQUIRE(rep.rows.size() == 1);
    const SweepRow& row = rep.rows[0];
    CHECK(row.error.empty());
    CHECK(row.sandwich_ok);
    CHECK(row.lower_paper == doctest::Approx(0.018058239840483152));
    CHECK(row.bracket.lower >= row.lower_paper - 1e-9);
    CHECK(row.bracket.lower <= row.bracket.upper);
    CHECK(rep.sandwich_violations == 0);
    CHECK(rep.witness_violations == 0);
  }
  SUBCASE("empty grid gives empty report") {
    SweepConfig cfg;
    cfg.N_values.clear();
    SweepReport rep = run_sweep(cfg);
    CHECK(rep.rows.empty());
  }
  SUBCASE("bit-identical JSON for identical config") {
    SweepConfig cfg;
    cfg.N_values = {1, 2};
    cfg.eta_values = {0.5};
    cfg.gamma_values = {0.25};
    cfg.delta_ladder = {0.1};
    cfg.n_grid = 1024;
    cfg.trials_per_cell = 2;
    const std::string a = to_json(run_sweep(cfg)).dump(2);
    const std::string b = to_json(run_sweep(cfg)).dump(2);
    CHECK(a == b);
  }
}

TEST_CASE("bracket ordering across a corpus") {
  BoundaryGrid grid(2048);
  std::vector<BoundarySample> corpus;
  corpus.push_back(theorem2_construction(1, 0.5, 0.5, grid).f);
  corpus.push_back(theorem2_construction(2, 0.8, 0.25, grid).f);
  corpus.push_back(blaschke_product(grid, {Complex(0.3, 0.1)}));
  corpus.push_back(0.5 * (constant_sample(grid, Complex(1, 0)) +
                          monomial_sample(grid, 1)));
  for (const BoundarySample& f : corpus) {
    for (int N : {1, 3}) {
      auto [lo, eta] = eps_lower(f, N);
      CHECK(lo <= eps_upper(f) + 1e-9);
    }
  }
}

TEST_CASE("sweep config json round trip and validation") {
  SweepConfig cfg;
  cfg.n_grid = 2048;
  cfg.seed = 99;
  Json j = to_json(cfg);
  SweepConfig back = sweep_config_from_json(j);
  CHECK(back.n_grid == 2048);
  CHECK(back.seed == 99);
  CHECK(back.eta_values == cfg.eta_values);

  Json bad = j;
  bad["eta_values"] = {0.5, 1.5};
  CHECK_THROWS_AS(sweep_config_from_json(bad), ContractError);
  Json bad2 = j;
  bad2["delta_ladder"] = {0.01, 0.1};
  CHECK_THROWS_AS(sweep_config_from_json(bad2), ContractError);
}
