#include "hball/serialize.hpp"

#include <cstdio>

namespace hball {

namespace {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

Json to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const BoundarySample& s) {
  Json vals = Json::array();
  for (const Complex& v : s.values) vals.push_back(to_json(v));
  return Json{{"n_grid", s.grid.n_grid},
              {"oversample", s.grid.oversample},
              {"values", std::move(vals)}};
}

Json to_json(const Spectrum& sp) {
  Json terms = Json::array();
  const int half = sp.n_grid / 2;
  for (int k = -half; k < half; ++k) {
    const Complex a = sp.at(k);
    if (a != Complex(0.0, 0.0))
      terms.push_back(Json{{"k", k}, {"re", a.real()}, {"im", a.imag()}});
  }
  return Json{{"n_grid", sp.n_grid}, {"terms", std::move(terms)}};
}

Json to_json(const Functional& phi) {
  Json terms = Json::array();
  for (const auto& [k, a] : phi.density)
    terms.push_back(Json{{"k", k}, {"re", a.real()}, {"im", a.imag()}});
  return Json{{"density", std::move(terms)}};
}

Json to_json(const ConstraintSet& set) {
  Json fs = Json::array();
  for (const Functional& f : set.functionals) fs.push_back(to_json(f));
  return Json{{"functionals", std::move(fs)}};
}

Json to_json(const KernelPolynomial& p) {
  Json cs = Json::array();
  for (const Complex& c : p.coeffs) cs.push_back(to_json(c));
  return Json{{"coeffs", std::move(cs)},
              {"sup_norm", p.sup_norm},
              {"residual", p.residual}};
}

Json to_json(const ExtremalityReport& rep) {
  return Json{{"floor_ladder", rep.floor_ladder},
              {"integrals", rep.integrals},
              {"slope", rep.slope},
              {"verdict", to_string(rep.verdict)}};
}

Json to_json(const Witness& w) {
  return Json{{"kind", w.kind == WitnessKind::kExtremeViolation
                           ? "EXTREME_VIOLATION"
                           : "STRONG_VIOLATION"},
              {"norm_g", w.norm_g},
              {"norm_plus", w.norm_plus},
              {"norm_minus", w.norm_minus},
              {"membership", w.membership},
              {"analyticity", w.analyticity},
              {"target_bound", w.target_bound},
              {"target_met", w.target_met},
              {"core_measure", w.core_measure}};
}

Json to_json(const TNReport& rep) {
  return Json{{"n_terms", rep.n_terms},   {"set_measure", rep.set_measure},
              {"lhs", rep.lhs},           {"restricted_sup", rep.restricted_sup},
              {"bound", rep.bound},       {"c_used", rep.c_used}};
}

Json to_json(const AdmissibilityBracket& b) {
  return Json{{"lower", b.lower},
              {"upper", b.upper},
              {"lower_provenance", to_string(b.lower_provenance)},
              {"upper_provenance", to_string(b.upper_provenance)}};
}

Json to_json(const SweepConfig& cfg) {
  return Json{{"N_values", cfg.N_values},
              {"eta_values", cfg.eta_values},
              {"gamma_values", cfg.gamma_values},
              {"delta_ladder", cfg.delta_ladder},
              {"n_grid", cfg.n_grid},
              {"seed", cfg.seed},
              {"trials_per_cell", cfg.trials_per_cell}};
}

Json to_json(const SweepRow& row) {
  Json wit = Json::array();
  for (const WitnessCellStats& w : row.witness)
    wit.push_back(Json{{"delta", w.delta},
                       {"norm_g", w.norm_g},
                       {"target", w.target},
                       {"norm_plus", w.norm_plus},
                       {"norm_minus", w.norm_minus},
                       {"ok", w.ok}});
  Json j{{"N", row.N},
         {"eta", row.eta},
         {"gamma", row.gamma},
         {"lower_paper", row.lower_paper},
         {"upper_paper", row.upper_paper},
         {"nazarov_lower", row.nazarov_lower},
         {"witness_lower", row.witness_lower},
         {"bracket", to_json(row.bracket)},
         {"sandwich_ok", row.sandwich_ok},
         {"witness", std::move(wit)},
         {"probe_best", row.probe_best},
         {"violation_count", row.violation_count}};
  if (!row.error.empty()) j["error"] = row.error;
  return j;
}

Json to_json(const SweepReport& rep) {
  Json rows = Json::array();
  for (const SweepRow& r : rep.rows) rows.push_back(to_json(r));
  return Json{{"config", to_json(rep.config)},
              {"rows", std::move(rows)},
              {"sandwich_violations", rep.sandwich_violations},
              {"witness_violations", rep.witness_violations}};
}

SweepConfig sweep_config_from_json(const Json& j) {
  SweepConfig cfg;
  if (j.contains("N_values")) cfg.N_values = j.at("N_values").get<std::vector<int>>();
  if (j.contains("eta_values"))
    cfg.eta_values = j.at("eta_values").get<std::vector<double>>();
  if (j.contains("gamma_values"))
    cfg.gamma_values = j.at("gamma_values").get<std::vector<double>>();
  if (j.contains("delta_ladder"))
    cfg.delta_ladder = j.at("delta_ladder").get<std::vector<double>>();
  if (j.contains("n_grid")) cfg.n_grid = j.at("n_grid").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("trials_per_cell"))
    cfg.trials_per_cell = j.at("trials_per_cell").get<int>();

  for (int N : cfg.N_values)
    if (N < 1) throw ContractError("sweep config: N values must be >= 1");
  for (double e : cfg.eta_values)
    if (!(e > 0.0 && e < 1.0))
      throw ContractError("sweep config: eta values must lie in (0, 1)");
  for (double g : cfg.gamma_values)
    if (!(g > 0.0 && g < 1.0))
      throw ContractError("sweep config: gamma values must lie in (0, 1)");
  for (std::size_t i = 0; i < cfg.delta_ladder.size(); ++i) {
    if (!(cfg.delta_ladder[i] > 0.0) ||
        (i > 0 && cfg.delta_ladder[i] >= cfg.delta_ladder[i - 1]))
      throw ContractError("sweep config: delta_ladder must be descending and positive");
  }
  return cfg;
}

std::string sweep_to_csv(const SweepReport& rep) {
  std::string out =
      "N,eta,gamma,lower_paper,eps_lower,eps_upper,upper_paper,sandwich_ok,"
      "witness_norm_g,witness_target,delta\n";
  for (const SweepRow& r : rep.rows) {
    const WitnessCellStats* last =
        r.witness.empty() ? nullptr : &r.witness.back();
    out += std::to_string(r.N) + "," + fmt(r.eta) + "," + fmt(r.gamma) + "," +
           fmt(r.lower_paper) + "," + fmt(r.bracket.lower) + "," +
           fmt(r.bracket.upper) + "," + fmt(r.upper_paper) + "," +
           (r.sandwich_ok ? "true" : "false") + "," +
           (last ? fmt(last->norm_g) : "") + "," +
           (last ? fmt(last->target) : "") + "," +
           (last ? fmt(last->delta) : "") + "\n";
  }
  return out;
}

}  // namespace hball
