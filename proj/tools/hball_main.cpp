// Command-line front end: construct boundary functions, classify them,
// build extremality witnesses, bracket admissibility constants, run the
// sandwich sweep, and check the Turan-Nazarov corpus.
//
// Exit codes: 0 success / all checks pass, 1 check failure (a mathematical
// invariant did not hold numerically), 2 usage or config error,
// 3 degenerate input.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hball/admissibility.hpp"
#include "hball/functions.hpp"
#include "hball/serialize.hpp"
#include "hball/version.hpp"

namespace {

using namespace hball;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDegenerate = 3;

struct GlobalConfig {
  int n_grid = 4096;
  int oversample = 4;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
  double tol_sup = kDefaultTolSup;
  double tol_kernel = kDefaultTolKernel;
  double floor = kDefaultFloor;
};

struct FunctionFlags {
  std::string kind;
  int N = 1;
  double eta = 0.5;
  double gamma = 0.5;
  std::vector<double> zeros;  // flat re, im pairs
  std::vector<double> num;    // flat re, im pairs
  std::vector<double> den;
  std::string file;
};

Json config_echo(const GlobalConfig& g) {
  return Json{{"n_grid", g.n_grid},       {"oversample", g.oversample},
              {"seed", g.seed},           {"tol_sup", g.tol_sup},
              {"tol_kernel", g.tol_kernel}, {"floor", g.floor}};
}

std::vector<Complex> pair_list(const std::vector<double>& flat,
                               const char* what) {
  if (flat.size() % 2 != 0)
    throw ContractError(std::string(what) + " expects re, im pairs");
  std::vector<Complex> out;
  for (std::size_t i = 0; i < flat.size(); i += 2)
    out.emplace_back(flat[i], flat[i + 1]);
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ContractError("cannot parse JSON from " + path + ": " + e.what());
  }
  return j;
}

BoundarySample modulus_from_file(const std::string& path,
                                 const BoundaryGrid& grid) {
  Json j = load_json_file(path);
  const Json& arr = j.is_array() ? j : j.at("values");
  if (!arr.is_array())
    throw ContractError("modulus file must hold an array of nonnegative reals");
  if (static_cast<int>(arr.size()) != grid.n_grid)
    throw ContractError("modulus length does not match --n-grid");
  std::vector<Complex> v;
  v.reserve(arr.size());
  for (const Json& x : arr) v.emplace_back(x.get<double>(), 0.0);
  return BoundarySample(grid, std::move(v));
}

BoundarySample spectrum_from_file(const std::string& path,
                                  const BoundaryGrid& grid) {
  Json j = load_json_file(path);
  const Json& arr = j.is_array() ? j : j.at("terms");
  Spectrum sp(grid.n_grid);
  for (const Json& t : arr) {
    const int k = t.at("k").get<int>();
    if (!sp.in_range(k))
      throw ContractError("spectrum term frequency out of grid range");
    sp.set(k, Complex(t.at("re").get<double>(), t.at("im").get<double>()));
  }
  return from_spectrum(sp, grid);
}

BoundarySample build_function(const FunctionFlags& fn, const GlobalConfig& g,
                              const BoundaryGrid& grid) {
  if (fn.kind == "theorem2")
    return theorem2_construction(fn.N, fn.eta, fn.gamma, grid, std::nullopt,
                                 std::nullopt, g.floor)
        .f;
  if (fn.kind == "blaschke") {
    if (fn.zeros.empty())
      throw ContractError("blaschke requires --zeros re im [re im ...]");
    return blaschke_product(grid, pair_list(fn.zeros, "--zeros"));
  }
  if (fn.kind == "poly-fraction") {
    if (fn.num.empty() || fn.den.empty())
      throw ContractError("poly-fraction requires --num and --den");
    return poly_fraction(grid, pair_list(fn.num, "--num"),
                         pair_list(fn.den, "--den"));
  }
  if (fn.kind == "outer-from-modulus") {
    if (fn.file.empty())
      throw ContractError("outer-from-modulus requires --file");
    return make_outer(modulus_from_file(fn.file, grid), g.floor).boundary;
  }
  if (fn.kind == "spectrum-literal") {
    if (fn.file.empty()) throw ContractError("spectrum-literal requires --file");
    return spectrum_from_file(fn.file, grid);
  }
  throw ContractError(
      "unknown function kind '" + fn.kind +
      "' (expected theorem2 | blaschke | poly-fraction | outer-from-modulus "
      "| spectrum-literal)");
}

ConstraintSet build_phi(const std::string& spec, const GlobalConfig& g) {
  // "fourier:N" or "random:N:degree[:seed]"
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  try {
    if (parts[0] == "fourier" && parts.size() == 2)
      return fourier_constraints(std::stoi(parts[1]));
    if (parts[0] == "random" && (parts.size() == 3 || parts.size() == 4)) {
      const std::uint64_t seed =
          parts.size() == 4 ? std::stoull(parts[3]) : g.seed;
      return random_constraints(std::stoi(parts[1]), std::stoi(parts[2]), seed);
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
  }
  throw ContractError("bad --phi spec '" + spec +
                      "' (expected fourier:N or random:N:degree[:seed])");
}

void emit(const GlobalConfig& g, const std::string& command, const Json& results) {
  Json envelope{{"tool_version", kToolVersion},
                {"command", command},
                {"config_echo", config_echo(g)},
                {"results", results}};
  const std::string text = envelope.dump(2) + "\n";
  if (g.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out);
    if (!out) throw ContractError("cannot write to " + g.out);
    out << text;
  }
}

void add_function_flags(CLI::App* cmd, FunctionFlags& fn) {
  cmd->add_option("kind", fn.kind,
                  "theorem2 | blaschke | poly-fraction | outer-from-modulus | "
                  "spectrum-literal")
      ->required();
  cmd->add_option("--n", fn.N, "theorem2: number of constraints");
  cmd->add_option("--eta", fn.eta, "theorem2: low level in (0,1)");
  cmd->add_option("--gamma", fn.gamma, "theorem2: sublevel measure in (0,1)");
  cmd->add_option("--zeros", fn.zeros, "blaschke: zeros as re im pairs");
  cmd->add_option("--num", fn.num, "poly-fraction: numerator re im pairs");
  cmd->add_option("--den", fn.den, "poly-fraction: denominator re im pairs");
  cmd->add_option("--file", fn.file, "input file for file-backed kinds");
}

int cmd_classify(const GlobalConfig& g, const FunctionFlags& fn) {
  const BoundaryGrid grid(g.n_grid, g.oversample);
  const BoundarySample f = build_function(fn, g, grid);

  Json sublevels = Json::array();
  for (double eta : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    const SublevelSet E = sublevel_set(f, eta);
    sublevels.push_back(Json{{"eta", eta}, {"measure", E.measure}});
  }
  Json results{{"sup_norm", sup_norm(f)},
               {"inner_defect", inner_defect(f)},
               {"analyticity_defect", analyticity_defect(f)},
               {"extremality", to_json(extremality_test(f))},
               {"exposed_mass", exposed_mass(f, g.tol_sup)},
               {"sublevel_measures", std::move(sublevels)}};
  emit(g, "classify", results);
  return kExitOk;
}

int cmd_witness(const GlobalConfig& g, const FunctionFlags& fn,
                const std::string& mode, const std::string& phi_spec,
                double eta, double delta) {
  const BoundaryGrid grid(g.n_grid, g.oversample);
  const BoundarySample f = build_function(fn, g, grid);
  const ConstraintSet phi = build_phi(phi_spec, g);

  WitnessOptions opts;
  opts.floor = g.floor;
  opts.tol_sup = g.tol_sup;
  opts.tol_kernel = g.tol_kernel;

  Witness w = [&]() {
    if (mode == "extreme") {
      opts.moll = MollifyParams{16, 16};
      return extreme_violation_witness(f, phi, g.floor, opts);
    }
    if (mode == "strong") {
      opts.moll = MollifyParams{8, 8};
      return strong_violation_witness(f, phi, eta, delta, opts);
    }
    throw ContractError("unknown witness mode '" + mode +
                        "' (expected extreme | strong)");
  }();

  const double norm_cap =
      w.kind == WitnessKind::kStrongViolation ? 1.0 + delta : 1.0 + 10 * g.tol_sup;
  const bool ok = w.norm_g > 0.0 && w.membership <= g.tol_kernel &&
                  w.analyticity <= kDefaultTolAnalytic &&
                  std::max(w.norm_plus, w.norm_minus) <= norm_cap &&
                  w.target_met;
  Json results = to_json(w);
  results["checks_passed"] = ok;
  emit(g, "witness", results);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_sweep(const GlobalConfig& g, const std::string& config_file,
              bool seed_given) {
  SweepConfig cfg;
  if (!config_file.empty()) cfg = sweep_config_from_json(load_json_file(config_file));
  if (seed_given) cfg.seed = g.seed;

  const SweepReport rep = run_sweep(cfg);
  Json results = to_json(rep);

  const std::string base = g.out.empty() ? std::string("sweep") : g.out;
  {
    Json envelope{{"tool_version", kToolVersion},
                  {"command", "sweep"},
                  {"config_echo", config_echo(g)},
                  {"results", results}};
    std::ofstream out(base + ".json");
    if (!out) throw ContractError("cannot write to " + base + ".json");
    out << envelope.dump(2) << "\n";
  }
  {
    std::ofstream out(base + ".csv");
    if (!out) throw ContractError("cannot write to " + base + ".csv");
    out << sweep_to_csv(rep);
  }
  std::cout << "rows: " << rep.rows.size()
            << "  sandwich_violations: " << rep.sandwich_violations
            << "  witness_violations: " << rep.witness_violations << "\n";
  return rep.sandwich_violations == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_tn(const GlobalConfig& g, int corpus_size, int max_terms,
           double min_measure, int max_freq) {
  const BoundaryGrid grid(g.n_grid, g.oversample);
  std::mt19937_64 rng(g.seed);
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> freq(-max_freq, max_freq);
  std::uniform_int_distribution<int> start(0, g.n_grid - 1);
  std::uniform_real_distribution<double> meas(min_measure, 0.6);
  std::normal_distribution<double> gauss(0.0, 1.0);

  int violations = 0;
  double max_ratio = 0.0, max_ratio_single = 0.0;
  for (int t = 0; t < corpus_size; ++t) {
    Spectrum q(g.n_grid);
    const int m = nterms(rng);
    for (int i = 0; i < m; ++i)
      q.set(freq(rng), Complex(gauss(rng), gauss(rng)));
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(g.n_grid), 0);
    const int arcs = (t % 2 == 0) ? 1 : 2;
    for (int a = 0; a < arcs; ++a) {
      const int cells =
          static_cast<int>(std::ceil(meas(rng) * g.n_grid / arcs));
      const int s0 = start(rng);
      for (int j = 0; j < cells; ++j)
        mask[static_cast<std::size_t>((s0 + j) % g.n_grid)] = 1;
    }
    const TNReport rep = turan_nazarov_check(q, GridMask(grid, mask));
    const double ratio = rep.lhs / rep.bound;
    max_ratio = std::max(max_ratio, ratio);
    if (rep.n_terms == 1)
      max_ratio_single = std::max(max_ratio_single, ratio);
    if (rep.lhs > rep.bound * (1.0 + g.tol_sup)) ++violations;
  }
  Json results{{"corpus_size", corpus_size},
               {"max_terms", max_terms},
               {"min_measure", min_measure},
               {"violations", violations},
               {"max_ratio", max_ratio},
               {"max_ratio_single_term", max_ratio_single},
               {"c_used", kNazarovC}};
  emit(g, "tn", results);
  return violations == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_outer(const GlobalConfig& g, const std::string& file,
              bool emit_values) {
  const BoundaryGrid grid(g.n_grid, g.oversample);
  const BoundarySample w = modulus_from_file(file, grid);
  const OuterResult r = make_outer(w, g.floor);
  Json results{{"modulus_error", r.modulus_error},
               {"analyticity", r.analyticity},
               {"sup_norm", sup_norm(r.boundary)}};
  if (emit_values) results["boundary"] = to_json(r.boundary);
  emit(g, "outer", results);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometry of the unit ball of constrained H-infinity spaces"};
  app.require_subcommand(1);

  GlobalConfig g;
  app.add_option("--n-grid", g.n_grid, "grid size (power of two >= 64)");
  app.add_option("--oversample", g.oversample, "sup-norm refinement factor");
  auto* seed_opt = app.add_option("--seed", g.seed, "random seed");
  app.add_option("--out", g.out, "output path (or basename for sweep)");
  app.add_option("--format", g.format, "json (default) or csv where supported");
  app.add_option("--tol-sup", g.tol_sup, "sup-norm slack");
  app.add_option("--tol-kernel", g.tol_kernel, "kernel residual tolerance");
  app.add_option("--floor", g.floor, "log floor for outer constructions");

  FunctionFlags cls_fn;
  CLI::App* classify = app.add_subcommand("classify", "classify a boundary function");
  add_function_flags(classify, cls_fn);

  FunctionFlags wit_fn;
  std::string wit_mode = "strong", wit_phi = "fourier:1";
  double wit_eta = 0.5, wit_delta = 0.01;
  CLI::App* witness = app.add_subcommand("witness", "build a violation witness");
  witness->add_option("--mode", wit_mode, "extreme | strong")->required();
  witness->add_option("--phi", wit_phi, "fourier:N or random:N:degree[:seed]");
  witness->add_option("--wit-eta", wit_eta, "sublevel threshold (strong mode)");
  witness->add_option("--delta", wit_delta, "norm slack delta (strong mode)");
  add_function_flags(witness, wit_fn);

  std::string sweep_config;
  CLI::App* sweep = app.add_subcommand("sweep", "run the sandwich sweep");
  sweep->add_option("--config", sweep_config, "JSON file mirroring SweepConfig");

  int tn_corpus = 1000, tn_terms = 5, tn_freq = 256;
  double tn_min_measure = 0.05;
  CLI::App* tn = app.add_subcommand("tn", "Turan-Nazarov corpus check");
  tn->add_option("--corpus-size", tn_corpus, "number of random polynomials");
  tn->add_option("--max-terms", tn_terms, "max nonzero terms per polynomial");
  tn->add_option("--min-measure", tn_min_measure, "smallest set measure");
  tn->add_option("--max-freq", tn_freq, "frequency range for the terms");

  std::string outer_file;
  bool outer_values = false;
  CLI::App* outer = app.add_subcommand("outer", "outer function from a modulus file");
  outer->add_option("--file", outer_file, "JSON modulus file")->required();
  outer->add_flag("--emit-values", outer_values, "include boundary values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(classify)) return cmd_classify(g, cls_fn);
    if (app.got_subcommand(witness))
      return cmd_witness(g, wit_fn, wit_mode, wit_phi, wit_eta, wit_delta);
    if (app.got_subcommand(sweep))
      return cmd_sweep(g, sweep_config, seed_opt->count() > 0);
    if (app.got_subcommand(tn))
      return cmd_tn(g, tn_corpus, tn_terms, tn_min_measure, tn_freq);
    if (app.got_subcommand(outer)) return cmd_outer(g, outer_file, outer_values);
  } catch (const DegenerateInputError& e) {
    std::cerr << "degenerate input: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const ConditioningError& e) {
    std::cerr << "conditioning failure: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const ContractError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
