#pragma once

#include <string>

#include <json.hpp>

#include "hball/admissibility.hpp"
#include "hball/circle.hpp"
#include "hball/constraints.hpp"
#include "hball/outer.hpp"
#include "hball/witness.hpp"

namespace hball {

using Json = nlohmann::ordered_json;

// Complex numbers serialize as {re, im} for bit-exact round trips.
Json to_json(Complex z);
Json to_json(const BoundarySample& s);
Json to_json(const Spectrum& sp);
Json to_json(const Functional& phi);
Json to_json(const ConstraintSet& set);
Json to_json(const KernelPolynomial& p);
Json to_json(const ExtremalityReport& rep);
Json to_json(const Witness& w);
Json to_json(const TNReport& rep);
Json to_json(const AdmissibilityBracket& b);
Json to_json(const SweepConfig& cfg);
Json to_json(const SweepRow& row);
Json to_json(const SweepReport& rep);

SweepConfig sweep_config_from_json(const Json& j);

/// One row per (N, eta, gamma) cell with the witness stats at the tightest
/// ladder delta.
std::string sweep_to_csv(const SweepReport& rep);

}  // namespace hball
