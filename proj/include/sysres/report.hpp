#pragma once

// JSON renderings of reports. Exact values are emitted as "p/q" strings.

#include <json.hpp>

#include <string>

#include "sysres/multipliers.hpp"
#include "sysres/random.hpp"
#include "sysres/resultant_system.hpp"
#include "sysres/solvability.hpp"

namespace sysres {

inline nlohmann::json plan_json(const MultiplierPlan* plan) {
  nlohmann::json out = {{"m", nlohmann::json::array()}, {"k", nlohmann::json::array()}};
  if (!plan) return out;
  out["m"] = plan->target_degrees;
  for (const auto& row : plan->offsets) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& k : row) r.push_back(k ? nlohmann::json(*k) : nlohmann::json(nullptr));
    out["k"].push_back(std::move(r));
  }
  out["permutation"] = plan->permutation;
  out["coordinates"] = plan->coordinate_count();
  return out;
}

inline nlohmann::json to_json(const SolvabilityReport& report) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : report.trials) {
    trials.push_back({{"index", t.index},
                      {"seed", t.seed},
                      {"prime", t.prime},
                      {"value", t.value},
                      {"zero", t.value_zero},
                      {"redraws", t.redraws},
                      {"path", to_string(t.path)}});
  }
  nlohmann::json witness = {{"trial", nullptr}, {"prime", nullptr}, {"seed", nullptr}, {"value", nullptr}};
  if (report.witness) {
    witness = {{"trial", report.witness->trial},
               {"prime", report.witness->prime},
               {"seed", report.witness->seed},
               {"value", report.witness->value}};
  }
  return {
      {"verdict", to_string(report.verdict)},
      {"scheme", to_string(report.scheme)},
      {"mode", to_string(report.mode)},
      {"vars", report.num_vars},
      {"degrees", report.degrees},
      {"plan", plan_json(report.plan ? &*report.plan : nullptr)},
      {"trials", trials},
      {"degree_bound", report.degree_bound},
      {"error_bound", report.error_bound.get_str()},
      {"witness", witness},
      {"note", report.note},
      {"prng", std::string(Rng::kName)},
  };
}

inline nlohmann::json to_json(const BPolynomial& rp) {
  nlohmann::json vars = nlohmann::json::array();
  for (const auto& v : rp.variables) vars.push_back({{"block", v.block}, {"tuple", v.tuple}});
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : rp.terms) terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
  nlohmann::json system = nlohmann::json::array();
  for (const auto& v : extract_system(rp)) system.push_back(v.get_str());
  return {{"b_variables", vars},
          {"block_degrees", rp.block_degrees},
          {"terms", terms},
          {"system", system},
          {"solvable", rp.is_zero()}};
}

}  // namespace sysres
