// Copyright 2026 The fairalloc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairalloc/report.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

namespace fairalloc {

using nlohmann::json;

json rational_json(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1 && num >= std::numeric_limits<std::int64_t>::min() &&
      num <= std::numeric_limits<std::int64_t>::max()) {
    return num.convert_to<std::int64_t>();
  }
  return to_string(value);
}

json profile_json(const Profile& profile) {
  json rows = json::array();
  for (AgentIndex i = 0; i < profile.agent_count(); ++i) {
    json row = json::array();
    for (const Rational& u : profile.row(i)) row.push_back(rational_json(u));
    rows.push_back(std::move(row));
  }
  return {{"agents", profile.agent_count()},
          {"goods", profile.good_count()},
          {"utilities", std::move(rows)}};
}

json allocation_json(const Allocation& allocation) {
  json assignment = json::array();
  for (AgentIndex a : allocation.assignment()) assignment.push_back(a + 1);
  json bundles = json::array();
  for (const Bundle& b : allocation.bundles()) {
    json goods = json::array();
    for (GoodIndex g : b) goods.push_back(g + 1);
    bundles.push_back(std::move(goods));
  }
  return {{"assignment", std::move(assignment)}, {"bundles", std::move(bundles)}};
}

json welfare_json(const ExtendedWelfare& welfare) {
  return {{"neg_inf_count", welfare.neg_inf_count},
          {"finite_part", welfare.finite_part},
          {"text", to_string(welfare)}};
}

json ef1_json(const Ef1Verdict& verdict) {
  json violations = json::array();
  for (const Ef1Violation& v : verdict.violations) {
    json gaps = json::array();
    for (const RemovalGap& gap : v.gaps) {
      gaps.push_back({{"removed", gap.good + 1}, {"gap", rational_json(gap.gap)}});
    }
    violations.push_back({{"envier", v.envier + 1},
                          {"envied", v.envied + 1},
                          {"own_value", rational_json(v.own_value)},
                          {"envied_value", rational_json(v.envied_value)},
                          {"gaps", std::move(gaps)}});
  }
  return {{"holds", verdict.holds}, {"violations", std::move(violations)}};
}

json ef_json(const EfVerdict& verdict) {
  json out = {{"holds", verdict.holds}};
  if (verdict.witness) {
    out["witness"] = {{"envier", verdict.witness->envier + 1},
                      {"envied", verdict.witness->envied + 1},
                      {"own_value", rational_json(verdict.witness->own_value)},
                      {"envied_value", rational_json(verdict.witness->envied_value)}};
  }
  return out;
}

json pareto_json(const ParetoVerdict& verdict) {
  json out = {{"optimal", verdict.optimal}};
  if (verdict.dominating_allocation) {
    out["dominating_allocation"] = allocation_json(*verdict.dominating_allocation);
  }
  return out;
}

json solve_json(const SolveResult& result) {
  json utilities = json::array();
  for (const Rational& u : result.utilities) utilities.push_back(rational_json(u));
  json out = {{"allocation", allocation_json(result.allocation)},
              {"utilities", std::move(utilities)},
              {"welfare", welfare_json(result.welfare)},
              {"maximizer_set_size", result.maximizer_set_size}};
  if (result.nash_product) out["nash_product"] = rational_json(*result.nash_product);
  if (result.positive_agents) out["positive_agents"] = *result.positive_agents;
  return out;
}

json constancy_json(const ConstancyReport& report) {
  json samples = json::array();
  for (const auto& [x, h] : report.samples) samples.push_back({{"x", x}, {"h", h}});
  json out = {{"k", report.k},
              {"samples", std::move(samples)},
              {"spread", report.spread},
              {"constant", report.constant}};
  if (report.c_k) out["c_k"] = *report.c_k;
  return out;
}

json log_fit_json(const LogFitOutcome& outcome) {
  if (const auto* fit = std::get_if<LogFit>(&outcome)) {
    json reports = json::array();
    for (const auto& r : fit->reports) reports.push_back(constancy_json(r));
    return {{"verdict", "log"},
            {"a", fit->a},
            {"b", fit->b},
            {"max_residual", fit->max_residual},
            {"k_used", fit->k_used},
            {"reports", std::move(reports)}};
  }
  const auto& not_log = std::get<NotLogVerdict>(outcome);
  return {{"verdict", "not-log"},
          {"failing_k", not_log.failing.k},
          {"failing_report", constancy_json(not_log.failing)}};
}

json counterexample_json(const CounterexampleReport& report) {
  return {{"k", report.k},
          {"y", rational_json(report.y)},
          {"z", rational_json(report.z)},
          {"epsilon", rational_json(report.epsilon)},
          {"inequality", {{"lhs", report.gap_y}, {"rhs", report.gap_z_shifted}}},
          {"profile", profile_json(report.profile)},
          {"solver_output", solve_json(report.solver_output)},
          {"ef1", ef1_json(report.ef1_verdict)},
          {"all_maximizers_violate", report.all_maximizers_violate},
          {"maximizers_checked", report.maximizers_checked}};
}

}  // namespace fairalloc
