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

#ifndef FAIRALLOC_REPORT_HPP_
#define FAIRALLOC_REPORT_HPP_

#include <nlohmann/json.hpp>

#include "fairalloc/fairness.hpp"
#include "fairalloc/model.hpp"
#include "fairalloc/theoremlab.hpp"
#include "fairalloc/welfarist.hpp"

// Structured reports, same JSON family as the profile files. Agents and
// goods are 1-based; rationals use the profile encoding (integer or "p/q").
namespace fairalloc {

nlohmann::json rational_json(const Rational& value);
nlohmann::json profile_json(const Profile& profile);
nlohmann::json allocation_json(const Allocation& allocation);
nlohmann::json welfare_json(const ExtendedWelfare& welfare);
nlohmann::json ef1_json(const Ef1Verdict& verdict);
nlohmann::json ef_json(const EfVerdict& verdict);
nlohmann::json pareto_json(const ParetoVerdict& verdict);
nlohmann::json solve_json(const SolveResult& result);
nlohmann::json constancy_json(const ConstancyReport& report);
nlohmann::json log_fit_json(const LogFitOutcome& outcome);
nlohmann::json counterexample_json(const CounterexampleReport& report);

}  // namespace fairalloc

#endif  // FAIRALLOC_REPORT_HPP_
