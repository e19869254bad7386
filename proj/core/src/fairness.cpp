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

#include "fairalloc/fairness.hpp"

#include <utility>

#include "fairalloc/error.hpp"
#include "parallel.hpp"

namespace fairalloc {

Ef1Verdict is_ef1(const Profile& profile, const Allocation& allocation) {
  allocation.check_compatible(profile);
  const std::size_t n = profile.agent_count();
  const std::vector<Bundle> bundles = allocation.bundles();

  Ef1Verdict verdict;
  for (AgentIndex i = 0; i < n; ++i) {
    const Rational own = bundle_utility(profile, i, bundles[i]);
    for (AgentIndex j = 0; j < n; ++j) {
      if (j == i || bundles[j].empty()) continue;
      const Rational envied = bundle_utility(profile, i, bundles[j]);
      Ef1Violation violation{i, j, own, envied, {}};
      bool rescued = false;
      for (GoodIndex g : bundles[j]) {
        // u_i(A_j \ {g}) = u_i(A_j) - u_i(g) by additivity.
        Rational remainder = envied - profile.utility(i, g);
        if (own >= remainder) {
          rescued = true;
          break;
        }
        violation.gaps.push_back({g, remainder - own});
      }
      if (!rescued) {
        verdict.holds = false;
        verdict.violations.push_back(std::move(violation));
      }
    }
  }
  return verdict;
}

EfVerdict is_ef(const Profile& profile, const Allocation& allocation) {
  allocation.check_compatible(profile);
  const std::size_t n = profile.agent_count();
  const std::vector<Bundle> bundles = allocation.bundles();
  for (AgentIndex i = 0; i < n; ++i) {
    const Rational own = bundle_utility(profile, i, bundles[i]);
    for (AgentIndex j = 0; j < n; ++j) {
      if (j == i) continue;
      Rational other = bundle_utility(profile, i, bundles[j]);
      if (own < other) return {false, EnvyWitness{i, j, own, std::move(other)}};
    }
  }
  return {};
}

bool pareto_dominates(const std::vector<Rational>& candidate,
                      const std::vector<Rational>& current) {
  bool strict = false;
  for (std::size_t i = 0; i < current.size(); ++i) {
    if (candidate[i] < current[i]) return false;
    if (candidate[i] > current[i]) strict = true;
  }
  return strict;
}

ParetoVerdict is_pareto_optimal(const Profile& profile, const Allocation& allocation,
                                const ParetoOptions& options) {
  allocation.check_compatible(profile);
  const std::uint64_t count = checked_allocation_count(
      profile.agent_count(), profile.good_count(), options.budget);
  const std::vector<Rational> current = agent_utilities(profile, allocation);

  auto scan = [&](std::uint64_t first, std::uint64_t last) -> std::optional<std::uint64_t> {
    if (first == last) return std::nullopt;
    AllocationCursor cursor(profile, first);
    for (std::uint64_t idx = first;; cursor.advance()) {
      if (pareto_dominates(cursor.utilities(), current)) return idx;
      if (++idx == last) break;
    }
    return std::nullopt;
  };
  auto first_found = [](std::optional<std::uint64_t> left, std::optional<std::uint64_t> right) {
    return left ? left : right;
  };
  const auto found = internal::partitioned_reduce(count, options.threads, scan, first_found);
  if (!found) return {};
  AssignmentOdometer odometer(profile.agent_count(), profile.good_count(), *found);
  return {false, Allocation(profile.agent_count(), odometer.assignment())};
}

}  // namespace fairalloc
