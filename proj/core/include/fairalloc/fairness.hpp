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

#ifndef FAIRALLOC_FAIRNESS_HPP_
#define FAIRALLOC_FAIRNESS_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "fairalloc/model.hpp"

namespace fairalloc {

// Removing `good` from the envied bundle still leaves agent i short by `gap`:
// gap = u_i(A_j \ {good}) - u_i(A_i) > 0.
struct RemovalGap {
  GoodIndex good;
  Rational gap;
};

// Pair (envier, envied) for which no single removal eliminates the envy.
// `gaps` has one entry per good of the envied bundle.
struct Ef1Violation {
  AgentIndex envier;
  AgentIndex envied;
  Rational own_value;
  Rational envied_value;
  std::vector<RemovalGap> gaps;
};

struct Ef1Verdict {
  bool holds = true;
  std::vector<Ef1Violation> violations;
};

struct EnvyWitness {
  AgentIndex envier;
  AgentIndex envied;
  Rational own_value;
  Rational envied_value;
};

struct EfVerdict {
  bool holds = true;
  // First envious pair in (envier, envied) order.
  std::optional<EnvyWitness> witness;
};

struct ParetoVerdict {
  bool optimal = true;
  std::optional<Allocation> dominating_allocation;
};

struct ParetoOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  // 0 selects std::thread::hardware_concurrency().
  unsigned threads = 1;
};

// EF1: for every ordered pair (i, j) with A_j nonempty there is g in A_j
// with u_i(A_i) >= u_i(A_j \ {g}). Lists every violating pair. Exact.
// Throws ValidationError on a dimension mismatch.
Ef1Verdict is_ef1(const Profile& profile, const Allocation& allocation);

// EF: u_i(A_i) >= u_i(A_j) for all i, j.
EfVerdict is_ef(const Profile& profile, const Allocation& allocation);

// True iff `candidate` gives every agent at least `current` and someone more.
bool pareto_dominates(const std::vector<Rational>& candidate,
                      const std::vector<Rational>& current);

// Exhaustive dominance scan. The reported dominator is the lexicographically
// first one regardless of `threads`. Throws CapacityError.
ParetoVerdict is_pareto_optimal(const Profile& profile, const Allocation& allocation,
                                const ParetoOptions& options = {});

}  // namespace fairalloc

#endif  // FAIRALLOC_FAIRNESS_HPP_
