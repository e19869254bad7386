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

#ifndef FAIRALLOC_WELFARIST_HPP_
#define FAIRALLOC_WELFARIST_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "fairalloc/model.hpp"
#include "fairalloc/welfare_function.hpp"

namespace fairalloc {

inline constexpr double kTieTolerance = 1e-9;

enum class SearchStrategy {
  kExhaustive,
  // Depth-first over goods with the bound sum_i f(u_i(current) + u_i(rest)).
  // Same result as kExhaustive, bit for bit.
  kBranchAndBound,
};

struct SolveOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  // Workers for the exhaustive scan; 0 = hardware concurrency.
  unsigned threads = 1;
  SearchStrategy strategy = SearchStrategy::kExhaustive;
  double tie_tolerance = kTieTolerance;
};

struct SolveResult {
  Allocation allocation;
  std::vector<Rational> utilities;
  ExtendedWelfare welfare;
  // Allocations whose welfare ties the maximum (tolerance band for float f,
  // exact equality for mnw).
  std::uint64_t maximizer_set_size = 0;
  // mnw only: product of the positive utilities, and how many agents have one.
  std::optional<Rational> nash_product;
  std::optional<std::size_t> positive_agents;
};

// Sum over agents of f(u_i(A_i)).
ExtendedWelfare allocation_welfare(const Profile& profile, const Allocation& allocation,
                                   const WelfareFunction& f);

// Welfare-maximizing allocation under the ExtendedWelfare order. Among the
// allocations attaining the exact maximum the lexicographically smallest
// assignment wins; maximizer_set_size counts every allocation within
// tie_tolerance of the maximum. Throws CapacityError, InvalidFunctionError.
SolveResult maximize_welfare(const Profile& profile, const WelfareFunction& f,
                             const SolveOptions& options = {});

// Maximum Nash welfare in exact arithmetic: maximize the number of agents
// with positive utility, then the product of those utilities; lexicographic
// tie-break. welfare is reported under ln.
SolveResult mnw(const Profile& profile, const SolveOptions& options = {});

// The rule for `f`: mnw for the log-affine family (its argmax is independent
// of a and b), maximize_welfare otherwise. welfare is reported under `f`.
SolveResult solve_rule(const Profile& profile, const WelfareFunction& f,
                       const SolveOptions& options = {});

// Every allocation in the maximizer set of the given rule, in lexicographic
// order: the float tie band for maximize_welfare, exact ties for mnw.
std::vector<Allocation> welfare_maximizers(const Profile& profile, const WelfareFunction& f,
                                           const SolveOptions& options = {});
std::vector<Allocation> mnw_maximizers(const Profile& profile, const SolveOptions& options = {});
std::vector<Allocation> rule_maximizers(const Profile& profile, const WelfareFunction& f,
                                        const SolveOptions& options = {});

}  // namespace fairalloc

#endif  // FAIRALLOC_WELFARIST_HPP_
