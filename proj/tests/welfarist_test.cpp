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

#include "fairalloc/welfarist.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "fairalloc/error.hpp"
#include "fairalloc/fairness.hpp"
#include "support/oracles.hpp"

namespace fairalloc {
namespace {

using testing::Assignment;

Assignment to_assignment(const Allocation& a) {
  return Assignment(a.assignment().begin(), a.assignment().end());
}

std::function<double(double)> as_function(const WelfareFunction& f) {
  return [f](double x) { return f(x); };
}

TEST(MaximizeWelfareTest, UtilitarianExample) {
  const Profile p = Profile::from_rows({{0, 2, 2}, {Rational(1, 2), 1, 1}});
  const SolveResult r = maximize_welfare(p, WelfareFunction::affine());
  EXPECT_EQ(r.allocation, Allocation(2, {1, 0, 0}));
  EXPECT_EQ(r.welfare, (ExtendedWelfare{0, 4.5}));
  EXPECT_EQ(r.maximizer_set_size, 1u);
  EXPECT_EQ(r.utilities, (std::vector<Rational>{4, Rational(1, 2)}));
}

TEST(MaximizeWelfareTest, LogExample) {
  const Profile p = Profile::from_rows({{1, 3}, {3, 1}});
  const SolveResult r = maximize_welfare(p, WelfareFunction::log_affine());
  EXPECT_EQ(r.allocation, Allocation(2, {1, 0}));
  EXPECT_NEAR(r.welfare.finite_part, 2 * std::log(3.0), 1e-15);
}

TEST(MaximizeWelfareTest, SingleAgentGetsEverything) {
  const Profile p = Profile::from_rows({{2, 0, 7}});
  for (const char* spec : {"log", "affine:1,0", "power:2", "exp"}) {
    const SolveResult r = maximize_welfare(p, WelfareFunction::parse(spec));
    EXPECT_EQ(r.allocation, Allocation(1, {0, 0, 0})) << spec;
    EXPECT_EQ(r.maximizer_set_size, 1u);
  }
}

TEST(MaximizeWelfareTest, AllTiedMaximizersAreCounted) {
  // Two identical goods, identical agents: f = x makes all 4 allocations tie.
  const Profile p = Profile::from_rows({{1, 1}, {1, 1}});
  const SolveResult r = maximize_welfare(p, WelfareFunction::affine());
  EXPECT_EQ(r.maximizer_set_size, 4u);
  EXPECT_EQ(r.allocation, Allocation(2, {0, 0}));
  const SolveResult s = maximize_welfare(p, WelfareFunction::power(0.5));
  EXPECT_EQ(s.maximizer_set_size, 2u);
  EXPECT_EQ(s.allocation, Allocation(2, {0, 1}));
  EXPECT_EQ(welfare_maximizers(p, WelfareFunction::power(0.5)),
            (std::vector<Allocation>{Allocation(2, {0, 1}), Allocation(2, {1, 0})}));
}

TEST(MaximizeWelfareTest, AllNegativeInfinityFallsBackToFewestInfiniteTerms) {
  const Profile p = Profile::from_rows({{1, 0}, {0, 0}, {0, 0}});
  const SolveResult r = maximize_welfare(p, WelfareFunction::log_affine());
  EXPECT_EQ(r.welfare.neg_inf_count, 2u);
  EXPECT_EQ(r.utilities[0], Rational(1));
}

TEST(MaximizeWelfareTest, BudgetExceededThrows) {
  const Profile p(3, 20, std::vector<Rational>(60, Rational(1)));
  SolveOptions options;
  EXPECT_THROW(maximize_welfare(p, WelfareFunction::affine(), options), CapacityError);
  EXPECT_THROW(mnw(p), CapacityError);
  options.strategy = SearchStrategy::kBranchAndBound;
  EXPECT_THROW(maximize_welfare(p, WelfareFunction::affine(), options), CapacityError);
}

TEST(MaximizeWelfareTest, AgreesWithOracle) {
  std::mt19937_64 rng(101);
  const std::vector<WelfareFunction> functions = {
      WelfareFunction::log_affine(), WelfareFunction::affine(), WelfareFunction::power(0.5),
      WelfareFunction::power(2), WelfareFunction::exp(),
      WelfareFunction::custom(parse_expression("x^3 + sqrt(x)"))};
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t m = rng() % 6;
    const Profile p = testing::random_test_profile(rng, n, m, 6, 3);
    for (const WelfareFunction& f : functions) {
      const SolveResult r = maximize_welfare(p, f);
      const testing::OracleSolve o = testing::oracle_maximize(p, as_function(f));
      ASSERT_EQ(to_assignment(r.allocation), o.best) << f.describe();
      EXPECT_EQ(r.welfare.neg_inf_count, o.welfare.neg_inf);
      EXPECT_EQ(r.welfare.finite_part, o.welfare.finite);
      EXPECT_EQ(r.maximizer_set_size, o.ties.size());
      const std::vector<Allocation> all = welfare_maximizers(p, f);
      ASSERT_EQ(all.size(), o.ties.size());
      for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(to_assignment(all[k]), o.ties[k]);
    }
  }
}

TEST(MnwTest, Examples) {
  const SolveResult r = mnw(Profile::from_rows({{1, 3}, {3, 1}}));
  EXPECT_EQ(r.allocation, Allocation(2, {1, 0}));
  EXPECT_EQ(*r.nash_product, Rational(9));
  EXPECT_EQ(*r.positive_agents, 2u);
  EXPECT_EQ(r.maximizer_set_size, 1u);

  const SolveResult z = mnw(Profile::from_rows({{1, 0}, {0, 0}}));
  EXPECT_EQ(z.allocation, Allocation(2, {0, 0}));
  EXPECT_EQ(*z.positive_agents, 1u);
  EXPECT_EQ(*z.nash_product, Rational(1));
  EXPECT_EQ(z.maximizer_set_size, 2u);
}

TEST(MnwTest, AgreesWithExactOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t m = rng() % 7;
    const Profile p = testing::random_test_profile(rng, n, m, 4, 2);
    const SolveResult r = mnw(p);
    const testing::OracleNash o = testing::oracle_nash(p);
    ASSERT_EQ(to_assignment(r.allocation), o.best);
    EXPECT_EQ(*r.nash_product, o.product);
    EXPECT_EQ(*r.positive_agents, o.positive);
    EXPECT_EQ(r.maximizer_set_size, o.ties.size());
    const std::vector<Allocation> all = mnw_maximizers(p);
    ASSERT_EQ(all.size(), o.ties.size());
    for (std::size_t k = 0; k < all.size(); ++k) EXPECT_EQ(to_assignment(all[k]), o.ties[k]);
  }
}

TEST(MnwTest, OutputsAreEf1) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 6;
    Profile p = testing::random_test_profile(rng, 2, m, 9);
    // At least one positive entry per agent.
    std::vector<Rational> u(p.agent_count() * m);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t g = 0; g < m; ++g) u[i * m + g] = p.utility(i, g);
      if (std::all_of(u.begin() + i * m, u.begin() + (i + 1) * m, [](const Rational& x) { return x == 0; })) {
        u[i * m + rng() % m] = 1 + rng() % 9;
      }
    }
    p = Profile(2, m, std::move(u));
    const SolveResult r = mnw(p);
    ASSERT_TRUE(is_ef1(p, r.allocation).holds) << trial;
    ASSERT_TRUE(testing::oracle_ef1(p, to_assignment(r.allocation)));
  }
}

TEST(MnwTest, ScaleInvariantPerAgent) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t m = rng() % 4;
    // Every agent can be positive, so scaling one row scales every
    // candidate product by the same factor.
    const Profile p = testing::random_test_profile(rng, n, n + m, 6, 1, true);
    const std::size_t agent = rng() % n;
    const Rational factor(1 + static_cast<int>(rng() % 7), 1 + static_cast<int>(rng() % 5));
    std::vector<Rational> u;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t g = 0; g < p.good_count(); ++g) {
        u.push_back(p.utility(i, g) * (i == agent ? factor : Rational(1)));
      }
    }
    const Profile scaled(n, p.good_count(), std::move(u));
    EXPECT_EQ(mnw(p).allocation, mnw(scaled).allocation);
  }
}

TEST(MnwTest, ScalingCanBreakTiesWhenSomeAgentMustBeZero) {
  // Only one agent can be positive; scaling agent 2 breaks the tie.
  const Profile p = Profile::from_rows({{1}, {1}, {0}});
  const Profile scaled = Profile::from_rows({{1}, {2}, {0}});
  EXPECT_EQ(mnw(p).allocation, Allocation(3, {0}));
  EXPECT_EQ(mnw(scaled).allocation, Allocation(3, {1}));
}

TEST(SolveRuleTest, LogFamilyRoutesToExactMnw) {
  // Goods 1 and 2 split evenly or lopsidedly; the exact product decides.
  const Profile p = Profile::from_rows({{1, 3}, {3, 1}});
  const SolveResult r = solve_rule(p, WelfareFunction::log_affine(3, 2));
  EXPECT_TRUE(r.nash_product.has_value());
  EXPECT_EQ(r.allocation, Allocation(2, {1, 0}));
  EXPECT_NEAR(r.welfare.finite_part, 2 * (3 * std::log(3.0) + 2), 1e-12);
  EXPECT_FALSE(solve_rule(p, WelfareFunction::affine()).nash_product.has_value());
  EXPECT_EQ(rule_maximizers(p, WelfareFunction::log_affine()), mnw_maximizers(p));
}

double top_two_gap(const Profile& p) {
  std::set<double> values;
  for (const Allocation& a : enumerate_allocations(p)) {
    const ExtendedWelfare w = allocation_welfare(p, a, WelfareFunction::log_affine());
    if (w.is_finite()) values.insert(w.finite_part);
  }
  if (values.size() < 2) return HUGE_VAL;
  auto it = values.rbegin();
  const double best = *it++;
  return best - *it;
}

TEST(WelfaristPropertyTest, MnwMatchesFloatLogArgmax) {
  std::mt19937_64 rng(77);
  int compared = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 2;
    const std::size_t m = n + rng() % 3;
    const Profile p = testing::random_test_profile(rng, n, m, 9, 1, true);
    if (top_two_gap(p) <= 1e-6) continue;
    ++compared;
    EXPECT_EQ(mnw(p).utilities, maximize_welfare(p, WelfareFunction::log_affine()).utilities);
  }
  EXPECT_GT(compared, 100);
}

TEST(WelfaristPropertyTest, AffineTransformKeepsTheArgmaxWelfare) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = testing::random_test_profile(rng, 2 + rng() % 2, 1 + rng() % 5, 9, 2, true);
    const SolveResult base_log = maximize_welfare(p, WelfareFunction::log_affine());
    const SolveResult scaled_log = maximize_welfare(p, WelfareFunction::log_affine(2.5, -7));
    EXPECT_NEAR(allocation_welfare(p, scaled_log.allocation, WelfareFunction::log_affine()).finite_part,
                base_log.welfare.finite_part, 1e-9);
    const SolveResult base_lin = maximize_welfare(p, WelfareFunction::affine());
    const SolveResult scaled_lin = maximize_welfare(p, WelfareFunction::affine(0.3, 11));
    EXPECT_NEAR(allocation_welfare(p, scaled_lin.allocation, WelfareFunction::affine()).finite_part,
                base_lin.welfare.finite_part, 1e-9);
  }
}

TEST(WelfaristPropertyTest, FiniteWelfareOutputsArePareto) {
  std::mt19937_64 rng(79);
  const std::vector<WelfareFunction> functions = {WelfareFunction::log_affine(), WelfareFunction::affine(),
                                                  WelfareFunction::power(2), WelfareFunction::power(0.5),
                                                  WelfareFunction::exp()};
  for (int trial = 0; trial < 80; ++trial) {
    const Profile p = testing::random_test_profile(rng, 2 + rng() % 2, 1 + rng() % 5, 5, 2);
    for (const WelfareFunction& f : functions) {
      const SolveResult r = solve_rule(p, f);
      if (!r.welfare.is_finite()) continue;
      EXPECT_TRUE(is_pareto_optimal(p, r.allocation).optimal) << f.describe();
    }
  }
}

TEST(BranchAndBoundTest, BitIdenticalToExhaustive) {
  std::mt19937_64 rng(80);
  const std::vector<WelfareFunction> functions = {
      WelfareFunction::log_affine(), WelfareFunction::log_affine(3, 2), WelfareFunction::affine(),
      WelfareFunction::power(0.5), WelfareFunction::power(2), WelfareFunction::exp(),
      WelfareFunction::custom(parse_expression("3*ln(x)+2"))};
  SolveOptions bnb;
  bnb.strategy = SearchStrategy::kBranchAndBound;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 3;
    const std::size_t m = rng() % 7;
    const Profile p = testing::random_test_profile(rng, n, m, 9, 1 + static_cast<int>(rng() % 3));
    for (const WelfareFunction& f : functions) {
      const SolveResult a = maximize_welfare(p, f);
      const SolveResult b = maximize_welfare(p, f, bnb);
      ASSERT_EQ(a.allocation, b.allocation) << f.describe();
      ASSERT_EQ(a.welfare, b.welfare);
      ASSERT_EQ(a.maximizer_set_size, b.maximizer_set_size);
      ASSERT_EQ(a.utilities, b.utilities);
    }
  }
}

TEST(ParallelSolveTest, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(81);
  const Profile p = testing::random_test_profile(rng, 3, 10, 9, 2);
  SolveOptions four;
  four.threads = 4;
  for (const WelfareFunction& f : {WelfareFunction::affine(), WelfareFunction::power(0.5)}) {
    const SolveResult a = maximize_welfare(p, f);
    const SolveResult b = maximize_welfare(p, f, four);
    EXPECT_EQ(a.allocation, b.allocation);
    EXPECT_EQ(a.welfare, b.welfare);
    EXPECT_EQ(a.maximizer_set_size, b.maximizer_set_size);
  }
  const SolveResult a = mnw(p);
  const SolveResult b = mnw(p, four);
  EXPECT_EQ(a.allocation, b.allocation);
  EXPECT_EQ(a.nash_product, b.nash_product);
  EXPECT_EQ(a.maximizer_set_size, b.maximizer_set_size);
}

}  // namespace
}  // namespace fairalloc
