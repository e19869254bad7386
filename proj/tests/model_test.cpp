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

#include "fairalloc/model.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fairalloc/error.hpp"
#include "support/oracles.hpp"

namespace fairalloc {
namespace {

Profile ExampleProfile() {
  return Profile::from_rows({{0, 2, 2}, {Rational(1, 2), 1, 1}});
}

TEST(BundleUtilityTest, SumsListedGoods) {
  const Profile p = ExampleProfile();
  EXPECT_EQ(bundle_utility(p, 0, Bundle{1, 2}), Rational(4));
  EXPECT_EQ(bundle_utility(p, 1, Bundle{0, 1, 2}), Rational(5, 2));
}

TEST(BundleUtilityTest, EmptyBundleIsZero) {
  const Profile p = ExampleProfile();
  EXPECT_EQ(bundle_utility(p, 0, Bundle{}), Rational(0));
  EXPECT_EQ(bundle_utility(p, 1, Bundle{}), Rational(0));
}

TEST(BundleUtilityTest, OutOfRangeIndicesThrow) {
  const Profile p = ExampleProfile();
  EXPECT_THROW(bundle_utility(p, 2, Bundle{0}), IndexError);
  EXPECT_THROW(bundle_utility(p, 2, Bundle{}), IndexError);
  EXPECT_THROW(bundle_utility(p, 0, Bundle{3}), IndexError);
}

TEST(BundleUtilityTest, AdditiveOverDisjointBundles) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t m = 1 + trial % 8;
    const Profile p = testing::random_test_profile(rng, 2, m, 9, 4);
    std::vector<GoodIndex> a, b;
    std::uniform_int_distribution<int> side(0, 2);
    for (GoodIndex g = 0; g < m; ++g) {
      const int s = side(rng);
      if (s == 0) a.push_back(g);
      if (s == 1) b.push_back(g);
    }
    std::vector<GoodIndex> both = a;
    both.insert(both.end(), b.begin(), b.end());
    for (AgentIndex i = 0; i < 2; ++i) {
      EXPECT_EQ(bundle_utility(p, i, Bundle(both)),
                bundle_utility(p, i, Bundle(a)) + bundle_utility(p, i, Bundle(b)));
    }
  }
}

TEST(ProfileTest, RejectsNegativeUtility) {
  EXPECT_THROW(Profile::from_rows({{1, -1}}), ValidationError);
  EXPECT_THROW(Profile(0, 0, {}), ValidationError);
  EXPECT_THROW(Profile(2, 2, {1, 2, 3}), ValidationError);
}

TEST(ProfileTest, AllowsZeroGoods) {
  const Profile p(3, 0, {});
  EXPECT_EQ(p.agent_count(), 3u);
  EXPECT_EQ(p.good_count(), 0u);
}

TEST(AllocationTest, BundlesPartitionGoods) {
  const Allocation a(2, {1, 0, 0});
  EXPECT_EQ(a.bundle(0), (Bundle{1, 2}));
  EXPECT_EQ(a.bundle(1), (Bundle{0}));
  EXPECT_EQ(Allocation::from_bundles({Bundle{1, 2}, Bundle{0}}, 3), a);
}

TEST(AllocationTest, RejectsInvalidAssignments) {
  EXPECT_THROW(Allocation(2, {0, 2}), ValidationError);
  EXPECT_THROW(Allocation::from_bundles({Bundle{0}, Bundle{}}, 2), ValidationError);
  EXPECT_THROW(Allocation::from_bundles({Bundle{0, 1}, Bundle{1}}, 2), ValidationError);
  EXPECT_THROW(Bundle({1, 1}), ValidationError);
  EXPECT_THROW(Allocation(2, {0, 1}).check_compatible(ExampleProfile()), ValidationError);
}

TEST(EnumerateAllocationsTest, SmallCounts) {
  auto count = [](std::size_t n, std::size_t m) {
    const Profile p(n, m, std::vector<Rational>(n * m));
    std::size_t c = 0;
    for (const Allocation& a : enumerate_allocations(p)) {
      (void)a;
      ++c;
    }
    return c;
  };
  EXPECT_EQ(count(2, 2), 4u);
  EXPECT_EQ(count(3, 2), 9u);
  EXPECT_EQ(count(2, 0), 1u);
}

TEST(EnumerateAllocationsTest, EmptyGoodsYieldsAllEmptyBundles) {
  const Profile p(2, 0, {});
  auto stream = enumerate_allocations(p);
  auto it = stream.begin();
  ASSERT_NE(it, stream.end());
  const Allocation a = *it;
  EXPECT_TRUE(a.bundle(0).empty());
  EXPECT_TRUE(a.bundle(1).empty());
}

TEST(EnumerateAllocationsTest, ExactlyNToTheMDistinctInLexOrder) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 0; m <= 8; ++m) {
      const Profile p(n, m, std::vector<Rational>(n * m));
      const auto expected = testing::all_assignments(n, m);
      std::vector<std::vector<AgentIndex>> seen;
      for (const Allocation& a : enumerate_allocations(p)) seen.push_back(a.assignment());
      ASSERT_EQ(seen.size(), expected.size()) << n << "^" << m;
      EXPECT_EQ(std::set(seen.begin(), seen.end()).size(), seen.size());
      EXPECT_EQ(seen, expected);
    }
  }
}

TEST(EnumerateAllocationsTest, BudgetExceededNamesCount) {
  const Profile p(3, 20, std::vector<Rational>(60));
  try {
    enumerate_allocations(p);
    FAIL() << "expected CapacityError";
  } catch (const CapacityError& e) {
    EXPECT_NE(std::string(e.what()).find("3^20 = 3486784401"), std::string::npos) << e.what();
  }
  EXPECT_NO_THROW(enumerate_allocations(p, 4'000'000'000ULL));
  EXPECT_THROW(checked_allocation_count(10, 30, ~0ULL), CapacityError);
}

TEST(AllocationCursorTest, IncrementalUtilitiesMatchFromScratch) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 3;
    const std::size_t m = trial % 6;
    const Profile p = testing::random_test_profile(rng, n, m, 9, 3);
    const auto all = testing::all_assignments(n, m);
    const std::uint64_t start = all.size() / 3;
    AllocationCursor cursor(p, start);
    for (std::size_t idx = start; idx < all.size(); ++idx) {
      ASSERT_EQ(cursor.assignment(), all[idx]);
      ASSERT_EQ(cursor.utilities(), testing::oracle_utilities(p, all[idx]));
      if (idx + 1 < all.size()) cursor.advance();
    }
  }
}

TEST(AllocationCursorTest, WrapsToFirstAllocation) {
  const Profile p = ExampleProfile();
  AllocationCursor cursor(p, 7);
  cursor.advance();
  EXPECT_EQ(cursor.assignment(), (std::vector<AgentIndex>{0, 0, 0}));
  EXPECT_EQ(cursor.utilities(), (std::vector<Rational>{4, 0}));
}

TEST(FormatBundleTest, OneBased) { EXPECT_EQ(format_bundle(Bundle{0, 2}), "{g1, g3}"); }

}  // namespace
}  // namespace fairalloc
