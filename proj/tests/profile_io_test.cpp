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

#include "fairalloc/profile_io.hpp"

#include <random>

#include <gtest/gtest.h>

#include "fairalloc/error.hpp"
#include "support/oracles.hpp"

namespace fairalloc {
namespace {

TEST(LoadProfileTest, MatchesInMemoryConstruction) {
  const Profile loaded =
      load_profile(R"({"agents": 2, "goods": 3, "utilities": [[0, 2, 2], ["1/2", 1, 1]]})");
  EXPECT_EQ(loaded, Profile::from_rows({{0, 2, 2}, {Rational(1, 2), 1, 1}}));
}

TEST(LoadProfileTest, AcceptsWhitespaceAndUnreducedRationals) {
  const Profile loaded = load_profile(
      "{\n  \"agents\" : 1 ,\n  \"goods\":2,\n  \"utilities\": [ [ \" 2/4 \", \"7\" ] ]\n}\n");
  EXPECT_EQ(loaded.utility(0, 0), Rational(1, 2));
  EXPECT_EQ(loaded.utility(0, 1), Rational(7));
}

TEST(LoadProfileTest, RejectsNegativeUtility) {
  EXPECT_THROW(load_profile(R"({"agents": 1, "goods": 2, "utilities": [[1, -1]]})"),
               ValidationError);
  EXPECT_THROW(load_profile(R"({"agents": 1, "goods": 1, "utilities": [["-1/2"]]})"),
               ValidationError);
}

TEST(LoadProfileTest, EmptyGoods) {
  const Profile p = load_profile(R"({"agents": 2, "goods": 0, "utilities": [[], []]})");
  EXPECT_EQ(p.agent_count(), 2u);
  EXPECT_EQ(p.good_count(), 0u);
}

TEST(LoadProfileTest, SyntaxErrorReportsLine) {
  try {
    load_profile("{\n  \"agents\": 2,\n  \"goods\": 1,,\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(e.location().find("line 3"), std::string::npos) << e.what();
  }
}

TEST(LoadProfileTest, FieldErrorsReportPath) {
  auto location_of = [](const char* text) {
    try {
      load_profile(text);
    } catch (const ParseError& e) {
      return e.location();
    }
    return std::string("no error");
  };
  EXPECT_EQ(location_of(R"({"agents": 2, "goods": 2, "utilities": [[1, 2], [3, "x"]]})"),
            "utilities[1][1]");
  EXPECT_EQ(location_of(R"({"agents": 1, "goods": 1, "utilities": [[0.5]]})"),
            "utilities[0][0]");
  EXPECT_EQ(location_of(R"({"agents": 1, "goods": 1, "utilities": [["1/0"]]})"),
            "utilities[0][0]");
  EXPECT_EQ(location_of(R"({"agents": 2, "goods": 1, "utilities": [[1]]})"), "utilities");
  EXPECT_EQ(location_of(R"({"agents": 1, "goods": 2, "utilities": [[1]]})"), "utilities[0]");
  EXPECT_EQ(location_of(R"({"goods": 1, "utilities": [[1]]})"), "agents");
  EXPECT_EQ(location_of(R"({"agents": 0, "goods": 1, "utilities": []})"), "agents");
}

TEST(SerializeProfileTest, RoundTripIsIdentity) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Profile p = testing::random_test_profile(rng, 1 + trial % 3, trial % 5, 1000, 37);
    EXPECT_EQ(load_profile(serialize_profile(p)), p);
  }
  // Values beyond 64 bits survive as strings.
  const Rational huge = parse_rational("123456789012345678901234567890/7");
  const Profile big = Profile::from_rows({{huge, Rational(Integer("99999999999999999999999"))}});
  EXPECT_EQ(load_profile(serialize_profile(big)), big);
}

TEST(LoadAllocationTest, AssignmentAndBundleForms) {
  const Profile p = Profile::from_rows({{0, 2, 2}, {1, 1, 1}});
  const Allocation expected(2, {1, 0, 0});
  EXPECT_EQ(load_allocation(R"({"assignment": [2, 1, 1]})", p), expected);
  EXPECT_EQ(load_allocation(R"({"bundles": [[2, 3], [1]]})", p), expected);
  EXPECT_EQ(load_allocation(serialize_allocation(expected), p), expected);
}

TEST(LoadAllocationTest, RejectsUnassignedOrUnknown) {
  const Profile p = Profile::from_rows({{0, 2, 2}, {1, 1, 1}});
  EXPECT_THROW(load_allocation(R"({"assignment": [2, 1]})", p), ValidationError);
  EXPECT_THROW(load_allocation(R"({"assignment": [2, 1, null]})", p), ValidationError);
  EXPECT_THROW(load_allocation(R"({"assignment": [2, 1, 3]})", p), ValidationError);
  EXPECT_THROW(load_allocation(R"({"bundles": [[2], [1]]})", p), ValidationError);
  EXPECT_THROW(load_allocation(R"({"bundles": [[2, 3], [1, 3]]})", p), ValidationError);
  EXPECT_THROW(load_allocation(R"({"other": 1})", p), ParseError);
}

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(to_string(Rational(3, 2)), "3/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(RationalTest, DoubleConversionIsMonotone) {
  EXPECT_EQ(to_double(Rational(1, 3)), 1.0 / 3.0);
  EXPECT_EQ(to_double(Rational(2, 3)), 2.0 / 3.0);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(1, 1000000);
  for (int k = 0; k < 1000; ++k) {
    const Rational a(d(rng), d(rng));
    const Rational b(d(rng), d(rng));
    if (a <= b) {
      EXPECT_LE(to_double(a), to_double(b));
    } else {
      EXPECT_GE(to_double(a), to_double(b));
    }
  }
}

}  // namespace
}  // namespace fairalloc
