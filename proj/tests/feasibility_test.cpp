// Copyright 2026 The gdd4 Authors
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

#include "gdd4/feasibility.hpp"

#include <set>

#include "gdd4/catalog.hpp"
#include "gdd4/error.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace gdd4 {
namespace {

using testing_oracles::brute_force;
using testing_oracles::kOpenTypes;

std::set<std::string> as_strings(const std::vector<GroupType>& types) {
  std::set<std::string> out;
  for (const auto& t : types) out.insert(format_type(t));
  return out;
}

const ConditionResult& condition(const FeasibilityReport& r, const std::string& id) {
  for (const auto& c : r.conditions) {
    if (c.id == id) return c;
  }
  throw std::runtime_error("missing condition " + id);
}

TEST(CheckFeasibleTest, OpenTypeIsFeasible) {
  EXPECT_TRUE(check_feasible(parse_type("2^6 5^2 11^2")).feasible());
}

TEST(CheckFeasibleTest, OneToTheFiveFailsC2) {
  const auto r = check_feasible(parse_type("1^5"));
  EXPECT_FALSE(r.feasible());
  EXPECT_FALSE(condition(r, "C2").passed);
}

TEST(CheckFeasibleTest, NecessaryIsNotSufficient) {
  // No 4-GDD of type 2^4 exists, but every counting condition holds.
  const auto r = check_feasible(parse_type("2^4"));
  EXPECT_TRUE(r.feasible());
  for (const auto& c : r.conditions) EXPECT_TRUE(c.passed) << c.id;
}

TEST(CheckFeasibleTest, TightLargestGroupBound) {
  const auto r = check_feasible(parse_type("3^8 6^1 12^1"));
  EXPECT_TRUE(r.feasible());
  const auto& c4 = condition(r, "C4");
  EXPECT_EQ(c4.witness, (std::vector<long>{42, 42}));
  EXPECT_FALSE(check_feasible(parse_type("3^7 6^1 15^1")).feasible());
}

TEST(CheckFeasibleTest, ReportOverallMatchesConditions) {
  for (const char* text : {"1^4", "4^1", "2^2", "1^7", "3^5", "4^4"}) {
    const auto r = check_feasible(parse_type(text));
    bool all = true;
    for (const auto& c : r.conditions) all = all && c.passed;
    EXPECT_EQ(r.feasible(), all) << text;
    EXPECT_EQ(r.conditions.size(), 4u);
  }
  EXPECT_FALSE(condition(check_feasible(parse_type("4^1")), "C1").passed);
}

TEST(EnumerateFeasibleTest, TwelvePoints) {
  const auto got = as_strings(enumerate_feasible(12, 12));
  EXPECT_TRUE(got.count("3^4"));
  EXPECT_FALSE(got.count("2^6"));
  // (12 - 1) is not divisible by 3, so 1^9 3^1 fails C2.
  EXPECT_FALSE(got.count("1^9 3^1"));
  EXPECT_EQ(got, brute_force(12));
}

TEST(EnumerateFeasibleTest, FourPoints) {
  const auto got = enumerate_feasible(4, 4);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(format_type(got[0]), "1^4");
}

TEST(EnumerateFeasibleTest, ContainsEveryOpenType) {
  const auto got = as_strings(enumerate_feasible(31, 50, 2));
  for (const auto& t : kOpenTypes) {
    EXPECT_TRUE(got.count(format_type(parse_type(t)))) << t;
    EXPECT_TRUE(check_feasible(parse_type(t)).feasible()) << t;
  }
}

TEST(EnumerateFeasibleTest, MatchesBruteForceUpToTwenty) {
  for (int v = 1; v <= 20; ++v) {
    EXPECT_EQ(as_strings(enumerate_feasible(v, v)), brute_force(v)) << "v = " << v;
  }
  std::set<std::string> all;
  for (int v = 1; v <= 20; ++v) {
    auto part = brute_force(v);
    all.insert(part.begin(), part.end());
  }
  EXPECT_EQ(as_strings(enumerate_feasible(1, 20)), all);
}

TEST(EnumerateFeasibleTest, OrderedByPointsThenString) {
  const auto got = enumerate_feasible(1, 50);
  for (std::size_t i = 1; i < got.size(); ++i) {
    const int va = point_count(got[i - 1]);
    const int vb = point_count(got[i]);
    ASSERT_LE(va, vb);
    if (va == vb) EXPECT_LT(format_type(got[i - 1]), format_type(got[i]));
  }
  for (const auto& t : got) {
    EXPECT_TRUE(check_feasible(t).feasible());
    EXPECT_NO_THROW(block_count(t));
    for (auto [g, u] : t.terms()) EXPECT_NO_THROW(replication(t, g));
  }
}

TEST(EnumerateFeasibleTest, ResidueFilter) {
  for (const auto& t : enumerate_feasible(1, 50, 1)) EXPECT_EQ(point_count(t) % 3, 1);
}

TEST(EnumerateFeasibleTest, SerialAndParallelAgree) {
  set_thread_count(4);
  EXPECT_EQ(enumerate_feasible(1, 60, std::nullopt, Exec::serial),
            enumerate_feasible(1, 60, std::nullopt, Exec::parallel));
}

TEST(EnumerateFeasibleTest, BadBounds) {
  EXPECT_THROW(enumerate_feasible(5, 4), Error);
  EXPECT_THROW(enumerate_feasible(0, 4), Error);
  EXPECT_THROW(enumerate_feasible(1, 4, 3), Error);
}

TEST(EnumerateFeasibleTest, CatalogTypesAreFeasible) {
  for (const auto& e : list_entries()) {
    EXPECT_TRUE(check_feasible(e.claimed_type).feasible()) << e.name;
  }
}

}  // namespace
}  // namespace gdd4
