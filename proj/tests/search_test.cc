// Copyright 2026 The VBE Social Requirements Authors
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

#include "vbe/search.h"

#include <random>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "oracle.h"
#include "search_oracle.h"
#include "vbe/errors.h"
#include "vbe/fixtures.h"
#include "vbe/network_io.h"
#include "vbe/requirements_parser.h"

namespace vbe {
namespace {

using ::testing::Contains;
using ::testing::ElementsAre;
using ::testing::IsEmpty;
using ::testing::Not;

SocialNetwork Steel10() { return ParseMatrixCsv(fixtures::kSteel10MatrixCsv); }
SocialNetwork Wholesale() {
  return ParseEdgeList(fixtures::kWholesaleEdges, true);
}

SearchConfig Exhaustive(int min_size, int max_size,
                        Objective objective = Objective::kMaximizeSize) {
  SearchConfig cfg;
  cfg.min_size = min_size;
  cfg.max_size = max_size;
  cfg.objective = objective;
  return cfg;
}

SearchConfig Peel(int min_size, int max_size) {
  SearchConfig cfg = Exhaustive(min_size, max_size);
  cfg.mode = SearchMode::kGreedyPeel;
  return cfg;
}

std::vector<std::vector<ActorId>> ActorSets(
    const std::vector<SubnetworkSolution>& solutions) {
  std::vector<std::vector<ActorId>> sets;
  for (const SubnetworkSolution& s : solutions) sets.push_back(s.actors);
  return sets;
}

TEST(SearchExhaustiveTest, SteelFullNetworkIsTopSolution) {
  const auto solutions =
      SearchExhaustive(Steel10(), SteelManufacturersRequirements(),
                       Exhaustive(5, 10));
  ASSERT_FALSE(solutions.empty());
  EXPECT_EQ(solutions.front().actors, Steel10().actors());
  EXPECT_EQ(solutions.front().objective_value, Rational(10));
  for (const SubnetworkSolution& s : solutions) {
    EXPECT_TRUE(s.report.overall);
    EXPECT_GE(s.actors.size(), 5u);
  }
}

TEST(SearchExhaustiveTest, UnsatisfiableGivesEmptyList) {
  const RequirementSet set = ParseRequirements("require size >= 11\n");
  EXPECT_THAT(SearchExhaustive(Steel10(), set, Exhaustive(1, 10)), IsEmpty());
}

TEST(SearchExhaustiveTest, WholesalerSizeFour) {
  const SocialNetwork net = Wholesale();
  EvaluationOptions options;
  options.anchor = "A";
  const auto sets = ActorSets(SearchExhaustive(
      net, WholesalerRequirements(), Exhaustive(4, 4), options));
  EXPECT_THAT(sets, Contains(std::vector<ActorId>{"A", "C", "E", "F"}));
  EXPECT_THAT(sets, Not(Contains(std::vector<ActorId>{"A", "F", "I", "J"})));
  for (const auto& s : sets) EXPECT_EQ(s.front(), "A");
}

TEST(SearchExhaustiveTest, CapExceeded) {
  SearchConfig cfg = Exhaustive(1, 10);
  cfg.enumeration_cap = 100;
  EXPECT_THROW(
      SearchExhaustive(Steel10(), SteelManufacturersRequirements(), cfg),
      CapExceeded);
}

TEST(SearchExhaustiveTest, BoundErrors) {
  const SocialNetwork net = Steel10();
  const RequirementSet set = SteelManufacturersRequirements();
  EXPECT_THROW(SearchExhaustive(net, set, Exhaustive(0, 3)), InvalidArgument);
  EXPECT_THROW(SearchExhaustive(net, set, Exhaustive(4, 3)), InvalidArgument);
  EXPECT_THROW(SearchExhaustive(net, set, Exhaustive(1, 11)), InvalidArgument);
  SearchConfig small = Exhaustive(1, 3);
  small.max_network_size = 8;
  EXPECT_THROW(SearchExhaustive(net, set, small), InvalidArgument);
  EXPECT_THROW(SearchExhaustive(net, set, Peel(1, 3)), InvalidArgument);
  EXPECT_THROW(SearchExhaustive(Wholesale(), WholesalerRequirements(),
                                Exhaustive(4, 4)),
               InvalidArgument);
}

TEST(SearchExhaustiveTest, FirstFoundStopsEarly) {
  const auto solutions =
      SearchExhaustive(Steel10(), SteelManufacturersRequirements(),
                       Exhaustive(5, 10, Objective::kFirstFound));
  ASSERT_EQ(solutions.size(), 1u);
  EXPECT_EQ(solutions[0].actors.size(), 10u);
}

TEST(SearchExhaustiveTest, DensityObjectiveOrdering) {
  const auto solutions =
      SearchExhaustive(Steel10(), SteelManufacturersRequirements(),
                       Exhaustive(5, 6, Objective::kMaximizeDensity));
  ASSERT_FALSE(solutions.empty());
  for (std::size_t i = 1; i < solutions.size(); ++i) {
    EXPECT_GE(solutions[i - 1].objective_value, solutions[i].objective_value);
  }
}

TEST(SearchExhaustiveTest, MatchesOracleOnRandomNetworks) {
  std::mt19937 rng(2718);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + round % 7;
    const SocialNetwork net =
        testing::FromMatrix(testing::RandomMatrix(rng, n, 0.5));
    const RequirementSet set = testing::RandomRequirementSet(rng);
    const int lo = 1 + static_cast<int>(rng() % n);
    const int hi = lo + static_cast<int>(rng() % (n - lo + 1));
    const Objective objective = round % 2 ? Objective::kMaximizeDensity
                                          : Objective::kMaximizeSize;
    const auto got = SearchExhaustive(net, set, Exhaustive(lo, hi, objective));
    const auto want = testing::OracleSearch(net, set, lo, hi, objective);
    ASSERT_EQ(got.size(), want.size()) << SerializeRequirements(set);
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].actors, want[i].first);
      EXPECT_EQ(got[i].objective_value, want[i].second);
    }
  }
}

TEST(SearchGreedyPeelTest, AlreadySatisfied) {
  const PeelResult result =
      SearchGreedyPeel(Steel10(), SteelManufacturersRequirements(), Peel(5, 10));
  ASSERT_TRUE(result.solution.has_value());
  EXPECT_THAT(result.removals, IsEmpty());
  EXPECT_EQ(result.solution->actors, Steel10().actors());
}

TEST(SearchGreedyPeelTest, UnreachableGivesNone) {
  const RequirementSet set = ParseRequirements("require size >= 11\n");
  const PeelResult result = SearchGreedyPeel(Steel10(), set, Peel(5, 10));
  EXPECT_FALSE(result.solution.has_value());
  EXPECT_EQ(result.removals.size(), 5u);
}

TEST(SearchGreedyPeelTest, SparseFRemovesFFirst) {
  const SocialNetwork net = ParseMatrixCsv(fixtures::kSteel10SparseFMatrixCsv);
  RequirementSet set = SteelManufacturersRequirements();
  set.Add("members", ForAllActors{MemberPredicate()});
  EXPECT_FALSE(Evaluate(net, set).overall);
  const PeelResult result = SearchGreedyPeel(net, set, Peel(5, 10));
  ASSERT_FALSE(result.removals.empty());
  EXPECT_EQ(result.removals.front(), "F");
  ASSERT_TRUE(result.solution.has_value());
  EXPECT_EQ(result.solution->report.removals, result.removals);
  EXPECT_TRUE(result.solution->report.overall);
}

TEST(SearchGreedyPeelTest, KeepsPeelingAboveMaxSize) {
  const PeelResult result =
      SearchGreedyPeel(Steel10(), SteelManufacturersRequirements(), Peel(5, 8));
  ASSERT_TRUE(result.solution.has_value());
  EXPECT_LE(result.solution->actors.size(), 8u);
  EXPECT_EQ(result.removals.size() + result.solution->actors.size(), 10u);
}

TEST(SearchGreedyPeelTest, NeverRemovesAnchor) {
  const SocialNetwork net = Wholesale();
  EvaluationOptions options;
  options.anchor = "A";
  const PeelResult result =
      SearchGreedyPeel(net, WholesalerRequirements(), Peel(2, 10), options);
  EXPECT_THAT(result.removals, Not(Contains("A")));
  if (result.solution) {
    EXPECT_THAT(result.solution->actors, Contains("A"));
  }
}

TEST(SearchGreedyPeelTest, SoundOnRandomNetworks) {
  std::mt19937 rng(99);
  int successes = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 3 + round % 6;
    const SocialNetwork net =
        testing::FromMatrix(testing::RandomMatrix(rng, n, 0.5));
    const RequirementSet set = testing::RandomRequirementSet(rng);
    const PeelResult result =
        SearchGreedyPeel(net, set, Peel(1, static_cast<int>(n)));
    if (!result.solution) continue;
    ++successes;
    const SocialNetwork sub = net.InducedSubnetwork(result.solution->actors);
    EvaluationOptions options;
    options.parent = &net;
    EXPECT_TRUE(Evaluate(sub, set, options).overall);
    EXPECT_EQ(result.removals.size() + sub.size(), n);
  }
  EXPECT_GT(successes, 0);
}

TEST(SearchTest, Determinism) {
  const SocialNetwork net = ParseMatrixCsv(fixtures::kSteel10SparseFMatrixCsv);
  RequirementSet set = SteelManufacturersRequirements();
  set.Add("members", ForAllActors{MemberPredicate()});
  const PeelResult a = SearchGreedyPeel(net, set, Peel(5, 10));
  const PeelResult b = SearchGreedyPeel(net, set, Peel(5, 10));
  EXPECT_EQ(a.removals, b.removals);
  EXPECT_EQ(ActorSets(SearchExhaustive(net, set, Exhaustive(7, 9))),
            ActorSets(SearchExhaustive(net, set, Exhaustive(7, 9))));
}

}  // namespace
}  // namespace vbe
