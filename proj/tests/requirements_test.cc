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

#include "vbe/requirements.h"

#include <random>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "oracle.h"
#include "vbe/errors.h"
#include "vbe/evaluator.h"
#include "vbe/fixtures.h"
#include "vbe/network_io.h"
#include "vbe/requirements_parser.h"

namespace vbe {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

SocialNetwork Steel10() { return ParseMatrixCsv(fixtures::kSteel10MatrixCsv); }

SocialNetwork Complete(std::size_t n) {
  SocialNetwork net(testing::Labels(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) net.AddTie(i, j);
  return net;
}

// Directed cycle with chords: every actor has in- and out-degree 2.
SocialNetwork Regular(std::size_t n) {
  SocialNetwork net(testing::Labels(n));
  for (std::size_t i = 0; i < n; ++i) {
    net.AddTie(i, (i + 1) % n);
    net.AddTie(i, (i + 2) % n);
  }
  return net;
}

Rational R(long long n, long long d = 1) { return Rational(n, d); }

TEST(ComparatorTest, UndefinedAlwaysFalse) {
  for (int c = 0; c < 5; ++c) {
    const auto cmp = static_cast<Comparator>(c);
    EXPECT_FALSE(Compare(std::nullopt, cmp, R(0)));
    EXPECT_FALSE(Compare(R(0), cmp, std::nullopt));
  }
  EXPECT_TRUE(Compare(R(1, 2), Comparator::kGreaterEqual, R(2, 4)));
  EXPECT_FALSE(Compare(R(1, 2), Comparator::kGreater, R(2, 4)));
}

TEST(RequirementSetTest, Validation) {
  RequirementSet set;
  set.Add("a", NetworkConstraint{MetricId::kSize, Comparator::kGreaterEqual, 3});
  EXPECT_THROW(set.Add("a", NetworkConstraint{MetricId::kSize,
                                              Comparator::kLess, 9}),
               InvalidArgument);
  EXPECT_THROW(set.Add("b", NetworkConstraint{MetricId::kInDegree,
                                              Comparator::kLess, 9}),
               InvalidArgument);
  EXPECT_THROW(set.Add("c", NetworkConstraint{MetricId::kDensity,
                                              Comparator::kLess, 50}),
               InvalidArgument);
  EXPECT_THROW(set.Add("d", ForAllActors{MakeAtom(MetricId::kDensity,
                                                  Comparator::kLess, 0)}),
               InvalidArgument);
  EXPECT_THROW(set.Add("e", CountActors{MakeAtom(MetricId::kInDegree,
                                                 Comparator::kLess, 1),
                                        Comparator::kGreaterEqual,
                                        CountBound{R(3, 2), true}}),
               InvalidArgument);
  // Anchored path without a designation.
  EXPECT_THROW(set.Add("f", PairwisePath{PathScope::kAnchorToOthers,
                                         Comparator::kEqual, 1}),
               InvalidArgument);
  EXPECT_THROW(set.Add("bad label", AnchorDesignation{}), InvalidArgument);
  EXPECT_EQ(set.size(), 1u);
  EXPECT_FALSE(set.NeedsAnchor());
}

TEST(GenericVbeTest, CliqueSatisfies) {
  const EvaluationReport report =
      Evaluate(Complete(4), GenericVbeRequirements(2));
  EXPECT_TRUE(report.overall);
}

TEST(GenericVbeTest, TwoActorsFailSize) {
  const EvaluationReport report =
      Evaluate(Complete(2), GenericVbeRequirements(2));
  EXPECT_FALSE(report.overall);
  EXPECT_EQ(report.verdicts[0].label, "min_size");
  EXPECT_FALSE(report.verdicts[0].satisfied);
}

TEST(GenericVbeTest, SteelEccentricity) {
  // Directed distances: A, D, G, H and I each need three hops to reach F.
  const EvaluationReport strict = Evaluate(Steel10(), GenericVbeRequirements(2));
  EXPECT_TRUE(strict.verdicts[0].satisfied);
  EXPECT_TRUE(strict.verdicts[1].satisfied);
  EXPECT_FALSE(strict.verdicts[2].satisfied);
  std::vector<ActorId> violators;
  for (const Violation& v : strict.verdicts[2].violators) {
    violators.push_back(v.actor);
  }
  EXPECT_THAT(violators, ElementsAre("A", "D", "G", "H", "I"));

  EXPECT_TRUE(Evaluate(Steel10(), GenericVbeRequirements(3)).overall);
  EvaluationOptions undirected;
  undirected.paths.view = PathView::kUndirected;
  EXPECT_TRUE(
      Evaluate(Steel10(), GenericVbeRequirements(2), undirected).overall);
  EXPECT_THROW(GenericVbeRequirements(0), InvalidArgument);
}

TEST(MemberPredicateTest, Examples) {
  const SocialNetwork steel = Steel10();
  EXPECT_TRUE(SatisfiesPredicate(steel, MemberPredicate(), "G"));
  EXPECT_TRUE(SatisfiesPredicate(steel, MemberPredicate(), "F"));
  const SocialNetwork sparse =
      ParseMatrixCsv(fixtures::kSteel10SparseFMatrixCsv);
  EXPECT_EQ(InDegree(sparse, "F"), 1);
  EXPECT_EQ(OutDegree(sparse, "F"), 3);
  EXPECT_FALSE(SatisfiesPredicate(sparse, MemberPredicate(), "F"));
  SocialNetwork loner({"A", "B", "C"});
  loner.AddTie("A", "B");
  EXPECT_FALSE(SatisfiesPredicate(loner, MemberPredicate(), "C"));
}

TEST(PlannerPredicateTest, Examples) {
  EXPECT_TRUE(SatisfiesPredicate(Steel10(), PlannerPredicate(), "E"));
  const SocialNetwork regular = Regular(6);
  for (const ActorId& a : regular.actors()) {
    EXPECT_FALSE(SatisfiesPredicate(regular, PlannerPredicate(), a));
  }
  EXPECT_FALSE(
      SatisfiesPredicate(SocialNetwork({"A"}), PlannerPredicate(), "A"));
}

TEST(BrokerPredicateTest, Examples) {
  const SocialNetwork steel = Steel10();
  EXPECT_TRUE(SatisfiesPredicate(steel, BrokerPredicate(), "B"));
  EXPECT_FALSE(SatisfiesPredicate(steel, BrokerPredicate(), "F"));
  const SocialNetwork regular = Regular(5);
  for (const ActorId& a : regular.actors()) {
    EXPECT_FALSE(SatisfiesPredicate(regular, BrokerPredicate(), a));
  }
}

TEST(RelativeAtomPropertyTest, RegularNetworksHaveNoStrictWinners) {
  std::mt19937 rng(17);
  for (std::size_t n = 3; n <= 9; ++n) {
    const SocialNetwork net = Regular(n);
    for (MetricId metric : {MetricId::kInDegree, MetricId::kOutDegree,
                            MetricId::kTotalDegree,
                            MetricId::kReciprocatedDensity}) {
      for (Comparator cmp : {Comparator::kGreater, Comparator::kLess}) {
        for (const ActorId& a : net.actors()) {
          EXPECT_FALSE(
              SatisfiesPredicate(net, MakeRelativeAtom(metric, cmp), a));
        }
      }
    }
  }
}

TEST(SteelTemplateTest, Structure) {
  const RequirementSet set = SteelManufacturersRequirements();
  ASSERT_EQ(set.size(), 5u);
  EXPECT_EQ(set.requirements()[0].body,
            RequirementBody(NetworkConstraint{
                MetricId::kSize, Comparator::kGreaterEqual, 5}));
  EXPECT_EQ(set.requirements()[1].body,
            RequirementBody(NetworkConstraint{
                MetricId::kDensity, Comparator::kGreater, R(1, 2)}));
}

TEST(SteelTemplateTest, Examples) {
  EXPECT_TRUE(Evaluate(Steel10(), SteelManufacturersRequirements()).overall);

  const EvaluationReport small =
      Evaluate(Complete(4), SteelManufacturersRequirements());
  EXPECT_FALSE(small.verdicts[0].satisfied);

  const SocialNetwork steel = Steel10();
  const SocialNetwork without_b_e = steel.InducedSubnetwork(
      std::vector<ActorId>{"A", "C", "D", "F", "G", "H", "I", "J"});
  const EvaluationReport report =
      Evaluate(without_b_e, SteelManufacturersRequirements());
  EXPECT_FALSE(report.verdicts[4].satisfied);
  EXPECT_TRUE(report.verdicts[4].witnesses.empty());
}

TEST(WholesalerTemplateTest, NeedsAnchor) {
  const SocialNetwork net = ParseEdgeList(fixtures::kWholesaleEdges, true);
  EXPECT_TRUE(WholesalerRequirements().NeedsAnchor());
  EXPECT_THROW(Evaluate(net, WholesalerRequirements()), InvalidArgument);
}

TEST(WholesalerTemplateTest, SizeThreeFails) {
  const SocialNetwork net = ParseEdgeList(fixtures::kWholesaleEdges, true);
  const SocialNetwork sub =
      net.InducedSubnetwork(std::vector<ActorId>{"A", "C", "E"});
  EvaluationOptions options;
  options.anchor = "A";
  options.parent = &net;
  const EvaluationReport report = Evaluate(sub, WholesalerRequirements(), options);
  EXPECT_FALSE(report.overall);
  EXPECT_EQ(report.verdicts[1].label, "three_distributors");
  EXPECT_FALSE(report.verdicts[1].satisfied);
}

TEST(ParseRequirementsTest, NetworkConstraint) {
  const RequirementSet set = ParseRequirements("require size >= 5\n");
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.requirements()[0].label, "R1");
  EXPECT_EQ(set.requirements()[0].body,
            RequirementBody(NetworkConstraint{MetricId::kSize,
                                              Comparator::kGreaterEqual, 5}));
}

TEST(ParseRequirementsTest, ExistsForm) {
  const RequirementSet set =
      ParseRequirements("require exists >= 1 actor (in_density > 0.8)");
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set.requirements()[0].body,
            RequirementBody(CountActors{
                MakeAtom(MetricId::kInDensity, Comparator::kGreater, R(4, 5)),
                Comparator::kGreaterEqual, CountBound{1, false}}));
}

TEST(ParseRequirementsTest, PercentAndFractionLiterals) {
  const RequirementSet set = ParseRequirements(
      "require a : density > 50%\n"
      "require b : density > 0.5\n"
      "require c : density > 1/2\n"
      "require d : density \xE2\x89\xA5 12.5%\n");
  EXPECT_EQ(std::get<NetworkConstraint>(set.requirements()[0].body).threshold,
            R(1, 2));
  EXPECT_EQ(std::get<NetworkConstraint>(set.requirements()[1].body).threshold,
            R(1, 2));
  EXPECT_EQ(std::get<NetworkConstraint>(set.requirements()[2].body).threshold,
            R(1, 2));
  EXPECT_EQ(std::get<NetworkConstraint>(set.requirements()[3].body).threshold,
            R(1, 8));
  EXPECT_EQ(std::get<NetworkConstraint>(set.requirements()[3].body).cmp,
            Comparator::kGreaterEqual);
}

TEST(ParseRequirementsTest, Errors) {
  try {
    ParseRequirements("# header\nrequire density > 50\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 19u);
    EXPECT_THAT(e.what(), HasSubstr("'%' suffix"));
  }
  EXPECT_THROW(ParseRequirements("require betweenness > 1"), ParseError);
  EXPECT_THROW(ParseRequirements("require forall actor (density > 0.5)"),
               ParseError);
  EXPECT_THROW(ParseRequirements("require in_degree > 1"), ParseError);
  EXPECT_THROW(ParseRequirements("require size >= 50%"), ParseError);
  EXPECT_THROW(ParseRequirements("require size >="), ParseError);
  EXPECT_THROW(ParseRequirements("require forall actor (in_degree > 1"),
               ParseError);
  EXPECT_THROW(ParseRequirements("require path anchor->others == 1"),
               ParseError);
  EXPECT_THROW(ParseRequirements("require a : size > 1\nrequire a : size > 2"),
               ParseError);
  EXPECT_THROW(ParseRequirements("requires size > 1"), ParseError);
  EXPECT_THROW(ParseRequirements("require path all == 1.5"), ParseError);
}

TEST(ParseRequirementsTest, WholesalerFile) {
  const RequirementSet set = ParseRequirements(
      "name wholesaler\n"
      "anchor\n"
      "require three_distributors : size == 4\n"
      "require direct_friends : path anchor->others == 1\n"
      "require not_acquainted : path others->others > 1\n"
      "require outside_partner : forall actor except anchor "
      "(neighborhood_size > 1 @parent)  # parent network\n");
  EXPECT_EQ(set, WholesalerRequirements());
}

TEST(ParseRequirementsTest, AnchorWithId) {
  const RequirementSet set = ParseRequirements(
      "anchor Acme Steel\nrequire path anchor->others <= 2\n");
  EXPECT_EQ(set.DesignatedAnchor(), "Acme Steel");
}

TEST(ParseRequirementsTest, PredicatePrecedence) {
  const RequirementSet set = ParseRequirements(
      "require forall actor (not in_degree > 1 and out_degree > 1 or "
      "closeness >= avg_others(closeness))");
  const auto& body = std::get<ForAllActors>(set.requirements()[0].body);
  const ActorPredicate expected = ActorPredicate::Or(
      {ActorPredicate::And(
           {ActorPredicate::Not(
                MakeAtom(MetricId::kInDegree, Comparator::kGreater, 1)),
            MakeAtom(MetricId::kOutDegree, Comparator::kGreater, 1)}),
       MakeRelativeAtom(MetricId::kCloseness, Comparator::kGreaterEqual)});
  EXPECT_EQ(body.predicate, expected);
}

TEST(RequirementsRoundTripTest, Templates) {
  for (const RequirementSet& set :
       {GenericVbeRequirements(2), SteelManufacturersRequirements(),
        WholesalerRequirements()}) {
    EXPECT_EQ(ParseRequirements(SerializeRequirements(set)), set)
        << SerializeRequirements(set);
  }
}

TEST(RequirementsRoundTripTest, RandomSets) {
  std::mt19937 rng(31337);
  for (int round = 0; round < 1000; ++round) {
    RequirementSet set = testing::RandomRequirementSet(rng);
    if (round % 3 == 0) {
      RequirementSet anchored("anchored");
      anchored.Add("anchor", AnchorDesignation{round % 2 ? "B" : std::optional<ActorId>()});
      anchored.Add("p", PairwisePath{PathScope::kOthersToOthers,
                                     Comparator::kGreater, round % 4});
      anchored.Add("q", ForAllActors{testing::RandomPredicate(rng), true});
      set = anchored;
    }
    const std::string text = SerializeRequirements(set);
    ASSERT_EQ(ParseRequirements(text), set) << text;
  }
}

}  // namespace
}  // namespace vbe
