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

#ifndef VBE_REQUIREMENTS_H_
#define VBE_REQUIREMENTS_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vbe/metrics.h"
#include "vbe/network.h"
#include "vbe/rational.h"

namespace vbe {

enum class Comparator { kLess, kLessEqual, kEqual, kGreaterEqual, kGreater };

// ASCII spelling used by the requirements grammar: "<", "<=", "==", ">=", ">".
std::string_view ComparatorSymbol(Comparator cmp);

bool Compare(const Rational& lhs, Comparator cmp, const Rational& rhs);
// False whenever either side is undefined.
bool Compare(const std::optional<Rational>& lhs, Comparator cmp,
             const std::optional<Rational>& rhs);

// Reference value "mean of `metric` over all other actors of the same
// network".
struct AvgOfOthers {
  MetricId metric;
  friend bool operator==(const AvgOfOthers&, const AvgOfOthers&) = default;
};

using Reference = std::variant<Rational, AvgOfOthers>;

// `metric(actor) cmp reference`, evaluated on the network under test or, when
// `on_parent` is set, on the parent network the subset was drawn from.
struct Atom {
  MetricId metric;
  Comparator cmp;
  Reference reference;
  bool on_parent = false;

  friend bool operator==(const Atom&, const Atom&) = default;
};

// Boolean combination of atoms over a single actor.
class ActorPredicate {
 public:
  enum class Kind { kAtom, kAnd, kOr, kNot };

  // Implicit so that atoms can be used wherever a predicate is expected.
  ActorPredicate(Atom atom);  // NOLINT

  // And/Or with a single operand return that operand unchanged.
  static ActorPredicate And(std::vector<ActorPredicate> operands);
  static ActorPredicate Or(std::vector<ActorPredicate> operands);
  static ActorPredicate Not(ActorPredicate operand);

  Kind kind() const { return kind_; }
  // Valid only when kind() == kAtom.
  const Atom& atom() const { return *atom_; }
  const std::vector<ActorPredicate>& operands() const { return operands_; }

  // Visits every atom, left to right.
  template <typename Fn>
  void ForEachAtom(Fn&& fn) const {
    if (kind_ == Kind::kAtom) {
      fn(*atom_);
      return;
    }
    for (const ActorPredicate& op : operands_) op.ForEachAtom(fn);
  }

  friend bool operator==(const ActorPredicate&, const ActorPredicate&) =
      default;

 private:
  ActorPredicate(Kind kind, std::vector<ActorPredicate> operands);

  Kind kind_;
  std::optional<Atom> atom_;
  std::vector<ActorPredicate> operands_;
};

// `metric cmp threshold`.
Atom MakeAtom(MetricId metric, Comparator cmp, Rational threshold,
              bool on_parent = false);
// `metric cmp avg_others(metric)`.
Atom MakeRelativeAtom(MetricId metric, Comparator cmp);

struct NetworkConstraint {
  MetricId metric;
  Comparator cmp;
  Rational threshold;
  friend bool operator==(const NetworkConstraint&,
                         const NetworkConstraint&) = default;
};

struct ForAllActors {
  ActorPredicate predicate;
  // Skip the designated anchor actor.
  bool except_anchor = false;
  friend bool operator==(const ForAllActors&, const ForAllActors&) = default;
};

// Integer count, or a share of the network size in [0, 1].
struct CountBound {
  Rational value;
  bool fraction_of_size = false;
  friend bool operator==(const CountBound&, const CountBound&) = default;
};

struct CountActors {
  ActorPredicate predicate;
  Comparator cmp;
  CountBound bound;
  friend bool operator==(const CountActors&, const CountActors&) = default;
};

enum class PathScope { kAllPairs, kAnchorToOthers, kOthersToOthers };

// Shortest-path length constraint over ordered actor pairs.
struct PairwisePath {
  PathScope scope;
  Comparator cmp;
  int threshold;
  friend bool operator==(const PairwisePath&, const PairwisePath&) = default;
};

// Names the focal actor of an anchored set. An empty anchor must be supplied
// at evaluation time.
struct AnchorDesignation {
  std::optional<ActorId> anchor;
  friend bool operator==(const AnchorDesignation&,
                         const AnchorDesignation&) = default;
};

using RequirementBody = std::variant<NetworkConstraint, ForAllActors,
                                     CountActors, PairwisePath,
                                     AnchorDesignation>;

struct Requirement {
  std::string label;
  RequirementBody body;
  friend bool operator==(const Requirement&, const Requirement&) = default;
};

// Short kind tag: "network", "forall", "count", "path", "anchor".
std::string_view RequirementKind(const RequirementBody& body);

// Ordered list of uniquely labelled requirements.
class RequirementSet {
 public:
  explicit RequirementSet(std::string name = "requirements");

  // Validates the requirement (scopes, value ranges, unique label, anchored
  // constraints preceded by an anchor designation) and appends it. Throws
  // InvalidArgument.
  RequirementSet& Add(Requirement requirement);
  RequirementSet& Add(std::string label, RequirementBody body);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  const std::vector<Requirement>& requirements() const { return requirements_; }
  bool empty() const { return requirements_.empty(); }
  std::size_t size() const { return requirements_.size(); }

  // True if any requirement refers to the anchor.
  bool NeedsAnchor() const;
  // Anchor bound inside the set, if any.
  std::optional<ActorId> DesignatedAnchor() const;

  friend bool operator==(const RequirementSet&, const RequirementSet&) =
      default;

 private:
  std::string name_;
  std::vector<Requirement> requirements_;
};

// Throws InvalidArgument if the predicate uses a network-scoped metric, or an
// absolute reference outside the metric's value range.
void ValidatePredicate(const ActorPredicate& predicate);

// Size >= 3, density >= 50% and every actor's eccentricity bounded by
// `max_eccentricity` (>= 1).
RequirementSet GenericVbeRequirements(int max_eccentricity);

// VBE member: in_density > 50% or out_density > 50%.
ActorPredicate MemberPredicate();
// VO planner: in_degree, out_degree and reciprocated_density each above the
// average of the other actors.
ActorPredicate PlannerPredicate();
// VO broker: in_degree and out_degree above the average of the other actors.
ActorPredicate BrokerPredicate();

// The five steel-manufacturer requirements R1..R5.
RequirementSet SteelManufacturersRequirements();

// Wholesaler planning its distribution network: three distributors who are
// direct friends of the anchor, not directly acquainted with each other, each
// with another partner in the parent network.
RequirementSet WholesalerRequirements();

}  // namespace vbe

#endif  // VBE_REQUIREMENTS_H_
