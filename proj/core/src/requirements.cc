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

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "vbe/errors.h"

namespace vbe {

std::string_view ComparatorSymbol(Comparator cmp) {
  switch (cmp) {
    case Comparator::kLess:
      return "<";
    case Comparator::kLessEqual:
      return "<=";
    case Comparator::kEqual:
      return "==";
    case Comparator::kGreaterEqual:
      return ">=";
    case Comparator::kGreater:
      return ">";
  }
  return "?";
}

bool Compare(const Rational& lhs, Comparator cmp, const Rational& rhs) {
  switch (cmp) {
    case Comparator::kLess:
      return lhs < rhs;
    case Comparator::kLessEqual:
      return lhs <= rhs;
    case Comparator::kEqual:
      return lhs == rhs;
    case Comparator::kGreaterEqual:
      return lhs >= rhs;
    case Comparator::kGreater:
      return lhs > rhs;
  }
  return false;
}

bool Compare(const std::optional<Rational>& lhs, Comparator cmp,
             const std::optional<Rational>& rhs) {
  return lhs && rhs && Compare(*lhs, cmp, *rhs);
}

ActorPredicate::ActorPredicate(Atom atom)
    : kind_(Kind::kAtom), atom_(std::move(atom)) {}

ActorPredicate::ActorPredicate(Kind kind, std::vector<ActorPredicate> operands)
    : kind_(kind), operands_(std::move(operands)) {}

ActorPredicate ActorPredicate::And(std::vector<ActorPredicate> operands) {
  if (operands.empty()) throw InvalidArgument("'and' needs an operand");
  if (operands.size() == 1) return std::move(operands.front());
  return ActorPredicate(Kind::kAnd, std::move(operands));
}

ActorPredicate ActorPredicate::Or(std::vector<ActorPredicate> operands) {
  if (operands.empty()) throw InvalidArgument("'or' needs an operand");
  if (operands.size() == 1) return std::move(operands.front());
  return ActorPredicate(Kind::kOr, std::move(operands));
}

ActorPredicate ActorPredicate::Not(ActorPredicate operand) {
  std::vector<ActorPredicate> operands;
  operands.push_back(std::move(operand));
  return ActorPredicate(Kind::kNot, std::move(operands));
}

Atom MakeAtom(MetricId metric, Comparator cmp, Rational threshold,
              bool on_parent) {
  return Atom{metric, cmp, Reference(std::move(threshold)), on_parent};
}

Atom MakeRelativeAtom(MetricId metric, Comparator cmp) {
  return Atom{metric, cmp, Reference(AvgOfOthers{metric}), false};
}

std::string_view RequirementKind(const RequirementBody& body) {
  struct {
    std::string_view operator()(const NetworkConstraint&) { return "network"; }
    std::string_view operator()(const ForAllActors&) { return "forall"; }
    std::string_view operator()(const CountActors&) { return "count"; }
    std::string_view operator()(const PairwisePath&) { return "path"; }
    std::string_view operator()(const AnchorDesignation&) { return "anchor"; }
  } visitor;
  return std::visit(visitor, body);
}

namespace {

bool IsValidLabel(std::string_view label) {
  return !label.empty() && std::all_of(label.begin(), label.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.';
  });
}

void ValidateThreshold(MetricId metric, const Rational& value) {
  if (value < 0) {
    throw InvalidArgument(fmt::format("negative threshold for '{}'",
                                      MetricName(metric)));
  }
  if (IsFractionValued(metric) && value > 1) {
    throw InvalidArgument(fmt::format(
        "threshold {} for '{}' must be a fraction in [0,1] or a percentage",
        LiteralString(value), MetricName(metric)));
  }
}

bool UsesAnchor(const RequirementBody& body) {
  if (std::holds_alternative<AnchorDesignation>(body)) return true;
  if (const auto* path = std::get_if<PairwisePath>(&body)) {
    return path->scope != PathScope::kAllPairs;
  }
  if (const auto* all = std::get_if<ForAllActors>(&body)) {
    return all->except_anchor;
  }
  return false;
}

}  // namespace

void ValidatePredicate(const ActorPredicate& predicate) {
  predicate.ForEachAtom([](const Atom& atom) {
    if (IsNetworkScoped(atom.metric)) {
      throw InvalidArgument(fmt::format(
          "network metric '{}' used in an actor predicate",
          MetricName(atom.metric)));
    }
    if (const auto* avg = std::get_if<AvgOfOthers>(&atom.reference)) {
      if (IsNetworkScoped(avg->metric)) {
        throw InvalidArgument(fmt::format(
            "avg_others needs an actor metric, got '{}'",
            MetricName(avg->metric)));
      }
    } else {
      ValidateThreshold(atom.metric, std::get<Rational>(atom.reference));
    }
  });
}

RequirementSet::RequirementSet(std::string name) : name_(std::move(name)) {}

RequirementSet& RequirementSet::Add(std::string label, RequirementBody body) {
  return Add(Requirement{std::move(label), std::move(body)});
}

RequirementSet& RequirementSet::Add(Requirement requirement) {
  if (!IsValidLabel(requirement.label)) {
    throw InvalidArgument(
        fmt::format("invalid requirement label '{}'", requirement.label));
  }
  for (const Requirement& existing : requirements_) {
    if (existing.label == requirement.label) {
      throw InvalidArgument(
          fmt::format("duplicate requirement label '{}'", requirement.label));
    }
  }

  const bool has_designation =
      std::any_of(requirements_.begin(), requirements_.end(),
                  [](const Requirement& r) {
                    return std::holds_alternative<AnchorDesignation>(r.body);
                  });

  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, NetworkConstraint>) {
          if (!IsNetworkScoped(body.metric)) {
            throw InvalidArgument(fmt::format(
                "actor metric '{}' used as a network constraint",
                MetricName(body.metric)));
          }
          ValidateThreshold(body.metric, body.threshold);
        } else if constexpr (std::is_same_v<T, ForAllActors>) {
          ValidatePredicate(body.predicate);
        } else if constexpr (std::is_same_v<T, CountActors>) {
          ValidatePredicate(body.predicate);
          if (body.bound.value < 0) {
            throw InvalidArgument("negative count bound");
          }
          if (body.bound.fraction_of_size && body.bound.value > 1) {
            throw InvalidArgument("fraction-of-size bound must be in [0,1]");
          }
          if (!body.bound.fraction_of_size && !IsInteger(body.bound.value)) {
            throw InvalidArgument("count bound must be an integer");
          }
        } else if constexpr (std::is_same_v<T, PairwisePath>) {
          if (body.threshold < 0) {
            throw InvalidArgument("negative path-length threshold");
          }
        } else if constexpr (std::is_same_v<T, AnchorDesignation>) {
          if (has_designation) {
            throw InvalidArgument("anchor designated twice");
          }
          if (body.anchor && !IsValidActorId(*body.anchor)) {
            throw InvalidArgument(
                fmt::format("invalid anchor id '{}'", *body.anchor));
          }
        }
      },
      requirement.body);

  if (UsesAnchor(requirement.body) &&
      !std::holds_alternative<AnchorDesignation>(requirement.body) &&
      !has_designation) {
    throw InvalidArgument(fmt::format(
        "requirement '{}' refers to the anchor but no anchor is designated "
        "before it",
        requirement.label));
  }

  requirements_.push_back(std::move(requirement));
  return *this;
}

bool RequirementSet::NeedsAnchor() const {
  return std::any_of(requirements_.begin(), requirements_.end(),
                     [](const Requirement& r) { return UsesAnchor(r.body); });
}

std::optional<ActorId> RequirementSet::DesignatedAnchor() const {
  for (const Requirement& r : requirements_) {
    if (const auto* anchor = std::get_if<AnchorDesignation>(&r.body)) {
      return anchor->anchor;
    }
  }
  return std::nullopt;
}

RequirementSet GenericVbeRequirements(int max_eccentricity) {
  if (max_eccentricity < 1) {
    throw InvalidArgument("max_eccentricity must be at least 1");
  }
  RequirementSet set("generic_vbe");
  set.Add("min_size", NetworkConstraint{MetricId::kSize,
                                        Comparator::kGreaterEqual, 3});
  set.Add("min_density",
          NetworkConstraint{MetricId::kDensity, Comparator::kGreaterEqual,
                            MakeRational(1, 2)});
  set.Add("max_eccentricity",
          ForAllActors{MakeAtom(MetricId::kEccentricity,
                                Comparator::kLessEqual, max_eccentricity)});
  return set;
}

ActorPredicate MemberPredicate() {
  return ActorPredicate::Or(
      {MakeAtom(MetricId::kInDensity, Comparator::kGreater, MakeRational(1, 2)),
       MakeAtom(MetricId::kOutDensity, Comparator::kGreater,
                MakeRational(1, 2))});
}

ActorPredicate PlannerPredicate() {
  return ActorPredicate::And(
      {MakeRelativeAtom(MetricId::kInDegree, Comparator::kGreater),
       MakeRelativeAtom(MetricId::kOutDegree, Comparator::kGreater),
       MakeRelativeAtom(MetricId::kReciprocatedDensity, Comparator::kGreater)});
}

ActorPredicate BrokerPredicate() {
  return ActorPredicate::And(
      {MakeRelativeAtom(MetricId::kInDegree, Comparator::kGreater),
       MakeRelativeAtom(MetricId::kOutDegree, Comparator::kGreater)});
}

RequirementSet SteelManufacturersRequirements() {
  RequirementSet set("steel_manufacturers_vbe");
  set.Add("R1",
          NetworkConstraint{MetricId::kSize, Comparator::kGreaterEqual, 5});
  set.Add("R2", NetworkConstraint{MetricId::kDensity, Comparator::kGreater,
                                  MakeRational(1, 2)});
  set.Add("R3", NetworkConstraint{MetricId::kReciprocatedTieRatio,
                                  Comparator::kGreater, MakeRational(1, 2)});
  set.Add("R4", CountActors{MakeAtom(MetricId::kInDensity, Comparator::kGreater,
                                     MakeRational(4, 5)),
                            Comparator::kGreaterEqual, CountBound{1, false}});
  set.Add("R5",
          CountActors{
              ActorPredicate::And(
                  {MakeAtom(MetricId::kInDensity, Comparator::kGreater,
                            MakeRational(4, 5)),
                   MakeAtom(MetricId::kOutDensity, Comparator::kGreater,
                            MakeRational(7, 10)),
                   MakeAtom(MetricId::kReciprocatedDensity,
                            Comparator::kGreater, MakeRational(4, 5))}),
              Comparator::kGreaterEqual, CountBound{1, false}});
  return set;
}

RequirementSet WholesalerRequirements() {
  RequirementSet set("wholesaler");
  set.Add("anchor", AnchorDesignation{});
  set.Add("three_distributors",
          NetworkConstraint{MetricId::kSize, Comparator::kEqual, 4});
  set.Add("direct_friends",
          PairwisePath{PathScope::kAnchorToOthers, Comparator::kEqual, 1});
  set.Add("not_acquainted",
          PairwisePath{PathScope::kOthersToOthers, Comparator::kGreater, 1});
  set.Add("outside_partner",
          ForAllActors{MakeAtom(MetricId::kNeighborhoodSize,
                                Comparator::kGreater, 1, /*on_parent=*/true),
                       /*except_anchor=*/true});
  return set;
}

}  // namespace vbe
