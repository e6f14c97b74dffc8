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

#include "vbe/evaluator.h"

#include <algorithm>

#include <fmt/format.h>

#include "vbe/errors.h"
#include "vbe/requirements_parser.h"

namespace vbe {

namespace {

constexpr std::string_view kUndefinedNote = " (undefined metric)";

std::string ValueString(const std::optional<Rational>& value) {
  return value ? ObservedString(*value) : "undefined";
}

struct PredicateOutcome {
  bool holds = false;
  std::vector<std::string> failures;
};

// Evaluates predicates and requirements against one network snapshot (and
// the parent it was drawn from).
class Evaluation {
 public:
  Evaluation(const SocialNetwork& net, const SocialNetwork& parent,
             const PathOptions& paths)
      : net_(net),
        parent_(parent),
        calc_(net, paths),
        parent_calc_(&parent == &net ? std::nullopt
                                     : std::optional<MetricCalculator>(
                                           std::in_place, parent, paths)) {}

  void set_anchor(std::optional<std::size_t> anchor) { anchor_ = anchor; }

  PredicateOutcome Check(const ActorPredicate& predicate, std::size_t actor,
                         std::vector<MetricValue>* observed) const {
    switch (predicate.kind()) {
      case ActorPredicate::Kind::kAtom:
        return CheckAtom(predicate.atom(), actor, observed);
      case ActorPredicate::Kind::kNot: {
        const ActorPredicate& inner = predicate.operands().front();
        PredicateOutcome child = Check(inner, actor, observed);
        PredicateOutcome outcome{!child.holds, {}};
        if (!outcome.holds) {
          outcome.failures.push_back("not (" + PredicateToString(inner) + ")");
        }
        return outcome;
      }
      case ActorPredicate::Kind::kAnd:
      case ActorPredicate::Kind::kOr: {
        const bool conjunction = predicate.kind() == ActorPredicate::Kind::kAnd;
        PredicateOutcome outcome{conjunction, {}};
        std::vector<std::string> failures;
        for (const ActorPredicate& op : predicate.operands()) {
          PredicateOutcome child = Check(op, actor, observed);
          if (conjunction) {
            outcome.holds = outcome.holds && child.holds;
          } else {
            outcome.holds = outcome.holds || child.holds;
          }
          for (std::string& f : child.failures) {
            failures.push_back(std::move(f));
          }
        }
        if (!outcome.holds) outcome.failures = std::move(failures);
        return outcome;
      }
    }
    return {};
  }

  Verdict Run(const Requirement& requirement) const {
    Verdict verdict;
    verdict.label = requirement.label;
    verdict.kind = std::string(RequirementKind(requirement.body));
    std::visit([&](const auto& body) { Apply(body, verdict); },
               requirement.body);
    return verdict;
  }

 private:
  PredicateOutcome CheckAtom(const Atom& atom, std::size_t actor,
                             std::vector<MetricValue>* observed) const {
    const MetricCalculator& calc =
        atom.on_parent && parent_calc_ ? *parent_calc_ : calc_;
    std::size_t index = actor;
    if (atom.on_parent && parent_calc_) {
      const auto found = parent_.FindIndex(net_.actor(actor));
      if (!found) {
        throw InvalidArgument(fmt::format(
            "actor '{}' is missing from the parent network",
            net_.actor(actor)));
      }
      index = *found;
    }

    const std::optional<Rational> lhs = calc.ActorValue(atom.metric, index);
    std::optional<Rational> rhs;
    std::string reference;
    if (const auto* avg = std::get_if<AvgOfOthers>(&atom.reference)) {
      rhs = calc.AverageOfOthers(avg->metric, index);
      reference = fmt::format("avg_others({})={}", MetricName(avg->metric),
                              ValueString(rhs));
    } else {
      rhs = std::get<Rational>(atom.reference);
      reference = LiteralString(*rhs);
    }
    if (observed != nullptr) {
      MetricValue value{atom.metric, net_.actor(actor), lhs};
      if (std::find(observed->begin(), observed->end(), value) ==
          observed->end()) {
        observed->push_back(std::move(value));
      }
    }

    PredicateOutcome outcome{Compare(lhs, atom.cmp, rhs), {}};
    if (!outcome.holds) {
      outcome.failures.push_back(fmt::format(
          "{}={}, required {}{}{}", MetricName(atom.metric), ValueString(lhs),
          ComparatorSymbol(atom.cmp), reference,
          lhs && rhs ? "" : kUndefinedNote));
    }
    return outcome;
  }

  static std::string Join(const std::vector<std::string>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += "; ";
      out += parts[i];
    }
    return out;
  }

  void Apply(const NetworkConstraint& body, Verdict& verdict) const {
    const std::optional<Rational> value = calc_.NetworkValue(body.metric);
    verdict.observed.push_back(MetricValue{body.metric, std::nullopt, value});
    verdict.satisfied = Compare(value, body.cmp, body.threshold);
    verdict.detail = fmt::format(
        "{}={}, required {}{}{}", MetricName(body.metric), ValueString(value),
        ComparatorSymbol(body.cmp), LiteralString(body.threshold),
        value ? "" : kUndefinedNote);
  }

  void Apply(const ForAllActors& body, Verdict& verdict) const {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < net_.size(); ++i) {
      if (body.except_anchor && anchor_ == i) continue;
      ++checked;
      PredicateOutcome outcome = Check(body.predicate, i, &verdict.observed);
      if (outcome.holds) {
        verdict.witnesses.push_back(net_.actor(i));
      } else {
        verdict.violators.push_back(
            Violation{net_.actor(i), Join(outcome.failures),
                      static_cast<int>(outcome.failures.size())});
      }
    }
    verdict.satisfied = verdict.violators.empty();
    verdict.detail = fmt::format("{}/{} actors satisfy ({})",
                                 verdict.witnesses.size(), checked,
                                 PredicateToString(body.predicate));
  }

  void Apply(const CountActors& body, Verdict& verdict) const {
    std::vector<Violation> failing;
    for (std::size_t i = 0; i < net_.size(); ++i) {
      PredicateOutcome outcome = Check(body.predicate, i, &verdict.observed);
      if (outcome.holds) {
        verdict.witnesses.push_back(net_.actor(i));
      } else {
        failing.push_back(Violation{net_.actor(i), Join(outcome.failures),
                                    static_cast<int>(outcome.failures.size())});
      }
    }
    const Rational count = static_cast<long long>(verdict.witnesses.size());
    std::string required;
    if (body.bound.fraction_of_size) {
      const Rational share = count / static_cast<long long>(net_.size());
      verdict.satisfied = Compare(share, body.cmp, body.bound.value);
      required = fmt::format("{}{} of {} actors", ComparatorSymbol(body.cmp),
                             LiteralString(body.bound.value), net_.size());
    } else {
      verdict.satisfied = Compare(count, body.cmp, body.bound.value);
      required = fmt::format("{}{}", ComparatorSymbol(body.cmp),
                             LiteralString(body.bound.value));
    }
    if (!verdict.satisfied) verdict.violators = std::move(failing);
    verdict.detail = fmt::format("count={}, required {}",
                                 verdict.witnesses.size(), required);
  }

  void Apply(const PairwisePath& body, Verdict& verdict) const {
    const DistanceTable& table = calc_.distances();
    std::size_t pairs = 0;
    std::size_t failed = 0;
    for (std::size_t from = 0; from < net_.size(); ++from) {
      const bool from_anchor = anchor_ == from;
      if (body.scope == PathScope::kAnchorToOthers && !from_anchor) continue;
      if (body.scope == PathScope::kOthersToOthers && from_anchor) continue;
      std::vector<std::string> failures;
      for (std::size_t to = 0; to < net_.size(); ++to) {
        if (to == from) continue;
        if (body.scope == PathScope::kOthersToOthers && anchor_ == to) continue;
        ++pairs;
        const std::optional<int> d = table.Distance(from, to);
        const std::optional<Rational> length =
            d ? std::optional<Rational>(*d) : std::nullopt;
        if (Compare(length, body.cmp, Rational(body.threshold))) continue;
        failures.push_back(fmt::format(
            "path {}->{}={}, required {}{}{}", net_.actor(from),
            net_.actor(to), d ? std::to_string(*d) : "unreachable",
            ComparatorSymbol(body.cmp), body.threshold,
            d ? "" : kUndefinedNote));
      }
      if (failures.empty()) continue;
      failed += failures.size();
      verdict.violators.push_back(
          Violation{net_.actor(from), Join(failures),
                    static_cast<int>(failures.size())});
    }
    verdict.satisfied = failed == 0;
    verdict.detail = fmt::format("{}/{} pairs satisfy path {}{}",
                                 pairs - failed, pairs,
                                 ComparatorSymbol(body.cmp), body.threshold);
  }

  void Apply(const AnchorDesignation&, Verdict& verdict) const {
    verdict.satisfied = true;
    verdict.detail = fmt::format("anchor={}", net_.actor(*anchor_));
  }

  const SocialNetwork& net_;
  const SocialNetwork& parent_;
  MetricCalculator calc_;
  std::optional<MetricCalculator> parent_calc_;
  std::optional<std::size_t> anchor_;
};

}  // namespace

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kMember:
      return "member";
    case Role::kPlanner:
      return "planner";
    case Role::kBroker:
      return "broker";
  }
  return "member";
}

std::optional<Role> RoleFromName(std::string_view name) {
  for (Role role : {Role::kMember, Role::kPlanner, Role::kBroker}) {
    if (RoleName(role) == name) return role;
  }
  return std::nullopt;
}

ActorPredicate RolePredicate(Role role) {
  switch (role) {
    case Role::kMember:
      return MemberPredicate();
    case Role::kPlanner:
      return PlannerPredicate();
    case Role::kBroker:
      return BrokerPredicate();
  }
  return MemberPredicate();
}

EvaluationReport Evaluate(const SocialNetwork& net, const RequirementSet& reqs,
                          const EvaluationOptions& options) {
  const SocialNetwork& parent = options.parent ? *options.parent : net;

  std::optional<ActorId> anchor_id =
      options.anchor ? options.anchor : reqs.DesignatedAnchor();
  if (options.anchor && !reqs.NeedsAnchor()) {
    throw InvalidArgument(fmt::format(
        "anchor '{}' given but requirement set '{}' does not use an anchor",
        *options.anchor, reqs.name()));
  }
  if (reqs.NeedsAnchor() && !anchor_id) {
    throw InvalidArgument(fmt::format(
        "requirement set '{}' needs an anchor actor", reqs.name()));
  }

  Evaluation evaluation(net, parent, options.paths);
  if (anchor_id) {
    const auto index = net.FindIndex(*anchor_id);
    if (!index) {
      throw InvalidArgument(
          fmt::format("anchor '{}' is not in the network", *anchor_id));
    }
    evaluation.set_anchor(index);
  }

  EvaluationReport report;
  report.network_name = options.network_name;
  report.requirement_set_name = reqs.name();
  for (const Requirement& requirement : reqs.requirements()) {
    report.verdicts.push_back(evaluation.Run(requirement));
    report.overall = report.overall && report.verdicts.back().satisfied;
  }
  if (options.include_roles && net.size() >= 2) {
    report.role_candidates =
        AllRoleCandidates(net, RoleOrder::kFullNetwork, options.paths);
  }
  return report;
}

bool SatisfiesPredicate(const SocialNetwork& net,
                        const ActorPredicate& predicate, std::string_view actor,
                        const EvaluationOptions& options) {
  const SocialNetwork& parent = options.parent ? *options.parent : net;
  Evaluation evaluation(net, parent, options.paths);
  return evaluation.Check(predicate, net.IndexOf(actor), nullptr).holds;
}

namespace {

std::vector<ActorId> CandidatesOn(const SocialNetwork& net, Role role,
                                  const PathOptions& paths) {
  Evaluation evaluation(net, net, paths);
  const ActorPredicate predicate = RolePredicate(role);
  std::vector<ActorId> candidates;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (evaluation.Check(predicate, i, nullptr).holds) {
      candidates.push_back(net.actor(i));
    }
  }
  return candidates;
}

}  // namespace

std::vector<ActorId> RoleCandidates(const SocialNetwork& net, Role role,
                                    RoleOrder order, const PathOptions& paths) {
  if (net.size() < 2) {
    throw InvalidArgument("role candidacy needs at least two actors");
  }
  if (role == Role::kMember || order == RoleOrder::kFullNetwork) {
    return CandidatesOn(net, role, paths);
  }
  const std::vector<ActorId> members = CandidatesOn(net, Role::kMember, paths);
  if (members.size() < 2) return {};
  return CandidatesOn(net.InducedSubnetwork(members), role, paths);
}

std::map<Role, std::vector<ActorId>> AllRoleCandidates(
    const SocialNetwork& net, RoleOrder order, const PathOptions& paths) {
  std::map<Role, std::vector<ActorId>> roles;
  for (Role role : {Role::kMember, Role::kPlanner, Role::kBroker}) {
    roles[role] = RoleCandidates(net, role, order, paths);
  }
  return roles;
}

std::string Explain(const EvaluationReport& report, bool color) {
  const auto status = [color](bool ok) -> std::string {
    if (!color) return ok ? "PASS" : "FAIL";
    return ok ? "\x1b[32mPASS\x1b[0m" : "\x1b[31mFAIL\x1b[0m";
  };
  const auto join = [](const std::vector<ActorId>& ids) {
    std::string out;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) out += ", ";
      out += ids[i];
    }
    return out;
  };

  std::string out;
  for (const Verdict& verdict : report.verdicts) {
    out += fmt::format("{} {} {}", verdict.label, status(verdict.satisfied),
                       verdict.detail);
    if (verdict.kind == "count" && !verdict.witnesses.empty()) {
      out += "; witnesses: " + join(verdict.witnesses);
    }
    if (!verdict.violators.empty()) {
      out += "; violators: ";
      for (std::size_t i = 0; i < verdict.violators.size(); ++i) {
        if (i > 0) out += ", ";
        out += fmt::format("{} ({})", verdict.violators[i].actor,
                           verdict.violators[i].reason);
      }
    }
    out += "\n";
  }
  out += fmt::format("overall {}\n", status(report.overall));
  if (!report.removals.empty()) {
    out += "removed: " + join(report.removals) + "\n";
  }
  for (const auto& [role, actors] : report.role_candidates) {
    out += fmt::format("candidates {}: {}\n", RoleName(role),
                       actors.empty() ? "(none)" : join(actors));
  }
  return out;
}

}  // namespace vbe
