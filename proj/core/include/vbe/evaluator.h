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

#ifndef VBE_EVALUATOR_H_
#define VBE_EVALUATOR_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vbe/metrics.h"
#include "vbe/network.h"
#include "vbe/requirements.h"

namespace vbe {

enum class Role { kMember, kPlanner, kBroker };

std::string_view RoleName(Role role);
std::optional<Role> RoleFromName(std::string_view name);
ActorPredicate RolePredicate(Role role);

// An actor that fails a requirement, with the atoms it failed rendered as
// "neighborhood_size=1, required >1".
struct Violation {
  ActorId actor;
  std::string reason;
  int failed_atoms = 1;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct Verdict {
  std::string label;
  std::string kind;
  bool satisfied = false;
  // Actors satisfying a per-actor predicate, in actor order.
  std::vector<ActorId> witnesses;
  std::vector<Violation> violators;
  // Metric values the verdict was decided on.
  std::vector<MetricValue> observed;
  // One-line summary, e.g. "density=17/30 (0.5667), required >0.5".
  std::string detail;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct EvaluationReport {
  std::string network_name;
  std::string requirement_set_name;
  std::vector<Verdict> verdicts;
  // Conjunction of every verdict; true for an empty set.
  bool overall = true;
  // Role candidates on the evaluated network. Empty for networks with fewer
  // than two actors or when disabled in the options.
  std::map<Role, std::vector<ActorId>> role_candidates;
  // Actors removed by greedy peeling, in removal order.
  std::vector<ActorId> removals;
  friend bool operator==(const EvaluationReport&,
                         const EvaluationReport&) = default;
};

struct EvaluationOptions {
  // Overrides the anchor designated inside the requirement set.
  std::optional<ActorId> anchor;
  // Network that @parent atoms are measured on. Defaults to the evaluated
  // network itself.
  const SocialNetwork* parent = nullptr;
  PathOptions paths;
  std::string network_name = "network";
  bool include_roles = true;
};

// Evaluates every requirement in order, without short-circuiting. Throws
// InvalidArgument when the set needs an anchor and none is available, when an
// anchor is given to a set that never uses one, or when a @parent atom names
// an actor missing from the parent network.
EvaluationReport Evaluate(const SocialNetwork& net, const RequirementSet& reqs,
                          const EvaluationOptions& options = {});

// Re-checks `predicate` for one actor.
bool SatisfiesPredicate(const SocialNetwork& net,
                        const ActorPredicate& predicate,
                        std::string_view actor,
                        const EvaluationOptions& options = {});

// kFullNetwork evaluates every role on the whole network. kAfterMemberFiltering
// first keeps only actors passing the member rule and evaluates planner and
// broker on that induced subnetwork.
enum class RoleOrder { kFullNetwork, kAfterMemberFiltering };

// Actors whose role predicate holds, in actor order. Throws InvalidArgument
// for a single-actor network.
std::vector<ActorId> RoleCandidates(const SocialNetwork& net, Role role,
                                    RoleOrder order = RoleOrder::kFullNetwork,
                                    const PathOptions& paths = {});

std::map<Role, std::vector<ActorId>> AllRoleCandidates(
    const SocialNetwork& net, RoleOrder order = RoleOrder::kFullNetwork,
    const PathOptions& paths = {});

// One line per verdict: "<label> PASS|FAIL <detail>" followed by witnesses
// or violators, then an overall line. ANSI colors only when `color` is set.
std::string Explain(const EvaluationReport& report, bool color = false);

}  // namespace vbe

#endif  // VBE_EVALUATOR_H_
