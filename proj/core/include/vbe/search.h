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

#ifndef VBE_SEARCH_H_
#define VBE_SEARCH_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "vbe/evaluator.h"
#include "vbe/network.h"
#include "vbe/rational.h"
#include "vbe/requirements.h"

namespace vbe {

enum class SearchMode { kExhaustive, kGreedyPeel };
enum class Objective { kMaximizeSize, kMaximizeDensity, kFirstFound };

struct SearchConfig {
  int min_size = 1;
  int max_size = 1;
  SearchMode mode = SearchMode::kExhaustive;
  Objective objective = Objective::kMaximizeSize;
  // Upper bound on the number of subsets evaluated.
  std::uint64_t enumeration_cap = std::uint64_t{1} << 20;
  // Exhaustive mode refuses larger networks.
  int max_network_size = 20;

  // Throws InvalidArgument unless 1 <= min_size <= max_size <= net.size()
  // and enumeration_cap >= 1.
  void Validate(const SocialNetwork& net) const;
};

struct SubnetworkSolution {
  // In parent actor order.
  std::vector<ActorId> actors;
  EvaluationReport report;
  Rational objective_value;
};

// Every actor subset S with min_size <= |S| <= max_size whose induced
// subnetwork satisfies `reqs`. Sorted by objective (best first) and then by
// actor order. kFirstFound returns at most one solution: the first hit when
// enumerating from the largest size down. Anchored sets only enumerate
// subsets containing the anchor. @parent atoms are measured on `net`.
//
// Throws CapExceeded once more than cfg.enumeration_cap subsets would be
// evaluated.
std::vector<SubnetworkSolution> SearchExhaustive(
    const SocialNetwork& net, const RequirementSet& reqs,
    const SearchConfig& cfg, const EvaluationOptions& options = {});

struct PeelResult {
  std::optional<SubnetworkSolution> solution;
  // Actors removed, in order, whether or not a solution was reached.
  std::vector<ActorId> removals;
};

// Repeatedly removes the actor with the most failed per-actor atoms (ties
// broken by lowest total degree, then actor order) until the induced
// subnetwork satisfies `reqs` within the size window, or the size would drop
// below cfg.min_size. Sound but not complete. The anchor is never removed.
PeelResult SearchGreedyPeel(const SocialNetwork& net,
                            const RequirementSet& reqs,
                            const SearchConfig& cfg,
                            const EvaluationOptions& options = {});

}  // namespace vbe

#endif  // VBE_SEARCH_H_
