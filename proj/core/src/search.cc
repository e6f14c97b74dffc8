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

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "vbe/errors.h"
#include "vbe/metrics.h"

namespace vbe {

void SearchConfig::Validate(const SocialNetwork& net) const {
  const auto n = static_cast<int>(net.size());
  if (min_size < 1 || min_size > max_size || max_size > n) {
    throw InvalidArgument(fmt::format(
        "invalid size bounds [{}, {}] for a network of {} actors", min_size,
        max_size, n));
  }
  if (enumeration_cap < 1) {
    throw InvalidArgument("enumeration cap must be at least 1");
  }
}

namespace {

std::string SubsetName(const EvaluationOptions& options,
                       const std::vector<ActorId>& actors) {
  std::string name = options.network_name + "[";
  for (std::size_t i = 0; i < actors.size(); ++i) {
    if (i > 0) name += ",";
    name += actors[i];
  }
  return name + "]";
}

std::optional<std::size_t> ResolveAnchor(const SocialNetwork& net,
                                         const RequirementSet& reqs,
                                         const EvaluationOptions& options) {
  if (!reqs.NeedsAnchor()) return std::nullopt;
  const std::optional<ActorId> anchor =
      options.anchor ? options.anchor : reqs.DesignatedAnchor();
  if (!anchor) {
    throw InvalidArgument(fmt::format(
        "requirement set '{}' needs an anchor actor", reqs.name()));
  }
  return net.IndexOf(*anchor);
}

// A candidate subset evaluated on its induced subnetwork.
struct Candidate {
  std::vector<std::size_t> indices;
  SocialNetwork subnetwork;
  EvaluationReport report;
};

Candidate EvaluateSubset(const SocialNetwork& net, const RequirementSet& reqs,
                         std::vector<std::size_t> indices,
                         const EvaluationOptions& options) {
  SocialNetwork sub = net.InducedSubnetwork(indices);
  EvaluationOptions eval = options;
  eval.parent = options.parent ? options.parent : &net;
  eval.include_roles = false;
  eval.network_name = SubsetName(options, sub.actors());
  EvaluationReport report = Evaluate(sub, reqs, eval);
  return Candidate{std::move(indices), std::move(sub), std::move(report)};
}

Rational ObjectiveValue(Objective objective, const SocialNetwork& sub) {
  if (objective == Objective::kMaximizeDensity) {
    return Density(sub).value_or(Rational(0));
  }
  return Rational(static_cast<long long>(sub.size()));
}

SubnetworkSolution ToSolution(Candidate candidate, Objective objective,
                              const EvaluationOptions& options) {
  if (options.include_roles && candidate.subnetwork.size() >= 2) {
    candidate.report.role_candidates = AllRoleCandidates(
        candidate.subnetwork, RoleOrder::kFullNetwork, options.paths);
  }
  return SubnetworkSolution{candidate.subnetwork.actors(),
                            std::move(candidate.report),
                            ObjectiveValue(objective, candidate.subnetwork)};
}

// Calls `visit` with every k-subset of `pool` in lexicographic order; stops
// early when `visit` returns false.
template <typename Visit>
bool ForEachCombination(const std::vector<std::size_t>& pool, std::size_t k,
                        Visit&& visit) {
  if (k > pool.size()) return true;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[pick[i]];
    if (!visit(chosen)) return false;
    // Advance to the next combination.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) return true;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<SubnetworkSolution> SearchExhaustive(
    const SocialNetwork& net, const RequirementSet& reqs,
    const SearchConfig& cfg, const EvaluationOptions& options) {
  if (cfg.mode != SearchMode::kExhaustive) {
    throw InvalidArgument("SearchExhaustive needs mode = exhaustive");
  }
  cfg.Validate(net);
  if (static_cast<int>(net.size()) > cfg.max_network_size) {
    throw InvalidArgument(fmt::format(
        "exhaustive search is limited to {} actors, network has {}",
        cfg.max_network_size, net.size()));
  }

  const std::optional<std::size_t> anchor = ResolveAnchor(net, reqs, options);
  std::vector<std::size_t> pool;
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (i != anchor) pool.push_back(i);
  }
  const std::size_t fixed = anchor ? 1 : 0;

  std::vector<Candidate> hits;
  std::uint64_t examined = 0;
  const bool first_only = cfg.objective == Objective::kFirstFound;
  for (int size = cfg.max_size; size >= cfg.min_size; --size) {
    if (static_cast<std::size_t>(size) < fixed) break;
    const bool more = ForEachCombination(
        pool, size - fixed, [&](const std::vector<std::size_t>& chosen) {
          if (++examined > cfg.enumeration_cap) {
            throw CapExceeded(fmt::format(
                "exhaustive search exceeded the cap of {} subsets",
                cfg.enumeration_cap));
          }
          std::vector<std::size_t> indices = chosen;
          if (anchor) {
            indices.insert(
                std::lower_bound(indices.begin(), indices.end(), *anchor),
                *anchor);
          }
          Candidate candidate =
              EvaluateSubset(net, reqs, std::move(indices), options);
          if (candidate.report.overall) hits.push_back(std::move(candidate));
          return !(first_only && !hits.empty());
        });
    if (!more) break;
  }

  std::vector<std::pair<std::vector<std::size_t>, SubnetworkSolution>> ranked;
  ranked.reserve(hits.size());
  for (Candidate& hit : hits) {
    std::vector<std::size_t> indices = hit.indices;
    ranked.emplace_back(std::move(indices),
                        ToSolution(std::move(hit), cfg.objective, options));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     if (a.second.objective_value != b.second.objective_value) {
                       return a.second.objective_value >
                              b.second.objective_value;
                     }
                     return a.first < b.first;
                   });

  std::vector<SubnetworkSolution> solutions;
  solutions.reserve(ranked.size());
  for (auto& entry : ranked) solutions.push_back(std::move(entry.second));
  return solutions;
}

PeelResult SearchGreedyPeel(const SocialNetwork& net,
                            const RequirementSet& reqs,
                            const SearchConfig& cfg,
                            const EvaluationOptions& options) {
  if (cfg.mode != SearchMode::kGreedyPeel) {
    throw InvalidArgument("SearchGreedyPeel needs mode = greedy-peel");
  }
  cfg.Validate(net);
  const std::optional<std::size_t> anchor = ResolveAnchor(net, reqs, options);

  PeelResult result;
  std::vector<std::size_t> current(net.size());
  std::iota(current.begin(), current.end(), 0);

  while (true) {
    Candidate candidate = EvaluateSubset(net, reqs, current, options);
    const auto size = static_cast<int>(current.size());
    if (candidate.report.overall && size <= cfg.max_size) {
      candidate.report.removals = result.removals;
      result.solution = ToSolution(std::move(candidate), cfg.objective, options);
      return result;
    }
    if (size - 1 < cfg.min_size) return result;

    // Failed per-actor atoms, indexed by position in `current`.
    std::vector<int> failures(current.size(), 0);
    for (const Verdict& verdict : candidate.report.verdicts) {
      for (const Violation& violation : verdict.violators) {
        failures[candidate.subnetwork.IndexOf(violation.actor)] +=
            violation.failed_atoms;
      }
    }
    std::optional<std::size_t> victim;
    int victim_degree = 0;
    for (std::size_t k = 0; k < current.size(); ++k) {
      if (current[k] == anchor) continue;
      const int degree =
          static_cast<int>(candidate.subnetwork.out(k).size() +
                           candidate.subnetwork.in(k).size());
      if (!victim || failures[k] > failures[*victim] ||
          (failures[k] == failures[*victim] && degree < victim_degree)) {
        victim = k;
        victim_degree = degree;
      }
    }
    if (!victim) return result;
    result.removals.push_back(net.actor(current[*victim]));
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(*victim));
  }
}

}  // namespace vbe
