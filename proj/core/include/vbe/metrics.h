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

#ifndef VBE_METRICS_H_
#define VBE_METRICS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "vbe/network.h"
#include "vbe/rational.h"

namespace vbe {

enum class MetricId {
  kSize,
  kDensity,
  kAvgPathLength,
  kInDegree,
  kOutDegree,
  kTotalDegree,
  kInDensity,
  kOutDensity,
  kCloseness,
  kEccentricity,
  kNeighborhoodSize,
  kReciprocatedPartnerCount,
  kReciprocatedDensity,
  kReciprocatedTieRatio,
};

inline constexpr std::array<MetricId, 14> kAllMetrics = {
    MetricId::kSize,
    MetricId::kDensity,
    MetricId::kAvgPathLength,
    MetricId::kInDegree,
    MetricId::kOutDegree,
    MetricId::kTotalDegree,
    MetricId::kInDensity,
    MetricId::kOutDensity,
    MetricId::kCloseness,
    MetricId::kEccentricity,
    MetricId::kNeighborhoodSize,
    MetricId::kReciprocatedPartnerCount,
    MetricId::kReciprocatedDensity,
    MetricId::kReciprocatedTieRatio,
};

// Canonical snake_case name, e.g. "reciprocated_tie_ratio".
std::string_view MetricName(MetricId metric);
// Accepts canonical names plus the short alias "recip_ratio".
std::optional<MetricId> MetricFromName(std::string_view name);

// size, density, avg_path_length and reciprocated_tie_ratio describe the
// whole network; everything else is per actor.
bool IsNetworkScoped(MetricId metric);
// Values always lie in [0, 1] when defined.
bool IsFractionValued(MetricId metric);
// Values are always non-negative integers when defined.
bool IsIntegerValued(MetricId metric);

// A computed metric. `value` is empty when the metric is undefined
// (degenerate network, unreachable peer under the strict policy).
struct MetricValue {
  MetricId metric;
  std::optional<ActorId> actor;
  std::optional<Rational> value;

  bool defined() const { return value.has_value(); }
  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

// Path-based metrics (shortest path, eccentricity, closeness, average path
// length) follow outgoing ties by default. The undirected view runs them on
// the symmetrized network.
enum class PathView { kDirected, kUndirected };

// kStrict: any unreachable peer makes the metric undefined.
// kLenient: unreachable pairs are skipped; see ReachableFraction.
enum class Reachability { kStrict, kLenient };

struct PathOptions {
  PathView view = PathView::kDirected;
  Reachability reachability = Reachability::kStrict;
};

// All-pairs breadth-first distances for one network snapshot.
class DistanceTable {
 public:
  DistanceTable(const SocialNetwork& net, PathView view);

  std::size_t size() const { return size_; }
  // Empty when `to` is unreachable from `from`.
  std::optional<int> Distance(std::size_t from, std::size_t to) const;

 private:
  std::size_t size_;
  std::vector<int> dist_;
};

// Single-source BFS distances; -1 marks unreachable actors.
std::vector<int> BreadthFirstDistances(const SocialNetwork& net,
                                       std::size_t source, PathView view);

int Size(const SocialNetwork& net);
std::optional<Rational> Density(const SocialNetwork& net);

int OutDegree(const SocialNetwork& net, std::string_view actor);
int InDegree(const SocialNetwork& net, std::string_view actor);
int TotalDegree(const SocialNetwork& net, std::string_view actor);

std::optional<Rational> OutDensity(const SocialNetwork& net,
                                   std::string_view actor);
std::optional<Rational> InDensity(const SocialNetwork& net,
                                  std::string_view actor);

int NeighborhoodSize(const SocialNetwork& net, std::string_view actor);
int ReciprocatedPartnerCount(const SocialNetwork& net, std::string_view actor);
// Reciprocated partners over neighborhood size.
std::optional<Rational> ReciprocatedDensity(const SocialNetwork& net,
                                            std::string_view actor);

// Unordered pairs {x, y} with ties in both directions.
int MutualPairCount(const SocialNetwork& net);
// 2 * mutual pairs / tie count.
std::optional<Rational> ReciprocatedTieRatio(const SocialNetwork& net);

std::optional<int> ShortestPathLength(const SocialNetwork& net,
                                      std::string_view from,
                                      std::string_view to,
                                      PathView view = PathView::kDirected);
std::optional<int> Eccentricity(const SocialNetwork& net,
                                std::string_view actor,
                                const PathOptions& options = {});
std::optional<Rational> Closeness(const SocialNetwork& net,
                                  std::string_view actor,
                                  const PathOptions& options = {});
std::optional<Rational> AvgPathLength(const SocialNetwork& net,
                                      const PathOptions& options = {});

// Share of ordered pairs (x, y), x != y, with y reachable from x. Undefined
// for a single actor.
std::optional<Rational> ReachableFraction(const SocialNetwork& net,
                                          PathView view = PathView::kDirected);
// Share of the other actors reachable from `actor`.
std::optional<Rational> ReachableFraction(const SocialNetwork& net,
                                          std::string_view actor,
                                          PathView view = PathView::kDirected);

// Computes metrics by id over one network snapshot. The distance table and
// per-actor value vectors are memoized on first use, so an instance must stay
// confined to a single thread.
class MetricCalculator {
 public:
  explicit MetricCalculator(const SocialNetwork& net, PathOptions options = {});
  MetricCalculator(SocialNetwork&&, PathOptions = {}) = delete;

  const SocialNetwork& network() const { return net_; }
  const PathOptions& options() const { return options_; }

  // Network-scoped metric. Throws InvalidArgument for an actor-scoped id.
  std::optional<Rational> NetworkValue(MetricId metric) const;
  // Actor-scoped metric. Throws InvalidArgument for a network-scoped id.
  std::optional<Rational> ActorValue(MetricId metric, std::size_t actor) const;
  // Mean of `metric` over every actor except `actor`. Undefined when any of
  // those values is undefined or the network has a single actor.
  std::optional<Rational> AverageOfOthers(MetricId metric,
                                          std::size_t actor) const;

  MetricValue Compute(MetricId metric) const;
  MetricValue Compute(MetricId metric, std::size_t actor) const;

  const DistanceTable& distances() const;

 private:
  const std::vector<std::optional<Rational>>& Column(MetricId metric) const;
  std::optional<Rational> ComputeActorValue(MetricId metric,
                                            std::size_t actor) const;

  const SocialNetwork& net_;
  PathOptions options_;
  mutable std::optional<DistanceTable> distances_;
  mutable std::array<std::optional<std::vector<std::optional<Rational>>>,
                     kAllMetrics.size()>
      columns_;
  mutable std::array<std::optional<std::optional<Rational>>,
                     kAllMetrics.size()>
      column_sums_;
};

}  // namespace vbe

#endif  // VBE_METRICS_H_
