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

#include "vbe/metrics.h"

#include <algorithm>
#include <deque>
#include <functional>

#include <fmt/format.h>

#include "vbe/errors.h"

namespace vbe {

namespace {

constexpr std::size_t Slot(MetricId metric) {
  return static_cast<std::size_t>(metric);
}

int NeighborhoodSizeAt(const SocialNetwork& net, std::size_t i) {
  const auto& out = net.out(i);
  const auto& in = net.in(i);
  int shared = 0;
  for (std::size_t j : out) shared += in.contains(j) ? 1 : 0;
  return static_cast<int>(out.size() + in.size()) - shared;
}

int ReciprocatedPartnersAt(const SocialNetwork& net, std::size_t i) {
  int count = 0;
  for (std::size_t j : net.out(i)) count += net.in(i).contains(j) ? 1 : 0;
  return count;
}

std::optional<Rational> PerPeer(const SocialNetwork& net, std::size_t count) {
  if (net.size() < 2) return std::nullopt;
  return Rational(static_cast<long long>(count),
                  static_cast<long long>(net.size() - 1));
}

std::optional<Rational> ReciprocatedDensityAt(const SocialNetwork& net,
                                              std::size_t i) {
  const int neighborhood = NeighborhoodSizeAt(net, i);
  if (neighborhood == 0) return std::nullopt;
  return Rational(ReciprocatedPartnersAt(net, i), neighborhood);
}

// Summary of one actor's row of distances.
struct RowStats {
  int reachable = 0;
  int unreachable = 0;
  int max_distance = 0;
  long long sum = 0;
};

template <typename DistanceFn>
RowStats SummarizeRow(std::size_t n, std::size_t source, DistanceFn&& dist) {
  RowStats stats;
  for (std::size_t to = 0; to < n; ++to) {
    if (to == source) continue;
    const int d = dist(to);
    if (d < 0) {
      ++stats.unreachable;
      continue;
    }
    ++stats.reachable;
    stats.sum += d;
    stats.max_distance = std::max(stats.max_distance, d);
  }
  return stats;
}

std::optional<Rational> EccentricityFromRow(const RowStats& row,
                                            Reachability policy) {
  if (row.unreachable > 0 &&
      (policy == Reachability::kStrict || row.reachable == 0)) {
    return std::nullopt;
  }
  return Rational(row.max_distance);
}

std::optional<Rational> ClosenessFromRow(const RowStats& row,
                                         Reachability policy) {
  if (row.unreachable > 0 && policy == Reachability::kStrict) {
    return std::nullopt;
  }
  if (row.sum == 0) return std::nullopt;
  return Rational(1, row.sum);
}

}  // namespace

std::string_view MetricName(MetricId metric) {
  switch (metric) {
    case MetricId::kSize:
      return "size";
    case MetricId::kDensity:
      return "density";
    case MetricId::kAvgPathLength:
      return "avg_path_length";
    case MetricId::kInDegree:
      return "in_degree";
    case MetricId::kOutDegree:
      return "out_degree";
    case MetricId::kTotalDegree:
      return "total_degree";
    case MetricId::kInDensity:
      return "in_density";
    case MetricId::kOutDensity:
      return "out_density";
    case MetricId::kCloseness:
      return "closeness";
    case MetricId::kEccentricity:
      return "eccentricity";
    case MetricId::kNeighborhoodSize:
      return "neighborhood_size";
    case MetricId::kReciprocatedPartnerCount:
      return "reciprocated_partner_count";
    case MetricId::kReciprocatedDensity:
      return "reciprocated_density";
    case MetricId::kReciprocatedTieRatio:
      return "reciprocated_tie_ratio";
  }
  return "unknown";
}

std::optional<MetricId> MetricFromName(std::string_view name) {
  if (name == "recip_ratio") return MetricId::kReciprocatedTieRatio;
  for (MetricId metric : kAllMetrics) {
    if (MetricName(metric) == name) return metric;
  }
  return std::nullopt;
}

bool IsNetworkScoped(MetricId metric) {
  return metric == MetricId::kSize || metric == MetricId::kDensity ||
         metric == MetricId::kAvgPathLength ||
         metric == MetricId::kReciprocatedTieRatio;
}

bool IsFractionValued(MetricId metric) {
  return metric == MetricId::kDensity || metric == MetricId::kInDensity ||
         metric == MetricId::kOutDensity ||
         metric == MetricId::kReciprocatedDensity ||
         metric == MetricId::kReciprocatedTieRatio;
}

bool IsIntegerValued(MetricId metric) {
  return metric == MetricId::kSize || metric == MetricId::kInDegree ||
         metric == MetricId::kOutDegree || metric == MetricId::kTotalDegree ||
         metric == MetricId::kEccentricity ||
         metric == MetricId::kNeighborhoodSize ||
         metric == MetricId::kReciprocatedPartnerCount;
}

std::vector<int> BreadthFirstDistances(const SocialNetwork& net,
                                       std::size_t source, PathView view) {
  std::vector<int> dist(net.size(), -1);
  std::deque<std::size_t> queue;
  dist.at(source) = 0;
  queue.push_back(source);
  auto visit = [&](std::size_t from, std::size_t to) {
    if (dist[to] >= 0) return;
    dist[to] = dist[from] + 1;
    queue.push_back(to);
  };
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : net.out(u)) visit(u, v);
    if (view == PathView::kUndirected) {
      for (std::size_t v : net.in(u)) visit(u, v);
    }
  }
  return dist;
}

DistanceTable::DistanceTable(const SocialNetwork& net, PathView view)
    : size_(net.size()) {
  dist_.reserve(size_ * size_);
  for (std::size_t s = 0; s < size_; ++s) {
    const std::vector<int> row = BreadthFirstDistances(net, s, view);
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
}

std::optional<int> DistanceTable::Distance(std::size_t from,
                                           std::size_t to) const {
  const int d = dist_.at(from * size_ + to);
  if (d < 0) return std::nullopt;
  return d;
}

int Size(const SocialNetwork& net) { return static_cast<int>(net.size()); }

std::optional<Rational> Density(const SocialNetwork& net) {
  const auto n = static_cast<long long>(net.size());
  if (n < 2) return std::nullopt;
  return Rational(static_cast<long long>(net.tie_count()), n * (n - 1));
}

int OutDegree(const SocialNetwork& net, std::string_view actor) {
  return static_cast<int>(net.out(net.IndexOf(actor)).size());
}

int InDegree(const SocialNetwork& net, std::string_view actor) {
  return static_cast<int>(net.in(net.IndexOf(actor)).size());
}

int TotalDegree(const SocialNetwork& net, std::string_view actor) {
  return OutDegree(net, actor) + InDegree(net, actor);
}

std::optional<Rational> OutDensity(const SocialNetwork& net,
                                   std::string_view actor) {
  return PerPeer(net, net.out(net.IndexOf(actor)).size());
}

std::optional<Rational> InDensity(const SocialNetwork& net,
                                  std::string_view actor) {
  return PerPeer(net, net.in(net.IndexOf(actor)).size());
}

int NeighborhoodSize(const SocialNetwork& net, std::string_view actor) {
  return NeighborhoodSizeAt(net, net.IndexOf(actor));
}

int ReciprocatedPartnerCount(const SocialNetwork& net,
                             std::string_view actor) {
  return ReciprocatedPartnersAt(net, net.IndexOf(actor));
}

std::optional<Rational> ReciprocatedDensity(const SocialNetwork& net,
                                            std::string_view actor) {
  return ReciprocatedDensityAt(net, net.IndexOf(actor));
}

int MutualPairCount(const SocialNetwork& net) {
  int pairs = 0;
  for (const auto& [from, to] : net.Ties()) {
    if (from < to && net.HasTie(to, from)) ++pairs;
  }
  return pairs;
}

std::optional<Rational> ReciprocatedTieRatio(const SocialNetwork& net) {
  if (net.tie_count() == 0) return std::nullopt;
  return Rational(2 * MutualPairCount(net),
                  static_cast<long long>(net.tie_count()));
}

std::optional<int> ShortestPathLength(const SocialNetwork& net,
                                      std::string_view from,
                                      std::string_view to, PathView view) {
  const std::size_t target = net.IndexOf(to);
  const int d = BreadthFirstDistances(net, net.IndexOf(from), view)[target];
  if (d < 0) return std::nullopt;
  return d;
}

namespace {

RowStats RowFromBfs(const SocialNetwork& net, std::size_t source,
                    PathView view) {
  const std::vector<int> dist = BreadthFirstDistances(net, source, view);
  return SummarizeRow(net.size(), source,
                      [&](std::size_t to) { return dist[to]; });
}

RowStats RowFromTable(const DistanceTable& table, std::size_t source) {
  return SummarizeRow(table.size(), source, [&](std::size_t to) {
    return table.Distance(source, to).value_or(-1);
  });
}

std::optional<Rational> AvgPathLengthFromRows(
    std::size_t n, Reachability policy,
    const std::function<RowStats(std::size_t)>& row_of) {
  if (n < 2) return std::nullopt;
  long long sum = 0;
  long long reachable = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const RowStats row = row_of(s);
    if (row.unreachable > 0 && policy == Reachability::kStrict) {
      return std::nullopt;
    }
    sum += row.sum;
    reachable += row.reachable;
  }
  if (reachable == 0) return std::nullopt;
  return Rational(sum, reachable);
}

}  // namespace

std::optional<int> Eccentricity(const SocialNetwork& net,
                                std::string_view actor,
                                const PathOptions& options) {
  const auto value = EccentricityFromRow(
      RowFromBfs(net, net.IndexOf(actor), options.view), options.reachability);
  if (!value) return std::nullopt;
  return boost::multiprecision::numerator(*value).convert_to<int>();
}

std::optional<Rational> Closeness(const SocialNetwork& net,
                                  std::string_view actor,
                                  const PathOptions& options) {
  return ClosenessFromRow(RowFromBfs(net, net.IndexOf(actor), options.view),
                          options.reachability);
}

std::optional<Rational> AvgPathLength(const SocialNetwork& net,
                                      const PathOptions& options) {
  return AvgPathLengthFromRows(
      net.size(), options.reachability,
      [&](std::size_t s) { return RowFromBfs(net, s, options.view); });
}

std::optional<Rational> ReachableFraction(const SocialNetwork& net,
                                          PathView view) {
  const auto n = static_cast<long long>(net.size());
  if (n < 2) return std::nullopt;
  long long reachable = 0;
  for (std::size_t s = 0; s < net.size(); ++s) {
    reachable += RowFromBfs(net, s, view).reachable;
  }
  return Rational(reachable, n * (n - 1));
}

std::optional<Rational> ReachableFraction(const SocialNetwork& net,
                                          std::string_view actor,
                                          PathView view) {
  const auto n = static_cast<long long>(net.size());
  if (n < 2) return std::nullopt;
  return Rational(RowFromBfs(net, net.IndexOf(actor), view).reachable, n - 1);
}

MetricCalculator::MetricCalculator(const SocialNetwork& net,
                                   PathOptions options)
    : net_(net), options_(options) {}

const DistanceTable& MetricCalculator::distances() const {
  if (!distances_) distances_.emplace(net_, options_.view);
  return *distances_;
}

std::optional<Rational> MetricCalculator::NetworkValue(MetricId metric) const {
  switch (metric) {
    case MetricId::kSize:
      return Rational(static_cast<long long>(net_.size()));
    case MetricId::kDensity:
      return Density(net_);
    case MetricId::kReciprocatedTieRatio:
      return ReciprocatedTieRatio(net_);
    case MetricId::kAvgPathLength:
      return AvgPathLengthFromRows(
          net_.size(), options_.reachability,
          [&](std::size_t s) { return RowFromTable(distances(), s); });
    default:
      throw InvalidArgument(fmt::format("metric '{}' is actor-scoped",
                                        MetricName(metric)));
  }
}

std::optional<Rational> MetricCalculator::ComputeActorValue(
    MetricId metric, std::size_t actor) const {
  const auto count = [](std::size_t c) {
    return Rational(static_cast<long long>(c));
  };
  switch (metric) {
    case MetricId::kInDegree:
      return count(net_.in(actor).size());
    case MetricId::kOutDegree:
      return count(net_.out(actor).size());
    case MetricId::kTotalDegree:
      return count(net_.in(actor).size() + net_.out(actor).size());
    case MetricId::kInDensity:
      return PerPeer(net_, net_.in(actor).size());
    case MetricId::kOutDensity:
      return PerPeer(net_, net_.out(actor).size());
    case MetricId::kNeighborhoodSize:
      return Rational(NeighborhoodSizeAt(net_, actor));
    case MetricId::kReciprocatedPartnerCount:
      return Rational(ReciprocatedPartnersAt(net_, actor));
    case MetricId::kReciprocatedDensity:
      return ReciprocatedDensityAt(net_, actor);
    case MetricId::kEccentricity:
      return EccentricityFromRow(RowFromTable(distances(), actor),
                                 options_.reachability);
    case MetricId::kCloseness:
      return ClosenessFromRow(RowFromTable(distances(), actor),
                              options_.reachability);
    default:
      throw InvalidArgument(fmt::format("metric '{}' is network-scoped",
                                        MetricName(metric)));
  }
}

const std::vector<std::optional<Rational>>& MetricCalculator::Column(
    MetricId metric) const {
  auto& column = columns_[Slot(metric)];
  if (!column) {
    std::vector<std::optional<Rational>> values;
    values.reserve(net_.size());
    for (std::size_t i = 0; i < net_.size(); ++i) {
      values.push_back(ComputeActorValue(metric, i));
    }
    column = std::move(values);
  }
  return *column;
}

std::optional<Rational> MetricCalculator::ActorValue(MetricId metric,
                                                     std::size_t actor) const {
  if (IsNetworkScoped(metric)) {
    throw InvalidArgument(fmt::format("metric '{}' is network-scoped",
                                      MetricName(metric)));
  }
  if (actor >= net_.size()) throw InvalidArgument("actor index out of range");
  return Column(metric)[actor];
}

std::optional<Rational> MetricCalculator::AverageOfOthers(
    MetricId metric, std::size_t actor) const {
  if (IsNetworkScoped(metric)) {
    throw InvalidArgument(fmt::format("metric '{}' is network-scoped",
                                      MetricName(metric)));
  }
  const std::size_t n = net_.size();
  if (actor >= n) throw InvalidArgument("actor index out of range");
  if (n < 2) return std::nullopt;
  const auto& column = Column(metric);

  auto& total = column_sums_[Slot(metric)];
  if (!total) {
    Rational sum = 0;
    bool all_defined = true;
    for (const auto& value : column) {
      if (!value) {
        all_defined = false;
        break;
      }
      sum += *value;
    }
    total = all_defined ? std::optional<Rational>(sum) : std::nullopt;
  }
  const Rational others = static_cast<long long>(n - 1);
  if (*total) return (**total - *column[actor]) / others;

  Rational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == actor) continue;
    if (!column[i]) return std::nullopt;
    sum += *column[i];
  }
  return sum / others;
}

MetricValue MetricCalculator::Compute(MetricId metric) const {
  return MetricValue{metric, std::nullopt, NetworkValue(metric)};
}

MetricValue MetricCalculator::Compute(MetricId metric,
                                      std::size_t actor) const {
  return MetricValue{metric, net_.actor(actor), ActorValue(metric, actor)};
}

}  // namespace vbe
