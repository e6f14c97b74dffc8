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

// Brute-force reference computations and random generators for tests. The
// oracle works on a plain adjacency matrix and never calls into the metric or
// search code it is used to check.

#ifndef VBE_TESTS_ORACLE_H_
#define VBE_TESTS_ORACLE_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vbe/network.h"
#include "vbe/rational.h"
#include "vbe/requirements.h"

namespace vbe::testing {

using Matrix = std::vector<std::vector<bool>>;

inline std::vector<ActorId> Labels(std::size_t n) {
  std::vector<ActorId> ids;
  for (std::size_t i = 0; i < n; ++i) {
    ids.push_back(i < 26 ? std::string(1, static_cast<char>('A' + i))
                         : "N" + std::to_string(i));
  }
  return ids;
}

inline Matrix RandomMatrix(std::mt19937& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) m[i][j] = coin(rng);
  return m;
}

inline SocialNetwork FromMatrix(const Matrix& m) {
  SocialNetwork net(Labels(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j]) net.AddTie(i, j);
  return net;
}

inline Matrix ToMatrix(const SocialNetwork& net) {
  Matrix m(net.size(), std::vector<bool>(net.size(), false));
  for (std::size_t i = 0; i < net.size(); ++i)
    for (std::size_t j = 0; j < net.size(); ++j)
      if (i != j) m[i][j] = net.HasTie(i, j);
  return m;
}

inline Matrix Symmetrize(Matrix m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j]) m[j][i] = true;
  return m;
}

// Shortest path length by exhaustive enumeration of simple paths.
class PathOracle {
 public:
  explicit PathOracle(const Matrix& m) : m_(m) {}

  std::optional<int> Distance(std::size_t from, std::size_t to) const {
    if (from == to) return 0;
    std::vector<bool> on_path(m_.size(), false);
    int best = -1;
    on_path[from] = true;
    Walk(from, to, 0, on_path, best);
    if (best < 0) return std::nullopt;
    return best;
  }

 private:
  void Walk(std::size_t at, std::size_t target, int length,
            std::vector<bool>& on_path, int& best) const {
    for (std::size_t next = 0; next < m_.size(); ++next) {
      if (!m_[at][next] || on_path[next]) continue;
      if (next == target) {
        if (best < 0 || length + 1 < best) best = length + 1;
        continue;
      }
      on_path[next] = true;
      Walk(next, target, length + 1, on_path, best);
      on_path[next] = false;
    }
  }

  const Matrix& m_;
};

// Direct definitions over the adjacency matrix.
struct MetricOracle {
  explicit MetricOracle(const Matrix& matrix) : m(matrix), n(matrix.size()) {}

  const Matrix& m;
  std::size_t n;

  int Ties() const {
    int t = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t += m[i][j] ? 1 : 0;
    return t;
  }
  int Out(std::size_t a) const {
    int d = 0;
    for (std::size_t j = 0; j < n; ++j) d += m[a][j] ? 1 : 0;
    return d;
  }
  int In(std::size_t a) const {
    int d = 0;
    for (std::size_t j = 0; j < n; ++j) d += m[j][a] ? 1 : 0;
    return d;
  }
  int Neighborhood(std::size_t a) const {
    int k = 0;
    for (std::size_t j = 0; j < n; ++j) k += (m[a][j] || m[j][a]) ? 1 : 0;
    return k;
  }
  int Reciprocated(std::size_t a) const {
    int k = 0;
    for (std::size_t j = 0; j < n; ++j) k += (m[a][j] && m[j][a]) ? 1 : 0;
    return k;
  }
  int MutualPairs() const {
    int k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) k += (m[i][j] && m[j][i]) ? 1 : 0;
    return k;
  }
  std::optional<Rational> Density() const {
    if (n < 2) return std::nullopt;
    return Rational(Ties(), static_cast<long long>(n * (n - 1)));
  }
  std::optional<Rational> PerPeer(int count) const {
    if (n < 2) return std::nullopt;
    return Rational(count, static_cast<long long>(n - 1));
  }
  std::optional<Rational> ReciprocatedDensity(std::size_t a) const {
    if (Neighborhood(a) == 0) return std::nullopt;
    return Rational(Reciprocated(a), Neighborhood(a));
  }
  std::optional<Rational> TieRatio() const {
    if (Ties() == 0) return std::nullopt;
    return Rational(2 * MutualPairs(), Ties());
  }
};

// Path metrics from the path oracle, for one view (directed matrix or its
// symmetrization) and one reachability policy.
struct PathMetricOracle {
  PathMetricOracle(const Matrix& matrix, bool lenient)
      : paths(matrix), n(matrix.size()), lenient(lenient) {}

  PathOracle paths;
  std::size_t n;
  bool lenient;

  std::optional<Rational> Eccentricity(std::size_t a) const {
    int worst = 0;
    int reached = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == a) continue;
      const auto d = paths.Distance(a, y);
      if (!d) {
        if (!lenient) return std::nullopt;
        continue;
      }
      ++reached;
      worst = std::max(worst, *d);
    }
    if (n > 1 && reached == 0) return std::nullopt;
    return Rational(worst);
  }
  std::optional<Rational> Closeness(std::size_t a) const {
    long long sum = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (y == a) continue;
      const auto d = paths.Distance(a, y);
      if (!d) {
        if (!lenient) return std::nullopt;
        continue;
      }
      sum += *d;
    }
    if (sum == 0) return std::nullopt;
    return Rational(1, sum);
  }
  std::optional<Rational> AvgPathLength() const {
    if (n < 2) return std::nullopt;
    long long sum = 0;
    long long count = 0;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        const auto d = paths.Distance(x, y);
        if (!d) {
          if (!lenient) return std::nullopt;
          continue;
        }
        sum += *d;
        ++count;
      }
    if (count == 0) return std::nullopt;
    return Rational(sum, count);
  }
};

// Random actor-level atom with thresholds drawn from small grids.
inline Atom RandomAtom(std::mt19937& rng) {
  static constexpr MetricId kActor[] = {
      MetricId::kInDegree,         MetricId::kOutDegree,
      MetricId::kTotalDegree,      MetricId::kInDensity,
      MetricId::kOutDensity,       MetricId::kNeighborhoodSize,
      MetricId::kReciprocatedPartnerCount, MetricId::kReciprocatedDensity,
      MetricId::kEccentricity,     MetricId::kCloseness};
  std::uniform_int_distribution<int> pick_metric(0, std::size(kActor) - 1);
  std::uniform_int_distribution<int> pick_cmp(0, 4);
  std::uniform_int_distribution<int> small(0, 4);
  std::uniform_int_distribution<int> quarter(0, 4);
  const MetricId metric = kActor[pick_metric(rng)];
  const auto cmp = static_cast<Comparator>(pick_cmp(rng));
  if (std::bernoulli_distribution(0.25)(rng)) {
    return MakeRelativeAtom(metric, cmp);
  }
  Rational threshold = (IsFractionValued(metric) || metric == MetricId::kCloseness)
                           ? Rational(quarter(rng), 4)
                           : Rational(small(rng));
  return MakeAtom(metric, cmp, threshold);
}

inline ActorPredicate RandomPredicate(std::mt19937& rng, int depth = 2) {
  std::uniform_int_distribution<int> shape(0, depth > 0 ? 3 : 0);
  switch (shape(rng)) {
    case 1:
      return ActorPredicate::And(
          {RandomPredicate(rng, depth - 1), RandomPredicate(rng, depth - 1)});
    case 2:
      return ActorPredicate::Or(
          {RandomPredicate(rng, depth - 1), RandomPredicate(rng, depth - 1)});
    case 3:
      return ActorPredicate::Not(RandomPredicate(rng, depth - 1));
    default:
      return RandomAtom(rng);
  }
}

// Random requirement set of 1..3 unanchored requirements.
inline RequirementSet RandomRequirementSet(std::mt19937& rng) {
  RequirementSet set("random");
  std::uniform_int_distribution<int> count(1, 3);
  std::uniform_int_distribution<int> kind(0, 4);
  std::uniform_int_distribution<int> pick_cmp(0, 4);
  std::uniform_int_distribution<int> small(0, 6);
  std::uniform_int_distribution<int> tenth(0, 10);
  const int k = count(rng);
  for (int i = 0; i < k; ++i) {
    const auto cmp = static_cast<Comparator>(pick_cmp(rng));
    const std::string label = "Q" + std::to_string(i + 1);
    switch (kind(rng)) {
      case 0:
        set.Add(label, NetworkConstraint{MetricId::kSize, cmp, small(rng)});
        break;
      case 1:
        set.Add(label, NetworkConstraint{MetricId::kDensity, cmp,
                                         Rational(tenth(rng), 10)});
        break;
      case 2:
        set.Add(label, ForAllActors{RandomPredicate(rng, 1)});
        break;
      case 3: {
        const bool fraction = std::bernoulli_distribution(0.3)(rng);
        set.Add(label,
                CountActors{RandomPredicate(rng, 1), cmp,
                            fraction ? CountBound{Rational(tenth(rng), 10), true}
                                     : CountBound{Rational(small(rng) / 2),
                                                  false}});
        break;
      }
      default:
        set.Add(label, PairwisePath{PathScope::kAllPairs, cmp, small(rng) / 2});
        break;
    }
  }
  return set;
}

}  // namespace vbe::testing

#endif  // VBE_TESTS_ORACLE_H_
