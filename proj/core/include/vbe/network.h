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

#ifndef VBE_NETWORK_H_
#define VBE_NETWORK_H_

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace vbe {

// Opaque organization label. Non-empty, no commas, no surrounding
// whitespace; compared by exact string equality.
using ActorId = std::string;

bool IsValidActorId(std::string_view id);

// A directed binary social network. A tie (from, to) means "from sends
// information to to". Self-ties never exist and each ordered pair is present
// at most once. Actor order is insertion order and drives every report.
//
// Read operations are const and safe to call concurrently; AddTie requires
// exclusive access.
class SocialNetwork {
 public:
  using Tie = std::pair<std::size_t, std::size_t>;

  // Throws InvalidArgument on an empty list, an invalid id or a duplicate.
  explicit SocialNetwork(std::vector<ActorId> actor_ids);

  std::size_t size() const { return actors_.size(); }
  std::size_t tie_count() const { return tie_count_; }
  const std::vector<ActorId>& actors() const { return actors_; }
  const ActorId& actor(std::size_t index) const { return actors_.at(index); }

  bool Contains(std::string_view id) const;
  std::optional<std::size_t> FindIndex(std::string_view id) const;
  // Throws InvalidArgument for an unknown actor.
  std::size_t IndexOf(std::string_view id) const;

  // Returns false when the tie was already present. Throws on self-ties and
  // unknown actors.
  bool AddTie(std::string_view from, std::string_view to);
  bool AddTie(std::size_t from, std::size_t to);

  bool HasTie(std::string_view from, std::string_view to) const;
  bool HasTie(std::size_t from, std::size_t to) const;

  // Index views, sorted ascending (i.e. in actor order).
  const std::set<std::size_t>& out(std::size_t index) const;
  const std::set<std::size_t>& in(std::size_t index) const;

  std::vector<ActorId> OutNeighbors(std::string_view id) const;
  std::vector<ActorId> InNeighbors(std::string_view id) const;
  // Union of in- and out-neighbors.
  std::vector<ActorId> Neighbors(std::string_view id) const;

  // All ties as index pairs, ordered by (from, to).
  std::vector<Tie> Ties() const;

  // Restriction to `subset`, keeping exactly the ties with both endpoints
  // inside. Actors keep their relative order from this network regardless
  // of the order given. Throws on unknown ids or an empty subset.
  SocialNetwork InducedSubnetwork(std::span<const ActorId> subset) const;
  SocialNetwork InducedSubnetwork(std::span<const std::size_t> indices) const;

  // Every tie mirrored in the opposite direction.
  SocialNetwork Symmetrized() const;

  friend bool operator==(const SocialNetwork& a, const SocialNetwork& b) {
    return a.actors_ == b.actors_ && a.out_ == b.out_;
  }

 private:
  std::vector<ActorId> actors_;
  std::unordered_map<ActorId, std::size_t> index_;
  std::vector<std::set<std::size_t>> out_;
  std::vector<std::set<std::size_t>> in_;
  std::size_t tie_count_ = 0;
};

}  // namespace vbe

#endif  // VBE_NETWORK_H_
