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

#include "vbe/network.h"

#include <algorithm>
#include <cctype>

#include <fmt/format.h>

#include "vbe/errors.h"

namespace vbe {

bool IsValidActorId(std::string_view id) {
  if (id.empty()) return false;
  if (std::isspace(static_cast<unsigned char>(id.front())) ||
      std::isspace(static_cast<unsigned char>(id.back()))) {
    return false;
  }
  return id.find(',') == std::string_view::npos &&
         id.find('\n') == std::string_view::npos;
}

SocialNetwork::SocialNetwork(std::vector<ActorId> actor_ids)
    : actors_(std::move(actor_ids)) {
  if (actors_.empty()) throw InvalidArgument("actor list is empty");
  index_.reserve(actors_.size());
  for (std::size_t i = 0; i < actors_.size(); ++i) {
    if (!IsValidActorId(actors_[i])) {
      throw InvalidArgument(fmt::format("invalid actor id '{}'", actors_[i]));
    }
    if (!index_.emplace(actors_[i], i).second) {
      throw InvalidArgument(fmt::format("duplicate actor id '{}'", actors_[i]));
    }
  }
  out_.resize(actors_.size());
  in_.resize(actors_.size());
}

bool SocialNetwork::Contains(std::string_view id) const {
  return FindIndex(id).has_value();
}

std::optional<std::size_t> SocialNetwork::FindIndex(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SocialNetwork::IndexOf(std::string_view id) const {
  if (auto index = FindIndex(id)) return *index;
  throw InvalidArgument(fmt::format("unknown actor '{}'", id));
}

bool SocialNetwork::AddTie(std::string_view from, std::string_view to) {
  return AddTie(IndexOf(from), IndexOf(to));
}

bool SocialNetwork::AddTie(std::size_t from, std::size_t to) {
  if (from >= size() || to >= size()) {
    throw InvalidArgument("actor index out of range");
  }
  if (from == to) {
    throw InvalidArgument(fmt::format("self-tie on '{}'", actors_[from]));
  }
  if (!out_[from].insert(to).second) return false;
  in_[to].insert(from);
  ++tie_count_;
  return true;
}

bool SocialNetwork::HasTie(std::string_view from, std::string_view to) const {
  return HasTie(IndexOf(from), IndexOf(to));
}

bool SocialNetwork::HasTie(std::size_t from, std::size_t to) const {
  return out_.at(from).contains(to);
}

const std::set<std::size_t>& SocialNetwork::out(std::size_t index) const {
  return out_.at(index);
}

const std::set<std::size_t>& SocialNetwork::in(std::size_t index) const {
  return in_.at(index);
}

namespace {

std::vector<ActorId> Names(const std::vector<ActorId>& actors,
                           const std::set<std::size_t>& indices) {
  std::vector<ActorId> names;
  names.reserve(indices.size());
  for (std::size_t i : indices) names.push_back(actors[i]);
  return names;
}

}  // namespace

std::vector<ActorId> SocialNetwork::OutNeighbors(std::string_view id) const {
  return Names(actors_, out_[IndexOf(id)]);
}

std::vector<ActorId> SocialNetwork::InNeighbors(std::string_view id) const {
  return Names(actors_, in_[IndexOf(id)]);
}

std::vector<ActorId> SocialNetwork::Neighbors(std::string_view id) const {
  const std::size_t i = IndexOf(id);
  std::set<std::size_t> all = out_[i];
  all.insert(in_[i].begin(), in_[i].end());
  return Names(actors_, all);
}

std::vector<SocialNetwork::Tie> SocialNetwork::Ties() const {
  std::vector<Tie> ties;
  ties.reserve(tie_count_);
  for (std::size_t from = 0; from < size(); ++from) {
    for (std::size_t to : out_[from]) ties.emplace_back(from, to);
  }
  return ties;
}

SocialNetwork SocialNetwork::InducedSubnetwork(
    std::span<const ActorId> subset) const {
  std::vector<std::size_t> indices;
  indices.reserve(subset.size());
  for (const ActorId& id : subset) indices.push_back(IndexOf(id));
  return InducedSubnetwork(indices);
}

SocialNetwork SocialNetwork::InducedSubnetwork(
    std::span<const std::size_t> indices) const {
  if (indices.empty()) throw InvalidArgument("subset is empty");
  std::vector<std::size_t> sorted(indices.begin(), indices.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= size()) {
    throw InvalidArgument("actor index out of range");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument(
        fmt::format("duplicate actor '{}' in subset",
                    actors_[*std::adjacent_find(sorted.begin(), sorted.end())]));
  }

  // Position of each parent actor in the subnetwork, or size() if absent.
  std::vector<std::size_t> position(size(), size());
  std::vector<ActorId> names;
  names.reserve(sorted.size());
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    position[sorted[k]] = k;
    names.push_back(actors_[sorted[k]]);
  }

  SocialNetwork sub(std::move(names));
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    for (std::size_t to : out_[sorted[k]]) {
      if (position[to] != size()) sub.AddTie(k, position[to]);
    }
  }
  return sub;
}

SocialNetwork SocialNetwork::Symmetrized() const {
  SocialNetwork sym = *this;
  for (const auto& [from, to] : Ties()) sym.AddTie(to, from);
  return sym;
}

}  // namespace vbe
