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

#include "vbe/network_io.h"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <fmt/format.h>

#include "vbe/errors.h"

namespace vbe {

namespace {

std::string_view Trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  return text;
}

std::vector<std::string> SplitFields(std::string_view line) {
  std::vector<std::string> fields;
  if (line.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.emplace_back(Trim(line.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return fields;
  }
  std::istringstream words{std::string(line)};
  std::string word;
  while (words >> word) fields.push_back(word);
  return fields;
}

struct Line {
  std::size_t number;
  std::string text;
};

// Non-blank lines that are not '#' comments, trimmed.
std::vector<Line> ContentLines(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream input{std::string(text)};
  std::string raw;
  std::size_t number = 0;
  while (std::getline(input, raw)) {
    ++number;
    const std::string_view trimmed = Trim(raw);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    lines.push_back({number, std::string(trimmed)});
  }
  return lines;
}

SocialNetwork BuildNetwork(std::vector<ActorId> actors, std::size_t line) {
  try {
    return SocialNetwork(std::move(actors));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what(), line);
  }
}

}  // namespace

SocialNetwork ParseMatrixCsv(std::string_view text) {
  const std::vector<Line> lines = ContentLines(text);
  if (lines.empty()) throw ParseError("empty matrix", 0);

  // Keep the raw header split: a leading comma means an empty corner cell.
  std::vector<std::string> header = SplitFields(lines.front().text);
  if (!header.empty() && header.front().empty()) header.erase(header.begin());
  const std::size_t n = header.size();
  SocialNetwork net = BuildNetwork(header, lines.front().number);

  if (lines.size() - 1 != n) {
    throw ParseError(fmt::format("expected {} matrix rows, found {}", n,
                                 lines.size() - 1),
                     lines.back().number);
  }
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[r + 1];
    const std::vector<std::string> cells = SplitFields(line.text);
    if (cells.size() != n + 1) {
      throw ParseError(fmt::format("ragged row: expected {} cells after the "
                                   "actor id, found {}",
                                   n, cells.size() - 1),
                       line.number);
    }
    if (cells.front() != header[r]) {
      throw ParseError(fmt::format("row {} is labelled '{}', expected '{}'",
                                   r + 1, cells.front(), header[r]),
                       line.number);
    }
    for (std::size_t c = 0; c < n; ++c) {
      const std::string& cell = cells[c + 1];
      const bool diagonal = r == c;
      if (cell == "X" || cell == "x") {
        if (!diagonal) {
          throw ParseError(fmt::format("'X' off the diagonal at column '{}'",
                                       header[c]),
                           line.number);
        }
      } else if (cell == "1") {
        if (!diagonal) net.AddTie(r, c);
      } else if (cell != "0") {
        throw ParseError(fmt::format("non-binary cell '{}' at column '{}'",
                                     cell, header[c]),
                         line.number);
      }
    }
  }
  return net;
}

std::string SerializeMatrixCsv(const SocialNetwork& net) {
  std::string out;
  for (const ActorId& id : net.actors()) out += "," + id;
  out += "\n";
  for (std::size_t r = 0; r < net.size(); ++r) {
    out += net.actor(r);
    for (std::size_t c = 0; c < net.size(); ++c) {
      out += r == c ? ",X" : (net.HasTie(r, c) ? ",1" : ",0");
    }
    out += "\n";
  }
  return out;
}

SocialNetwork ParseEdgeList(std::string_view text, bool symmetric) {
  const std::vector<Line> lines = ContentLines(text);
  std::vector<ActorId> actors;
  std::unordered_map<std::string, std::size_t> seen;
  auto declare = [&](const std::string& id, std::size_t line) {
    if (!IsValidActorId(id)) {
      throw ParseError(fmt::format("invalid actor id '{}'", id), line);
    }
    if (seen.emplace(id, actors.size()).second) actors.push_back(id);
  };

  struct Edge {
    std::string from;
    std::string to;
    std::size_t line;
  };
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const Line& line = lines[k];
    if (line.text.starts_with("actors:")) {
      if (k != 0) {
        throw ParseError("'actors:' must be the first line", line.number);
      }
      for (const std::string& id :
           SplitFields(std::string_view(line.text).substr(7))) {
        if (seen.contains(id)) {
          throw ParseError(fmt::format("duplicate actor id '{}'", id),
                           line.number);
        }
        declare(id, line.number);
      }
      continue;
    }
    const std::vector<std::string> fields = SplitFields(line.text);
    if (fields.size() != 2 || line.text.find(',') == std::string::npos) {
      throw ParseError(
          fmt::format("malformed tie '{}', expected 'from,to'", line.text),
          line.number);
    }
    if (fields[0] == fields[1]) {
      throw ParseError(fmt::format("self-tie on '{}'", fields[0]),
                       line.number);
    }
    declare(fields[0], line.number);
    declare(fields[1], line.number);
    edges.push_back({fields[0], fields[1], line.number});
  }
  if (actors.empty()) throw ParseError("edge list declares no actors", 0);

  SocialNetwork net(std::move(actors));
  for (const Edge& edge : edges) {
    net.AddTie(seen.at(edge.from), seen.at(edge.to));
    if (symmetric) net.AddTie(seen.at(edge.to), seen.at(edge.from));
  }
  return net;
}

std::string SerializeEdgeList(const SocialNetwork& net) {
  std::string out = "actors: ";
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (i > 0) out += ",";
    out += net.actor(i);
  }
  out += "\n";
  for (const auto& [from, to] : net.Ties()) {
    out += net.actor(from) + "," + net.actor(to) + "\n";
  }
  return out;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument(fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SocialNetwork ReadNetworkFile(const std::filesystem::path& path,
                              std::optional<NetworkFormat> format,
                              bool symmetric) {
  const std::string text = ReadTextFile(path);
  if (!format) {
    const std::string ext = path.extension().string();
    const std::vector<Line> lines = ContentLines(text);
    const bool preamble =
        !lines.empty() && lines.front().text.starts_with("actors:");
    format = (ext == ".edges" || ext == ".txt" || ext == ".el" || preamble)
                 ? NetworkFormat::kEdgeList
                 : NetworkFormat::kMatrixCsv;
  }
  if (*format == NetworkFormat::kEdgeList) return ParseEdgeList(text, symmetric);
  SocialNetwork net = ParseMatrixCsv(text);
  return symmetric ? net.Symmetrized() : net;
}

}  // namespace vbe
