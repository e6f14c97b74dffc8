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

#ifndef VBE_NETWORK_IO_H_
#define VBE_NETWORK_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "vbe/network.h"

namespace vbe {

enum class NetworkFormat { kMatrixCsv, kEdgeList };

// Adjacency matrix with a header row of actor ids (an empty leading corner
// cell is optional) and one row per actor: id followed by n cells of 0, 1 or
// X. Cells are comma separated, or whitespace separated when a line has no
// comma. Row r, column c = 1 means r sends information to c. Diagonal cells
// are ignored; X is rejected anywhere else. Row ids must match the header.
SocialNetwork ParseMatrixCsv(std::string_view text);
std::string SerializeMatrixCsv(const SocialNetwork& net);

// One "from,to" tie per line, optionally preceded by "actors: a,b,c" to fix
// actor order and declare isolated actors. `#` starts a comment. In symmetric
// mode each line adds both directions.
SocialNetwork ParseEdgeList(std::string_view text, bool symmetric = false);
std::string SerializeEdgeList(const SocialNetwork& net);

std::string ReadTextFile(const std::filesystem::path& path);

// Chooses the format from `format`, else from the extension (.edges, .txt,
// .el -> edge list) or an "actors:" preamble, else matrix.
SocialNetwork ReadNetworkFile(const std::filesystem::path& path,
                              std::optional<NetworkFormat> format = {},
                              bool symmetric = false);

}  // namespace vbe

#endif  // VBE_NETWORK_IO_H_
