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

#ifndef VBE_FIXTURES_H_
#define VBE_FIXTURES_H_

#include <string_view>

namespace vbe::fixtures {

// Ten steel manufacturers; row = sender, column = receiver. 51 ties.
inline constexpr std::string_view kSteel10MatrixCsv =
    ",A,B,C,D,E,F,G,H,I,J\n"
    "A,X,1,0,0,1,0,1,0,1,0\n"
    "B,1,X,1,1,1,0,1,1,1,0\n"
    "C,0,1,X,1,1,1,1,0,0,1\n"
    "D,1,1,0,X,1,0,1,0,0,0\n"
    "E,1,1,1,1,X,0,1,1,1,1\n"
    "F,0,0,1,1,1,X,1,0,1,0\n"
    "G,0,1,0,1,1,0,X,0,0,0\n"
    "H,1,1,0,1,1,0,1,X,1,0\n"
    "I,0,1,0,0,1,0,1,0,X,0\n"
    "J,1,1,1,0,1,0,1,0,0,X\n";

// Steel network with actor F cut down to one inbound and three outbound ties
// (F -> C, E, I). Every other actor still has an in- or out-density above
// one half, so F is the only actor failing the member rule.
inline constexpr std::string_view kSteel10SparseFMatrixCsv =
    ",A,B,C,D,E,F,G,H,I,J\n"
    "A,X,1,0,0,1,0,1,0,1,0\n"
    "B,1,X,1,1,1,0,1,1,1,0\n"
    "C,0,1,X,1,1,1,1,0,0,1\n"
    "D,1,1,0,X,1,0,1,0,0,0\n"
    "E,1,1,1,1,X,0,1,1,1,1\n"
    "F,0,0,1,0,1,X,0,0,1,0\n"
    "G,0,1,0,1,1,0,X,0,0,0\n"
    "H,1,1,0,1,1,0,1,X,1,0\n"
    "I,0,1,0,0,1,0,1,0,X,0\n"
    "J,1,1,1,0,1,0,1,0,0,X\n";

// Wholesaler A with five direct friends (C, E, F, I, J). C, E, F and I each
// have one more partner outside A; J knows only A. Parse in symmetric mode.
inline constexpr std::string_view kWholesaleEdges =
    "actors: A,B,C,D,E,F,G,H,I,J\n"
    "A,C\n"
    "A,E\n"
    "A,F\n"
    "A,I\n"
    "A,J\n"
    "F,G\n"
    "C,D\n"
    "E,H\n"
    "I,B\n";

}  // namespace vbe::fixtures

#endif  // VBE_FIXTURES_H_
