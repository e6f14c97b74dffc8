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

#ifndef VBE_REQUIREMENTS_PARSER_H_
#define VBE_REQUIREMENTS_PARSER_H_

#include <string>
#include <string_view>

#include "vbe/requirements.h"

namespace vbe {

// Line-oriented requirements language:
//
//   # comment
//   name steel_vbe
//   anchor A
//   require R1 : size >= 5
//   require R2 : density > 50%
//   require R3 : recip_ratio > 0.5
//   require R4 : count actor (in_density > 0.8) >= 1
//   require R5 : exists >= 1 actor (in_density > 80% and out_density > 70%)
//   require all : forall actor except anchor (neighborhood_size > 1 @parent)
//   require friends : path anchor->others == 1
//   require strangers : path others->others > 1
//   require planner : forall actor (in_degree > avg_others(in_degree))
//
// The label and colon are optional; unlabelled requirements are named R<k>
// after their 1-based position. Thresholds of fraction-valued metrics must
// lie in [0, 1] or carry a "%" suffix. Throws ParseError with the line and
// column of the offending token.
RequirementSet ParseRequirements(std::string_view text,
                                 std::string default_name = "requirements");

// Inverse of ParseRequirements: ParseRequirements(SerializeRequirements(s))
// == s for every valid set.
std::string SerializeRequirements(const RequirementSet& set);

std::string PredicateToString(const ActorPredicate& predicate);
std::string AtomToString(const Atom& atom);
std::string RequirementBodyToString(const RequirementBody& body);

}  // namespace vbe

#endif  // VBE_REQUIREMENTS_PARSER_H_
