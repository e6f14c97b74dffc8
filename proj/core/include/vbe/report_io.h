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

#ifndef VBE_REPORT_IO_H_
#define VBE_REPORT_IO_H_

#include <span>
#include <string>
#include <vector>

#include "vbe/evaluator.h"
#include "vbe/metrics.h"
#include "vbe/network.h"
#include "vbe/search.h"

namespace vbe {

enum class ReportFormat { kText, kJson };

// Text is Explain(); JSON has sorted keys and prints every value both as an
// exact fraction and as a 4-place decimal. Output is byte-stable for equal
// reports.
std::string RenderReport(const EvaluationReport& report, ReportFormat format,
                         bool color = false);

// Every network-scoped metric followed by a per-actor table.
std::string RenderMetrics(const SocialNetwork& net, const PathOptions& paths,
                          ReportFormat format,
                          const std::string& network_name = "network");

std::string RenderRoles(const std::map<Role, std::vector<ActorId>>& roles,
                        ReportFormat format);

std::string RenderSolutions(std::span<const SubnetworkSolution> solutions,
                            ReportFormat format);

}  // namespace vbe

#endif  // VBE_REPORT_IO_H_
