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

#include "vbe/report_io.h"

#include <nlohmann/json.hpp>

#include <fmt/format.h>

namespace vbe {

namespace {

using nlohmann::json;

json ValueJson(const std::optional<Rational>& value) {
  if (!value) return json{{"value", nullptr}, {"decimal", nullptr}};
  return json{{"value", FractionString(*value)},
              {"decimal", DecimalString(*value)}};
}

json MetricValueJson(const MetricValue& metric) {
  json out = ValueJson(metric.value);
  out["metric"] = MetricName(metric.metric);
  out["actor"] = metric.actor ? json(*metric.actor) : json(nullptr);
  return out;
}

json VerdictJson(const Verdict& verdict) {
  json violators = json::array();
  for (const Violation& v : verdict.violators) {
    violators.push_back(json{{"actor", v.actor},
                             {"reason", v.reason},
                             {"failed_atoms", v.failed_atoms}});
  }
  json observed = json::array();
  for (const MetricValue& m : verdict.observed) {
    observed.push_back(MetricValueJson(m));
  }
  return json{{"label", verdict.label},
              {"kind", verdict.kind},
              {"satisfied", verdict.satisfied},
              {"detail", verdict.detail},
              {"witnesses", verdict.witnesses},
              {"violators", std::move(violators)},
              {"observed", std::move(observed)}};
}

json RolesJson(const std::map<Role, std::vector<ActorId>>& roles) {
  json out = json::object();
  for (const auto& [role, actors] : roles) out[std::string(RoleName(role))] = actors;
  return out;
}

json ReportJson(const EvaluationReport& report) {
  json verdicts = json::array();
  for (const Verdict& verdict : report.verdicts) {
    verdicts.push_back(VerdictJson(verdict));
  }
  return json{{"network", report.network_name},
              {"requirement_set", report.requirement_set_name},
              {"overall", report.overall},
              {"verdicts", std::move(verdicts)},
              {"role_candidates", RolesJson(report.role_candidates)},
              {"removals", report.removals}};
}

constexpr MetricId kNetworkMetrics[] = {
    MetricId::kSize, MetricId::kDensity, MetricId::kReciprocatedTieRatio,
    MetricId::kAvgPathLength};

constexpr MetricId kActorMetrics[] = {
    MetricId::kInDegree,         MetricId::kOutDegree,
    MetricId::kTotalDegree,      MetricId::kInDensity,
    MetricId::kOutDensity,       MetricId::kNeighborhoodSize,
    MetricId::kReciprocatedPartnerCount, MetricId::kReciprocatedDensity,
    MetricId::kCloseness,        MetricId::kEccentricity};

std::string Cell(const std::optional<Rational>& value) {
  if (!value) return "undefined";
  if (IsInteger(*value)) return FractionString(*value);
  return DecimalString(*value, 2);
}

std::string JoinIds(const std::vector<ActorId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ", ";
    out += ids[i];
  }
  return ids.empty() ? "(none)" : out;
}

}  // namespace

std::string RenderReport(const EvaluationReport& report, ReportFormat format,
                         bool color) {
  if (format == ReportFormat::kText) return Explain(report, color);
  return ReportJson(report).dump(2) + "\n";
}

std::string RenderMetrics(const SocialNetwork& net, const PathOptions& paths,
                          ReportFormat format,
                          const std::string& network_name) {
  const MetricCalculator calc(net, paths);
  const bool lenient = paths.reachability == Reachability::kLenient;
  const std::string_view view =
      paths.view == PathView::kDirected ? "directed" : "undirected";
  const std::string_view policy = lenient ? "lenient" : "strict";

  if (format == ReportFormat::kJson) {
    json network = json::object();
    for (MetricId metric : kNetworkMetrics) {
      network[std::string(MetricName(metric))] = ValueJson(calc.NetworkValue(metric));
    }
    network["tie_count"] = net.tie_count();
    network["mutual_pair_count"] = MutualPairCount(net);
    if (lenient) {
      network["reachable_fraction"] =
          ValueJson(ReachableFraction(net, paths.view));
    }
    json actors = json::array();
    for (std::size_t i = 0; i < net.size(); ++i) {
      json row = json::object();
      row["actor"] = net.actor(i);
      for (MetricId metric : kActorMetrics) {
        row[std::string(MetricName(metric))] = ValueJson(calc.ActorValue(metric, i));
      }
      if (lenient) {
        row["reachable_fraction"] =
            ValueJson(ReachableFraction(net, net.actor(i), paths.view));
      }
      actors.push_back(std::move(row));
    }
    const json doc{{"network", network_name},
                   {"paths", json{{"view", view}, {"reachability", policy}}},
                   {"network_metrics", std::move(network)},
                   {"actors", std::move(actors)}};
    return doc.dump(2) + "\n";
  }

  std::string out = fmt::format("network {} ({} paths, {})\n", network_name,
                                view, policy);
  out += fmt::format("{:<24}{}\n", "tie_count", net.tie_count());
  out += fmt::format("{:<24}{}\n", "mutual_pair_count", MutualPairCount(net));
  for (MetricId metric : kNetworkMetrics) {
    const auto value = calc.NetworkValue(metric);
    out += fmt::format("{:<24}{}\n", MetricName(metric),
                       value ? ObservedString(*value) : "undefined");
  }
  if (lenient) {
    const auto fraction = ReachableFraction(net, paths.view);
    out += fmt::format("{:<24}{}\n", "reachable_fraction",
                       fraction ? ObservedString(*fraction) : "undefined");
  }
  out += "\n";

  // Short column headers; the legend maps them back to metric names.
  static constexpr std::string_view kHeaders[] = {
      "in_deg", "out_deg", "tot_deg", "in_dens", "out_dens",
      "nbhd",   "recip",   "recip_d", "close",   "ecc"};
  out += fmt::format("{:<10}", "actor");
  for (std::string_view h : kHeaders) out += fmt::format("{:>10}", h);
  out += "\n";
  for (std::size_t i = 0; i < net.size(); ++i) {
    out += fmt::format("{:<10}", net.actor(i));
    for (MetricId metric : kActorMetrics) {
      out += fmt::format("{:>10}", Cell(calc.ActorValue(metric, i)));
    }
    out += "\n";
  }
  return out;
}

std::string RenderRoles(const std::map<Role, std::vector<ActorId>>& roles,
                        ReportFormat format) {
  if (format == ReportFormat::kJson) return RolesJson(roles).dump(2) + "\n";
  std::string out;
  for (const auto& [role, actors] : roles) {
    out += fmt::format("{}: {}\n", RoleName(role), JoinIds(actors));
  }
  return out;
}

std::string RenderSolutions(std::span<const SubnetworkSolution> solutions,
                            ReportFormat format) {
  if (format == ReportFormat::kJson) {
    json out = json::array();
    for (const SubnetworkSolution& s : solutions) {
      out.push_back(json{{"actors", s.actors},
                         {"objective", ValueJson(s.objective_value)},
                         {"report", ReportJson(s.report)}});
    }
    return out.dump(2) + "\n";
  }
  std::string out = fmt::format("{} solution(s)\n", solutions.size());
  for (std::size_t i = 0; i < solutions.size(); ++i) {
    const SubnetworkSolution& s = solutions[i];
    out += fmt::format("{}. {{{}}} objective={}\n", i + 1, JoinIds(s.actors),
                       ObservedString(s.objective_value));
    if (!s.report.removals.empty()) {
      out += fmt::format("   removed: {}\n", JoinIds(s.report.removals));
    }
  }
  return out;
}

}  // namespace vbe
