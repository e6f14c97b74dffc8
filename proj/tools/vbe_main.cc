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

// vbe: social-network requirement checking for breeding environments.
//
//   vbe metrics --network FILE [--format matrix|edges] [--undirected]
//   vbe check   --network FILE --requirements FILE [--anchor ID]
//               [--parent FILE] [--subset A,B,C]
//   vbe roles   --network FILE [--role member|planner|broker|all]
//   vbe search  --network FILE --requirements FILE --min-size K --max-size K
//
// Exit status: 0 satisfied / success, 1 requirements violated or no
// solution, 2 input or usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "vbe/errors.h"
#include "vbe/evaluator.h"
#include "vbe/network_io.h"
#include "vbe/report_io.h"
#include "vbe/requirements_parser.h"
#include "vbe/search.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitError = 2;

struct NetworkArgs {
  std::string path;
  std::string format = "auto";
  bool symmetric = false;
  bool undirected = false;
  bool lenient = false;
  std::string out = "text";
};

void AddNetworkOptions(CLI::App* cmd, NetworkArgs& args) {
  cmd->add_option("--network", args.path, "Network file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", args.format, "Network file format")
      ->check(CLI::IsMember({"auto", "matrix", "edges"}));
  cmd->add_flag("--symmetric", args.symmetric,
                "Insert both directions for every tie read");
  cmd->add_flag("--undirected", args.undirected,
                "Path metrics on the symmetrized network");
  cmd->add_flag("--lenient", args.lenient,
                "Skip unreachable pairs instead of leaving path metrics "
                "undefined");
  cmd->add_option("--out", args.out, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
}

vbe::SocialNetwork LoadNetwork(const std::string& path,
                               const NetworkArgs& args) {
  std::optional<vbe::NetworkFormat> format;
  if (args.format == "matrix") format = vbe::NetworkFormat::kMatrixCsv;
  if (args.format == "edges") format = vbe::NetworkFormat::kEdgeList;
  return vbe::ReadNetworkFile(path, format, args.symmetric);
}

vbe::PathOptions PathsFrom(const NetworkArgs& args) {
  return vbe::PathOptions{
      args.undirected ? vbe::PathView::kUndirected : vbe::PathView::kDirected,
      args.lenient ? vbe::Reachability::kLenient : vbe::Reachability::kStrict};
}

vbe::ReportFormat FormatFrom(const NetworkArgs& args) {
  return args.out == "json" ? vbe::ReportFormat::kJson
                            : vbe::ReportFormat::kText;
}

bool ColorEnabled() {
  const char* value = std::getenv("VBE_COLOR");
  return value != nullptr && std::string(value) == "1";
}

std::string Stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

vbe::RequirementSet LoadRequirements(const std::string& path) {
  return vbe::ParseRequirements(vbe::ReadTextFile(path), Stem(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Social requirements for virtual breeding environments"};
  app.require_subcommand(1);

  NetworkArgs metrics_args;
  CLI::App* metrics =
      app.add_subcommand("metrics", "Print network and per-actor metrics");
  AddNetworkOptions(metrics, metrics_args);

  NetworkArgs check_args;
  std::string check_requirements;
  std::string check_anchor;
  std::string check_parent;
  std::vector<std::string> check_subset;
  CLI::App* check =
      app.add_subcommand("check", "Evaluate a requirement set on a network");
  AddNetworkOptions(check, check_args);
  check->add_option("--requirements", check_requirements, "Requirements file")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("--anchor", check_anchor, "Anchor actor id");
  check->add_option("--parent", check_parent,
                    "Parent network for @parent atoms")
      ->check(CLI::ExistingFile);
  check->add_option("--subset", check_subset,
                    "Evaluate the subnetwork induced by these actors")
      ->delimiter(',');

  NetworkArgs roles_args;
  std::string role_name = "all";
  std::string role_order = "full";
  CLI::App* roles = app.add_subcommand("roles", "List role candidates");
  AddNetworkOptions(roles, roles_args);
  roles->add_option("--role", role_name, "Role to list")
      ->check(CLI::IsMember({"member", "planner", "broker", "all"}));
  roles->add_option("--order", role_order,
                    "full: every role on the whole network; filtered: "
                    "planner and broker among members only")
      ->check(CLI::IsMember({"full", "filtered"}));

  NetworkArgs search_args;
  std::string search_requirements;
  std::string search_anchor;
  vbe::SearchConfig cfg;
  std::string search_mode = "exhaustive";
  std::string objective = "size";
  CLI::App* search = app.add_subcommand(
      "search", "Find subnetworks satisfying a requirement set");
  AddNetworkOptions(search, search_args);
  search->add_option("--requirements", search_requirements,
                     "Requirements file")
      ->required()
      ->check(CLI::ExistingFile);
  search->add_option("--min-size", cfg.min_size, "Smallest subset size")
      ->required();
  search->add_option("--max-size", cfg.max_size, "Largest subset size")
      ->required();
  search->add_option("--mode", search_mode, "Search strategy")
      ->check(CLI::IsMember({"exhaustive", "peel"}));
  search->add_option("--objective", objective, "Solution ordering")
      ->check(CLI::IsMember({"size", "density", "first"}));
  search->add_option("--cap", cfg.enumeration_cap,
                     "Maximum number of subsets to evaluate");
  search->add_option("--max-actors", cfg.max_network_size,
                     "Largest network accepted by exhaustive search");
  search->add_option("--anchor", search_anchor, "Anchor actor id");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  const bool color = ColorEnabled();
  try {
    if (*metrics) {
      const vbe::SocialNetwork net =
          LoadNetwork(metrics_args.path, metrics_args);
      std::cout << vbe::RenderMetrics(net, PathsFrom(metrics_args),
                                      FormatFrom(metrics_args),
                                      Stem(metrics_args.path));
      return kExitOk;
    }

    if (*check) {
      const vbe::SocialNetwork full = LoadNetwork(check_args.path, check_args);
      const vbe::RequirementSet reqs = LoadRequirements(check_requirements);
      std::optional<vbe::SocialNetwork> parent;
      if (!check_parent.empty()) parent = LoadNetwork(check_parent, check_args);

      vbe::EvaluationOptions options;
      options.paths = PathsFrom(check_args);
      options.network_name = Stem(check_args.path);
      if (!check_anchor.empty()) options.anchor = check_anchor;

      if (!check_subset.empty()) {
        const vbe::SocialNetwork sub = full.InducedSubnetwork(check_subset);
        options.parent = parent ? &*parent : &full;
        options.network_name += "[" + fmt::format("{}", fmt::join(
                                          sub.actors(), ",")) + "]";
        const vbe::EvaluationReport report = vbe::Evaluate(sub, reqs, options);
        std::cout << vbe::RenderReport(report, FormatFrom(check_args), color);
        return report.overall ? kExitOk : kExitViolated;
      }
      if (parent) options.parent = &*parent;
      const vbe::EvaluationReport report = vbe::Evaluate(full, reqs, options);
      std::cout << vbe::RenderReport(report, FormatFrom(check_args), color);
      return report.overall ? kExitOk : kExitViolated;
    }

    if (*roles) {
      const vbe::SocialNetwork net = LoadNetwork(roles_args.path, roles_args);
      const vbe::RoleOrder order = role_order == "filtered"
                                       ? vbe::RoleOrder::kAfterMemberFiltering
                                       : vbe::RoleOrder::kFullNetwork;
      std::map<vbe::Role, std::vector<vbe::ActorId>> candidates;
      if (role_name == "all") {
        candidates = vbe::AllRoleCandidates(net, order, PathsFrom(roles_args));
      } else {
        const vbe::Role role = *vbe::RoleFromName(role_name);
        candidates[role] =
            vbe::RoleCandidates(net, role, order, PathsFrom(roles_args));
      }
      std::cout << vbe::RenderRoles(candidates, FormatFrom(roles_args));
      return kExitOk;
    }

    if (*search) {
      const vbe::SocialNetwork net = LoadNetwork(search_args.path, search_args);
      const vbe::RequirementSet reqs = LoadRequirements(search_requirements);
      vbe::EvaluationOptions options;
      options.paths = PathsFrom(search_args);
      options.network_name = Stem(search_args.path);
      if (!search_anchor.empty()) options.anchor = search_anchor;
      cfg.objective = objective == "density" ? vbe::Objective::kMaximizeDensity
                      : objective == "first" ? vbe::Objective::kFirstFound
                                             : vbe::Objective::kMaximizeSize;

      std::vector<vbe::SubnetworkSolution> solutions;
      if (search_mode == "peel") {
        cfg.mode = vbe::SearchMode::kGreedyPeel;
        vbe::PeelResult result =
            vbe::SearchGreedyPeel(net, reqs, cfg, options);
        if (result.solution) {
          solutions.push_back(std::move(*result.solution));
        } else if (!result.removals.empty()) {
          std::cerr << "peeled without success: "
                    << fmt::format("{}", fmt::join(result.removals, ", "))
                    << "\n";
        }
      } else {
        cfg.mode = vbe::SearchMode::kExhaustive;
        solutions = vbe::SearchExhaustive(net, reqs, cfg, options);
      }
      std::cout << vbe::RenderSolutions(solutions, FormatFrom(search_args));
      return solutions.empty() ? kExitViolated : kExitOk;
    }
  } catch (const vbe::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
