// SPDX-License-Identifier: Apache-2.0
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pmbpqm/sweep.hpp"
#include "pmbpqm/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << content;
  return static_cast<bool>(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string with_suffix(const std::string& base, const std::string& suffix) {
  const auto dot = base.find_last_of('.');
  if (dot == std::string::npos || base.find('/', dot) != std::string::npos) {
    return base + suffix;
  }
  return base.substr(0, dot) + suffix + base.substr(dot);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Paired-measurement belief propagation for symmetric classical-quantum channels"};
  app.set_version_flag("--version", pmbpqm::kVersion);

  pmbpqm::SweepSpec spec;
  std::string out_path;
  std::string graph_path;
  std::vector<double> q_list;

  app.add_option("--experiment", spec.experiment, "Experiment: fg5, fg7, lemma3q, de")
      ->required()
      ->check(CLI::IsMember({"fg5", "fg7", "lemma3q", "de"}));
  app.add_option("--theta-min", spec.theta_min, "Grid start (rad)");
  app.add_option("--theta-max", spec.theta_max, "Grid end (rad)");
  auto* steps_opt = app.add_option("--theta-steps", spec.theta_steps, "Grid size");
  app.add_option("--p-list", spec.p_list, "Flip probabilities for the channel family")
      ->delimiter(',');
  app.add_option("--q-list", q_list,
                 "Depolarizing weights; shorthand for --p-list with p = q/2")
      ->delimiter(',');
  app.add_option("--dv", spec.dv, "Variable-node degree");
  app.add_option("--dc", spec.dc, "Check-node degree");
  auto* m_opt = app.add_option("--M", spec.population, "Population size");
  auto* n_opt = app.add_option("--N", spec.iterations, "Half-round count");
  app.add_option("--bisect-steps", spec.bisect_steps, "Threshold bisection depth");
  app.add_option("--seed", spec.seed, "Run seed");
  app.add_option("--threads", spec.threads, "Worker threads (0 = all)");
  app.add_option("--out", out_path, "Output path (CSV; de also writes _holevo.csv and .svg)");
  app.add_option("--profile", spec.profile, "full or ci")->check(CLI::IsMember({"full", "ci"}));
  app.add_option("--graph", graph_path, "Factor-graph JSON overriding the built-in instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!q_list.empty()) {
      spec.p_list.clear();
      for (double q : q_list) spec.p_list.push_back(q / 2.0);
    }
    if (spec.profile == "ci") {
      if (m_opt->count() == 0) spec.population = 1000;
      if (n_opt->count() == 0) spec.iterations = 50;
      if (steps_opt->count() == 0 && spec.experiment == "de") spec.theta_steps = 8;
    }
    if (!graph_path.empty()) spec.graph_json = read_file(graph_path);

    pmbpqm::SweepOutput result;
    if (spec.experiment == "fg5") {
      result = pmbpqm::run_fg5(spec);
    } else if (spec.experiment == "fg7") {
      result = pmbpqm::run_fg7(spec);
    } else if (spec.experiment == "lemma3q") {
      result = pmbpqm::run_lemma3q();
    } else {
      result = pmbpqm::run_de(spec);
    }

    if (!result.report.empty()) std::cout << result.report;
    if (out_path.empty()) {
      if (result.report.empty()) std::cout << result.csv;
    } else {
      if (!write_file(out_path, result.csv)) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return kExitUsage;
      }
      if (!result.extra_csv.empty()) write_file(with_suffix(out_path, "_holevo"), result.extra_csv);
      if (!result.svg.empty()) {
        std::string svg_path = out_path;
        const auto dot = svg_path.find_last_of('.');
        svg_path = (dot == std::string::npos ? svg_path : svg_path.substr(0, dot)) + ".svg";
        write_file(svg_path, result.svg);
      }
    }
    return kExitOk;
  } catch (const pmbpqm::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
