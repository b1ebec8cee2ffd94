// SPDX-License-Identifier: Apache-2.0
#include "pmbpqm/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "pmbpqm/csv.hpp"
#include "pmbpqm/parallel.hpp"
#include "pmbpqm/svg.hpp"
#include "pmbpqm/version.hpp"

namespace pmbpqm {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

}  // namespace

void SweepSpec::validate() const {
  if (theta_steps < 1) throw std::invalid_argument("theta_steps must be >= 1");
  if (theta_min < 0.0 || theta_max > kPi / 2 + 1e-12 || theta_min > theta_max) {
    throw std::invalid_argument("theta range must lie inside [0, pi/2]");
  }
  if (p_list.empty()) throw std::invalid_argument("p list must not be empty");
  for (double p : p_list) {
    if (p < 0.0 || p > 0.5) throw std::invalid_argument("flip probabilities must lie in [0, 1/2]");
  }
  if (profile != "full" && profile != "ci") throw std::invalid_argument("profile must be full or ci");
}

std::vector<double> SweepSpec::theta_grid() const {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(theta_steps));
  if (theta_steps == 1) {
    grid.push_back(theta_min);
    return grid;
  }
  for (int i = 0; i < theta_steps; ++i) {
    grid.push_back(theta_min + (theta_max - theta_min) * i / (theta_steps - 1));
  }
  return grid;
}

std::string SweepSpec::echo() const {
  std::string p_str;
  for (std::size_t i = 0; i < p_list.size(); ++i) {
    if (i) p_str += ' ';
    p_str += CsvBuilder::format_number(p_list[i]);
  }
  return "experiment=" + experiment + " theta=[" + CsvBuilder::format_number(theta_min) + "," +
         CsvBuilder::format_number(theta_max) + "]x" + std::to_string(theta_steps) +
         " p_list=" + p_str + " dv=" + std::to_string(dv) + " dc=" + std::to_string(dc) +
         " M=" + std::to_string(population) + " N=" + std::to_string(iterations) +
         " bisect=" + std::to_string(bisect_steps) + " seed=" + std::to_string(seed) +
         " threads=" + std::to_string(threads) + " profile=" + profile;
}

namespace {

void stamp(CsvBuilder& csv, const SweepSpec& spec) {
  csv.comment(std::string("pmbpqm ") + kVersion);
  csv.comment(spec.echo());
}

TreeFactorGraph sweep_graph(const SweepSpec& spec, const QubitBSCQ& w) {
  if (!spec.graph_json.empty()) {
    TreeFactorGraph g = graph_from_json(spec.graph_json);
    for (TreeNode& n : g.nodes) {
      if (n.channel.has_value()) n.channel = w;
    }
    return g;
  }
  return graph_by_name(spec.experiment, w);
}

struct GridCell {
  double theta, p;
};

std::vector<GridCell> grid_cells(const SweepSpec& spec) {
  std::vector<GridCell> cells;
  for (double p : spec.p_list) {
    for (double theta : spec.theta_grid()) cells.push_back({theta, p});
  }
  return cells;
}

}  // namespace

SweepOutput run_fg5(const SweepSpec& spec) {
  spec.validate();
  const auto cells = grid_cells(spec);
  struct Row {
    double theta, p, pm, hel;
  };
  std::vector<Row> rows(cells.size());
  const int nt = resolve_threads(spec.threads);
  const long long n = static_cast<long long>(cells.size());
  ParallelErrors errors;
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long long i = 0; i < n; ++i) {
    errors.run([&, i] {
      const GridCell& c = cells[static_cast<std::size_t>(i)];
      const QubitBSCQ w = from_flip_family(c.theta, c.p);
      const TreeFactorGraph g = sweep_graph(spec, w);
      rows[static_cast<std::size_t>(i)] = {c.theta, c.p, pmbpqm_exact(g).success_prob,
                                           collective_helstrom(g).success_prob};
    });
  }
  errors.rethrow();
  CsvBuilder csv;
  stamp(csv, spec);
  csv.header({"theta", "p", "P_pmbpqm", "P_helstrom", "rel_diff"});
  for (const Row& r : rows) {
    const double rel = r.hel > 0.0 ? (r.hel - r.pm) / r.hel : 0.0;
    csv.row({r.theta, r.p, r.pm, r.hel, rel});
  }
  SweepOutput out;
  out.csv = csv.str();
  return out;
}

SweepOutput run_fg7(const SweepSpec& spec) {
  spec.validate();
  const auto cells = grid_cells(spec);
  struct Row {
    double theta, p, pm, lg;
  };
  std::vector<Row> rows(cells.size());
  const int nt = resolve_threads(spec.threads);
  const long long n = static_cast<long long>(cells.size());
  ParallelErrors errors;
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt)
  for (long long i = 0; i < n; ++i) {
    errors.run([&, i] {
      const GridCell& c = cells[static_cast<std::size_t>(i)];
      const QubitBSCQ w = from_flip_family(c.theta, c.p);
      const TreeFactorGraph g = sweep_graph(spec, w);
      rows[static_cast<std::size_t>(i)] = {c.theta, c.p, pmbpqm_exact(g).success_prob,
                                           locally_greedy(g).success_prob};
    });
  }
  errors.rethrow();
  CsvBuilder csv;
  stamp(csv, spec);
  csv.header({"theta", "p", "P_pmbpqm", "P_lg"});
  for (const Row& r : rows) csv.row({r.theta, r.p, r.pm, r.lg});
  SweepOutput out;
  out.csv = csv.str();
  return out;
}

SweepOutput run_lemma3q() {
  const TreeFactorGraph g = lemma3q();
  const double ph = collective_helstrom(g).success_prob;
  const GeneralBSCQ combined =
      varoast(to_general(lemma3q_channel_w()), to_general(lemma3q_channel_wprime()));
  const auto groupings = grouped_local_measurements(combined, to_general(lemma3q_channel_w()));
  const double pm = pmbpqm_exact(g).success_prob;

  double best = 0.0;
  std::string report;
  report += "three-qubit repetition instance\n";
  report += "  collective Helstrom P_H   = " + fmt("%.6f", ph) + "\n";
  for (const GroupingResult& gr : groupings) {
    report += "  grouping " + gr.grouping + "  P_succ = " + fmt("%.6f", gr.success) + "\n";
    best = std::max(best, gr.success);
  }
  report += "  best two-outcome grouping = " + fmt("%.6f", best) + "\n";
  report += "  PMBPQM                    = " + fmt("%.6f", pm) + "\n";
  report += std::string("  P_LM < P_H: ") + (best < ph ? "yes" : "NO") + "\n";

  SweepOutput out;
  out.report = report;
  CsvBuilder csv;
  csv.comment(std::string("pmbpqm ") + kVersion);
  csv.comment("experiment=lemma3q");
  csv.header({"P_H", "P_group_l1_l2", "P_group_l1_ml1", "P_group_l1_ml2", "P_pmbpqm"});
  csv.row({ph, groupings[0].success, groupings[1].success, groupings[2].success, pm});
  out.csv = csv.str();
  return out;
}

SweepOutput run_de(const SweepSpec& spec) {
  spec.validate();
  DEConfig cfg;
  cfg.dv = spec.dv;
  cfg.dc = spec.dc;
  cfg.population = spec.population;
  cfg.iterations = spec.iterations;
  cfg.success_eps = spec.success_eps;
  cfg.bisect_steps = spec.bisect_steps;
  cfg.threads = spec.threads;

  const std::vector<double> grid = spec.theta_grid();
  const auto points = threshold_curve(cfg, grid, spec.seed);
  const double rate = 1.0 - static_cast<double>(spec.dv) / spec.dc;
  const auto bound = holevo_curve(rate, grid);

  CsvBuilder csv;
  stamp(csv, spec);
  csv.header({"theta", "q_threshold", "p_threshold", "dv", "dc", "M", "N", "seed"});
  for (const CurvePoint& pt : points) {
    csv.row({pt.theta, pt.q, pt.q / 2.0, static_cast<double>(spec.dv),
             static_cast<double>(spec.dc), static_cast<double>(spec.population),
             static_cast<double>(spec.iterations), static_cast<double>(spec.seed)});
  }

  CsvBuilder hcsv;
  stamp(hcsv, spec);
  hcsv.header({"theta", "q_bound", "rate"});
  for (const CurvePoint& pt : bound) hcsv.row({pt.theta, pt.q, rate});

  SvgPlot plot("theta (rad)", "p = q/2");
  std::vector<double> tx, ty, hx, hy;
  for (const CurvePoint& pt : points) {
    if (pt.q > 0.0) {
      tx.push_back(pt.theta);
      ty.push_back(pt.q / 2.0);
    }
  }
  for (const CurvePoint& pt : bound) {
    if (pt.q >= 0.0) {
      hx.push_back(pt.theta);
      hy.push_back(pt.q / 2.0);
    }
  }
  char label[96];
  std::snprintf(label, sizeof(label), "(%d,%d) threshold", spec.dv, spec.dc);
  plot.add_series(label, "#1f77b4", tx, ty);
  std::snprintf(label, sizeof(label), "Holevo bound, rate %.3g", rate);
  plot.add_series(label, "#d62728", hx, hy);

  SweepOutput out;
  out.csv = csv.str();
  out.extra_csv = hcsv.str();
  out.svg = plot.render();
  return out;
}

}  // namespace pmbpqm
