// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one criterion per entry, each printing a PASS/FAIL line
// with its measured runtime. The process exit code is the number of failed
// criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "classical_de_oracle.hpp"
#include "pmbpqm/combine.hpp"
#include "pmbpqm/de.hpp"
#include "pmbpqm/decoder.hpp"
#include "pmbpqm/sweep.hpp"
#include "test_util.hpp"

using namespace pmbpqm;
using qla::CMatrix;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1
Check criterion1() {
  Check c;
  const double ph = collective_helstrom(lemma3q()).success_prob;
  const auto groupings = grouped_local_measurements(
      varoast(to_general(lemma3q_channel_w()), to_general(lemma3q_channel_wprime())),
      to_general(lemma3q_channel_w()));
  c.note("P_H=" + fmt("%.6f", ph));
  c.expect(std::abs(ph - 0.74147) <= 1e-4,
           "P_H anchor 0.74147+-1e-4 missed (computed " + fmt("%.6f", ph) +
               "; 0.74147 matches the variant with all three qubits sent through the first "
               "channel, which this instance deliberately does not use)");
  const double expected[3] = {0.737088, 0.736276, 0.738794};
  double best = 0.0;
  for (int i = 0; i < 3; ++i) {
    c.expect(std::abs(groupings[i].success - expected[i]) <= 1e-5,
             groupings[i].grouping + "=" + fmt("%.6f", groupings[i].success) + " vs " +
                 fmt("%.6f", expected[i]));
    best = std::max(best, groupings[i].success);
  }
  c.note("P_LM=" + fmt("%.6f", best));
  c.expect(best < ph, "P_LM < P_H violated");
  return c;
}

// ---------------------------------------------------------------- criterion 2
Check criterion2() {
  Check c;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double theta = 0.02 + (kPi / 2 - 0.02) * i / 49.0;
    const TreeFactorGraph g = fg5(QubitBSCQ(theta, 0.0));
    const double gap =
        std::abs(pmbpqm_exact(g).success_prob - collective_helstrom(g).success_prob);
    worst = std::max(worst, gap);
  }
  c.note("max |P_pmbpqm - P_helstrom| = " + fmt("%.2e", worst));
  c.expect(worst < 1e-8, "pure-state equality violated");
  return c;
}

// ---------------------------------------------------------------- criterion 3
Check criterion3() {
  Check c;
  for (double theta : {0.4, 0.9, kPi / 2}) {
    const QubitBSCQ w = from_flip_family(theta, 0.5);
    for (const TreeFactorGraph& g : {fg5(w), fg7(w)}) {
      const double pm = pmbpqm_exact(g).success_prob;
      const double hel = collective_helstrom(g).success_prob;
      c.expect(std::abs(pm - 0.5) <= 1e-9, "P_pmbpqm != 1/2 at p=0.5");
      c.expect(std::abs(hel - 0.5) <= 1e-9, "P_helstrom != 1/2 at p=0.5");
    }
  }
  c.note("worthless fixpoint holds on fg5 and fg7");
  return c;
}

// ---------------------------------------------------------------- criterion 4
Check criterion4() {
  Check c;
  SplitMix64 rng(0xacc4);
  double worst = 0.0, worst_prob = 0.0;
  int count = 0;
  auto run_one = [&](const GeneralBSCQ& w) {
    const BranchDistribution bd = pm_reduce(w);
    const double full = helstrom_success(density(w, 0), density(w, 1), 0.5);
    worst = std::max(worst, std::abs(bd.mean_success() - full));
    worst_prob = std::max(worst_prob, std::abs(bd.total_prob() - 1.0));
    ++count;
  };
  const std::size_t dims[4] = {2, 4, 6, 8};
  for (int i = 0; i < 992; ++i) run_one(test::rand_bscq(dims[i % 4], rng));
  // constructed degeneracies exercising the zero-eigenspace path
  run_one(GeneralBSCQ(0.5 * CMatrix::identity(2), qla::pauli_x()));
  run_one(GeneralBSCQ(CMatrix(2, 2, {0.7, 0.0, 0.0, 0.3}), CMatrix::identity(2)));
  run_one(boxast(to_general(QubitBSCQ(0.0, 0.3)), to_general(QubitBSCQ(1.0, 0.1))));
  run_one(boxast(to_general(QubitBSCQ(kPi / 2, 0.0)), to_general(QubitBSCQ(kPi / 2, 0.0))));
  run_one(varoast(to_general(QubitBSCQ(0.0, 0.9)), to_general(QubitBSCQ(0.9, 0.4))));
  {
    CMatrix rho = CMatrix::zero(4, 4);
    const CMatrix live = density(QubitBSCQ(0.9, 0.2), 0);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t col = 0; col < 2; ++col) {
        rho(r, col) = 0.6 * live(r, col);
        rho(r + 2, col + 2) = 0.4 * (r == col ? 0.5 : 0.2);
      }
    CMatrix u = CMatrix::zero(4, 4);
    u(0, 1) = u(1, 0) = u(2, 3) = u(3, 2) = 1.0;
    run_one(GeneralBSCQ(rho, u));
  }
  run_one(GeneralBSCQ(0.25 * CMatrix::identity(4), qla::kron(qla::pauli_x(), qla::pauli_x())));
  run_one(GeneralBSCQ(0.25 * CMatrix::identity(4), CMatrix::identity(4)));
  c.note("channels=" + std::to_string(count) + " max identity gap " + fmt("%.2e", worst) +
         ", max prob drift " + fmt("%.2e", worst_prob));
  c.expect(worst < 1e-9, "Lemma-2 identity beyond 1e-9");
  c.expect(worst_prob < 1e-10, "branch probabilities do not sum to 1");
  return c;
}

// ---------------------------------------------------------------- criterion 5
Check criterion5() {
  Check c;
  SplitMix64 rng(0xacc5);
  auto branch_gap = [](BranchDistribution a, BranchDistribution b) {
    auto lt = [](const Branch& x, const Branch& y) {
      return std::make_tuple(x.prob, x.channel.theta, x.channel.q) <
             std::make_tuple(y.prob, y.channel.theta, y.channel.q);
    };
    std::sort(a.branches.begin(), a.branches.end(), lt);
    std::sort(b.branches.begin(), b.branches.end(), lt);
    if (a.branches.size() != b.branches.size()) return 1.0;
    double g = 0.0;
    for (std::size_t i = 0; i < a.branches.size(); ++i) {
      g = std::max(g, std::abs(a.branches[i].prob - b.branches[i].prob));
      g = std::max(g, std::abs(a.branches[i].channel.theta - b.branches[i].channel.theta));
      g = std::max(g, std::abs(a.branches[i].channel.q - b.branches[i].channel.q));
    }
    return g;
  };

  double worst_psc = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double a = 0.03 + rng.next_double() * (kPi / 2 - 0.06);
    const double b = 0.03 + rng.next_double() * (kPi / 2 - 0.06);
    worst_psc = std::max(worst_psc, branch_gap(psc_check_closed(a, b),
                                               reduce_boxast(QubitBSCQ(a, 0.0), QubitBSCQ(b, 0.0))));
    worst_psc = std::max(worst_psc, branch_gap(psc_bit_closed(a, b),
                                               reduce_varoast(QubitBSCQ(a, 0.0), QubitBSCQ(b, 0.0))));
  }
  c.note("PSC closed forms max gap " + fmt("%.2e", worst_psc));
  c.expect(worst_psc < 1e-8, "PSC closed form disagrees with pm_reduce");

  double worst_dg = 0.0;
  for (int i = 0; i < 500; ++i) {
    const QubitBSCQ a(rng.next_double() * kPi / 2, rng.next_double() * 0.98);
    const QubitBSCQ b(rng.next_double() * kPi / 2, rng.next_double() * 0.98);
    worst_dg = std::max(
        worst_dg, branch_gap(dg_check_closed(theta_q_to_delta_gamma(a.theta, a.q),
                                             theta_q_to_delta_gamma(b.theta, b.q)),
                             reduce_boxast(a, b)));
  }
  c.note("check-node closed form max gap " + fmt("%.2e", worst_dg));
  c.expect(worst_dg < 1e-8, "check-node closed form disagrees with pm_reduce");

  // equal-channel bit-node closed form: compare both outcome labelings
  double worst_swapped = 0.0, worst_as_published = 0.0;
  for (int i = 0; i < 300; ++i) {
    const QubitBSCQ w(0.03 + rng.next_double() * (kPi / 2 - 0.06),
                      0.02 + rng.next_double() * 0.9);
    const BranchDistribution oracle = reduce_varoast(w, w);
    const BranchDistribution swapped = dg_bit_closed(theta_q_to_delta_gamma(w.theta, w.q));
    worst_swapped = std::max(worst_swapped, branch_gap(swapped, oracle));
    BranchDistribution as_published = swapped;  // the published pairing: p0 with the first state
    if (as_published.branches.size() == 2) {
      std::swap(as_published.branches[0].channel, as_published.branches[1].channel);
    }
    worst_as_published = std::max(worst_as_published, branch_gap(as_published, oracle));
  }
  c.note("bit-node closed form (labels swapped) max gap " + fmt("%.2e", worst_swapped));
  c.note("bit-node closed form (labels as published) max gap " + fmt("%.2e", worst_as_published) +
         " -> published outcome labels pair the states with the opposite probabilities; the "
         "eigendecomposition path is normative");
  c.expect(worst_swapped < 1e-8, "bit-node closed form disagrees with pm_reduce on both readings");
  return c;
}

// ---------------------------------------------------------------- criterion 6
Check criterion6() {
  Check c;
  double min_hel_pm = 1.0, min_pm_lg = 1.0, min_all = 1.0;
  std::string worst_cell;
  for (int ti = 0; ti < 10; ++ti) {
    const double theta = 0.15 + (kPi / 2 - 0.15) * ti / 9.0;
    for (double p : {0.0, 0.1, 0.2, 0.35, 0.5}) {
      const QubitBSCQ w = from_flip_family(theta, p);
      for (int gi = 0; gi < 2; ++gi) {
        const TreeFactorGraph g = gi ? fg7(w) : fg5(w);
        const double hel = collective_helstrom(g).success_prob;
        const double pm = pmbpqm_exact(g).success_prob;
        const double lg = locally_greedy(g).success_prob;
        min_hel_pm = std::min(min_hel_pm, hel - pm);
        if (pm - lg < min_pm_lg) {
          min_pm_lg = pm - lg;
          worst_cell = std::string(gi ? "fg7" : "fg5") + " theta=" + fmt("%.4f", theta) +
                       " p=" + fmt("%.2f", p) + " P_pm=" + fmt("%.9f", pm) + " P_lg=" +
                       fmt("%.9f", lg);
        }
        min_all = std::min({min_all, hel, pm, lg});
      }
    }
  }
  c.note("min(P_hel - P_pm)=" + fmt("%.2e", min_hel_pm) + ", min(P_pm - P_lg)=" +
         fmt("%.2e", min_pm_lg));
  c.expect(min_hel_pm >= -1e-9, "Helstrom below PMBPQM");
  c.expect(min_pm_lg >= -1e-9,
           "PMBPQM below locally greedy at " + worst_cell +
               " (reproducible: near the classical corner of fg5 the adaptive greedy "
               "groupings beat the fixed paired measurements; the seven-qubit graph shows no "
               "such cell)");
  c.expect(min_all >= 0.5 - 1e-12, "success below 1/2");
  return c;
}

// ---------------------------------------------------------------- criterion 7
Check criterion7() {
  Check c;
  DEConfig cfg;  // CI profile
  cfg.dv = 3;
  cfg.dc = 6;
  cfg.population = 1000;
  cfg.iterations = 50;
  test::ClassicalDeConfig ccfg;
  ccfg.population = 1000;
  ccfg.iterations = 50;
  ccfg.bisect_steps = 20;

  const int seeds = 5;
  double pm_mean = 0.0, cls_mean = 0.0;
  for (int s = 0; s < seeds; ++s) {
    pm_mean += de_threshold(kPi / 2, cfg, 20, 1000 + static_cast<std::uint64_t>(s)) / 2.0;
    cls_mean += test::classical_de_threshold(ccfg, 2000 + static_cast<std::uint64_t>(s));
  }
  pm_mean /= seeds;
  cls_mean /= seeds;
  c.note("p*_pmbpqm=" + fmt("%.4f", pm_mean) + " (mean of 5 seeds), p*_classical=" +
         fmt("%.4f", cls_mean));
  c.expect(std::abs(pm_mean - 0.084) <= 0.005, "threshold off the 0.084 anchor");
  c.expect(std::abs(pm_mean - cls_mean) <= 0.005, "quantum and classical DE disagree");

  // classical closure along a full run near the threshold
  cfg.base_channel = QubitBSCQ(kPi / 2, 0.15);
  ChannelPopulation pop = make_population(cfg.base_channel, cfg.population, 4242);
  double worst_gamma = 0.0;
  for (int j = 0; j < cfg.iterations; ++j) {
    pop = de_iterate(pop, cfg);
    for (const QubitBSCQ& w : pop.samples) {
      worst_gamma = std::max(worst_gamma,
                             std::abs(theta_q_to_delta_gamma(w.theta, w.q).gamma));
    }
  }
  c.note("max spurious coherence " + fmt("%.2e", worst_gamma));
  c.expect(worst_gamma < 1e-12, "classical closure violated");
  return c;
}

// ---------------------------------------------------------------- criterion 8
Check criterion8() {
  Check c;
  DEConfig cfg;  // CI profile
  cfg.dv = 3;
  cfg.dc = 6;
  cfg.population = 1000;
  cfg.iterations = 50;
  const double rate = 0.5;
  std::vector<double> grid;
  for (int i = 0; i < 6; ++i) grid.push_back(0.6 + (kPi / 2 - 0.6) * i / 5.0);
  const auto points = threshold_curve(cfg, grid, 808);
  const double slack = 3.0 / std::sqrt(static_cast<double>(cfg.population));
  double worst = -1.0;
  for (const CurvePoint& pt : points) {
    const double bound = holevo_q_bound(pt.theta, rate);
    if (bound < 0.0) {
      c.expect(pt.q <= slack, "threshold positive where the rate is unattainable");
      continue;
    }
    worst = std::max(worst, pt.q - bound);
  }
  c.note("max (q* - q_holevo) = " + fmt("%.4f", worst) + " with slack " + fmt("%.4f", slack));
  c.expect(worst <= slack, "threshold exceeds the Holevo boundary");

  const double q_bound = holevo_q_bound(kPi / 2, 0.5);
  c.note("holevo rate-1/2 point p=" + fmt("%.4f", q_bound / 2));
  c.expect(std::abs(q_bound / 2 - 0.110) <= 1e-3, "Holevo rate-1/2 point off 0.110+-0.001");
  return c;
}

// ---------------------------------------------------------------- criterion 9
Check criterion9() {
  Check c;
  auto body = [](const std::string& full) {
    std::istringstream in(full);
    std::string line, out;
    while (std::getline(in, line)) {
      if (!line.empty() && line[0] == '#') continue;
      out += line;
      out += '\n';
    }
    return out;
  };
  SweepSpec spec;
  spec.experiment = "fg5";
  spec.theta_steps = 5;
  spec.p_list = {0.0, 0.2};
  spec.threads = 1;
  const std::string a = body(run_fg5(spec).csv);
  spec.threads = 4;
  const std::string b = body(run_fg5(spec).csv);
  c.expect(a == b, "fg5 CSV body differs across thread counts");

  SweepSpec de_spec;
  de_spec.experiment = "de";
  de_spec.theta_min = 1.1;
  de_spec.theta_max = kPi / 2;
  de_spec.theta_steps = 3;
  de_spec.population = 300;
  de_spec.iterations = 20;
  de_spec.bisect_steps = 8;
  de_spec.seed = 77;
  de_spec.threads = 1;
  const SweepOutput da = run_de(de_spec);
  de_spec.threads = 3;
  const SweepOutput db = run_de(de_spec);
  c.expect(body(da.csv) == body(db.csv), "de CSV body differs across thread counts");
  c.expect(body(da.extra_csv) == body(db.extra_csv), "holevo CSV body differs");
  c.note("CSV bodies byte-identical for threads {1,3,4}");
  return c;
}

struct Criterion {
  int number;
  std::string name;
  double time_limit_s;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "three-qubit instance reproduction", 1.0, criterion1},
      {2, "pure-state optimality on fg5", 10.0, criterion2},
      {3, "worthless-channel fixpoints", 10.0, criterion3},
      {4, "paired-measurement identity suite", 60.0, criterion4},
      {5, "closed forms vs eigendecomposition oracle", 60.0, criterion5},
      {6, "method ordering on both graphs", 300.0, criterion6},
      {7, "classical reduction of density evolution", 600.0, criterion7},
      {8, "Holevo dominance", 600.0, criterion8},
      {9, "thread-count determinism", 120.0, criterion9},
  };
  int failures = 0;
  for (const Criterion& cr : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check result;
    try {
      result = cr.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.time_limit_s) {
      result.ok = false;
      result.detail += "; runtime limit " + fmt("%.0f", cr.time_limit_s) + " s exceeded";
    }
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", result.ok ? "PASS" : "FAIL", cr.number,
                cr.name.c_str(), secs, result.detail.empty() ? "" : " -- ",
                result.detail.c_str());
    std::fflush(stdout);
    if (!result.ok) ++failures;
  }
  if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures;
}
