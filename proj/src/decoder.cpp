// SPDX-License-Identifier: Apache-2.0
#include "pmbpqm/decoder.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

#include "pmbpqm/parallel.hpp"
#include "pmbpqm/rng.hpp"

namespace pmbpqm {

using qla::CMatrix;
using qla::cplx;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::map<int, const TreeNode*> index_nodes(const TreeFactorGraph& g) {
  std::map<int, const TreeNode*> idx;
  for (const TreeNode& n : g.nodes) {
    if (!idx.emplace(n.id, &n).second) throw std::invalid_argument("duplicate node id");
  }
  return idx;
}

}  // namespace

const TreeNode& TreeFactorGraph::node(int id) const {
  for (const TreeNode& n : nodes) {
    if (n.id == id) return n;
  }
  throw std::invalid_argument("unknown node id");
}

void TreeFactorGraph::validate() const {
  const auto idx = index_nodes(*this);
  if (idx.find(root) == idx.end()) throw std::invalid_argument("root id not present");
  if (idx.at(root)->kind != NodeKind::variable) {
    throw std::invalid_argument("root must be a variable node");
  }
  std::set<int> seen_child;
  for (const TreeNode& n : nodes) {
    for (int c : n.children) {
      auto it = idx.find(c);
      if (it == idx.end()) throw std::invalid_argument("child id not present");
      if (!seen_child.insert(c).second) throw std::invalid_argument("node has two parents");
      if (it->second->kind == n.kind) {
        throw std::invalid_argument("variable/check kinds must alternate");
      }
    }
    if (n.kind == NodeKind::check) {
      if (n.channel.has_value()) throw std::invalid_argument("check nodes carry no channel");
      if (n.children.empty()) throw std::invalid_argument("check node needs >= 2 neighbors");
    }
  }
  if (seen_child.count(root)) throw std::invalid_argument("root cannot have a parent");
  // reachability (tree => all non-root nodes are children exactly once)
  std::set<int> reach;
  std::function<void(int)> dfs = [&](int id) {
    if (!reach.insert(id).second) throw std::invalid_argument("cycle detected");
    for (int c : idx.at(id)->children) dfs(c);
  };
  dfs(root);
  if (reach.size() != nodes.size()) throw std::invalid_argument("disconnected nodes present");
  for (const TreeNode& n : nodes) {
    if (n.kind == NodeKind::variable && n.children.empty() && !n.channel.has_value()) {
      throw std::invalid_argument("leaf variable nodes need a channel");
    }
  }
}

std::size_t TreeFactorGraph::observed_count() const {
  std::size_t n = 0;
  for (const TreeNode& nd : nodes) {
    if (nd.kind == NodeKind::variable && nd.channel.has_value()) ++n;
  }
  return n;
}

namespace {

// probability-weighted channel mixture flowing up one edge
using Message = std::vector<Branch>;

Message merge_pair(const Message& a, const Message& b, bool bit_node) {
  Message out;
  out.reserve(a.size() * b.size() * 2);
  for (const Branch& x : a) {
    for (const Branch& y : b) {
      const BranchDistribution bd = bit_node ? reduce_varoast(x.channel, y.channel)
                                             : reduce_boxast(x.channel, y.channel);
      for (const Branch& z : bd.branches) {
        out.push_back({x.prob * y.prob * z.prob, z.channel});
      }
    }
  }
  return out;
}

// pairwise, level by level, as in the higher-degree node schedule
Message merge_level(std::vector<Message> msgs, bool bit_node) {
  while (msgs.size() > 1) {
    std::vector<Message> next;
    next.reserve(msgs.size() / 2 + 1);
    for (std::size_t i = 0; i + 1 < msgs.size(); i += 2) {
      next.push_back(merge_pair(msgs[i], msgs[i + 1], bit_node));
    }
    if (msgs.size() % 2) next.push_back(msgs.back());
    msgs = std::move(next);
  }
  return msgs.front();
}

struct GraphView {
  const TreeFactorGraph& g;
  std::map<int, const TreeNode*> idx;

  explicit GraphView(const TreeFactorGraph& graph) : g(graph), idx(index_nodes(graph)) {}

  std::vector<int> sorted_children(int id) const {
    std::vector<int> cs = idx.at(id)->children;
    std::sort(cs.begin(), cs.end());
    return cs;
  }
};

Message variable_message(const GraphView& gv, int id);

Message check_message(const GraphView& gv, int id) {
  std::vector<Message> msgs;
  for (int c : gv.sorted_children(id)) msgs.push_back(variable_message(gv, c));
  return merge_level(std::move(msgs), /*bit_node=*/false);
}

Message variable_message(const GraphView& gv, int id) {
  const TreeNode* n = gv.idx.at(id);
  std::vector<Message> msgs;
  for (int c : gv.sorted_children(id)) msgs.push_back(check_message(gv, c));
  if (msgs.empty()) return {{1.0, *n->channel}};
  Message acc = merge_level(std::move(msgs), /*bit_node=*/true);
  if (n->channel.has_value()) {
    acc = merge_pair(acc, {{1.0, *n->channel}}, /*bit_node=*/true);
  }
  return acc;
}

}  // namespace

DecodeResult pmbpqm_exact(const TreeFactorGraph& g) {
  g.validate();
  GraphView gv(g);
  const Message final_msg = variable_message(gv, g.root);
  DecodeResult r;
  r.method = DecodeMethod::pmbpqm_exact;
  r.branch_count = static_cast<long long>(final_msg.size());
  for (const Branch& b : final_msg) r.success_prob += b.prob * helstrom_qubit(b.channel);
  return r;
}

namespace {

QubitBSCQ sample_branches(const BranchDistribution& bd, double u) {
  double acc = 0.0;
  for (const Branch& b : bd.branches) {
    acc += b.prob;
    if (u < acc) return b.channel;
  }
  return bd.branches.back().channel;
}

QubitBSCQ sample_variable(const GraphView& gv, int id, SplitMix64& rng);

QubitBSCQ sample_reduce(std::vector<QubitBSCQ> inputs, bool bit_node, SplitMix64& rng) {
  while (inputs.size() > 1) {
    std::vector<QubitBSCQ> next;
    for (std::size_t i = 0; i + 1 < inputs.size(); i += 2) {
      const BranchDistribution bd = bit_node ? reduce_varoast(inputs[i], inputs[i + 1])
                                             : reduce_boxast(inputs[i], inputs[i + 1]);
      next.push_back(sample_branches(bd, rng.next_double()));
    }
    if (inputs.size() % 2) next.push_back(inputs.back());
    inputs = std::move(next);
  }
  return inputs.front();
}

QubitBSCQ sample_check(const GraphView& gv, int id, SplitMix64& rng) {
  std::vector<QubitBSCQ> inputs;
  for (int c : gv.sorted_children(id)) inputs.push_back(sample_variable(gv, c, rng));
  return sample_reduce(std::move(inputs), /*bit_node=*/false, rng);
}

QubitBSCQ sample_variable(const GraphView& gv, int id, SplitMix64& rng) {
  const TreeNode* n = gv.idx.at(id);
  std::vector<QubitBSCQ> inputs;
  for (int c : gv.sorted_children(id)) inputs.push_back(sample_check(gv, c, rng));
  if (inputs.empty()) return *n->channel;
  QubitBSCQ acc = sample_reduce(std::move(inputs), /*bit_node=*/true, rng);
  if (n->channel.has_value()) {
    acc = sample_reduce({acc, *n->channel}, /*bit_node=*/true, rng);
  }
  return acc;
}

}  // namespace

DecodeResult pmbpqm_mc(const TreeFactorGraph& g, long long trials, std::uint64_t seed,
                       int threads) {
  g.validate();
  if (trials < 1) throw std::invalid_argument("pmbpqm_mc: trials must be >= 1");
  GraphView gv(g);
  std::vector<double> per_trial(static_cast<std::size_t>(trials));
  const int nt = resolve_threads(threads);
  ParallelErrors errors;
#pragma omp parallel for schedule(static) num_threads(nt) if (trials > 1024)
  for (long long t = 0; t < trials; ++t) {
    errors.run([&, t] {
      SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
      const QubitBSCQ w = sample_variable(gv, g.root, rng);
      per_trial[static_cast<std::size_t>(t)] = helstrom_qubit(w);
    });
  }
  errors.rethrow();
  double sum = 0.0;
  for (double v : per_trial) sum += v;  // fixed order, thread-count independent
  DecodeResult r;
  r.method = DecodeMethod::pmbpqm_mc;
  r.branch_count = trials;
  r.success_prob = sum / static_cast<double>(trials);
  return r;
}

DecodeResult collective_helstrom(const TreeFactorGraph& g) {
  g.validate();
  GraphView gv(g);
  std::vector<int> observed;
  for (const TreeNode& n : g.nodes) {
    if (n.kind == NodeKind::variable && n.channel.has_value()) observed.push_back(n.id);
  }
  std::sort(observed.begin(), observed.end());
  const std::size_t nq = observed.size();
  if (nq > 13) throw ResourceLimitError("collective_helstrom: more than 13 observed qubits");
  const std::size_t dim = std::size_t{1} << nq;

  CMatrix rho[2] = {CMatrix::zero(dim, dim), CMatrix::zero(dim, dim)};
  std::size_t count[2] = {0, 0};

  // enumerate assignments: DFS over variables, satisfying each check's parity
  std::vector<int> var_order;
  std::map<int, int> assign;
  std::function<void(int, int, const std::function<void()>&)> assign_var =
      [&](int vid, int value, const std::function<void()>& cont) {
        assign[vid] = value;
        const auto checks = gv.sorted_children(vid);
        std::function<void(std::size_t)> do_check = [&](std::size_t ci) {
          if (ci == checks.size()) {
            cont();
            return;
          }
          const auto vars = gv.sorted_children(checks[ci]);
          const std::size_t k = vars.size();
          for (std::uint64_t mask = 0; mask < (1ull << (k - 1)); ++mask) {
            std::vector<int> vals(k);
            int acc = 0;
            for (std::size_t i = 0; i + 1 < k; ++i) {
              vals[i] = static_cast<int>((mask >> i) & 1u);
              acc ^= vals[i];
            }
            vals[k - 1] = assign[vid] ^ acc;
            std::function<void(std::size_t)> do_child = [&](std::size_t pos) {
              if (pos == k) {
                do_check(ci + 1);
                return;
              }
              assign_var(vars[pos], vals[pos], [&]() { do_child(pos + 1); });
            };
            do_child(0);
          }
        };
        do_check(0);
      };

  for (int z = 0; z < 2; ++z) {
    assign_var(g.root, z, [&]() {
      CMatrix state = CMatrix::identity(1);
      for (int id : observed) {
        state = qla::kron(state, density(*gv.idx.at(id)->channel, assign.at(id)));
      }
      rho[z] += state;
      ++count[z];
    });
  }
  rho[0] *= cplx{1.0 / static_cast<double>(count[0])};
  rho[1] *= cplx{1.0 / static_cast<double>(count[1])};

  DecodeResult r;
  r.method = DecodeMethod::helstrom;
  r.branch_count = static_cast<long long>(count[0] + count[1]);
  r.success_prob = helstrom_success(rho[0], rho[1], 0.5);
  return r;
}

namespace {

// ---- locally greedy ----

struct LgMeasurementStats {
  double true_prob = 0.0;  // outcome probability under all-zero transmission
  double posterior = 0.0;  // updated prior that the bit is 0
};

// Binary Helstrom measurement of hypothesis states (h0, h1) with prior q;
// the true state decides outcome statistics.
std::vector<LgMeasurementStats> lg_measure(const CMatrix& h0, const CMatrix& h1, double q,
                                           const CMatrix& true_state) {
  const CMatrix m = q * h0 - (1.0 - q) * h1;
  const auto eig = qla::herm_eig(m);
  const std::size_t n = m.rows();
  CMatrix proj = CMatrix::zero(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.eigenvalues[k] < 0.0) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        proj(r, c) += eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
  }
  std::vector<LgMeasurementStats> out;
  const CMatrix projs[2] = {proj, CMatrix::identity(n) - proj};
  for (const CMatrix& pi : projs) {
    LgMeasurementStats s;
    s.true_prob = std::real(qla::matmul(pi, true_state).trace());
    const double l0 = std::real(qla::matmul(pi, h0).trace());
    const double l1 = std::real(qla::matmul(pi, h1).trace());
    const double denom = q * l0 + (1.0 - q) * l1;
    s.posterior = denom > 1e-15 ? q * l0 / denom : 0.5;
    out.push_back(s);
  }
  return out;
}

int subtree_height(const GraphView& gv, int id) {
  int h = 0;
  for (int c : gv.idx.at(id)->children) h = std::max(h, subtree_height(gv, c));
  return h + 1;
}

double fold_prior(double q, double evidence) {
  const double denom = q * evidence + (1.0 - q) * (1.0 - evidence);
  return denom > 1e-15 ? q * evidence / denom : 0.5;
}

struct LgWalker {
  const GraphView& gv;
  double success = 0.0;

  explicit LgWalker(const GraphView& view) : gv(view) {}

  // Computes the prior of variable v from its subtree (own qubit excluded)
  // and hands (path probability, prior) to the continuation.
  void subtree_prior(int v, double path_prob, const std::function<void(double, double)>& cont) {
    std::vector<int> checks = gv.sorted_children(v);
    std::stable_sort(checks.begin(), checks.end(), [&](int a, int b) {
      return subtree_height(gv, a) > subtree_height(gv, b);
    });
    process_checks(v, checks, 0, {}, path_prob, 0.5, cont);
  }

  void process_checks(int v, const std::vector<int>& checks, std::size_t pos,
                      std::vector<int> pending_obs, double path_prob, double q,
                      const std::function<void(double, double)>& cont) {
    if (pos == checks.size()) {
      measure_pending(std::move(pending_obs), 0, path_prob, q, cont);
      return;
    }
    const auto vars = gv.sorted_children(checks[pos]);
    if (vars.size() == 1) {
      // repetition: the child is another observation of v
      const int u = vars[0];
      subtree_prior(u, path_prob, [&, u](double pp, double qu) {
        auto pend = pending_obs;
        pend.push_back(u);
        process_checks(v, checks, pos + 1, std::move(pend), pp, fold_prior(q, qu), cont);
      });
    } else if (vars.size() == 2) {
      const int u1 = vars[0], u2 = vars[1];
      subtree_prior(u1, path_prob, [&, u1, u2](double pp1, double q1) {
        subtree_prior(u2, pp1, [&, u1, u2, q1](double pp2, double q2) {
          measure_parity_pair(v, u1, u2, q1, q2, checks, pos, pending_obs, pp2, q, cont);
        });
      });
    } else {
      throw std::invalid_argument("locally_greedy: check degree > 3 has no pairwise schedule");
    }
  }

  void measure_parity_pair(int v, int u1, int u2, double q1, double q2,
                           const std::vector<int>& checks, std::size_t pos,
                           const std::vector<int>& pending_obs, double path_prob, double q,
                           const std::function<void(double, double)>& cont) {
    const QubitBSCQ& w1 = *gv.idx.at(u1)->channel;
    const QubitBSCQ& w2 = *gv.idx.at(u2)->channel;
    const CMatrix s1[2] = {density(w1, 0), density(w1, 1)};
    const CMatrix s2[2] = {density(w2, 0), density(w2, 1)};
    // conditional states of the pair given the parity: children priors weight
    // the consistent assignments
    const double w00 = q1 * q2, w11 = (1 - q1) * (1 - q2);
    const double w01 = q1 * (1 - q2), w10 = (1 - q1) * q2;
    const double n0 = w00 + w11, n1 = w01 + w10;
    const CMatrix h0 = (1.0 / std::max(n0, 1e-300)) *
                       (w00 * qla::kron(s1[0], s2[0]) + w11 * qla::kron(s1[1], s2[1]));
    const CMatrix h1 = (1.0 / std::max(n1, 1e-300)) *
                       (w01 * qla::kron(s1[0], s2[1]) + w10 * qla::kron(s1[1], s2[0]));
    const CMatrix true_state = qla::kron(s1[0], s2[0]);
    for (const LgMeasurementStats& st : lg_measure(h0, h1, q, true_state)) {
      if (st.true_prob < 1e-15) continue;
      process_checks(v, checks, pos + 1, pending_obs, path_prob * st.true_prob, st.posterior,
                     cont);
    }
  }

  // measure collected repetition observations pairwise (bit hypotheses)
  void measure_pending(std::vector<int> obs, std::size_t pos, double path_prob, double q,
                       const std::function<void(double, double)>& cont) {
    if (pos + 1 < obs.size()) {
      const QubitBSCQ& w1 = *gv.idx.at(obs[pos])->channel;
      const QubitBSCQ& w2 = *gv.idx.at(obs[pos + 1])->channel;
      const CMatrix h0 = qla::kron(density(w1, 0), density(w2, 0));
      const CMatrix h1 = qla::kron(density(w1, 1), density(w2, 1));
      for (const LgMeasurementStats& st : lg_measure(h0, h1, q, h0)) {
        if (st.true_prob < 1e-15) continue;
        measure_pending(obs, pos + 2, path_prob * st.true_prob, st.posterior, cont);
      }
      return;
    }
    if (pos + 1 == obs.size()) {
      const QubitBSCQ& w1 = *gv.idx.at(obs[pos])->channel;
      for (const LgMeasurementStats& st :
           lg_measure(density(w1, 0), density(w1, 1), q, density(w1, 0))) {
        if (st.true_prob < 1e-15) continue;
        cont(path_prob * st.true_prob, st.posterior);
      }
      return;
    }
    cont(path_prob, q);
  }
};

}  // namespace

DecodeResult locally_greedy(const TreeFactorGraph& g) {
  g.validate();
  GraphView gv(g);
  LgWalker walker(gv);
  // decision credit under all-zero transmission: a posterior tie (the
  // measurement carried no information) is a fair coin
  auto credit = [](double posterior) {
    if (posterior > 0.5 + 1e-12) return 1.0;
    if (posterior < 0.5 - 1e-12) return 0.0;
    return 0.5;
  };
  double success = 0.0;
  walker.subtree_prior(g.root, 1.0, [&](double path_prob, double q) {
    const TreeNode* rn = gv.idx.at(g.root);
    if (rn->channel.has_value()) {
      const CMatrix r0 = density(*rn->channel, 0);
      const CMatrix r1 = density(*rn->channel, 1);
      for (const LgMeasurementStats& st : lg_measure(r0, r1, q, r0)) {
        success += path_prob * st.true_prob * credit(st.posterior);
      }
    } else {
      success += path_prob * credit(q);
    }
  });
  DecodeResult r;
  r.method = DecodeMethod::locally_greedy;
  r.success_prob = success;
  r.branch_count = 0;
  return r;
}

std::vector<GroupingResult> grouped_local_measurements(const GeneralBSCQ& combined,
                                                       const GeneralBSCQ& root) {
  if (combined.dim() != 4) {
    throw std::invalid_argument("grouped_local_measurements: combined channel must have dim 4");
  }
  const CMatrix c0 = density(combined, 0);
  const CMatrix c1 = density(combined, 1);
  const auto eig = qla::herm_eig(c0 - c1);
  for (std::size_t i = 0; i + 1 < 4; ++i) {
    if (std::abs(eig.eigenvalues[i] - eig.eigenvalues[i + 1]) < 1e-10) {
      throw std::invalid_argument("grouped_local_measurements: degenerate spectrum");
    }
  }
  // descending order: lambda1, lambda2, -lambda2, -lambda1
  auto proj_of = [&](std::size_t a, std::size_t b) {
    CMatrix p = CMatrix::zero(4, 4);
    for (std::size_t k : {a, b}) {
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          p(r, c) += eig.eigenvectors(r, k) * std::conj(eig.eigenvectors(c, k));
    }
    return p;
  };
  const CMatrix rho_full[2] = {qla::kron(c0, density(root, 0)),
                               qla::kron(c1, density(root, 1))};
  auto success_of = [&](const CMatrix& pi) {
    double s = 0.0;
    const CMatrix projs[2] = {pi, CMatrix::identity(4) - pi};
    for (const CMatrix& p : projs) {
      const CMatrix p8 = qla::kron(p, CMatrix::identity(2));
      const CMatrix avg = qla::matmul(p8, qla::matmul(0.5 * (rho_full[0] + rho_full[1]), p8));
      const CMatrix diff = qla::matmul(p8, qla::matmul(0.5 * (rho_full[0] - rho_full[1]), p8));
      s += 0.5 * std::real(avg.trace()) + 0.5 * qla::trace_norm(diff);
    }
    return s;
  };
  std::vector<GroupingResult> out;
  out.push_back({"lambda1+lambda2", success_of(proj_of(0, 1))});
  out.push_back({"lambda1+minus_lambda1", success_of(proj_of(0, 3))});
  out.push_back({"lambda1+minus_lambda2", success_of(proj_of(0, 2))});
  return out;
}

TreeFactorGraph fg5(const QubitBSCQ& w) {
  TreeFactorGraph g;
  g.root = 1;
  g.nodes = {
      {1, NodeKind::variable, {6, 7}, w},
      {2, NodeKind::variable, {}, w},
      {3, NodeKind::variable, {}, w},
      {4, NodeKind::variable, {}, w},
      {5, NodeKind::variable, {}, w},
      {6, NodeKind::check, {2, 3}, std::nullopt},
      {7, NodeKind::check, {4, 5}, std::nullopt},
  };
  return g;
}

TreeFactorGraph fg7(const QubitBSCQ& w) {
  TreeFactorGraph g;
  g.root = 1;
  g.nodes = {
      {1, NodeKind::variable, {8, 9}, w},
      {2, NodeKind::variable, {}, w},
      {3, NodeKind::variable, {}, w},
      {4, NodeKind::variable, {10, 11}, w},
      {5, NodeKind::variable, {}, w},
      {6, NodeKind::variable, {}, w},
      {7, NodeKind::variable, {}, w},
      {8, NodeKind::check, {2, 3}, std::nullopt},
      {9, NodeKind::check, {4, 5}, std::nullopt},
      {10, NodeKind::check, {6}, std::nullopt},
      {11, NodeKind::check, {7}, std::nullopt},
  };
  return g;
}

QubitBSCQ lemma3q_channel_w() { return QubitBSCQ(kPi / 4, 1.0 - std::sqrt(2.0) / 3.0); }

QubitBSCQ lemma3q_channel_wprime() { return QubitBSCQ(std::asin(0.8), 7.0 / 12.0); }

TreeFactorGraph lemma3q() {
  TreeFactorGraph g;
  g.root = 1;
  g.nodes = {
      {1, NodeKind::variable, {4, 5}, lemma3q_channel_w()},
      {2, NodeKind::variable, {}, lemma3q_channel_w()},
      {3, NodeKind::variable, {}, lemma3q_channel_wprime()},
      {4, NodeKind::check, {2}, std::nullopt},
      {5, NodeKind::check, {3}, std::nullopt},
  };
  return g;
}

TreeFactorGraph graph_by_name(const std::string& name, const QubitBSCQ& w) {
  if (name == "fg5") return fg5(w);
  if (name == "fg7") return fg7(w);
  if (name == "lemma3q") return lemma3q();
  throw std::invalid_argument("unknown graph name: " + name);
}

std::string to_json(const TreeFactorGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const TreeNode& n : g.nodes) {
    nlohmann::json jn{{"id", n.id},
                      {"kind", n.kind == NodeKind::variable ? "variable" : "check"},
                      {"children", n.children}};
    if (n.channel.has_value()) {
      jn["channel"] = {{"theta", n.channel->theta}, {"q", n.channel->q}};
    } else {
      jn["channel"] = nullptr;
    }
    nodes.push_back(jn);
  }
  return nlohmann::json{{"root", g.root}, {"nodes", nodes}}.dump(2);
}

TreeFactorGraph graph_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  TreeFactorGraph g;
  g.root = j.at("root").get<int>();
  for (const auto& jn : j.at("nodes")) {
    TreeNode n;
    n.id = jn.at("id").get<int>();
    const std::string kind = jn.at("kind").get<std::string>();
    if (kind == "variable") {
      n.kind = NodeKind::variable;
    } else if (kind == "check") {
      n.kind = NodeKind::check;
    } else {
      throw std::invalid_argument("node kind must be 'variable' or 'check'");
    }
    n.children = jn.at("children").get<std::vector<int>>();
    if (jn.contains("channel") && !jn.at("channel").is_null()) {
      n.channel = QubitBSCQ(jn.at("channel").at("theta").get<double>(),
                            jn.at("channel").at("q").get<double>());
    }
    g.nodes.push_back(std::move(n));
  }
  g.validate();
  return g;
}

}  // namespace pmbpqm
