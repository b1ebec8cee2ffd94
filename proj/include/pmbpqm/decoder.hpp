// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmbpqm/channel.hpp"
#include "pmbpqm/combine.hpp"

namespace pmbpqm {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class NodeKind { variable, check };

struct TreeNode {
  int id = 0;
  NodeKind kind = NodeKind::variable;
  std::vector<int> children;
  std::optional<QubitBSCQ> channel;
};

// Rooted tree of variable and check nodes. Children of a variable are checks
// and vice versa; every leaf variable carries a channel observation.
struct TreeFactorGraph {
  int root = 0;
  std::vector<TreeNode> nodes;

  const TreeNode& node(int id) const;
  // throws std::invalid_argument when the structure is not a valid tree
  void validate() const;
  // number of observed qubits
  std::size_t observed_count() const;
};

enum class DecodeMethod { pmbpqm_exact, pmbpqm_mc, helstrom, locally_greedy };

struct DecodeResult {
  double success_prob = 0.0;
  long long branch_count = 0;
  DecodeMethod method = DecodeMethod::pmbpqm_exact;
};

// Exact PMBPQM decoding of the root bit: bottom-up paired-measurement
// reduction (children in ascending id order, pairwise level by level, the
// node's own observation folded in last), enumerating every measurement
// outcome with its probability.
DecodeResult pmbpqm_exact(const TreeFactorGraph& g);

// Monte-Carlo estimate of pmbpqm_exact: each trial samples one outcome per
// reduction. Deterministic for a fixed seed, independent of thread count.
DecodeResult pmbpqm_mc(const TreeFactorGraph& g, long long trials, std::uint64_t seed,
                       int threads = 0);

// Collective Helstrom measurement over all observed qubits (capped at 13).
DecodeResult collective_helstrom(const TreeFactorGraph& g);

// Locally-greedy baseline: sibling qubit pairs are measured bottom-up with
// the prior-weighted local Helstrom measurement; the prior is Bayes-updated
// after each binary outcome. Success evaluated by exact outcome enumeration.
DecodeResult locally_greedy(const TreeFactorGraph& g);

struct GroupingResult {
  std::string grouping;
  double success = 0.0;
};

// Enumerates the three rank-two groupings of the Helstrom projectors of a
// 4-dimensional combined channel, chaining each binary outcome into the final
// measurement together with the root observation. Requires a nondegenerate
// difference spectrum.
std::vector<GroupingResult> grouped_local_measurements(const GeneralBSCQ& combined,
                                                       const GeneralBSCQ& root);

// Built-in instances.
TreeFactorGraph fg5(const QubitBSCQ& w);
TreeFactorGraph fg7(const QubitBSCQ& w);
// Three observations of one bit: two through (pi/4, 1 - sqrt(2)/3) and one
// through (asin(4/5), 7/12).
TreeFactorGraph lemma3q();
QubitBSCQ lemma3q_channel_w();
QubitBSCQ lemma3q_channel_wprime();

TreeFactorGraph graph_by_name(const std::string& name, const QubitBSCQ& w);

std::string to_json(const TreeFactorGraph& g);
TreeFactorGraph graph_from_json(const std::string& text);

}  // namespace pmbpqm
