// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "pmbpqm/channel.hpp"
#include "pmbpqm/qla.hpp"

namespace pmbpqm {

// One coarse-grained measurement element |v><v| + |uv><uv| with its outcome
// probability. For eigenpairs of W(0)-W(1) with positive eigenvalue, uv is
// U v; for zero-eigenspace pairs, uv is the partner produced by the balanced
// reconstruction (the symmetry may be redefined there, which yields an
// equivalent channel).
struct MeasurementPair {
  std::vector<qla::cplx> v;
  std::vector<qla::cplx> uv;
  double prob = 0.0;
};

struct PairedMeasurement {
  std::vector<MeasurementPair> pairs;
};

struct Branch {
  double prob = 0.0;
  QubitBSCQ channel;
};

// Probability-weighted mixture of canonical qubit channels produced by one
// combining step.
struct BranchDistribution {
  std::vector<Branch> branches;

  double total_prob() const;
  // Expected Helstrom success over branches.
  double mean_success() const;
};

// Bit-node combining: [W (*) W'](z) = W(z) x W'(z), symmetry U x U'.
GeneralBSCQ varoast(const GeneralBSCQ& w, const GeneralBSCQ& w2);

// Check-node combining: [W (+) W'](z) = 1/2 sum_z' W(z^z') x W'(z'),
// symmetry U x I.
GeneralBSCQ boxast(const GeneralBSCQ& w, const GeneralBSCQ& w2);

// Paired measurement built from the eigenvectors of W(0) - W(1).
//
// Inside a degenerate eigenvalue cluster the basis is rotated to diagonalize
// the projection of rho, ordered by the projected eigenvalue descending; for
// the two-fold |00>/|11> degeneracy of check combining this reproduces the
// symmetric alpha = 1 resolution. The zero eigenspace is split into the +/-1
// eigenspaces of U (rebalanced if needed) and paired as (|u> + |u'>)/sqrt(2).
PairedMeasurement paired_measurement(const GeneralBSCQ& w);

// Paired measurement followed by the Lemma-3 qubit extraction: branch j has
// probability p_j and the canonical form of
//   [[<v|rho|v>, <v|U rho|v>], [<v|rho U|v>, <v|U rho U|v>]] / p_j.
// Branches with p_j < 1e-14 are dropped.
BranchDistribution pm_reduce(const GeneralBSCQ& w);

// Qubit-channel conveniences used by the decoder and density evolution.
BranchDistribution reduce_varoast(const QubitBSCQ& w, const QubitBSCQ& w2);
BranchDistribution reduce_boxast(const QubitBSCQ& w, const QubitBSCQ& w2);

// Closed forms. The eigendecomposition path above is normative; these are
// validated against it and used as accelerators.
BranchDistribution psc_check_closed(double theta, double theta2);
BranchDistribution psc_bit_closed(double theta, double theta2);
BranchDistribution dg_check_closed(const DeltaGamma& dg1, const DeltaGamma& dg2);
// Equal-channel bit combining only. Note: the two post-measurement states are
// exact, but the closed form pairs the p0 probability with the second state
// (see the unit test covering this).
BranchDistribution dg_bit_closed(const DeltaGamma& dg);

std::string to_json(const BranchDistribution& bd);

}  // namespace pmbpqm
