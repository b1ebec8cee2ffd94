// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "pmbpqm/qla.hpp"

namespace pmbpqm {

// Canonical qubit BSCQ channel: W(z) = sx^z rho sx^z with
// rho = [[delta, gamma], [gamma, 1-delta]],
// delta = q/2 + (1-q)(1-sin theta)/2 and gamma = (1-q) cos(theta)/2.
// theta in [0, pi/2], q in [0, 1]; (pi-theta, q) and gamma sign flips name
// the same channel and are folded away by canonicalize().
struct QubitBSCQ {
  double theta = 0.0;
  double q = 1.0;

  QubitBSCQ() = default;
  QubitBSCQ(double theta_, double q_);
};

// (delta, gamma) view of the same qubit channel. gamma kept real; the PSD
// condition is gamma^2 <= delta (1 - delta).
struct DeltaGamma {
  double delta = 0.5;
  double gamma = 0.0;

  DeltaGamma() = default;
  DeltaGamma(double delta_, double gamma_);
};

// General BSCQ channel on a 2n-dimensional space: W(z) = U^z rho U^z with U
// unitary and involutive (hence Hermitian).
struct GeneralBSCQ {
  qla::CMatrix rho;
  qla::CMatrix u;

  GeneralBSCQ() = default;
  GeneralBSCQ(qla::CMatrix rho_, qla::CMatrix u_);
  std::size_t dim() const { return rho.rows(); }
};

qla::CMatrix density(const QubitBSCQ& w, int z);
qla::CMatrix density(const GeneralBSCQ& w, int z);

DeltaGamma theta_q_to_delta_gamma(double theta, double q);
QubitBSCQ delta_gamma_to_theta_q(const DeltaGamma& dg);

GeneralBSCQ to_general(const QubitBSCQ& w);

// Lemma-1 style canonicalization of a qubit channel: q = 2 lambda_min(rho),
// sin(theta) = lambda_max(rho - U rho U) / (1 - q). A channel with q within
// 1e-12 of 1 is pinned to (theta=0, q=1).
QubitBSCQ canonicalize(const GeneralBSCQ& w);
QubitBSCQ canonicalize(const qla::CMatrix& rho, const qla::CMatrix& u);

// Success probability of the Helstrom measurement distinguishing rho0 (prior
// p) from rho1 (prior 1-p), via the eigenspaces of p rho0 - (1-p) rho1.
double helstrom_success(const qla::CMatrix& rho0, const qla::CMatrix& rho1, double p);

// Closed form for the canonical qubit channel with equal priors.
double helstrom_qubit(const QubitBSCQ& w);

// Holevo information of the channel in bits.
double holevo(const QubitBSCQ& w);

// Channel family mixing |theta> with its flip |-theta>: flip probability p in
// [0, 1/2], theta in [0, pi/2]. Returns the canonical parameters.
QubitBSCQ from_flip_family(double theta, double p);
// The raw density matrix of that mixture (symmetry sx), for cross-checks.
qla::CMatrix flip_family_density(double theta, double p, int z);

// JSON serialization: {"theta": t, "q": q} and
// {"rho": [[re, im], ...], "u": [[re, im], ...]} (row-major entries).
std::string to_json(const QubitBSCQ& w);
std::string to_json(const GeneralBSCQ& w);
QubitBSCQ qubit_from_json(const std::string& text);
GeneralBSCQ general_from_json(const std::string& text);

}  // namespace pmbpqm
