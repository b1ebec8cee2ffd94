// SPDX-License-Identifier: Apache-2.0
#include "pmbpqm/combine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pmbpqm {

using qla::CMatrix;
using qla::cplx;

namespace {

constexpr double kBranchPruneTol = 1e-14;

std::vector<cplx> column(const CMatrix& m, std::size_t c) {
  std::vector<cplx> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) out[r] = m(r, c);
  return out;
}

std::vector<cplx> mat_vec(const CMatrix& m, const std::vector<cplx>& x) {
  std::vector<cplx> out(m.rows(), cplx{});
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cplx acc{};
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * x[c];
    out[r] = acc;
  }
  return out;
}

cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  cplx acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

// Rotates a set of vectors (columns) to diagonalize x^dag rho x on their
// span, ordered by the projected eigenvalue descending. Resolves degenerate
// clusters deterministically and, for the check-node |00>/|11> case, lands on
// the symmetric combination.
std::vector<std::vector<cplx>> diagonalize_on_span(const std::vector<std::vector<cplx>>& basis,
                                                   const CMatrix& rho) {
  const std::size_t k = basis.size();
  if (k <= 1) return basis;
  CMatrix s(k, k);
  std::vector<std::vector<cplx>> rho_b(k);
  for (std::size_t j = 0; j < k; ++j) rho_b[j] = mat_vec(rho, basis[j]);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) s(i, j) = inner(basis[i], rho_b[j]);
  const auto eig = qla::herm_eig(s);
  std::vector<std::vector<cplx>> out(k, std::vector<cplx>(basis[0].size(), cplx{}));
  for (std::size_t col = 0; col < k; ++col)
    for (std::size_t j = 0; j < k; ++j) {
      const cplx w = eig.eigenvectors(j, col);
      for (std::size_t r = 0; r < basis[0].size(); ++r) out[col][r] += w * basis[j][r];
    }
  return out;
}

}  // namespace

double BranchDistribution::total_prob() const {
  double s = 0.0;
  for (const Branch& b : branches) s += b.prob;
  return s;
}

double BranchDistribution::mean_success() const {
  double s = 0.0;
  for (const Branch& b : branches) s += b.prob * helstrom_qubit(b.channel);
  return s;
}

GeneralBSCQ varoast(const GeneralBSCQ& w, const GeneralBSCQ& w2) {
  return GeneralBSCQ(qla::kron(w.rho, w2.rho), qla::kron(w.u, w2.u));
}

GeneralBSCQ boxast(const GeneralBSCQ& w, const GeneralBSCQ& w2) {
  const CMatrix rho1_flipped = density(w, 1);
  const CMatrix rho2_flipped = density(w2, 1);
  const CMatrix rho =
      0.5 * (qla::kron(w.rho, w2.rho) + qla::kron(rho1_flipped, rho2_flipped));
  return GeneralBSCQ(rho, qla::kron(w.u, CMatrix::identity(w2.dim())));
}

PairedMeasurement paired_measurement(const GeneralBSCQ& w) {
  const std::size_t n = w.dim();
  if (n == 0 || n % 2 != 0) throw std::invalid_argument("paired_measurement: dimension must be even and positive");
  const CMatrix diff = w.rho - qla::matmul(w.u, qla::matmul(w.rho, w.u));
  const auto eig = qla::herm_eig(diff);
  const double scale =
      std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
  const double ztol = std::max(1e-10 * scale, 1e-14);

  PairedMeasurement pm;
  auto push_pair = [&](const std::vector<cplx>& v, const std::vector<cplx>& uv) {
    MeasurementPair p;
    p.v = v;
    p.uv = uv;
    const auto rv = mat_vec(w.rho, v);
    const auto ruv = mat_vec(w.rho, uv);
    p.prob = std::real(inner(v, rv)) + std::real(inner(uv, ruv));
    pm.pairs.push_back(std::move(p));
  };

  // positive eigenvalues, grouped into degenerate clusters
  std::size_t i = 0;
  while (i < n && eig.eigenvalues[i] > ztol) {
    std::size_t j = i;
    while (j + 1 < n && eig.eigenvalues[j + 1] > ztol &&
           (eig.eigenvalues[j] - eig.eigenvalues[j + 1]) < ztol) {
      ++j;
    }
    std::vector<std::vector<cplx>> cluster;
    for (std::size_t k = i; k <= j; ++k) cluster.push_back(column(eig.eigenvectors, k));
    if (cluster.size() > 1) cluster = diagonalize_on_span(cluster, w.rho);
    for (const auto& v : cluster) push_pair(v, mat_vec(w.u, v));
    i = j + 1;
  }

  // zero eigenspace: split by the +/-1 eigenspaces of U restricted to it
  std::vector<std::vector<cplx>> zero_basis;
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(eig.eigenvalues[k]) <= ztol) zero_basis.push_back(column(eig.eigenvectors, k));
  }
  if (!zero_basis.empty()) {
    const std::size_t k = zero_basis.size();
    CMatrix us(k, k);
    for (std::size_t a = 0; a < k; ++a) {
      const auto ub = mat_vec(w.u, zero_basis[a]);
      for (std::size_t b = 0; b < k; ++b) us(b, a) = inner(zero_basis[b], ub);
    }
    const auto ueig = qla::herm_eig(us);
    std::vector<std::vector<cplx>> plus, minus;
    for (std::size_t col = 0; col < k; ++col) {
      std::vector<cplx> vec(zero_basis[0].size(), cplx{});
      for (std::size_t b = 0; b < k; ++b) {
        const cplx wgt = ueig.eigenvectors(b, col);
        for (std::size_t r = 0; r < vec.size(); ++r) vec[r] += wgt * zero_basis[b][r];
      }
      (ueig.eigenvalues[col] > 0.0 ? plus : minus).push_back(std::move(vec));
    }
    plus = diagonalize_on_span(plus, w.rho);
    minus = diagonalize_on_span(minus, w.rho);
    auto pop_back_pair = [&](std::vector<std::vector<cplx>>& side) {
      // surplus vectors on one side are paired among themselves; the symmetry
      // is redefined on the null space, which leaves the channel equivalent
      auto b = std::move(side.back());
      side.pop_back();
      auto a = std::move(side.back());
      side.pop_back();
      std::vector<cplx> v(a.size()), uv(a.size());
      const double inv = 1.0 / std::sqrt(2.0);
      for (std::size_t r = 0; r < a.size(); ++r) {
        v[r] = (a[r] + b[r]) * inv;
        uv[r] = (a[r] - b[r]) * inv;
      }
      push_pair(v, uv);
    };
    while (plus.size() > minus.size() + 1) pop_back_pair(plus);
    while (minus.size() > plus.size() + 1) pop_back_pair(minus);
    for (std::size_t a = 0; a < std::min(plus.size(), minus.size()); ++a) {
      std::vector<cplx> v(plus[a].size()), uv(plus[a].size());
      const double inv = 1.0 / std::sqrt(2.0);
      for (std::size_t r = 0; r < v.size(); ++r) {
        v[r] = (plus[a][r] + minus[a][r]) * inv;
        uv[r] = (plus[a][r] - minus[a][r]) * inv;
      }
      push_pair(v, uv);
    }
  }
  return pm;
}

BranchDistribution pm_reduce(const GeneralBSCQ& w) {
  const PairedMeasurement pm = paired_measurement(w);
  BranchDistribution out;
  for (const MeasurementPair& pair : pm.pairs) {
    if (pair.prob < kBranchPruneTol) continue;
    const auto rv = mat_vec(w.rho, pair.v);
    const auto ruv = mat_vec(w.rho, pair.uv);
    CMatrix m(2, 2);
    m(0, 0) = inner(pair.v, rv);
    m(0, 1) = inner(pair.uv, rv);
    m(1, 0) = inner(pair.v, ruv);
    m(1, 1) = inner(pair.uv, ruv);
    m *= cplx{1.0 / pair.prob};
    // guard against round-off before canonicalizing
    m(0, 0) = m(0, 0).real();
    m(1, 1) = m(1, 1).real();
    const cplx avg = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    m(0, 1) = avg;
    m(1, 0) = std::conj(avg);
    Branch b;
    b.prob = pair.prob;
    b.channel = canonicalize(m, qla::pauli_x());
    out.branches.push_back(b);
  }
  return out;
}

BranchDistribution reduce_varoast(const QubitBSCQ& w, const QubitBSCQ& w2) {
  return pm_reduce(varoast(to_general(w), to_general(w2)));
}

BranchDistribution reduce_boxast(const QubitBSCQ& w, const QubitBSCQ& w2) {
  return pm_reduce(boxast(to_general(w), to_general(w2)));
}

namespace {

// theta and pi - theta name the same canonical channel
double fold_arccos(double x) { return std::acos(std::clamp(std::abs(x), 0.0, 1.0)); }

}  // namespace

BranchDistribution psc_check_closed(double theta, double theta2) {
  const double c1 = std::cos(theta), c2 = std::cos(theta2);
  const double p0 = 0.5 * (1.0 + c1 * c2);
  BranchDistribution out;
  if (p0 > kBranchPruneTol) {
    out.branches.push_back({p0, QubitBSCQ(fold_arccos((c1 + c2) / (1.0 + c1 * c2)), 0.0)});
  }
  const double p1 = 1.0 - p0;
  if (p1 > kBranchPruneTol) {
    out.branches.push_back({p1, QubitBSCQ(fold_arccos((c1 - c2) / (1.0 - c1 * c2)), 0.0)});
  }
  return out;
}

BranchDistribution psc_bit_closed(double theta, double theta2) {
  BranchDistribution out;
  out.branches.push_back({1.0, QubitBSCQ(fold_arccos(std::cos(theta) * std::cos(theta2)), 0.0)});
  return out;
}

BranchDistribution dg_check_closed(const DeltaGamma& dg1, const DeltaGamma& dg2) {
  const double d1 = dg1.delta, g1 = dg1.gamma, d2 = dg2.delta, g2 = dg2.gamma;
  const double p0 = 0.5 + 2.0 * g1 * g2;
  BranchDistribution out;
  // the appendix delta/gamma values are unnormalized (trace p_j); divide by p_j
  const double base = 2.0 * d1 * d2 - d1 - d2 + 1.0;
  struct Row {
    double p, dt, gt;
  };
  const Row rows[2] = {
      {p0, 0.5 * (base + 2.0 * g1 * g2), 0.5 * (g1 + g2)},
      {1.0 - p0, 0.5 * (base - 2.0 * g1 * g2), 0.5 * (g1 - g2)},
  };
  for (const Row& r : rows) {
    if (r.p < kBranchPruneTol) continue;
    CMatrix m(2, 2, {r.dt / r.p, r.gt / r.p, r.gt / r.p, 1.0 - r.dt / r.p});
    out.branches.push_back({r.p, canonicalize(m, qla::pauli_x())});
  }
  return out;
}

BranchDistribution dg_bit_closed(const DeltaGamma& dg) {
  const double d = dg.delta, g = dg.gamma;
  const double g2 = g * g;
  const double root = std::sqrt(4.0 * g2 + 1.0);
  const double p0 = (2.0 * (d - 1.0) * d + 6.0 * g2 + 1.0) / (4.0 * g2 + 1.0);
  const double denom = 4.0 * (d - 1.0) * d + 12.0 * g2 + 2.0;
  const double dt1 = (2.0 * d * d - 2.0 * d * (4.0 * root * g2 + root + 1.0) +
                      g2 * (4.0 * root + 6.0) + root + 1.0) /
                     denom;
  const double gt1 = (2.0 * g2 * (-2.0 * (d - 1.0) * d + 2.0 * g2 + 1.0)) /
                     (2.0 * (d - 1.0) * d + 6.0 * g2 + 1.0);
  BranchDistribution out;
  // The post-measurement states are already normalized here, but they come
  // labeled against the opposite branch probabilities: p0 belongs to the
  // second state. Both readings are checked against pm_reduce in the tests.
  if (p0 > kBranchPruneTol) {
    CMatrix m(2, 2, {dt1, gt1, gt1, 1.0 - dt1});
    out.branches.push_back({p0, canonicalize(m, qla::pauli_x())});
  }
  if (1.0 - p0 > kBranchPruneTol) {
    CMatrix m(2, 2, {0.5, -2.0 * g2, -2.0 * g2, 0.5});
    out.branches.push_back({1.0 - p0, canonicalize(m, qla::pauli_x())});
  }
  return out;
}

std::string to_json(const BranchDistribution& bd) {
  nlohmann::json arr = nlohmann::json::array();
  for (const Branch& b : bd.branches) {
    arr.push_back({{"prob", b.prob}, {"theta", b.channel.theta}, {"q", b.channel.q}});
  }
  return arr.dump();
}

}  // namespace pmbpqm
