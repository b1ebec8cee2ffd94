// SPDX-License-Identifier: Apache-2.0
#include "pmbpqm/qla.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pmbpqm::qla {

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw std::invalid_argument("CMatrix: entry count does not match dimensions");
  }
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::zero(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs_diff(const CMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

bool CMatrix::is_hermitian(double tol) const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator+=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("operator-=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  CMatrix out(n, m);
  for (long long ri = 0; ri < static_cast<long long>(n); ++ri) {
    const auto r = static_cast<std::size_t>(ri);
    for (std::size_t j = 0; j < k; ++j) {
      const cplx arj = a(r, j);
      if (arj == cplx{}) continue;
      for (std::size_t c = 0; c < m; ++c) out(r, c) += arj * b(j, c);
    }
  }
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const std::size_t br = b.rows(), bc = b.cols();
  for (long long ii = 0; ii < static_cast<long long>(a.rows()); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      for (std::size_t r = 0; r < br; ++r)
        for (std::size_t c = 0; c < bc; ++c) out(i * br + r, j * bc + c) = aij * b(r, c);
    }
  }
  return out;
}

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One complex Jacobi rotation zeroing A(p,q), accumulating into V.
void jacobi_rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const cplx u = std::conj(apq) / mag;  // phase that makes the pivot real
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  double t;
  if (tau >= 0.0) {
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  } else {
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.rows();
  const cplx us = u * s;
  const cplx uc = u * c;
  // columns: A <- A * J, J = [[c, s], [-u s, u c]] on (p,q)
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const cplx aip = a(i, p), aiq = a(i, q);
    a(i, p) = c * aip - us * aiq;
    a(i, q) = s * aip + uc * aiq;
  }
  // rows: A <- J^dag * A
  const cplx cus = std::conj(us);
  const cplx cuc = std::conj(uc);
  for (long long jj = 0; jj < static_cast<long long>(n); ++jj) {
    const auto j = static_cast<std::size_t>(jj);
    const cplx apj = a(p, j), aqj = a(q, j);
    a(p, j) = c * apj - cus * aqj;
    a(q, j) = s * apj + cuc * aqj;
  }
  for (long long ii = 0; ii < static_cast<long long>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    const cplx vip = v(i, p), viq = v(i, q);
    v(i, p) = c * vip - us * viq;
    v(i, q) = s * vip + uc * viq;
  }
}

// first component with non-negligible magnitude made real positive
void orient_column(CMatrix& v, std::size_t col) {
  const std::size_t n = v.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const cplx z = v(i, col);
    if (std::abs(z) > 1e-8) {
      const cplx phase = std::conj(z) / std::abs(z);
      for (std::size_t r = 0; r < n; ++r) v(r, col) *= phase;
      return;
    }
  }
}

bool column_lex_less(const CMatrix& v, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const cplx x = v(i, a), y = v(i, b);
    if (x.real() != y.real()) return x.real() < y.real();
    if (x.imag() != y.imag()) return x.imag() < y.imag();
  }
  return false;
}

}  // namespace

EigenDecomposition herm_eig(const CMatrix& m) {
  if (!m.square()) throw std::invalid_argument("herm_eig: matrix must be square");
  const std::size_t n = m.rows();
  CMatrix a = m;
  // symmetrize small asymmetry, reject anything larger
  double asym = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) asym = std::max(asym, std::abs(a(r, c) - std::conj(a(c, r))));
  if (asym > 1e-12) throw std::invalid_argument("herm_eig: matrix is not Hermitian");
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }

  CMatrix v = CMatrix::identity(n);
  const double scale = std::max(a.frobenius_norm(), 1e-300);
  const double tol = 1e-15 * scale;
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > 1e-30) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return diag[x] > diag[y]; });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = diag[order[k]];
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
    orient_column(out.eigenvectors, k);
  }

  // deterministic order inside degenerate clusters
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && std::abs(out.eigenvalues[j + 1] - out.eigenvalues[i]) < 1e-10) ++j;
    if (j > i) {
      std::vector<std::size_t> cols(j - i + 1);
      std::iota(cols.begin(), cols.end(), i);
      std::stable_sort(cols.begin(), cols.end(), [&](std::size_t x, std::size_t y) {
        return column_lex_less(out.eigenvectors, x, y);
      });
      CMatrix tmp(n, j - i + 1);
      for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t r = 0; r < n; ++r) tmp(r, k) = out.eigenvectors(r, cols[k]);
      for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, i + k) = tmp(r, k);
    }
    i = j + 1;
  }
  return out;
}

double vn_entropy(const CMatrix& rho) {
  if (!rho.square()) throw std::invalid_argument("vn_entropy: matrix must be square");
  if (std::abs(rho.trace() - cplx{1.0}) > 1e-10) {
    throw std::invalid_argument("vn_entropy: trace must be 1");
  }
  const EigenDecomposition eig = herm_eig(rho);
  double s = 0.0;
  for (double lam : eig.eigenvalues) {
    if (lam < -1e-10) throw std::invalid_argument("vn_entropy: matrix is not PSD");
    if (lam > 0.0) s -= lam * std::log2(lam);
  }
  return std::max(s, 0.0);
}

double trace_norm(const CMatrix& m) {
  const EigenDecomposition eig = herm_eig(m);
  double s = 0.0;
  for (double lam : eig.eigenvalues) s += std::abs(lam);
  return s;
}

CMatrix pauli_x() { return CMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }
CMatrix pauli_y() {
  return CMatrix(2, 2, {cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0}});
}
CMatrix pauli_z() { return CMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

}  // namespace pmbpqm::qla
