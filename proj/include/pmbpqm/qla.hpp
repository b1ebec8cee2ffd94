// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace pmbpqm::qla {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Small and value-semantic: everything in
// this project is a density matrix, unitary or difference matrix of dimension
// at most a few thousand.
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<cplx>& data() const { return data_; }
  std::vector<cplx>& data() { return data_; }

  CMatrix adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  // max entrywise |a_ij - b_ij|
  double max_abs_diff(const CMatrix& other) const;
  bool is_hermitian(double tol = 1e-12) const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(CMatrix a, cplx s) { return a *= s; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

CMatrix matmul(const CMatrix& a, const CMatrix& b);

// Tensor (Kronecker) product.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Eigenvalues sorted descending, eigenvectors as matching columns.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;
};

// Hermitian eigendecomposition by cyclic Jacobi rotations.
//
// Output is deterministic: eigenpairs are sorted by eigenvalue descending,
// each eigenvector is oriented so its first significant component is real
// positive, and within a degenerate cluster (|dlambda| < 1e-10) vectors are
// ordered lexicographically. Inputs with asymmetry up to 1e-12 are
// symmetrized first; anything worse throws std::invalid_argument.
EigenDecomposition herm_eig(const CMatrix& m);

// Von Neumann entropy in bits of a density matrix (PSD, unit trace within
// 1e-10; violations throw).
double vn_entropy(const CMatrix& rho);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const CMatrix& m);

// Pauli matrices and friends.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

}  // namespace pmbpqm::qla
