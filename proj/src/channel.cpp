// SPDX-License-Identifier: Apache-2.0
#include "pmbpqm/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pmbpqm {

using qla::CMatrix;
using qla::cplx;

namespace {

constexpr double kPi = 3.14159265358979323846;

double clamp_param(double x, double lo, double hi, const char* name) {
  if (x < lo - 1e-12 || x > hi + 1e-12) {
    throw std::invalid_argument(std::string(name) + " out of range");
  }
  return std::clamp(x, lo, hi);
}

}  // namespace

QubitBSCQ::QubitBSCQ(double theta_, double q_)
    : theta(clamp_param(theta_, 0.0, kPi / 2, "theta")), q(clamp_param(q_, 0.0, 1.0, "q")) {}

DeltaGamma::DeltaGamma(double delta_, double gamma_)
    : delta(clamp_param(delta_, 0.0, 1.0, "delta")), gamma(gamma_) {
  if (gamma * gamma > delta * (1.0 - delta) + 1e-12) {
    throw std::invalid_argument("DeltaGamma violates PSD condition");
  }
}

GeneralBSCQ::GeneralBSCQ(CMatrix rho_, CMatrix u_) : rho(std::move(rho_)), u(std::move(u_)) {
  if (!rho.square() || !u.square() || rho.rows() != u.rows()) {
    throw std::invalid_argument("GeneralBSCQ: rho and u must be square with equal dims");
  }
  if (rho.rows() % 2 != 0) {
    throw std::invalid_argument("GeneralBSCQ: dimension must be even");
  }
  if (!rho.is_hermitian(1e-10)) throw std::invalid_argument("GeneralBSCQ: rho not Hermitian");
  if (std::abs(rho.trace() - cplx{1.0}) > 1e-10) {
    throw std::invalid_argument("GeneralBSCQ: rho must have unit trace");
  }
  const CMatrix uu = qla::matmul(u, u);
  if (uu.max_abs_diff(CMatrix::identity(u.rows())) > 1e-10) {
    throw std::invalid_argument("GeneralBSCQ: u must be involutive");
  }
  const CMatrix uud = qla::matmul(u, u.adjoint());
  if (uud.max_abs_diff(CMatrix::identity(u.rows())) > 1e-10) {
    throw std::invalid_argument("GeneralBSCQ: u must be unitary");
  }
}

DeltaGamma theta_q_to_delta_gamma(double theta, double q) {
  QubitBSCQ w(theta, q);
  DeltaGamma dg;
  dg.delta = w.q / 2 + 0.5 * (1.0 - w.q) * (1.0 - std::sin(w.theta));
  dg.gamma = 0.5 * (1.0 - w.q) * std::cos(w.theta);
  return dg;
}

QubitBSCQ delta_gamma_to_theta_q(const DeltaGamma& dg) {
  DeltaGamma checked(dg.delta, dg.gamma);  // validates PSD
  const double a = 1.0 - 2.0 * checked.delta;
  const double b = 2.0 * checked.gamma;
  const double r = std::sqrt(a * a + b * b);  // = 1 - q
  const double q = std::clamp(1.0 - r, 0.0, 1.0);
  if (r < 1e-12) return QubitBSCQ(0.0, 1.0);
  const double s = std::clamp(std::abs(a) / r, 0.0, 1.0);
  return QubitBSCQ(std::asin(s), q);
}

qla::CMatrix density(const QubitBSCQ& w, int z) {
  const DeltaGamma dg = theta_q_to_delta_gamma(w.theta, w.q);
  CMatrix rho(2, 2, {dg.delta, dg.gamma, dg.gamma, 1.0 - dg.delta});
  if (z == 0) return rho;
  const CMatrix sx = qla::pauli_x();
  return qla::matmul(sx, qla::matmul(rho, sx));
}

qla::CMatrix density(const GeneralBSCQ& w, int z) {
  if (z == 0) return w.rho;
  return qla::matmul(w.u, qla::matmul(w.rho, w.u));
}

GeneralBSCQ to_general(const QubitBSCQ& w) { return GeneralBSCQ(density(w, 0), qla::pauli_x()); }

QubitBSCQ canonicalize(const qla::CMatrix& rho, const qla::CMatrix& u) {
  const auto eig = qla::herm_eig(rho);
  const double q = std::clamp(2.0 * eig.eigenvalues.back(), 0.0, 1.0);
  if (1.0 - q < 1e-12) return QubitBSCQ(0.0, 1.0);
  const CMatrix diff = rho - qla::matmul(u, qla::matmul(rho, u));
  const double lmax = qla::herm_eig(diff).eigenvalues.front();
  // lambda_max <= 1 - q with equality on the classical submanifold. The gap is
  // compared absolutely: the eigenvalue noise floor is absolute, and dividing
  // by a small 1 - q would otherwise turn it into ~1e-7 of theta through
  // asin, breaking the exactness of classical channel evolution.
  if ((1.0 - q) - lmax <= 1e-13) return QubitBSCQ(kPi / 2, q);
  const double s = std::clamp(lmax / (1.0 - q), 0.0, 1.0);
  return QubitBSCQ(std::asin(s), q);
}

QubitBSCQ canonicalize(const GeneralBSCQ& w) {
  if (w.dim() != 2) throw std::invalid_argument("canonicalize: expected a qubit channel");
  return canonicalize(w.rho, w.u);
}

double helstrom_success(const qla::CMatrix& rho0, const qla::CMatrix& rho1, double p) {
  if (rho0.rows() != rho1.rows() || rho0.cols() != rho1.cols()) {
    throw std::invalid_argument("helstrom_success: dimension mismatch");
  }
  const double pr = clamp_param(p, 0.0, 1.0, "prior");
  const CMatrix m = pr * rho0 - (1.0 - pr) * rho1;
  const auto eig = qla::herm_eig(m);
  const std::size_t n = m.rows();
  double success = 1.0 - pr;  // Tr[(I - Pi+) rho1] = 1 - Tr[Pi+ rho1]
  for (std::size_t k = 0; k < n; ++k) {
    if (eig.eigenvalues[k] < 0.0) continue;
    // success += p <v|rho0|v> - (1-p) <v|rho1|v> = <v|M|v> = lambda_k
    success += eig.eigenvalues[k];
  }
  return success;
}

double helstrom_qubit(const QubitBSCQ& w) { return 0.5 * (1.0 + (1.0 - w.q) * std::sin(w.theta)); }

double holevo(const QubitBSCQ& w) {
  const CMatrix r0 = density(w, 0);
  const CMatrix r1 = density(w, 1);
  const CMatrix avg = 0.5 * (r0 + r1);
  // W(0) and W(1) are unitarily related, so they share one entropy
  const double h = qla::vn_entropy(avg) - qla::vn_entropy(r0);
  return std::clamp(h, 0.0, 1.0);
}

qla::CMatrix flip_family_density(double theta, double p, int z) {
  // H|t><t|H in matrix form: [[ (1+sin t)/2, cos(t)/2 ], [cos(t)/2, (1-sin t)/2]]
  auto hth = [](double t) {
    return CMatrix(2, 2, {0.5 * (1.0 + std::sin(t)), 0.5 * std::cos(t), 0.5 * std::cos(t),
                          0.5 * (1.0 - std::sin(t))});
  };
  const double sgn = (z == 0) ? 1.0 : -1.0;
  return (1.0 - p) * hth(sgn * theta) + p * hth(-sgn * theta);
}

QubitBSCQ from_flip_family(double theta, double p) {
  clamp_param(theta, 0.0, kPi / 2, "theta");
  clamp_param(p, 0.0, 0.5, "p");
  return canonicalize(flip_family_density(theta, p, 0), qla::pauli_x());
}

namespace {

nlohmann::json matrix_to_json(const CMatrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (const cplx& z : m.data()) entries.push_back({z.real(), z.imag()});
  return entries;
}

CMatrix matrix_from_json(const nlohmann::json& entries) {
  const std::size_t count = entries.size();
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(count))));
  if (n * n != count) throw std::invalid_argument("matrix JSON must hold n*n entries");
  std::vector<cplx> data;
  data.reserve(count);
  for (const auto& e : entries) data.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  return CMatrix(n, n, std::move(data));
}

}  // namespace

std::string to_json(const QubitBSCQ& w) {
  nlohmann::json j{{"theta", w.theta}, {"q", w.q}};
  return j.dump();
}

std::string to_json(const GeneralBSCQ& w) {
  nlohmann::json j{{"rho", matrix_to_json(w.rho)}, {"u", matrix_to_json(w.u)}};
  return j.dump();
}

QubitBSCQ qubit_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return QubitBSCQ(j.at("theta").get<double>(), j.at("q").get<double>());
}

GeneralBSCQ general_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return GeneralBSCQ(matrix_from_json(j.at("rho")), matrix_from_json(j.at("u")));
}

}  // namespace pmbpqm
