// Copyright 2026 The blockcoh developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOCKCOH_MATRIX_KERNEL_HPP
#define BLOCKCOH_MATRIX_KERNEL_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "blockcoh/errors.hpp"

namespace blockcoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Shared numeric tolerances. All matrices handled here live on the unit scale
// of density operators, so absolute windows are meaningful.
namespace tol {
inline constexpr double hermiticity = 1e-10;       // relative, see is_hermitian
inline constexpr double eigenvalue_clamp = 1e-10;  // negatives above this are round-off
inline constexpr double rank_cut_rel = 1e-12;      // pseudo-inverse rank cut
inline constexpr double support_leak = 1e-8;       // off-support mass allowed in X
inline constexpr double bound_slack = 1e-9;        // default bound-violation tolerance
}  // namespace tol

inline double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Relative hermiticity test: ||H - H^dag||_max <= tol * max(1, ||H||_max).
inline bool is_hermitian(const ComplexMatrix& h, double tolerance = tol::hermiticity) {
  if (h.rows() != h.cols()) return false;
  return max_abs(h - h.adjoint()) <= tolerance * std::max(1.0, max_abs(h));
}

inline void require_hermitian(const ComplexMatrix& h, const char* who,
                              double tolerance = tol::hermiticity) {
  if (h.rows() != h.cols())
    throw NotHermitian(std::string(who) + ": matrix is not square");
  if (!is_hermitian(h, tolerance))
    throw NotHermitian(std::string(who) + ": defect " +
                       std::to_string(max_abs(h - h.adjoint())));
}

// Non-negative singular values in non-increasing order.
struct SingularSpectrum {
  std::vector<double> values;
};

// Real eigenvalues in ascending order; vectors holds the matching orthonormal
// columns when requested, otherwise stays empty.
struct EigenSpectrum {
  RealVector values;
  ComplexMatrix vectors;
};

inline SingularSpectrum singular_values(const ComplexMatrix& m) {
  if (!m.allFinite()) throw InvalidMatrix("singular_values: non-finite entries");
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  SingularSpectrum s;
  s.values.assign(svd.singularValues().data(),
                  svd.singularValues().data() + svd.singularValues().size());
  for (double& v : s.values) v = std::max(v, 0.0);
  return s;
}

// Schatten p-norm on the singular value vector. p = 1 is the trace norm,
// p = 2 the Hilbert-Schmidt norm, p = infinity the operator norm.
inline double schatten_norm(const ComplexMatrix& m, double p) {
  if (!(p >= 1.0) && !std::isinf(p))
    throw InvalidOrder("schatten_norm: p must satisfy p >= 1 or p = inf");
  const SingularSpectrum s = singular_values(m);
  if (s.values.empty()) return 0.0;
  if (std::isinf(p)) return s.values.front();
  if (p == 1.0) {
    double sum = 0.0;
    for (double v : s.values) sum += v;
    return sum;
  }
  if (p == 2.0) {
    double sum = 0.0;
    for (double v : s.values) sum += v * v;
    return std::sqrt(sum);
  }
  double sum = 0.0;
  for (double v : s.values) sum += std::pow(v, p);
  return std::pow(sum, 1.0 / p);
}

inline double trace_norm(const ComplexMatrix& m) { return schatten_norm(m, 1.0); }
inline double hs_norm(const ComplexMatrix& m) { return schatten_norm(m, 2.0); }
inline double operator_norm(const ComplexMatrix& m) {
  return schatten_norm(m, std::numeric_limits<double>::infinity());
}

inline EigenSpectrum hermitian_eigen(const ComplexMatrix& h, bool want_vectors = true) {
  if (!h.allFinite()) throw InvalidMatrix("hermitian_eigen: non-finite entries");
  require_hermitian(h, "hermitian_eigen");
  // Symmetrize before factorizing so the tolerance window is the only place
  // where non-hermiticity enters.
  const ComplexMatrix sym = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(
      sym, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw InvalidMatrix("hermitian_eigen: eigensolver failed to converge");
  EigenSpectrum out;
  out.values = solver.eigenvalues();
  if (want_vectors) out.vectors = solver.eigenvectors();
  return out;
}

inline double min_eigenvalue(const ComplexMatrix& h) {
  return hermitian_eigen(h, false).values.minCoeff();
}

inline bool is_psd(const ComplexMatrix& h, double tolerance) {
  require_hermitian(h, "is_psd");
  if (h.rows() == 0) return true;
  return min_eigenvalue(h) >= -tolerance;
}

// Eigenvalue clamp shared by the PSD-consuming operations: values in
// [-window, 0) count as round-off zeros, anything below is a hard failure.
inline RealVector clamp_psd_eigenvalues(const RealVector& values, const char* who,
                                        double window = tol::eigenvalue_clamp) {
  RealVector out = values;
  for (Eigen::Index i = 0; i < out.size(); ++i) {
    if (out[i] < -window)
      throw NotPSD(std::string(who) + ": eigenvalue " + std::to_string(out[i]));
    if (out[i] < 0.0) out[i] = 0.0;
  }
  return out;
}

inline ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
  const EigenSpectrum eig = hermitian_eigen(h);
  const RealVector lam = clamp_psd_eigenvalues(eig.values, "psd_sqrt");
  return eig.vectors * lam.cwiseSqrt().asDiagonal() * eig.vectors.adjoint();
}

// Von Neumann entropy in bits, -sum_i lambda_i log2 lambda_i with 0 log 0 = 0.
// Sub-normalized operators are accepted; the trace does not have to be one.
inline double von_neumann_entropy(const ComplexMatrix& h) {
  const EigenSpectrum eig = hermitian_eigen(h, false);
  const RealVector lam = clamp_psd_eigenvalues(eig.values, "von_neumann_entropy");
  double s = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i)
    if (lam[i] > 0.0) s -= lam[i] * std::log2(lam[i]);
  return s;
}

inline double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12)
    throw InvalidProbability("binary_entropy: x = " + std::to_string(x));
  x = std::clamp(x, 0.0, 1.0);
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

namespace detail {

// Pseudo-inverse square root on the support of a PSD matrix, together with
// the support projector. Eigenvalues below rank_cut_rel * lambda_max are
// treated as exact zeros.
struct SupportSqrt {
  ComplexMatrix inv_sqrt;
  ComplexMatrix projector;
};

inline SupportSqrt support_inv_sqrt(const ComplexMatrix& h, const char* who) {
  const EigenSpectrum eig = hermitian_eigen(h);
  const RealVector lam = clamp_psd_eigenvalues(eig.values, who);
  const double cut = tol::rank_cut_rel * (lam.size() ? lam.maxCoeff() : 0.0);
  RealVector inv = RealVector::Zero(lam.size());
  RealVector sup = RealVector::Zero(lam.size());
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    if (lam[i] > cut) {
      inv[i] = 1.0 / std::sqrt(lam[i]);
      sup[i] = 1.0;
    }
  }
  SupportSqrt out;
  out.inv_sqrt = eig.vectors * inv.asDiagonal() * eig.vectors.adjoint();
  out.projector = eig.vectors * sup.asDiagonal() * eig.vectors.adjoint();
  return out;
}

}  // namespace detail

// Factor the off-diagonal block of a PSD block matrix [[A, X], [X^dag, B]] as
// X = A^{1/2} K B^{1/2} and return K. When the enclosing block matrix is PSD,
// K is a contraction, ||K||_inf <= 1 (up to round-off).
inline ComplexMatrix extract_contraction(const ComplexMatrix& a, const ComplexMatrix& x,
                                         const ComplexMatrix& b) {
  if (x.rows() != a.rows() || x.cols() != b.rows())
    throw DimensionMismatch("extract_contraction: X must be rows(A) x rows(B)");
  const detail::SupportSqrt sa = detail::support_inv_sqrt(a, "extract_contraction(A)");
  const detail::SupportSqrt sb = detail::support_inv_sqrt(b, "extract_contraction(B)");
  const double leak = max_abs(x - sa.projector * x * sb.projector);
  if (leak > tol::support_leak)
    throw UnsupportedBlock("extract_contraction: X leaks off the supports of A/B by " +
                           std::to_string(leak));
  return sa.inv_sqrt * x * sb.inv_sqrt;
}

}  // namespace blockcoh

#endif  // BLOCKCOH_MATRIX_KERNEL_HPP
