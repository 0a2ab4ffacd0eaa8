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

#ifndef BLOCKCOH_STATES_HPP
#define BLOCKCOH_STATES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "blockcoh/matrix_kernel.hpp"

namespace blockcoh {

// Ordered subspace dimensions d_0 ... d_N. Blocks are contiguous index
// ranges; states given in another basis have to be conjugated into this
// basis first (see compose below).
class SubspacePartition {
 public:
  explicit SubspacePartition(std::vector<Eigen::Index> dims) : dims_(std::move(dims)) {
    if (dims_.size() < 2)
      throw DimensionMismatch("SubspacePartition: need at least two blocks");
    offsets_.reserve(dims_.size() + 1);
    offsets_.push_back(0);
    for (Eigen::Index d : dims_) {
      if (d < 1) throw DimensionMismatch("SubspacePartition: block dimensions must be >= 1");
      offsets_.push_back(offsets_.back() + d);
    }
  }

  // Number of blocks, i.e. N + 1 in the usual indexing P_0 ... P_N.
  Eigen::Index blocks() const { return static_cast<Eigen::Index>(dims_.size()); }
  Eigen::Index dim(Eigen::Index i) const { return dims_[check(i)]; }
  Eigen::Index offset(Eigen::Index i) const { return offsets_[check(i)]; }
  Eigen::Index total_dim() const { return offsets_.back(); }
  const std::vector<Eigen::Index>& dims() const { return dims_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(dims_[i]);
    }
    return s;
  }

  bool operator==(const SubspacePartition& other) const { return dims_ == other.dims_; }

 private:
  std::size_t check(Eigen::Index i) const {
    if (i < 0 || i >= blocks())
      throw DimensionMismatch("SubspacePartition: block index " + std::to_string(i) +
                              " out of range");
    return static_cast<std::size_t>(i);
  }

  std::vector<Eigen::Index> dims_;
  std::vector<Eigen::Index> offsets_;
};

struct BlockIndex {
  Eigen::Index i = 0;
  Eigen::Index j = 0;
};

// A validated state: Hermitian, PSD and unit trace within tolerance. The only
// way to obtain one is through validate(), so holding a DensityMatrix is the
// proof that the invariants were checked.
class DensityMatrix {
 public:
  static DensityMatrix validate(const ComplexMatrix& m, double tolerance = 1e-10) {
    if (m.rows() != m.cols()) throw NotHermitian("validate_density: matrix is not square");
    if (!m.allFinite()) throw InvalidMatrix("validate_density: non-finite entries");
    if (!is_hermitian(m, tolerance))
      throw NotHermitian("validate_density: defect " +
                         std::to_string(max_abs(m - m.adjoint())));
    const double lam_min = min_eigenvalue(0.5 * (m + m.adjoint()));
    if (lam_min < -tolerance)
      throw NotPSD("validate_density: eigenvalue " + std::to_string(lam_min));
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > tolerance)
      throw TraceNotOne("validate_density: trace " + std::to_string(tr));
    return DensityMatrix(m);
  }

  const ComplexMatrix& matrix() const { return matrix_; }
  Eigen::Index dim() const { return matrix_.rows(); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {}
  ComplexMatrix matrix_;
};

inline DensityMatrix validate_density(const ComplexMatrix& m, double tolerance = 1e-10) {
  return DensityMatrix::validate(m, tolerance);
}

// Unit vector |psi>; block projections P_j |psi> come from the partition.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 1)
      throw DimensionMismatch("PureState: amplitude vector is empty");
    if (std::abs(amplitudes_.norm() - 1.0) > 1e-10)
      throw NotNormalized("PureState: norm " + std::to_string(amplitudes_.norm()));
  }

  const ComplexVector& amplitudes() const { return amplitudes_; }
  Eigen::Index dim() const { return amplitudes_.size(); }

  DensityMatrix density() const {
    return DensityMatrix::validate(amplitudes_ * amplitudes_.adjoint());
  }

 private:
  ComplexVector amplitudes_;
};

inline void require_partition_matches(const SubspacePartition& part, Eigen::Index dim,
                                      const char* who) {
  if (part.total_dim() != dim)
    throw DimensionMismatch(std::string(who) + ": partition covers " +
                            std::to_string(part.total_dim()) + " of " + std::to_string(dim) +
                            " dimensions");
}

// rho_{ij} = P_i rho P_j restricted to its support rows/columns.
inline ComplexMatrix block(const DensityMatrix& rho, const SubspacePartition& part,
                           BlockIndex idx) {
  require_partition_matches(part, rho.dim(), "block");
  return rho.matrix().block(part.offset(idx.i), part.offset(idx.j), part.dim(idx.i),
                            part.dim(idx.j));
}

// p_i = tr rho_{ii}; sums to one because rho has unit trace.
inline RealVector block_weights(const DensityMatrix& rho, const SubspacePartition& part) {
  require_partition_matches(part, rho.dim(), "block_weights");
  RealVector w(part.blocks());
  for (Eigen::Index i = 0; i < part.blocks(); ++i)
    w[i] = rho.matrix()
               .block(part.offset(i), part.offset(i), part.dim(i), part.dim(i))
               .trace()
               .real();
  return w;
}

// Pinching: zero every off-diagonal block. Idempotent and trace preserving.
inline DensityMatrix decohere(const DensityMatrix& rho, const SubspacePartition& part) {
  require_partition_matches(part, rho.dim(), "decohere");
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (Eigen::Index i = 0; i < part.blocks(); ++i) {
    const Eigen::Index o = part.offset(i), d = part.dim(i);
    out.block(o, o, d, d) = rho.matrix().block(o, o, d, d);
  }
  return DensityMatrix::validate(out);
}

// Restriction of rho to the direct sum of subspaces a and i: both diagonal
// blocks plus the connecting off-diagonal block. Sub-normalized, trace
// p_a + p_i, so it is carried as a plain matrix rather than a DensityMatrix.
struct Trimmed {
  ComplexMatrix matrix;     // [[rho_aa, rho_ai], [rho_ia, rho_ii]]
  ComplexMatrix decohered;  // off-diagonal block zeroed
};

inline Trimmed trimmed(const DensityMatrix& rho, const SubspacePartition& part,
                       Eigen::Index a, Eigen::Index i) {
  require_partition_matches(part, rho.dim(), "trimmed");
  if (a == i) throw SameBlock("trimmed: block indices must differ");
  const Eigen::Index da = part.dim(a), di = part.dim(i);
  Trimmed t;
  t.matrix = ComplexMatrix::Zero(da + di, da + di);
  t.matrix.block(0, 0, da, da) = block(rho, part, {a, a});
  t.matrix.block(0, da, da, di) = block(rho, part, {a, i});
  t.matrix.block(da, 0, di, da) = block(rho, part, {i, a});
  t.matrix.block(da, da, di, di) = block(rho, part, {i, i});
  t.decohered = ComplexMatrix::Zero(da + di, da + di);
  t.decohered.block(0, 0, da, da) = t.matrix.block(0, 0, da, da);
  t.decohered.block(da, da, di, di) = t.matrix.block(da, da, di, di);
  return t;
}

// Basis change helper for partitions that are not contiguous in the given
// basis: conjugate the state by a user-supplied unitary W, rho -> W rho W^dag.
inline DensityMatrix compose(const DensityMatrix& rho, const ComplexMatrix& w) {
  if (w.rows() != w.cols() || w.rows() != rho.dim())
    throw DimensionMismatch("compose: W must be square of the state dimension");
  const double defect =
      max_abs(w.adjoint() * w - ComplexMatrix::Identity(w.rows(), w.cols()));
  if (defect > 1e-10)
    throw InvalidMatrix("compose: W is not unitary, defect " + std::to_string(defect));
  return DensityMatrix::validate(w * rho.matrix() * w.adjoint());
}

// Block coherence rank of a pure state: the number of blocks carrying more
// than tol of probability weight.
inline Eigen::Index bcr(const PureState& psi, const SubspacePartition& part,
                        double tolerance = 1e-9) {
  require_partition_matches(part, psi.dim(), "bcr");
  Eigen::Index count = 0;
  for (Eigen::Index j = 0; j < part.blocks(); ++j)
    if (psi.amplitudes().segment(part.offset(j), part.dim(j)).squaredNorm() > tolerance)
      ++count;
  return count;
}

// Deterministic standard-normal source. Box-Muller on raw 53-bit uniforms so
// the stream does not depend on the standard library's distribution
// implementation; the same seed yields the same values everywhere.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  double real() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  Complex complex_normal() {
    const double re = real();
    const double im = real();
    return Complex(re, im);
  }

 private:
  double uniform_open() {  // (0, 1]
    return (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;
  }

  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Haar-distributed pure state: normalized complex Gaussian vector. The
// physically irrelevant global phase is fixed by making the largest
// amplitude real positive, so dim = 1 always yields [1].
inline PureState haar_pure(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) throw DimensionMismatch("haar_pure: dim must be >= 1");
  GaussianSource g(seed);
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = g.complex_normal();
  v.normalize();
  Eigen::Index top = 0;
  v.cwiseAbs().maxCoeff(&top);
  const double mag = std::abs(v[top]);
  if (mag > 0.0) v *= std::conj(v[top]) / mag;
  return PureState(v);
}

// Ginibre-induced random state of chosen rank: rho = G G^dag / tr(G G^dag)
// with G a dim x rank complex Gaussian matrix.
inline DensityMatrix ginibre_mixed(Eigen::Index dim, Eigen::Index rank, std::uint64_t seed) {
  if (dim < 1) throw DimensionMismatch("ginibre_mixed: dim must be >= 1");
  if (rank < 1 || rank > dim)
    throw InvalidRank("ginibre_mixed: rank " + std::to_string(rank) + " not in [1, " +
                      std::to_string(dim) + "]");
  GaussianSource g(seed);
  ComplexMatrix gin(dim, rank);
  for (Eigen::Index j = 0; j < rank; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) gin(i, j) = g.complex_normal();
  ComplexMatrix rho = gin * gin.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix::validate(rho);
}

namespace detail {

// Haar unitary via QR of a Ginibre matrix with the R-diagonal phase fix.
inline ComplexMatrix haar_unitary(Eigen::Index dim, GaussianSource& g) {
  ComplexMatrix a(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j)
    for (Eigen::Index i = 0; i < dim; ++i) a(i, j) = g.complex_normal();
  Eigen::HouseholderQR<ComplexMatrix> qr(a);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

}  // namespace detail

inline ComplexMatrix haar_unitary(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) throw DimensionMismatch("haar_unitary: dim must be >= 1");
  GaussianSource g(seed);
  return detail::haar_unitary(dim, g);
}

// Block-diagonal unitary with independently Haar-distributed blocks. These
// are exactly the transformations that leave every block-coherence
// quantifier invariant.
inline ComplexMatrix random_block_unitary(const SubspacePartition& part, std::uint64_t seed) {
  GaussianSource g(seed);
  ComplexMatrix u = ComplexMatrix::Zero(part.total_dim(), part.total_dim());
  for (Eigen::Index i = 0; i < part.blocks(); ++i) {
    const Eigen::Index o = part.offset(i), d = part.dim(i);
    u.block(o, o, d, d) = detail::haar_unitary(d, g);
  }
  return u;
}

}  // namespace blockcoh

#endif  // BLOCKCOH_STATES_HPP
