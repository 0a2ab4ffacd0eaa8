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

#ifndef BLOCKCOH_COHERENCE_HPP
#define BLOCKCOH_COHERENCE_HPP

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "blockcoh/states.hpp"

namespace blockcoh {

// How much coherence one anchor subspace shares with all other subspaces,
// measured four ways on the anchor row of blocks. Positivity of the state
// caps each of them by a closed-form function of p_anchor and N alone:
//
//   c_tr        = sum_j ||rho_{aj}||_tr        <= sqrt(N) sqrt(p (1-p))
//   c_tr_sq     = sum_j ||rho_{aj}||_tr^2      <= p (1-p)
//   c_hs_sq     = sum_j ||rho_{aj}||_HS^2      <= p (1-p)   (equality iff pure)
//   rel_ent_sum = sum_j S(rho^{(aj)} || rho_d^{(aj)})
//               <= [(N-1) p + 1] h2(N p / ((N-1) p + 1))
//
// with p = tr rho_{aa} and N the number of non-anchor blocks. The anchor is a
// parameter; the bounds hold for every choice.

enum class BoundKind { TraceNorm, TraceNormSq, HilbertSchmidtSq, Entropic, BCN };

inline void require_anchor(const SubspacePartition& part, Eigen::Index anchor,
                           const char* who) {
  if (anchor < 0 || anchor >= part.blocks())
    throw DimensionMismatch(std::string(who) + ": anchor " + std::to_string(anchor) +
                            " out of range for " + std::to_string(part.blocks()) +
                            " blocks");
}

inline double c_tr(const DensityMatrix& rho, const SubspacePartition& part,
                   Eigen::Index anchor) {
  require_partition_matches(part, rho.dim(), "c_tr");
  require_anchor(part, anchor, "c_tr");
  double sum = 0.0;
  for (Eigen::Index j = 0; j < part.blocks(); ++j)
    if (j != anchor) sum += trace_norm(block(rho, part, {anchor, j}));
  return sum;
}

inline double c_tr_sq(const DensityMatrix& rho, const SubspacePartition& part,
                      Eigen::Index anchor) {
  require_partition_matches(part, rho.dim(), "c_tr_sq");
  require_anchor(part, anchor, "c_tr_sq");
  double sum = 0.0;
  for (Eigen::Index j = 0; j < part.blocks(); ++j)
    if (j != anchor) {
      const double t = trace_norm(block(rho, part, {anchor, j}));
      sum += t * t;
    }
  return sum;
}

inline double c_hs_sq(const DensityMatrix& rho, const SubspacePartition& part,
                      Eigen::Index anchor) {
  require_partition_matches(part, rho.dim(), "c_hs_sq");
  require_anchor(part, anchor, "c_hs_sq");
  // ||X^dag X||_tr = ||X||_HS^2, so the squared Frobenius norm of each block.
  double sum = 0.0;
  for (Eigen::Index j = 0; j < part.blocks(); ++j)
    if (j != anchor) sum += block(rho, part, {anchor, j}).squaredNorm();
  return sum;
}

// Per-pair relative entropies S(rho^{(aj)} || rho_d^{(aj)}), evaluated as
// S(rho_d) - S(rho) directly on the sub-normalized trimmed matrices.
inline std::vector<double> rel_ent_terms(const DensityMatrix& rho,
                                         const SubspacePartition& part,
                                         Eigen::Index anchor) {
  require_partition_matches(part, rho.dim(), "rel_ent_terms");
  require_anchor(part, anchor, "rel_ent_terms");
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(part.blocks()) - 1);
  for (Eigen::Index j = 0; j < part.blocks(); ++j) {
    if (j == anchor) continue;
    const Trimmed t = trimmed(rho, part, anchor, j);
    terms.push_back(von_neumann_entropy(t.decohered) - von_neumann_entropy(t.matrix));
  }
  return terms;
}

inline double rel_ent_sum(const DensityMatrix& rho, const SubspacePartition& part,
                          Eigen::Index anchor) {
  double sum = 0.0;
  for (double t : rel_ent_terms(rho, part, anchor)) sum += t;
  return sum;
}

// Closed-form bound values as functions of the anchor weight p0 and the
// number N of non-anchor blocks; kind BCN additionally takes the
// block-coherence number k and tightens the trace-norm bound to sqrt(k-1).
inline double bound_evaluate(BoundKind kind, double p0, Eigen::Index n_other,
                             Eigen::Index k = -1) {
  if (p0 < -1e-12 || p0 > 1.0 + 1e-12)
    throw InvalidProbability("bound_evaluate: p0 = " + std::to_string(p0));
  if (n_other < 1) throw DimensionMismatch("bound_evaluate: N must be >= 1");
  p0 = std::clamp(p0, 0.0, 1.0);
  const double q = p0 * (1.0 - p0);
  switch (kind) {
    case BoundKind::TraceNorm:
      return std::sqrt(static_cast<double>(n_other)) * std::sqrt(q);
    case BoundKind::TraceNormSq:
    case BoundKind::HilbertSchmidtSq:
      return q;
    case BoundKind::Entropic: {
      const double t = static_cast<double>(n_other - 1) * p0 + 1.0;
      return t * binary_entropy(static_cast<double>(n_other) * p0 / t);
    }
    case BoundKind::BCN: {
      if (k < 1 || k > n_other + 1)
        throw InvalidBCN("bound_evaluate: k = " + std::to_string(k) + " not in [1, " +
                         std::to_string(n_other + 1) + "]");
      return std::sqrt(static_cast<double>(k - 1)) * std::sqrt(q);
    }
  }
  throw InvalidConfig("bound_evaluate: unknown kind");
}

struct CoherenceReport {
  Eigen::Index anchor = 0;
  Eigen::Index n_other = 0;  // N, the number of non-anchor blocks
  double p_anchor = 0.0;
  double c_tr = 0.0, c_tr_sq = 0.0, c_hs_sq = 0.0, rel_ent_sum = 0.0;
  double bound_tr = 0.0, bound_tr_sq = 0.0, bound_hs_sq = 0.0, bound_entropic = 0.0;
  double slack_tr = 0.0, slack_tr_sq = 0.0, slack_hs_sq = 0.0, slack_entropic = 0.0;
  bool violated_tr = false, violated_tr_sq = false, violated_hs_sq = false,
       violated_entropic = false;
  double tolerance = tol::bound_slack;

  bool any_violation() const {
    return violated_tr || violated_tr_sq || violated_hs_sq || violated_entropic;
  }
};

inline CoherenceReport analyze(const DensityMatrix& rho, const SubspacePartition& part,
                               Eigen::Index anchor, double tolerance = tol::bound_slack) {
  require_partition_matches(part, rho.dim(), "analyze");
  require_anchor(part, anchor, "analyze");
  CoherenceReport r;
  r.anchor = anchor;
  r.n_other = part.blocks() - 1;
  r.p_anchor = block_weights(rho, part)[anchor];
  r.tolerance = tolerance;
  r.c_tr = c_tr(rho, part, anchor);
  r.c_tr_sq = c_tr_sq(rho, part, anchor);
  r.c_hs_sq = c_hs_sq(rho, part, anchor);
  r.rel_ent_sum = rel_ent_sum(rho, part, anchor);
  r.bound_tr = bound_evaluate(BoundKind::TraceNorm, r.p_anchor, r.n_other);
  r.bound_tr_sq = bound_evaluate(BoundKind::TraceNormSq, r.p_anchor, r.n_other);
  r.bound_hs_sq = bound_evaluate(BoundKind::HilbertSchmidtSq, r.p_anchor, r.n_other);
  r.bound_entropic = bound_evaluate(BoundKind::Entropic, r.p_anchor, r.n_other);
  r.slack_tr = r.bound_tr - r.c_tr;
  r.slack_tr_sq = r.bound_tr_sq - r.c_tr_sq;
  r.slack_hs_sq = r.bound_hs_sq - r.c_hs_sq;
  r.slack_entropic = r.bound_entropic - r.rel_ent_sum;
  r.violated_tr = r.slack_tr < -tolerance;
  r.violated_tr_sq = r.slack_tr_sq < -tolerance;
  r.violated_hs_sq = r.slack_hs_sq < -tolerance;
  r.violated_entropic = r.slack_entropic < -tolerance;
  return r;
}

// The tensor saturating state sigma = |phi><phi| (x) rho00 / tr(rho00) with
// |phi> = (sqrt(p0), sqrt((1-p0)/N), ..., sqrt((1-p0)/N)). Its block 00
// equals rho00 and it meets the trace-norm, quadratic and entropic bounds
// with equality. The tensor structure forces all N+1 blocks to share the
// dimension of rho00.
inline std::pair<DensityMatrix, SubspacePartition> tensor_saturating_state(
    const ComplexMatrix& rho00, Eigen::Index n_other) {
  if (n_other < 1) throw DimensionMismatch("tensor_saturating_state: N must be >= 1");
  require_hermitian(rho00, "tensor_saturating_state");
  const RealVector lam = clamp_psd_eigenvalues(hermitian_eigen(rho00, false).values,
                                               "tensor_saturating_state");
  const double p0 = lam.sum();
  if (p0 <= 1e-12 || p0 >= 1.0 - 1e-12)
    throw DegenerateWeight("tensor_saturating_state: tr rho00 = " + std::to_string(p0) +
                           " must lie strictly inside (0, 1)");
  const Eigen::Index d0 = rho00.rows();
  const Eigen::Index nb = n_other + 1;

  RealVector phi(nb);
  phi[0] = std::sqrt(p0);
  for (Eigen::Index i = 1; i < nb; ++i)
    phi[i] = std::sqrt((1.0 - p0) / static_cast<double>(n_other));

  const ComplexMatrix rho00_hat = rho00 / p0;
  ComplexMatrix sigma(nb * d0, nb * d0);
  for (Eigen::Index i = 0; i < nb; ++i)
    for (Eigen::Index j = 0; j < nb; ++j)
      sigma.block(i * d0, j * d0, d0, d0) = (phi[i] * phi[j]) * rho00_hat;

  return {DensityMatrix::validate(sigma),
          SubspacePartition(std::vector<Eigen::Index>(nb, d0))};
}

// Pure state |psi> = (+)_i sqrt(q_i) e^{i phase_i} |v_i> with phase_0 = 0
// fixed by construction (phases holds the N relative phases against the
// first block). Any such state meets the quadratic and Hilbert-Schmidt
// bounds with equality for anchor 0.
inline PureState pure_saturating_state(const RealVector& weights,
                                       const std::vector<ComplexVector>& unit_vectors,
                                       const RealVector& phases) {
  const Eigen::Index nb = weights.size();
  if (nb < 2) throw WeightMismatch("pure_saturating_state: need at least two blocks");
  if (static_cast<Eigen::Index>(unit_vectors.size()) != nb)
    throw WeightMismatch("pure_saturating_state: " + std::to_string(unit_vectors.size()) +
                         " vectors for " + std::to_string(nb) + " weights");
  if (phases.size() != nb - 1)
    throw WeightMismatch("pure_saturating_state: need N = " + std::to_string(nb - 1) +
                         " phases, got " + std::to_string(phases.size()));
  double sum = 0.0;
  for (Eigen::Index i = 0; i < nb; ++i) {
    if (weights[i] < -1e-12)
      throw WeightMismatch("pure_saturating_state: negative weight");
    sum += weights[i];
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw WeightMismatch("pure_saturating_state: weights sum to " + std::to_string(sum));

  Eigen::Index total = 0;
  for (const auto& v : unit_vectors) {
    if (v.size() < 1)
      throw DimensionMismatch("pure_saturating_state: empty block vector");
    if (std::abs(v.norm() - 1.0) > 1e-10)
      throw NotNormalized("pure_saturating_state: block vector norm " +
                          std::to_string(v.norm()));
    total += v.size();
  }

  ComplexVector amp(total);
  Eigen::Index off = 0;
  for (Eigen::Index i = 0; i < nb; ++i) {
    const double phase = (i == 0) ? 0.0 : phases[i - 1];
    const Complex factor =
        std::sqrt(std::max(weights[i], 0.0)) * std::exp(Complex(0.0, phase));
    amp.segment(off, unit_vectors[static_cast<std::size_t>(i)].size()) =
        factor * unit_vectors[static_cast<std::size_t>(i)];
    off += unit_vectors[static_cast<std::size_t>(i)].size();
  }
  amp.normalize();  // removes the 1e-10 scale round-off allowed above
  return PureState(amp);
}

}  // namespace blockcoh

#endif  // BLOCKCOH_COHERENCE_HPP
