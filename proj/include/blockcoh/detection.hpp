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

#ifndef BLOCKCOH_DETECTION_HPP
#define BLOCKCOH_DETECTION_HPP

#include "blockcoh/coherence.hpp"

namespace blockcoh {

// States whose block-coherence number is k obey the tightened trace-norm
// bound c_tr <= sqrt(k-1) sqrt(p0 (1-p0)). Reading it backwards, a single
// block row certifies a lower bound on the BCN: the smallest k whose bound
// the measured c_tr does not exceed. certified_k = N+1 flags genuine
// multisubspace coherence. This is a lower bound only; no decomposition
// search is attempted.
struct BCNCertificate {
  Eigen::Index anchor = 0;
  double c_tr_value = 0.0;
  double p_anchor = 0.0;
  Eigen::Index certified_k = 1;
  Eigen::Index n_blocks = 0;  // N + 1
  bool genuine = false;       // certified_k == n_blocks
};

inline BCNCertificate certify_bcn(const DensityMatrix& rho, const SubspacePartition& part,
                                  Eigen::Index anchor, double tolerance = tol::bound_slack) {
  require_partition_matches(part, rho.dim(), "certify_bcn");
  require_anchor(part, anchor, "certify_bcn");
  BCNCertificate cert;
  cert.anchor = anchor;
  cert.n_blocks = part.blocks();
  cert.p_anchor = block_weights(rho, part)[anchor];
  cert.c_tr_value = c_tr(rho, part, anchor);

  const double q = cert.p_anchor * (1.0 - cert.p_anchor);
  if (q <= tolerance) {
    // Degenerate anchor weight: positivity forces the whole anchor row to
    // vanish, so any residual coherence signals an invalid input.
    if (cert.c_tr_value > tolerance)
      throw InternalInconsistency("certify_bcn: anchor weight " +
                                  std::to_string(cert.p_anchor) + " but c_tr = " +
                                  std::to_string(cert.c_tr_value));
    cert.certified_k = 1;
    cert.genuine = (cert.certified_k == cert.n_blocks);
    return cert;
  }

  for (Eigen::Index k = 1; k <= cert.n_blocks; ++k) {
    const double bound = std::sqrt(static_cast<double>(k - 1)) * std::sqrt(q);
    if (cert.c_tr_value <= bound + tolerance) {
      cert.certified_k = k;
      cert.genuine = (k == cert.n_blocks);
      return cert;
    }
  }
  throw InternalInconsistency(
      "certify_bcn: c_tr = " + std::to_string(cert.c_tr_value) +
      " exceeds even the k = N+1 bound; the input cannot be a valid state");
}

// Best certificate over all anchor choices; ties go to the smallest anchor.
inline BCNCertificate certify_bcn_all_anchors(const DensityMatrix& rho,
                                              const SubspacePartition& part,
                                              double tolerance = tol::bound_slack) {
  require_partition_matches(part, rho.dim(), "certify_bcn_all_anchors");
  BCNCertificate best;
  bool first = true;
  for (Eigen::Index anchor = 0; anchor < part.blocks(); ++anchor) {
    const BCNCertificate cert = certify_bcn(rho, part, anchor, tolerance);
    if (first || cert.certified_k > best.certified_k) {
      best = cert;
      first = false;
    }
  }
  return best;
}

}  // namespace blockcoh

#endif  // BLOCKCOH_DETECTION_HPP
