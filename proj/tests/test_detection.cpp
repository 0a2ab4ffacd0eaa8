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

#include <catch_amalgamated.hpp>

#include "blockcoh/detection.hpp"

using namespace blockcoh;

namespace {

ComplexMatrix qutrit(double p0, double p1, Complex a, Complex b, Complex c) {
  ComplexMatrix m(3, 3);
  m << Complex(p0), a, b,  //
      std::conj(a), Complex(p1), c,  //
      std::conj(b), std::conj(c), Complex(1.0 - p0 - p1);
  return m;
}

SubspacePartition ones3() { return SubspacePartition({1, 1, 1}); }

// Pure state on the given partition with support forced onto `blocks`.
PureState pure_with_support(const SubspacePartition& part,
                            const std::vector<Eigen::Index>& blocks, std::uint64_t seed) {
  ComplexVector amp = haar_pure(part.total_dim(), seed).amplitudes();
  for (Eigen::Index j = 0; j < part.blocks(); ++j) {
    bool keep = false;
    for (Eigen::Index b : blocks) keep = keep || (b == j);
    if (!keep) amp.segment(part.offset(j), part.dim(j)).setZero();
  }
  amp.normalize();
  return PureState(amp);
}

}  // namespace

TEST_CASE("single-row certificates on the qutrit") {
  // a = b = 0.35 is PSD-completable (p1 = 0.25, c = 0.245 is a witness) and
  // violates the k = 2 bound |a| + |b| <= 1/2, so it certifies k = 3.
  const DensityMatrix genuine = validate_density(
      qutrit(0.5, 0.25, Complex(0.35, 0), Complex(0.35, 0), Complex(0.245, 0)));
  const BCNCertificate cert = certify_bcn(genuine, ones3(), 0);
  REQUIRE(cert.certified_k == 3);
  REQUIRE(cert.genuine);
  // consistency: k = 3 means the k = 2 bound is genuinely exceeded
  REQUIRE(cert.c_tr_value >
          bound_evaluate(BoundKind::BCN, cert.p_anchor, 2, 2) + 1e-9);

  const DensityMatrix flat = decohere(genuine, ones3());
  REQUIRE(certify_bcn(flat, ones3(), 0).certified_k == 1);
  REQUIRE_FALSE(certify_bcn(flat, ones3(), 0).genuine);

  // two-level pure edge: a = 1/2, b = 0 sits exactly on the k = 2 bound
  const DensityMatrix two_level = validate_density(
      qutrit(0.5, 0.5, Complex(0.5, 0), Complex(0, 0), Complex(0, 0)));
  REQUIRE(certify_bcn(two_level, ones3(), 0).certified_k == 2);
}

TEST_CASE("best certificate over anchors") {
  ComplexVector uniform = ComplexVector::Constant(3, Complex(1.0 / std::sqrt(3.0), 0));
  const DensityMatrix rho = PureState(uniform).density();
  for (Eigen::Index anchor = 0; anchor < 3; ++anchor)
    REQUIRE(certify_bcn(rho, ones3(), anchor).certified_k == 3);
  REQUIRE(certify_bcn_all_anchors(rho, ones3()).certified_k == 3);

  // coherence only between blocks 1 and 2: anchors 1/2 certify 2, anchor 0
  // certifies 1, and the best certificate reports 2
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = m(2, 2) = 0.25;
  m(1, 2) = m(2, 1) = 0.25;
  const DensityMatrix partial = validate_density(m);
  REQUIRE(certify_bcn(partial, ones3(), 0).certified_k == 1);
  REQUIRE(certify_bcn(partial, ones3(), 1).certified_k == 2);
  REQUIRE(certify_bcn(partial, ones3(), 2).certified_k == 2);
  const BCNCertificate best = certify_bcn_all_anchors(partial, ones3());
  REQUIRE(best.certified_k == 2);
  REQUIRE(best.anchor == 1);  // smallest anchor wins the tie

  const DensityMatrix flat = decohere(partial, ones3());
  REQUIRE(certify_bcn_all_anchors(flat, ones3()).certified_k == 1);
}

TEST_CASE("certificates never exceed the block coherence rank of pure states") {
  const SubspacePartition part({1, 2, 1, 2});
  const std::vector<std::vector<Eigen::Index>> supports = {
      {0}, {2}, {0, 1}, {1, 3}, {0, 1, 2}, {0, 1, 2, 3}};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto& support = supports[seed % supports.size()];
    const PureState psi = pure_with_support(part, support, seed);
    const Eigen::Index rank = bcr(psi, part);
    REQUIRE(rank <= static_cast<Eigen::Index>(support.size()));
    const BCNCertificate cert = certify_bcn_all_anchors(psi.density(), part);
    REQUIRE(cert.certified_k <= rank);
  }
}

TEST_CASE("mixtures of two-level pure states never certify three levels") {
  GaussianSource g(314);
  for (int trial = 0; trial < 200; ++trial) {
    // random convex mixture of pure states, each supported on two blocks
    ComplexMatrix rho = ComplexMatrix::Zero(3, 3);
    const int parts = 2 + trial % 3;
    double total = 0.0;
    std::vector<double> w(static_cast<std::size_t>(parts));
    for (auto& x : w) {
      x = std::abs(g.real()) + 1e-3;
      total += x;
    }
    const std::vector<std::vector<Eigen::Index>> pairs = {{0, 1}, {0, 2}, {1, 2}};
    for (int j = 0; j < parts; ++j) {
      const PureState psi = pure_with_support(
          ones3(), pairs[static_cast<std::size_t>((trial + j) % 3)],
          static_cast<std::uint64_t>(trial * 31 + j));
      rho += (w[static_cast<std::size_t>(j)] / total) * psi.density().matrix();
    }
    const DensityMatrix state = validate_density(rho);
    const BCNCertificate cert = certify_bcn_all_anchors(state, ones3());
    INFO("trial " << trial);
    REQUIRE(cert.certified_k <= 2);
  }
}

TEST_CASE("scaling the anchor row never increases the certificate") {
  const SubspacePartition part({1, 1, 1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = ginibre_mixed(3, 1 + seed % 3, seed);
    // rho(s) = s rho + (1-s) (P0 rho P0 + Q rho Q) scales the anchor row by s
    // and stays a convex combination of states
    ComplexMatrix split = ComplexMatrix::Zero(3, 3);
    split(0, 0) = rho.matrix()(0, 0);
    split.block(1, 1, 2, 2) = rho.matrix().block(1, 1, 2, 2);
    Eigen::Index prev = 0;
    for (double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
      const DensityMatrix scaled =
          validate_density(s * rho.matrix() + (1.0 - s) * split);
      const Eigen::Index k = certify_bcn(scaled, part, 0).certified_k;
      REQUIRE(k >= prev);
      prev = k;
    }
  }
}

TEST_CASE("degenerate anchors") {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(1, 1) = m(2, 2) = 0.5;
  m(1, 2) = m(2, 1) = 0.5;
  const DensityMatrix rho = validate_density(m);
  // p0 = 0: the anchor row must vanish and the certificate is trivial
  const BCNCertificate cert = certify_bcn(rho, ones3(), 0);
  REQUIRE(cert.certified_k == 1);
  REQUIRE(certify_bcn(rho, ones3(), 1).certified_k == 2);
}
