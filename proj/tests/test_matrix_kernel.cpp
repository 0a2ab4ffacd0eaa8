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

#include "blockcoh/matrix_kernel.hpp"
#include "blockcoh/states.hpp"

using namespace blockcoh;
using Catch::Matchers::WithinAbs;

namespace {

const double kInf = std::numeric_limits<double>::infinity();

// -x log2 x - (1-x) log2(1-x) at x = 1/4, evaluated with 40-digit arithmetic
// and frozen here; doubles as the entropy of diag(1/4, 3/4).
const double kEntropyQuarter = 0.8112781244591328;

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

TEST_CASE("singular values of small matrices") {
  const auto id = singular_values(ComplexMatrix::Identity(2, 2));
  REQUIRE(id.values.size() == 2);
  REQUIRE_THAT(id.values[0], WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(id.values[1], WithinAbs(1.0, 1e-12));

  const auto jordan = singular_values(mat2(0, 1, 0, 0));
  REQUIRE_THAT(jordan.values[0], WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(jordan.values[1], WithinAbs(0.0, 1e-12));

  const auto proj = singular_values(mat2(0.5, 0.5, 0.5, 0.5));
  REQUIRE_THAT(proj.values[0], WithinAbs(1.0, 1e-12));
  REQUIRE_THAT(proj.values[1], WithinAbs(0.0, 1e-12));

  ComplexMatrix bad = mat2(0, 1, 0, 0);
  bad(0, 0) = Complex(std::nan(""), 0.0);
  REQUIRE_THROWS_AS(singular_values(bad), InvalidMatrix);
}

TEST_CASE("schatten norms on diag(3,4)") {
  ComplexMatrix d = mat2(3, 0, 0, 4);
  REQUIRE_THAT(schatten_norm(d, 1.0), WithinAbs(7.0, 1e-12));
  REQUIRE_THAT(schatten_norm(d, 2.0), WithinAbs(5.0, 1e-12));
  REQUIRE_THAT(schatten_norm(d, 3.0), WithinAbs(std::cbrt(91.0), 1e-12));
  REQUIRE_THAT(schatten_norm(d, kInf), WithinAbs(4.0, 1e-12));
  REQUIRE_THROWS_AS(schatten_norm(d, 0.5), InvalidOrder);
}

TEST_CASE("schatten norm ordering and isometric invariance") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    GaussianSource g(seed);
    ComplexMatrix m(3, 3);
    for (Eigen::Index j = 0; j < 3; ++j)
      for (Eigen::Index i = 0; i < 3; ++i) m(i, j) = g.complex_normal();

    const double n1 = schatten_norm(m, 1.0);
    const double n2 = schatten_norm(m, 2.0);
    const double ninf = schatten_norm(m, kInf);
    REQUIRE(n1 >= n2 - 1e-10);
    REQUIRE(n2 >= ninf - 1e-10);

    const ComplexMatrix u = haar_unitary(3, seed * 7 + 1);
    const ComplexMatrix v = haar_unitary(3, seed * 7 + 2);
    for (double p : {1.0, 2.0, kInf}) {
      const double base = schatten_norm(m, p);
      REQUIRE_THAT(schatten_norm(u * m * v, p), WithinAbs(base, 1e-9 * base));
    }
  }
}

TEST_CASE("hermitian eigendecomposition") {
  const auto flip = hermitian_eigen(mat2(0, 1, 1, 0));
  REQUIRE_THAT(flip.values[0], WithinAbs(-1.0, 1e-12));
  REQUIRE_THAT(flip.values[1], WithinAbs(1.0, 1e-12));

  const auto diag = hermitian_eigen(mat2(0.2, 0, 0, 0.8));
  REQUIRE_THAT(diag.values[0], WithinAbs(0.2, 1e-12));
  REQUIRE_THAT(diag.values[1], WithinAbs(0.8, 1e-12));

  const auto proj = hermitian_eigen(mat2(0.5, 0.5, 0.5, 0.5));
  REQUIRE_THAT(proj.values[0], WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(proj.values[1], WithinAbs(1.0, 1e-12));

  REQUIRE_THROWS_AS(hermitian_eigen(mat2(0, 1, 0, 0)), NotHermitian);

  // reconstruction and orthonormality contracts on a random Hermitian matrix
  GaussianSource g(42);
  ComplexMatrix a(4, 4);
  for (Eigen::Index j = 0; j < 4; ++j)
    for (Eigen::Index i = 0; i < 4; ++i) a(i, j) = g.complex_normal();
  const ComplexMatrix h = a + a.adjoint();
  const auto eig = hermitian_eigen(h);
  const ComplexMatrix rebuilt =
      eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
  REQUIRE(max_abs(rebuilt - h) <= 1e-9 * max_abs(h));
  REQUIRE(max_abs(eig.vectors.adjoint() * eig.vectors - ComplexMatrix::Identity(4, 4)) <=
          1e-10);
  for (Eigen::Index i = 1; i < eig.values.size(); ++i)
    REQUIRE(eig.values[i] >= eig.values[i - 1]);
}

TEST_CASE("psd square root") {
  const ComplexMatrix d = psd_sqrt(mat2(4, 0, 0, 9));
  REQUIRE(max_abs(d - mat2(2, 0, 0, 3)) <= 1e-12);

  REQUIRE(max_abs(psd_sqrt(ComplexMatrix::Identity(3, 3)) -
                  ComplexMatrix::Identity(3, 3)) <= 1e-12);

  const ComplexMatrix p = mat2(0.5, 0.5, 0.5, 0.5);
  REQUIRE(max_abs(psd_sqrt(p) - p) <= 1e-12);

  REQUIRE_THROWS_AS(psd_sqrt(mat2(1, 0, 0, -1e-3)), NotPSD);

  // S^2 = H and unitary covariance on random PSD matrices
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexMatrix h = 4.0 * ginibre_mixed(4, 3, seed).matrix();
    const ComplexMatrix s = psd_sqrt(h);
    REQUIRE(max_abs(s * s - h) <= 1e-8 * std::max(1.0, max_abs(h)));
    REQUIRE(max_abs(s - s.adjoint()) <= 1e-10);

    const ComplexMatrix u = haar_unitary(4, seed + 100);
    const ComplexMatrix lhs = psd_sqrt(u * h * u.adjoint());
    const ComplexMatrix rhs = u * s * u.adjoint();
    REQUIRE(max_abs(lhs - rhs) <= 1e-8);
  }
}

TEST_CASE("von Neumann entropy in bits") {
  REQUIRE_THAT(von_neumann_entropy(mat2(0.5, 0.5, 0.5, 0.5)), WithinAbs(0.0, 1e-12));
  REQUIRE_THAT(von_neumann_entropy(0.25 * ComplexMatrix::Identity(4, 4)),
               WithinAbs(2.0, 1e-12));
  REQUIRE_THAT(von_neumann_entropy(mat2(0.25, 0, 0, 0.75)),
               WithinAbs(kEntropyQuarter, 1e-12));
  REQUIRE_THROWS_AS(von_neumann_entropy(mat2(1, 0, 0, -1e-3)), NotPSD);

  // 0 <= S(rho) <= log2 dim for unit-trace states
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const double s = von_neumann_entropy(ginibre_mixed(5, 1 + seed % 5, seed).matrix());
    REQUIRE(s >= 0.0);
    REQUIRE(s <= std::log2(5.0) + 1e-12);
  }
}

TEST_CASE("binary entropy") {
  REQUIRE_THAT(binary_entropy(0.0), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(binary_entropy(1.0), WithinAbs(0.0, 1e-15));
  REQUIRE_THAT(binary_entropy(0.5), WithinAbs(1.0, 1e-15));
  REQUIRE_THAT(binary_entropy(0.25), WithinAbs(kEntropyQuarter, 1e-15));
  REQUIRE_THAT(binary_entropy(0.25), WithinAbs(binary_entropy(0.75), 1e-15));
  REQUIRE_THROWS_AS(binary_entropy(-0.01), InvalidProbability);
  REQUIRE_THROWS_AS(binary_entropy(1.01), InvalidProbability);
}

TEST_CASE("contraction extraction") {
  // qubit |+><+| blocks: A = B = [0.5], X = [0.5] gives the unimodular K = [1]
  ComplexMatrix a(1, 1), x(1, 1);
  a << 0.5;
  x << 0.5;
  const ComplexMatrix k = extract_contraction(a, x, a);
  REQUIRE_THAT(std::abs(k(0, 0)), WithinAbs(1.0, 1e-12));

  // X = 0 -> K = 0
  const ComplexMatrix z = extract_contraction(a, ComplexMatrix::Zero(1, 1), a);
  REQUIRE(max_abs(z) <= 1e-15);

  // X off the support of A is rejected
  ComplexMatrix a2 = mat2(1, 0, 0, 0);
  ComplexMatrix x2 = mat2(0, 0, 0.5, 0);
  REQUIRE_THROWS_AS(extract_contraction(a2, x2, ComplexMatrix::Identity(2, 2)),
                    UnsupportedBlock);

  REQUIRE_THROWS_AS(
      extract_contraction(mat2(1, 0, 0, -1e-3), mat2(0, 0, 0, 0), a2), NotPSD);
}

TEST_CASE("contraction norm and round trip on random PSD block matrices") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Eigen::Index rank = 1 + static_cast<Eigen::Index>(seed % 4);
    const ComplexMatrix rho = ginibre_mixed(4, rank, seed).matrix();
    const ComplexMatrix a = rho.block(0, 0, 2, 2);
    const ComplexMatrix x = rho.block(0, 2, 2, 2);
    const ComplexMatrix b = rho.block(2, 2, 2, 2);

    const ComplexMatrix k = extract_contraction(a, x, b);
    REQUIRE(operator_norm(k) <= 1.0 + 1e-8);

    const ComplexMatrix back = psd_sqrt(a) * k * psd_sqrt(b);
    REQUIRE(max_abs(back - x) <= 1e-8 * std::max(1.0, max_abs(x)));
  }
}

TEST_CASE("Horn inequality for PSD block matrices") {
  // || |X|^q ||_tr^2 <= ||A^q||_tr ||B^q||_tr for q in {1, 2}, with the left
  // side evaluated through the singular values of X: || |X| ||_tr = ||X||_tr
  // and || |X|^2 ||_tr = ||X^dag X||_tr. (Squaring X first and taking
  // psd_sqrt would halve the usable precision.)
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Eigen::Index rank = 1 + static_cast<Eigen::Index>(seed % 5);
    const ComplexMatrix rho = ginibre_mixed(5, rank, seed).matrix();
    const Eigen::Index da = 2, db = 3;
    const ComplexMatrix a = rho.block(0, 0, da, da);
    const ComplexMatrix x = rho.block(0, da, da, db);
    const ComplexMatrix b = rho.block(da, da, db, db);

    const double lhs1 = trace_norm(x);
    REQUIRE(lhs1 * lhs1 <= trace_norm(a) * trace_norm(b) + 1e-9);

    const double lhs2 = trace_norm(x.adjoint() * x);
    REQUIRE(lhs2 * lhs2 <=
            trace_norm(a * a) * trace_norm(b * b) + 1e-9);
  }
}

TEST_CASE("psd check") {
  REQUIRE(is_psd(ComplexMatrix::Identity(3, 3), 1e-9));
  REQUIRE_FALSE(is_psd(mat2(1, 0, 0, -1e-3), 1e-9));
  REQUIRE(is_psd(mat2(0.5, 0.5, 0.5, 0.5), 1e-9));
  REQUIRE_THROWS_AS(is_psd(mat2(0, 1, 0, 0), 1e-9), NotHermitian);
}
