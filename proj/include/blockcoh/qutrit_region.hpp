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

#ifndef BLOCKCOH_QUTRIT_REGION_HPP
#define BLOCKCOH_QUTRIT_REGION_HPP

#include <utility>
#include <vector>

#include "blockcoh/coherence.hpp"
#include "blockcoh/golden.hpp"
#include "blockcoh/parallel.hpp"

namespace blockcoh {

// Single-qutrit state with the partition [1,1,1]:
//
//     [ p0   a    b  ]
//     [ a*   p1   c  ]
//     [ b*   c*   p2 ],   p2 = 1 - p0 - p1.
//
// a and b carry the anchor-row coherences; c is the placeholder entry that
// the feasibility search is free to choose.
struct QutritState {
  double p0 = 0.0;
  double p1 = 0.0;
  Complex a, b, c;

  double p2() const { return 1.0 - p0 - p1; }

  ComplexMatrix matrix() const {
    ComplexMatrix m(3, 3);
    m << Complex(p0), a, b,  //
        std::conj(a), Complex(p1), c,  //
        std::conj(b), std::conj(c), Complex(p2());
    return m;
  }
};

struct RegionCell {
  double a_abs = 0.0;
  double b_abs = 0.0;
  bool feasible = false;
  bool within_linear = false;     // |a| + |b| <= sqrt(2) sqrt(p0 (1-p0))
  bool within_quadratic = false;  // |a|^2 + |b|^2 <= p0 (1-p0)
  bool within_bcn2 = false;       // |a| + |b| <= sqrt(p0 (1-p0))
};

// (|a|, |b|) classification grid for fixed p0. Cells are stored row-major
// with the a index outer and the b index inner; both axes run over
// resolution evenly spaced points on [0, sqrt(p0 (1-p0)) * 1.05].
struct RegionGrid {
  double p0 = 0.0;
  Eigen::Index resolution = 0;
  double cell_width = 0.0;
  std::vector<RegionCell> cells;

  const RegionCell& at(Eigen::Index ia, Eigen::Index ib) const {
    return cells[static_cast<std::size_t>(ia * resolution + ib)];
  }
};

namespace detail {

inline double qutrit_min_eig(double p0, double p1, Complex a, Complex b, Complex c) {
  Eigen::Matrix3cd m;
  m << Complex(p0), a, b,  //
      std::conj(a), Complex(p1), c,  //
      std::conj(b), std::conj(c), Complex(1.0 - p0 - p1);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3cd> solver;
  solver.computeDirect(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

struct CompletionResult {
  double p1 = 0.0;
  double c = 0.0;
  double min_eig = -std::numeric_limits<double>::infinity();
};

// Maximize the minimum eigenvalue over the completion (p1, c). The matrix is
// affine in (p1, c) and lambda_min is concave in the matrix, so each line
// search faces a unimodal objective. stop_above short-circuits once a value
// clears the threshold (any evaluation >= 0 is already a PSD witness).
inline CompletionResult best_completion(double p0, double a_abs, double b_abs,
                                        int search_budget, double stop_above) {
  auto c_range = [&](double p1) {
    return std::sqrt(std::max(p1 * (1.0 - p0 - p1), 0.0));
  };
  auto best_over_c = [&](double p1) {
    const double cmax = c_range(p1);
    if (cmax == 0.0) return detail::qutrit_min_eig(p0, p1, a_abs, b_abs, 0.0);
    return golden_section_max(
               [&](double c) { return detail::qutrit_min_eig(p0, p1, a_abs, b_abs, c); },
               -cmax, cmax, search_budget, stop_above)
        .value;
  };
  const GoldenResult outer =
      golden_section_max(best_over_c, 0.0, 1.0 - p0, search_budget, stop_above);
  CompletionResult r;
  r.p1 = outer.x;
  const double cmax = c_range(r.p1);
  const GoldenResult inner = golden_section_max(
      [&](double c) { return detail::qutrit_min_eig(p0, r.p1, a_abs, b_abs, c); }, -cmax,
      cmax, search_budget, stop_above);
  r.c = inner.x;
  r.min_eig = inner.value;
  return r;
}

}  // namespace detail

// PSD-feasibility oracle for the qutrit anchor row: does any completion
// (p1, c) make the matrix above positive semidefinite? Diagonal-unitary
// conjugation absorbs the phases of a and b, and by the conjugation symmetry
// of the spectrum the optimal c can be taken real, so the search reduces to
// nested 1-D golden-section maximizations of the minimum eigenvalue: p1 over
// [0, 1-p0] and real c over [-sqrt(p1 p2), sqrt(p1 p2)] inside. search_budget
// is the golden-section iteration count per line search. The real-c reduction
// is additionally guarded by sampling eight complex phases of c at the
// optimum before a point is declared infeasible.
inline bool qutrit_feasible(double p0, double a_abs, double b_abs, int search_budget = 64) {
  if (p0 < -1e-12 || p0 > 1.0 + 1e-12)
    throw InvalidProbability("qutrit_feasible: p0 = " + std::to_string(p0));
  if (a_abs < 0.0 || b_abs < 0.0)
    throw InvalidProbability("qutrit_feasible: |a| and |b| must be non-negative");
  p0 = std::clamp(p0, 0.0, 1.0);

  constexpr double accept = 0.0;
  constexpr double feasibility_margin = -1e-9;

  const detail::CompletionResult found =
      detail::best_completion(p0, a_abs, b_abs, search_budget, accept);
  double best = found.min_eig;

  if (best < accept) {
    const double cmax = std::sqrt(std::max(found.p1 * (1.0 - p0 - found.p1), 0.0));
    for (int k = 1; k < 8 && best < accept; ++k) {
      const double theta = 2.0 * M_PI * static_cast<double>(k) / 8.0;
      const Complex dir = std::exp(Complex(0.0, theta));
      const GoldenResult phased = golden_section_max(
          [&](double mag) {
            return detail::qutrit_min_eig(p0, found.p1, a_abs, b_abs, mag * dir);
          },
          0.0, cmax, search_budget, accept);
      best = std::max(best, phased.value);
    }
  }
  return best >= feasibility_margin;
}

// Best completion found by the same search, as an explicit QutritState
// witness together with its minimum eigenvalue. A witness with
// min_eig >= -1e-9 certifies feasibility constructively.
struct QutritWitness {
  QutritState state;
  double min_eig = 0.0;
  bool feasible = false;
};

inline QutritWitness qutrit_witness(double p0, double a_abs, double b_abs,
                                    int search_budget = 64) {
  if (p0 < -1e-12 || p0 > 1.0 + 1e-12)
    throw InvalidProbability("qutrit_witness: p0 = " + std::to_string(p0));
  if (a_abs < 0.0 || b_abs < 0.0)
    throw InvalidProbability("qutrit_witness: |a| and |b| must be non-negative");
  p0 = std::clamp(p0, 0.0, 1.0);
  const detail::CompletionResult found = detail::best_completion(
      p0, a_abs, b_abs, search_budget, std::numeric_limits<double>::infinity());
  QutritWitness w;
  w.state.p0 = p0;
  w.state.p1 = found.p1;
  w.state.a = a_abs;
  w.state.b = b_abs;
  w.state.c = found.c;
  w.min_eig = found.min_eig;
  w.feasible = found.min_eig >= -1e-9;
  return w;
}

inline RegionGrid region_scan(double p0, Eigen::Index resolution, int search_budget = 64,
                              int threads = 1) {
  if (resolution < 2)
    throw InvalidConfig("region_scan: resolution must be >= 2");
  if (p0 < -1e-12 || p0 > 1.0 + 1e-12)
    throw InvalidProbability("region_scan: p0 = " + std::to_string(p0));
  p0 = std::clamp(p0, 0.0, 1.0);

  const double q = p0 * (1.0 - p0);
  const double radius = std::sqrt(q);
  const double span = radius * 1.05;
  const double slack = tol::bound_slack;

  RegionGrid grid;
  grid.p0 = p0;
  grid.resolution = resolution;
  grid.cell_width = span / static_cast<double>(resolution - 1);
  grid.cells.resize(static_cast<std::size_t>(resolution * resolution));

  parallel_for_index(resolution * resolution, threads, [&](std::int64_t idx) {
    const Eigen::Index ia = static_cast<Eigen::Index>(idx) / resolution;
    const Eigen::Index ib = static_cast<Eigen::Index>(idx) % resolution;
    RegionCell cell;
    cell.a_abs = grid.cell_width * static_cast<double>(ia);
    cell.b_abs = grid.cell_width * static_cast<double>(ib);
    cell.feasible = qutrit_feasible(p0, cell.a_abs, cell.b_abs, search_budget);
    cell.within_linear = cell.a_abs + cell.b_abs <= std::sqrt(2.0) * radius + slack;
    cell.within_quadratic =
        cell.a_abs * cell.a_abs + cell.b_abs * cell.b_abs <= q + slack;
    cell.within_bcn2 = cell.a_abs + cell.b_abs <= radius + slack;
    grid.cells[static_cast<std::size_t>(idx)] = cell;
  });
  return grid;
}

// Maximum of the entropic bound [(N-1)p + 1] h2(N p / ((N-1)p + 1)) over the
// anchor weight: coarse grid then golden-section refinement down to a 1e-9
// bracket. Returns (p0_star, value) with the value re-evaluated through
// bound_evaluate at p0_star.
inline std::pair<double, double> entropic_max(Eigen::Index n_other,
                                              Eigen::Index coarse_points = 10000) {
  if (n_other < 1) throw DimensionMismatch("entropic_max: N must be >= 1");
  auto objective = [&](double p) { return bound_evaluate(BoundKind::Entropic, p, n_other); };

  double best_x = 0.0, best_v = objective(0.0);
  const double step = 1.0 / static_cast<double>(coarse_points);
  for (Eigen::Index i = 1; i <= coarse_points; ++i) {
    const double x = static_cast<double>(i) * step;
    const double v = objective(x);
    if (v > best_v) {
      best_v = v;
      best_x = x;
    }
  }

  double lo = std::max(0.0, best_x - step);
  double hi = std::min(1.0, best_x + step);
  // Shrink the bracket below 1e-9; each golden iteration contracts by 0.618.
  const int iterations = 60;
  const GoldenResult refined = golden_section_max(objective, lo, hi, iterations);
  const double p0_star = refined.x;
  return {p0_star, objective(p0_star)};
}

}  // namespace blockcoh

#endif  // BLOCKCOH_QUTRIT_REGION_HPP
