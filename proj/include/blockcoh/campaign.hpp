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

#ifndef BLOCKCOH_CAMPAIGN_HPP
#define BLOCKCOH_CAMPAIGN_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <vector>

#include "blockcoh/detection.hpp"
#include "blockcoh/parallel.hpp"

namespace blockcoh {

// Random-state sampling campaign: draw Ginibre states of the configured
// ranks, analyze every requested anchor, and aggregate violation counts and
// extremal slacks. Per-sample seeds are seed + sample index, so the summary
// is identical for any thread count.
struct CampaignConfig {
  std::vector<Eigen::Index> dims;
  std::int64_t samples = 0;
  std::vector<Eigen::Index> ranks;  // cycled over samples
  std::uint64_t seed = 0;
  double tolerance = tol::bound_slack;
  Eigen::Index anchor = 0;  // -1 means every anchor
  int threads = 1;
};

struct BoundTally {
  std::int64_t violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();

  void absorb(double slack, double tolerance) {
    if (slack < min_slack) min_slack = slack;
    if (slack < -tolerance) ++violations;
  }
  void merge(const BoundTally& other) {
    violations += other.violations;
    if (other.min_slack < min_slack) min_slack = other.min_slack;
  }
};

struct CampaignSummary {
  std::int64_t samples_run = 0;
  BoundTally tr, tr_sq, hs_sq, entropic;
  Eigen::Index max_certified_k = 0;
  double wall_time_s = 0.0;

  bool any_violation() const {
    return tr.violations || tr_sq.violations || hs_sq.violations || entropic.violations;
  }
};

inline void validate_config(const CampaignConfig& cfg) {
  if (cfg.samples < 1) throw InvalidConfig("campaign: samples must be >= 1");
  if (cfg.dims.size() < 2) throw InvalidConfig("campaign: partition needs >= 2 blocks");
  Eigen::Index dim = 0;
  for (Eigen::Index d : cfg.dims) {
    if (d < 1) throw InvalidConfig("campaign: block dimensions must be >= 1");
    dim += d;
  }
  if (cfg.ranks.empty()) throw InvalidConfig("campaign: rank list is empty");
  for (Eigen::Index r : cfg.ranks)
    if (r < 1 || r > dim)
      throw InvalidConfig("campaign: rank " + std::to_string(r) + " outside [1, " +
                          std::to_string(dim) + "]");
  if (cfg.anchor < -1 || cfg.anchor >= static_cast<Eigen::Index>(cfg.dims.size()))
    throw InvalidConfig("campaign: anchor " + std::to_string(cfg.anchor) + " out of range");
}

inline CampaignSummary run_campaign(const CampaignConfig& cfg) {
  validate_config(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  const SubspacePartition part(cfg.dims);
  const Eigen::Index dim = part.total_dim();

  struct PerSample {
    double slack_tr, slack_tr_sq, slack_hs_sq, slack_entropic;
    Eigen::Index certified_k;
  };
  std::vector<PerSample> results(static_cast<std::size_t>(cfg.samples));

  parallel_for_index(cfg.samples, cfg.threads, [&](std::int64_t s) {
    const Eigen::Index rank = cfg.ranks[static_cast<std::size_t>(s) % cfg.ranks.size()];
    const DensityMatrix rho =
        ginibre_mixed(dim, rank, cfg.seed + static_cast<std::uint64_t>(s));
    PerSample r{std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity(),
                std::numeric_limits<double>::infinity(), 0};
    const Eigen::Index lo = cfg.anchor < 0 ? 0 : cfg.anchor;
    const Eigen::Index hi = cfg.anchor < 0 ? part.blocks() - 1 : cfg.anchor;
    for (Eigen::Index anchor = lo; anchor <= hi; ++anchor) {
      const CoherenceReport rep = analyze(rho, part, anchor, cfg.tolerance);
      r.slack_tr = std::min(r.slack_tr, rep.slack_tr);
      r.slack_tr_sq = std::min(r.slack_tr_sq, rep.slack_tr_sq);
      r.slack_hs_sq = std::min(r.slack_hs_sq, rep.slack_hs_sq);
      r.slack_entropic = std::min(r.slack_entropic, rep.slack_entropic);
    }
    r.certified_k = certify_bcn_all_anchors(rho, part, cfg.tolerance).certified_k;
    results[static_cast<std::size_t>(s)] = r;
  });

  CampaignSummary summary;
  summary.samples_run = cfg.samples;
  for (const PerSample& r : results) {
    summary.tr.absorb(r.slack_tr, cfg.tolerance);
    summary.tr_sq.absorb(r.slack_tr_sq, cfg.tolerance);
    summary.hs_sq.absorb(r.slack_hs_sq, cfg.tolerance);
    summary.entropic.absorb(r.slack_entropic, cfg.tolerance);
    summary.max_certified_k = std::max(summary.max_certified_k, r.certified_k);
  }
  summary.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return summary;
}

}  // namespace blockcoh

#endif  // BLOCKCOH_CAMPAIGN_HPP
