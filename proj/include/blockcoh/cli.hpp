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

#ifndef BLOCKCOH_CLI_HPP
#define BLOCKCOH_CLI_HPP

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "blockcoh/io.hpp"

// Command handlers behind the CLI. Exit code contract, shared by every
// subcommand:
//   0  success and no bound violated
//   1  bound violated or the input is not a valid state
//   2  parse or configuration error
// Handlers write to the supplied streams so they are directly testable.

namespace blockcoh::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitParse = 2;

// Anchor spec is a block index or "all" (meaning every anchor).
inline std::optional<Eigen::Index> parse_anchor(const std::string& text) {
  if (text == "all") return std::nullopt;
  try {
    return static_cast<Eigen::Index>(std::stol(text));
  } catch (const std::exception&) {
    throw ParseError("anchor: expected a block index or 'all', got '" + text + "'");
  }
}

struct AnalyzeOptions {
  std::string state_path;
  std::string partition;
  std::string anchor = "0";
  double tolerance = tol::bound_slack;
  // State validation keeps its own 1e-10 default; the CLI overrides it only
  // when --tolerance is given explicitly.
  double validation_tolerance = 1e-10;
  std::string format = "human";
};

inline int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
  ComplexMatrix m;
  std::optional<SubspacePartition> part;
  std::optional<Eigen::Index> anchor;
  try {
    m = read_state_file(opt.state_path);
    part.emplace(parse_partition(opt.partition));
    anchor = parse_anchor(opt.anchor);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
  try {
    const DensityMatrix rho = validate_density(m, opt.validation_tolerance);
    bool violated = false;
    const Eigen::Index lo = anchor ? *anchor : 0;
    const Eigen::Index hi = anchor ? *anchor : part->blocks() - 1;
    for (Eigen::Index a = lo; a <= hi; ++a) {
      const CoherenceReport report = analyze(rho, *part, a, opt.tolerance);
      emit_report(report, opt.format, out);
      violated = violated || report.any_violation();
    }
    return violated ? kExitViolation : kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitViolation;
  }
}

struct CertifyOptions {
  std::string state_path;
  std::string partition;
  std::string anchor = "all";
  double tolerance = tol::bound_slack;
  double validation_tolerance = 1e-10;
  std::string format = "human";
};

inline int cmd_certify(const CertifyOptions& opt, std::ostream& out, std::ostream& err) {
  ComplexMatrix m;
  std::optional<SubspacePartition> part;
  std::optional<Eigen::Index> anchor;
  try {
    m = read_state_file(opt.state_path);
    part.emplace(parse_partition(opt.partition));
    anchor = parse_anchor(opt.anchor);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
  try {
    const DensityMatrix rho = validate_density(m, opt.validation_tolerance);
    const BCNCertificate cert = anchor
                                    ? certify_bcn(rho, *part, *anchor, opt.tolerance)
                                    : certify_bcn_all_anchors(rho, *part, opt.tolerance);
    const CoherenceReport report = analyze(rho, *part, cert.anchor, opt.tolerance);
    emit_certificate(cert, report, opt.format, out);
    return kExitOk;  // the certificate is informational on valid states
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitViolation;
  }
}

struct SampleOptions {
  std::string partition;
  std::int64_t samples = 0;
  std::string ranks;  // comma-separated; "full" allowed; empty -> 1,2,full
  std::uint64_t seed = 0;
  double tolerance = tol::bound_slack;
  std::string anchor = "0";
  int threads = 0;  // 0 -> hardware
  std::string format = "human";
};

inline std::vector<Eigen::Index> parse_ranks(const std::string& text, Eigen::Index dim) {
  std::vector<Eigen::Index> ranks;
  if (text.empty()) {
    ranks = {1, 2, dim};
  } else {
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (token == "full") {
        ranks.push_back(dim);
        continue;
      }
      try {
        ranks.push_back(static_cast<Eigen::Index>(std::stol(token)));
      } catch (const std::exception&) {
        throw ParseError("ranks: cannot parse '" + token + "'");
      }
    }
  }
  // drop duplicates and ranks beyond the dimension that only arise from the
  // default list on small systems
  std::vector<Eigen::Index> out;
  for (Eigen::Index r : ranks) {
    if (r > dim && text.empty()) continue;
    bool seen = false;
    for (Eigen::Index s : out) seen = seen || (s == r);
    if (!seen) out.push_back(r);
  }
  return out;
}

inline int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
  CampaignConfig cfg;
  try {
    const SubspacePartition part = parse_partition(opt.partition);
    cfg.dims = part.dims();
    cfg.samples = opt.samples;
    cfg.ranks = parse_ranks(opt.ranks, part.total_dim());
    cfg.seed = opt.seed;
    cfg.tolerance = opt.tolerance;
    const std::optional<Eigen::Index> anchor = parse_anchor(opt.anchor);
    cfg.anchor = anchor ? *anchor : -1;
    cfg.threads = opt.threads > 0 ? opt.threads : hardware_threads();
    validate_config(cfg);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
  const CampaignSummary summary = run_campaign(cfg);
  emit_campaign_summary(summary, opt.format, out);
  return summary.any_violation() ? kExitViolation : kExitOk;
}

struct RegionOptions {
  double p0 = 0.5;
  Eigen::Index resolution = 0;
  std::string output;  // empty or "-" -> stdout
  int search_budget = 64;
  int threads = 0;
};

inline int cmd_region(const RegionOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const int threads = opt.threads > 0 ? opt.threads : hardware_threads();
    const RegionGrid grid = region_scan(opt.p0, opt.resolution, opt.search_budget, threads);
    if (opt.output.empty() || opt.output == "-") {
      emit_region_csv(grid, out);
    } else {
      std::ofstream file(opt.output);
      if (!file) throw ParseError("cannot open output file: " + opt.output);
      emit_region_csv(grid, file);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
}

struct SaturateOptions {
  std::string kind;  // "tensor" or "pure"
  std::string output;
  // tensor parameters
  double p0 = 0.0;
  Eigen::Index n_other = 0;
  Eigen::Index block_dim = 1;
  Eigen::Index rank = 0;  // 0 -> maximally mixed normalized block
  std::uint64_t seed = 0;
  // pure parameters
  std::string weights;  // q_0,...,q_N
  std::string dims;     // block dimensions, default all 1
  std::string phases;   // phi_01,...,phi_0N, default all 0
  bool haar_vectors = false;
};

inline int cmd_saturate(const SaturateOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.output.empty()) throw ParseError("saturate: --output is required");
    if (opt.kind == "tensor") {
      if (opt.n_other < 1) throw ParseError("saturate tensor: --blocks N must be >= 1");
      if (opt.block_dim < 1)
        throw ParseError("saturate tensor: --block-dim must be >= 1");
      ComplexMatrix rho00_hat;
      if (opt.rank > 0) {
        rho00_hat = ginibre_mixed(opt.block_dim, opt.rank, opt.seed).matrix();
      } else {
        rho00_hat = ComplexMatrix::Identity(opt.block_dim, opt.block_dim) /
                    static_cast<double>(opt.block_dim);
      }
      const auto [state, part] = tensor_saturating_state(opt.p0 * rho00_hat, opt.n_other);
      write_state_file(opt.output, state.matrix());
      out << "partition=" << part.to_string() << '\n' << "output=" << opt.output << '\n';
      return kExitOk;
    }
    if (opt.kind == "pure") {
      const std::vector<double> w = parse_double_list(opt.weights, "weights");
      const Eigen::Index nb = static_cast<Eigen::Index>(w.size());
      std::vector<Eigen::Index> dims(static_cast<std::size_t>(nb), 1);
      if (!opt.dims.empty()) dims = parse_index_list(opt.dims, "dims");
      if (static_cast<Eigen::Index>(dims.size()) != nb)
        throw ParseError("saturate pure: need one dimension per weight");
      RealVector weights(nb);
      for (Eigen::Index i = 0; i < nb; ++i) weights[i] = w[static_cast<std::size_t>(i)];
      RealVector phases = RealVector::Zero(nb - 1);
      if (!opt.phases.empty()) {
        const std::vector<double> ph = parse_double_list(opt.phases, "phases");
        if (static_cast<Eigen::Index>(ph.size()) != nb - 1)
          throw ParseError("saturate pure: need N = " + std::to_string(nb - 1) +
                           " phases");
        for (Eigen::Index i = 0; i + 1 < nb; ++i) phases[i] = ph[static_cast<std::size_t>(i)];
      }
      std::vector<ComplexVector> vectors;
      vectors.reserve(static_cast<std::size_t>(nb));
      for (Eigen::Index i = 0; i < nb; ++i) {
        const Eigen::Index d = dims[static_cast<std::size_t>(i)];
        if (opt.haar_vectors) {
          vectors.push_back(haar_pure(d, opt.seed + static_cast<std::uint64_t>(i))
                                .amplitudes());
        } else {
          ComplexVector v = ComplexVector::Zero(d);
          v[0] = 1.0;
          vectors.push_back(v);
        }
      }
      const PureState psi = pure_saturating_state(weights, vectors, phases);
      write_state_file(opt.output, psi.density().matrix());
      SubspacePartition part(dims);
      out << "partition=" << part.to_string() << '\n' << "output=" << opt.output << '\n';
      return kExitOk;
    }
    throw ParseError("saturate: kind must be 'tensor' or 'pure'");
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitParse;
  }
}

}  // namespace blockcoh::cli

#endif  // BLOCKCOH_CLI_HPP
