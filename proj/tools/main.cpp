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

#include <CLI11.hpp>
#include <iostream>

#include "blockcoh/cli.hpp"

namespace cli = blockcoh::cli;

int main(int argc, char** argv) {
  CLI::App app{"block-coherence quantifiers, trade-off bounds and certification"};
  app.require_subcommand(1);

  cli::AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand(
      "analyze", "compute the four coherence quantifiers and their bounds");
  analyze->add_option("--state", analyze_opt.state_path, "state file (JSON)")->required();
  analyze->add_option("--partition", analyze_opt.partition, "block dimensions, e.g. 1,2,3")
      ->required();
  analyze->add_option("--anchor", analyze_opt.anchor, "anchor block index or 'all'");
  auto* analyze_tol = analyze->add_option("--tolerance", analyze_opt.tolerance,
                                          "bound-violation and validation tolerance");
  analyze->add_option("--format", analyze_opt.format, "human|kv")
      ->check(CLI::IsMember({"human", "kv"}));

  cli::CertifyOptions certify_opt;
  auto* certify = app.add_subcommand(
      "certify", "certify a lower bound on the block-coherence number");
  certify->add_option("--state", certify_opt.state_path, "state file (JSON)")->required();
  certify->add_option("--partition", certify_opt.partition, "block dimensions")->required();
  certify->add_option("--anchor", certify_opt.anchor,
                      "anchor block index or 'all' (best certificate)");
  auto* certify_tol = certify->add_option("--tolerance", certify_opt.tolerance,
                                          "certification and validation tolerance");
  certify->add_option("--format", certify_opt.format, "human|kv")
      ->check(CLI::IsMember({"human", "kv"}));

  cli::SampleOptions sample_opt;
  auto* sample = app.add_subcommand(
      "sample", "random-state campaign checking every trade-off bound");
  sample->add_option("--partition", sample_opt.partition, "block dimensions")->required();
  sample->add_option("--samples", sample_opt.samples, "number of random states")
      ->required();
  sample->add_option("--ranks", sample_opt.ranks,
                     "ranks to draw, e.g. 1,2,full (default 1,2,full)");
  sample->add_option("--seed", sample_opt.seed, "base RNG seed");
  sample->add_option("--tolerance", sample_opt.tolerance, "bound-violation tolerance");
  sample->add_option("--anchor", sample_opt.anchor, "anchor block index or 'all'");
  sample->add_option("--threads", sample_opt.threads,
                     "worker threads (default: available parallelism)");
  sample->add_option("--format", sample_opt.format, "human|kv")
      ->check(CLI::IsMember({"human", "kv"}));

  cli::RegionOptions region_opt;
  auto* region = app.add_subcommand(
      "region", "scan the qutrit (|a|,|b|) feasibility region for fixed p0");
  region->add_option("--p0", region_opt.p0, "anchor weight")->required();
  region->add_option("--resolution", region_opt.resolution, "grid points per axis")
      ->required();
  region->add_option("--output", region_opt.output, "CSV path ('-' for stdout)");
  region->add_option("--search-budget", region_opt.search_budget,
                     "golden-section iterations per line search");
  region->add_option("--threads", region_opt.threads,
                     "worker threads (default: available parallelism)");

  cli::SaturateOptions saturate_opt;
  auto* saturate = app.add_subcommand(
      "saturate", "construct a bound-saturating state and write it to a file");
  saturate->add_option("--kind", saturate_opt.kind, "tensor|pure")->required();
  saturate->add_option("--output", saturate_opt.output, "state file to write")->required();
  saturate->add_option("--p0", saturate_opt.p0, "tensor: anchor weight in (0,1)");
  saturate->add_option("--blocks", saturate_opt.n_other, "tensor: number N of non-anchor blocks");
  saturate->add_option("--block-dim", saturate_opt.block_dim, "tensor: block dimension d0");
  saturate->add_option("--rank", saturate_opt.rank,
                       "tensor: draw a random rank-r normalized block (default: maximally mixed)");
  saturate->add_option("--seed", saturate_opt.seed, "RNG seed for random choices");
  saturate->add_option("--weights", saturate_opt.weights, "pure: block weights q0,...,qN");
  saturate->add_option("--dims", saturate_opt.dims, "pure: block dimensions (default all 1)");
  saturate->add_option("--phases", saturate_opt.phases, "pure: relative phases (default 0)");
  saturate->add_flag("--haar-vectors", saturate_opt.haar_vectors,
                     "pure: Haar-random block vectors instead of basis vectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitParse;
  }

  // an explicit --tolerance also loosens/tightens state validation
  if (analyze_tol->count() > 0) analyze_opt.validation_tolerance = analyze_opt.tolerance;
  if (certify_tol->count() > 0) certify_opt.validation_tolerance = certify_opt.tolerance;

  if (*analyze) return cli::cmd_analyze(analyze_opt, std::cout, std::cerr);
  if (*certify) return cli::cmd_certify(certify_opt, std::cout, std::cerr);
  if (*sample) return cli::cmd_sample(sample_opt, std::cout, std::cerr);
  if (*region) return cli::cmd_region(region_opt, std::cout, std::cerr);
  if (*saturate) return cli::cmd_saturate(saturate_opt, std::cout, std::cerr);
  return cli::kExitParse;
}
