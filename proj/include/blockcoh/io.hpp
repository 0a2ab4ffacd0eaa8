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

#ifndef BLOCKCOH_IO_HPP
#define BLOCKCOH_IO_HPP

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockcoh/campaign.hpp"
#include "blockcoh/detection.hpp"
#include "blockcoh/qutrit_region.hpp"

namespace blockcoh {

// All machine-readable numbers are printed with 12 significant digits so
// repeated runs diff cleanly.
inline std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

// ---------------------------------------------------------------------------
// State files. The on-disk format is JSON with two fields:
//   dim    -- integer dimension
//   matrix -- dim rows, each of dim entries, each entry a pair [re, im]
// Writing is canonical (fixed layout, 12 significant digits), so a
// write/read/write round trip is byte identical.

inline ComplexMatrix parse_state_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("matrix"))
    throw ParseError("state file: expected an object with fields dim and matrix");
  if (!doc["dim"].is_number_integer())
    throw ParseError("state file: dim must be an integer");
  const Eigen::Index dim = doc["dim"].get<Eigen::Index>();
  if (dim < 1) throw ParseError("state file: dim must be >= 1");
  const auto& rows = doc["matrix"];
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim)
    throw ParseError("state file: matrix must have dim rows");
  ComplexMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim)
      throw ParseError("state file: row " + std::to_string(i) + " must have dim entries");
    for (Eigen::Index j = 0; j < dim; ++j) {
      const auto& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number())
        throw ParseError("state file: entry (" + std::to_string(i) + "," +
                         std::to_string(j) + ") must be a [re, im] pair");
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  return m;
}

inline ComplexMatrix read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

inline std::string format_state_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("state file: matrix must be square");
  std::string out;
  out += "{\n  \"dim\": " + std::to_string(m.rows()) + ",\n  \"matrix\": [\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out += "    [";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += "[" + fmt_double(m(i, j).real()) + ", " + fmt_double(m(i, j).imag()) + "]";
    }
    out += (i + 1 < m.rows()) ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

inline void write_state_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << format_state_json(m);
}

// Partition spec: comma-separated dimensions, e.g. "1,2,3".
inline SubspacePartition parse_partition(const std::string& text) {
  std::vector<Eigen::Index> dims;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(token, &used);
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
        ++used;
      if (used != token.size()) throw std::invalid_argument(token);
      dims.push_back(static_cast<Eigen::Index>(v));
    } catch (const std::exception&) {
      throw ParseError("partition: cannot parse '" + token + "' in '" + text + "'");
    }
  }
  if (dims.empty()) throw ParseError("partition: empty spec");
  try {
    return SubspacePartition(dims);
  } catch (const Error& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
}

inline std::vector<Eigen::Index> parse_index_list(const std::string& text,
                                                  const char* what) {
  std::vector<Eigen::Index> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(static_cast<Eigen::Index>(std::stol(token)));
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": cannot parse '" + token + "'");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + ": empty list");
  return out;
}

inline std::vector<double> parse_double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      out.push_back(std::stod(token));
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": cannot parse '" + token + "'");
    }
  }
  if (out.empty()) throw ParseError(std::string(what) + ": empty list");
  return out;
}

// ---------------------------------------------------------------------------
// Report emission. "kv" is the machine format: one key=value pair per line,
// stable names and order, booleans as 0/1. "human" is an aligned table.

inline void emit_report_kv(const CoherenceReport& r, std::ostream& out) {
  out << "anchor=" << r.anchor << '\n'
      << "n_other=" << r.n_other << '\n'
      << "p_anchor=" << fmt_double(r.p_anchor) << '\n'
      << "c_tr=" << fmt_double(r.c_tr) << '\n'
      << "c_tr_sq=" << fmt_double(r.c_tr_sq) << '\n'
      << "c_hs_sq=" << fmt_double(r.c_hs_sq) << '\n'
      << "rel_ent_sum=" << fmt_double(r.rel_ent_sum) << '\n'
      << "bound_tr=" << fmt_double(r.bound_tr) << '\n'
      << "bound_tr_sq=" << fmt_double(r.bound_tr_sq) << '\n'
      << "bound_hs_sq=" << fmt_double(r.bound_hs_sq) << '\n'
      << "bound_entropic=" << fmt_double(r.bound_entropic) << '\n'
      << "slack_tr=" << fmt_double(r.slack_tr) << '\n'
      << "slack_tr_sq=" << fmt_double(r.slack_tr_sq) << '\n'
      << "slack_hs_sq=" << fmt_double(r.slack_hs_sq) << '\n'
      << "slack_entropic=" << fmt_double(r.slack_entropic) << '\n'
      << "violated_tr=" << (r.violated_tr ? 1 : 0) << '\n'
      << "violated_tr_sq=" << (r.violated_tr_sq ? 1 : 0) << '\n'
      << "violated_hs_sq=" << (r.violated_hs_sq ? 1 : 0) << '\n'
      << "violated_entropic=" << (r.violated_entropic ? 1 : 0) << '\n'
      << "tolerance=" << fmt_double(r.tolerance) << '\n';
}

inline void emit_report_human(const CoherenceReport& r, std::ostream& out) {
  char line[160];
  out << "block-coherence report: anchor " << r.anchor << ", N = " << r.n_other
      << ", p_anchor = " << fmt_double(r.p_anchor) << "\n";
  std::snprintf(line, sizeof(line), "  %-12s %16s %16s %16s  %s\n", "quantifier", "value",
                "bound", "slack", "status");
  out << line;
  auto row = [&](const char* name, double value, double bound, double slack,
                 bool violated) {
    std::snprintf(line, sizeof(line), "  %-12s %16.10g %16.10g %16.10g  %s\n", name, value,
                  bound, slack, violated ? "VIOLATED" : "ok");
    out << line;
  };
  row("c_tr", r.c_tr, r.bound_tr, r.slack_tr, r.violated_tr);
  row("c_tr_sq", r.c_tr_sq, r.bound_tr_sq, r.slack_tr_sq, r.violated_tr_sq);
  row("c_hs_sq", r.c_hs_sq, r.bound_hs_sq, r.slack_hs_sq, r.violated_hs_sq);
  row("rel_ent_sum", r.rel_ent_sum, r.bound_entropic, r.slack_entropic,
      r.violated_entropic);
}

inline void emit_report(const CoherenceReport& r, const std::string& format,
                        std::ostream& out) {
  if (format == "kv")
    emit_report_kv(r, out);
  else
    emit_report_human(r, out);
}

// Certificates share the report format and append certified_k / genuine.
inline void emit_certificate(const BCNCertificate& cert, const CoherenceReport& report,
                             const std::string& format, std::ostream& out) {
  if (format == "kv") {
    emit_report_kv(report, out);
    out << "certified_k=" << cert.certified_k << '\n'
        << "genuine=" << (cert.genuine ? 1 : 0) << '\n';
  } else {
    emit_report_human(report, out);
    out << "  certified BCN lower bound: " << cert.certified_k << " of " << cert.n_blocks
        << " blocks" << (cert.genuine ? " (genuine multisubspace coherence)" : "") << "\n";
  }
}

// wall_time is deliberately absent from the kv format: machine output must
// be byte-identical for identical config and seed.
inline void emit_campaign_summary(const CampaignSummary& s, const std::string& format,
                                  std::ostream& out) {
  if (format == "kv") {
    out << "samples_run=" << s.samples_run << '\n'
        << "violations_tr=" << s.tr.violations << '\n'
        << "violations_tr_sq=" << s.tr_sq.violations << '\n'
        << "violations_hs_sq=" << s.hs_sq.violations << '\n'
        << "violations_entropic=" << s.entropic.violations << '\n'
        << "min_slack_tr=" << fmt_double(s.tr.min_slack) << '\n'
        << "min_slack_tr_sq=" << fmt_double(s.tr_sq.min_slack) << '\n'
        << "min_slack_hs_sq=" << fmt_double(s.hs_sq.min_slack) << '\n'
        << "min_slack_entropic=" << fmt_double(s.entropic.min_slack) << '\n'
        << "max_certified_k=" << s.max_certified_k << '\n';
    return;
  }
  out << "campaign: " << s.samples_run << " samples in " << fmt_double(s.wall_time_s)
      << " s\n";
  char line[160];
  std::snprintf(line, sizeof(line), "  %-12s %12s %16s\n", "bound", "violations",
                "min slack");
  out << line;
  auto row = [&](const char* name, const BoundTally& t) {
    std::snprintf(line, sizeof(line), "  %-12s %12lld %16.10g\n", name,
                  static_cast<long long>(t.violations), t.min_slack);
    out << line;
  };
  row("tr", s.tr);
  row("tr_sq", s.tr_sq);
  row("hs_sq", s.hs_sq);
  row("entropic", s.entropic);
  out << "  max certified BCN lower bound: " << s.max_certified_k << "\n";
}

// Region CSV: one row per cell, a index outer, b index inner; booleans as
// 0/1, floats with 12 significant digits.
inline void emit_region_csv(const RegionGrid& grid, std::ostream& out) {
  out << "p0,a_abs,b_abs,feasible,within_linear,within_quadratic,within_bcn2\n";
  for (const RegionCell& c : grid.cells) {
    out << fmt_double(grid.p0) << ',' << fmt_double(c.a_abs) << ',' << fmt_double(c.b_abs)
        << ',' << (c.feasible ? 1 : 0) << ',' << (c.within_linear ? 1 : 0) << ','
        << (c.within_quadratic ? 1 : 0) << ',' << (c.within_bcn2 ? 1 : 0) << '\n';
  }
}

}  // namespace blockcoh

#endif  // BLOCKCOH_IO_HPP
