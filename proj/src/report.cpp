// src/report.cpp

// Copyright 2026  The spadi authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "spadi/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace spadi {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json meta_json(const SignalMeta& meta) {
  return ordered_json{{"path", meta.path},
                      {"sample_rate", meta.meta.sample_rate},
                      {"channels", meta.meta.channels},
                      {"format", to_string(meta.meta.format)},
                      {"num_samples", meta.meta.num_samples}};
}

ordered_json score_or_null(double value) {
  if (!std::isfinite(value)) return nullptr;
  return value;
}

}  // namespace

std::string format_db(double value) {
  if (!std::isfinite(value)) return "";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  return buf;
}

std::string report_json(const EvalReport& report, const SignalMeta& reference,
                        const SignalMeta& estimate) {
  ordered_json config{
      {"frame_seconds", report.config.frame_seconds},
      {"hop_fraction", report.config.hop_fraction},
      {"max_shift_ms", report.config.max_shift_ms},
      {"silence_eps_rel", report.config.silence_eps_rel},
      {"db_cap", report.config.db_cap},
      {"lowpass_cutoff_fraction",
       report.config.lowpass_cutoff_fraction
           ? ordered_json(*report.config.lowpass_cutoff_fraction)
           : ordered_json(nullptr)},
      {"aggregate", to_string(report.config.aggregate)},
  };

  ordered_json frames = ordered_json::array();
  for (const auto& f : report.frames) {
    frames.push_back(ordered_json{{"frame_index", f.frame_index},
                                  {"start_sample", f.start_sample},
                                  {"ssr_db", score_or_null(f.ssr_db)},
                                  {"srr_db", score_or_null(f.srr_db)},
                                  {"status", to_string(f.status)}});
  }

  ordered_json doc{
      {"config", config},
      {"reference_meta", meta_json(reference)},
      {"estimate_meta", meta_json(estimate)},
      {"frames", frames},
      {"aggregate",
       ordered_json{{"ssr_db", score_or_null(report.ssr_aggregate_db)},
                    {"srr_db", score_or_null(report.srr_aggregate_db)}}},
  };
  return doc.dump(2) + "\n";
}

std::string report_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "frame_index,start_sample,ssr_db,srr_db,status\n";
  for (const auto& f : report.frames) {
    out << f.frame_index << ',' << f.start_sample << ',';
    if (f.status == FrameStatus::ok)
      out << format_db(f.ssr_db) << ',' << format_db(f.srr_db);
    else
      out << ',';
    out << ',' << to_string(f.status) << '\n';
  }
  out << "aggregate,," << format_db(report.ssr_aggregate_db) << ','
      << format_db(report.srr_aggregate_db) << ",\n";
  return out.str();
}

}  // namespace spadi
