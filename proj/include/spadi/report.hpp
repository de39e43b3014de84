// include/spadi/report.hpp

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

#ifndef SPADI_REPORT_HPP
#define SPADI_REPORT_HPP

#include <string>

#include "spadi/metrics.hpp"
#include "spadi/wav.hpp"

namespace spadi {

/// File metadata echoed into reports.
struct SignalMeta {
  std::string path;
  WavMeta meta;
};

/// JSON document with the fixed schema
///   {config, reference_meta, estimate_meta, frames: [...],
///    aggregate: {ssr_db, srr_db}}.
/// Non-finite scores serialize as null.
std::string report_json(const EvalReport& report, const SignalMeta& reference,
                        const SignalMeta& estimate);

/// CSV with header frame_index,start_sample,ssr_db,srr_db,status, one row per
/// frame, and a trailing row labeled "aggregate". Scores of non-ok frames are
/// left empty.
std::string report_csv(const EvalReport& report);

/// Fixed 6-decimal formatting used in CSV output; empty for non-finite.
std::string format_db(double value);

}  // namespace spadi

#endif  // SPADI_REPORT_HPP
