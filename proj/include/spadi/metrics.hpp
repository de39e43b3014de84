// include/spadi/metrics.hpp

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

#ifndef SPADI_METRICS_HPP
#define SPADI_METRICS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "spadi/config.hpp"
#include "spadi/signal.hpp"

namespace spadi {

/// Signal to spatial distortion ratio in dB, clamped to [-cap, +cap].
/// `ref` is indexed through `idx` (the global validity set); `e_spat` is the
/// already-restricted spatial error and is consumed over its full extent.
/// A zero error energy short-circuits to +cap; zero reference energy throws
/// SilentReference.
double ssr(const MultichannelSignal& ref, const MultichannelSignal& e_spat,
           SampleRange idx, double cap);

/// Signal to residual distortion ratio in dB, clamped to [-cap, +cap].
/// `projected` is indexed through `idx`; pass the full extent when the
/// projected signal is already restricted to the validity set. Zero residual
/// energy short-circuits to +cap; zero projected energy throws
/// SilentProjection.
double srr(const MultichannelSignal& projected,
           const MultichannelSignal& e_resid, SampleRange idx, double cap);

enum class FrameStatus { ok, silent_skip, error };

std::string to_string(FrameStatus s);

struct FrameScores {
  std::size_t frame_index = 0;
  std::size_t start_sample = 0;
  double ssr_db = 0.0;  // NaN unless status == ok
  double srr_db = 0.0;  // NaN unless status == ok
  FrameStatus status = FrameStatus::ok;
  std::string message;  // diagnostic for non-ok frames
};

struct EvalReport {
  std::vector<FrameScores> frames;
  double ssr_aggregate_db = 0.0;  // NaN when no frame is ok
  double srr_aggregate_db = 0.0;
  EvalConfig config;
  int sample_rate = 0;
  std::size_t channels = 0;
  std::size_t num_samples = 0;
};

/// Evaluates one frame: prune -> shifts -> gains -> projection -> errors ->
/// SSR/SRR. Silent frames (either signal entirely below the silence
/// threshold, or a ratio with a zero numerator) come back as silent_skip;
/// any other failure is reported as status error with a diagnostic message.
FrameScores evaluate_frame(const MultichannelSignal& test,
                           const MultichannelSignal& ref,
                           const EvalConfig& cfg);

/// Framewise evaluation over rectangular frames starting at k * hop for
/// k = 0 .. floor((N - frame) / hop); a trailing partial frame is discarded.
/// Aggregates (median or mean per cfg) are taken over ok frames only.
/// Throws SignalTooShort when the signal holds less than one frame.
EvalReport evaluate(const MultichannelSignal& test,
                    const MultichannelSignal& ref, const EvalConfig& cfg);

/// Median of a non-empty vector (mean of the middle pair for even sizes).
double median(std::vector<double> values);

}  // namespace spadi

#endif  // SPADI_METRICS_HPP
