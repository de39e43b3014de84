// src/metrics.cpp

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

#include "spadi/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "spadi/gain_solver.hpp"
#include "spadi/projection.hpp"

namespace spadi {

std::string to_string(Aggregate a) {
  return a == Aggregate::median ? "median" : "mean";
}

std::string to_string(FrameStatus s) {
  switch (s) {
    case FrameStatus::ok: return "ok";
    case FrameStatus::silent_skip: return "silent_skip";
    case FrameStatus::error: return "error";
  }
  return "error";
}

namespace {

double clamped_ratio_db(double numerator, double denominator, double cap) {
  // A vanishing error short-circuits to +cap without evaluating the log.
  if (denominator == 0.0) return cap;
  const double value = 10.0 * std::log10(numerator / denominator);
  return std::clamp(value, -cap, cap);
}

}  // namespace

double ssr(const MultichannelSignal& ref, const MultichannelSignal& e_spat,
           SampleRange idx, double cap) {
  const double ref_energy = energy(ref, idx);
  if (ref_energy == 0.0)
    throw SilentReference("reference energy is zero over the validity set");
  const double err_energy = energy(e_spat, {0, e_spat.num_samples()});
  return clamped_ratio_db(ref_energy, err_energy, cap);
}

double srr(const MultichannelSignal& projected,
           const MultichannelSignal& e_resid, SampleRange idx, double cap) {
  const double proj_energy = energy(projected, idx);
  if (proj_energy == 0.0)
    throw SilentProjection("projected energy is zero over the validity set");
  const double err_energy = energy(e_resid, {0, e_resid.num_samples()});
  return clamped_ratio_db(proj_energy, err_energy, cap);
}

FrameScores evaluate_frame(const MultichannelSignal& test,
                           const MultichannelSignal& ref,
                           const EvalConfig& cfg) {
  FrameScores scores;
  scores.ssr_db = std::numeric_limits<double>::quiet_NaN();
  scores.srr_db = std::numeric_limits<double>::quiet_NaN();
  try {
    const Decomposition dec = decompose(test, ref, cfg);
    const ErrorSignals errs = error_signals(test, ref, dec);
    scores.ssr_db = ssr(ref, errs.spatial, dec.sets.global, cfg.db_cap);
    scores.srr_db = srr(dec.projected, errs.residual,
                        {0, dec.projected.num_samples()}, cfg.db_cap);
    scores.status = FrameStatus::ok;
  } catch (const AllChannelsSilent& e) {
    scores.status = FrameStatus::silent_skip;
    scores.message = e.what();
  } catch (const SilentReference& e) {
    scores.status = FrameStatus::silent_skip;
    scores.message = e.what();
  } catch (const SilentProjection& e) {
    scores.status = FrameStatus::silent_skip;
    scores.message = e.what();
  } catch (const Error& e) {
    scores.status = FrameStatus::error;
    scores.message = e.what();
  }
  return scores;
}

double median(std::vector<double> values) {
  if (values.empty()) throw InvalidArgument("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return 0.5 * (values[mid - 1] + values[mid]);
}

EvalReport evaluate(const MultichannelSignal& test,
                    const MultichannelSignal& ref, const EvalConfig& cfg) {
  validate_signal(test);
  validate_signal(ref);
  if (test.num_channels() != ref.num_channels())
    throw ChannelCountMismatch("test/reference channel counts differ");
  if (test.num_samples() != ref.num_samples())
    throw LengthMismatch("test/reference lengths differ");
  if (test.sample_rate != ref.sample_rate)
    throw SampleRateMismatch("test/reference sample rates differ");
  if (cfg.hop_fraction <= 0.0 || cfg.hop_fraction > 1.0)
    throw InvalidArgument("hop fraction must be in (0, 1]");

  const std::size_t n = test.num_samples();
  const std::size_t frame = cfg.frame_samples(test.sample_rate);
  const std::size_t hop = cfg.hop_samples(test.sample_rate);
  const int k_max = cfg.max_shift_samples(test.sample_rate);
  if (frame < static_cast<std::size_t>(2 * k_max + 1))
    throw InvalidArgument("frame must hold at least 2K+1 samples");
  if (n < frame) throw SignalTooShort("signal is shorter than one frame");

  EvalReport report;
  report.config = cfg;
  report.sample_rate = test.sample_rate;
  report.channels = test.num_channels();
  report.num_samples = n;

  const std::size_t frame_count = (n - frame) / hop + 1;
  report.frames.reserve(frame_count);
  for (std::size_t k = 0; k < frame_count; ++k) {
    const std::size_t start = k * hop;
    FrameScores scores = evaluate_frame(slice(test, start, frame),
                                        slice(ref, start, frame), cfg);
    scores.frame_index = k;
    scores.start_sample = start;
    report.frames.push_back(std::move(scores));
  }

  std::vector<double> ssr_values;
  std::vector<double> srr_values;
  for (const auto& f : report.frames) {
    if (f.status != FrameStatus::ok) continue;
    ssr_values.push_back(f.ssr_db);
    srr_values.push_back(f.srr_db);
  }
  if (ssr_values.empty()) {
    report.ssr_aggregate_db = std::numeric_limits<double>::quiet_NaN();
    report.srr_aggregate_db = std::numeric_limits<double>::quiet_NaN();
  } else if (cfg.aggregate == Aggregate::median) {
    report.ssr_aggregate_db = median(ssr_values);
    report.srr_aggregate_db = median(srr_values);
  } else {
    report.ssr_aggregate_db =
        std::accumulate(ssr_values.begin(), ssr_values.end(), 0.0) /
        static_cast<double>(ssr_values.size());
    report.srr_aggregate_db =
        std::accumulate(srr_values.begin(), srr_values.end(), 0.0) /
        static_cast<double>(srr_values.size());
  }
  return report;
}

}  // namespace spadi
