// src/sweep.cpp

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

#include "spadi/sweep.hpp"

#include <cmath>
#include <sstream>

#include "spadi/degradations.hpp"
#include "spadi/report.hpp"
#include "spadi/theory.hpp"
#include "spadi/wav.hpp"

namespace spadi {

std::string to_string(SweepKind k) {
  switch (k) {
    case SweepKind::pan: return "pan";
    case SweepKind::delay: return "delay";
    case SweepKind::lowpass: return "lowpass";
    case SweepKind::noise: return "noise";
  }
  return "unknown";
}

SweepSpec default_sweep(SweepKind kind) {
  SweepSpec spec;
  spec.kind = kind;
  switch (kind) {
    case SweepKind::pan:
      for (int i = -4; i <= 4; ++i) spec.grid.push_back(0.25 * i);
      break;
    case SweepKind::delay:
      spec.grid = {1, 2, 4, 8, 16, 32};
      spec.pan_grid = {-0.5, 0.0, 0.5};
      break;
    case SweepKind::lowpass:
      spec.grid = {500, 1000, 2000, 4000, 8000};
      spec.test_pan = 0.5;
      break;
    case SweepKind::noise:
      spec.grid = {-24, -12, 0, 12, 24};
      break;
  }
  return spec;
}

MultichannelSignal make_sweep_source(const SweepSpec& spec) {
  switch (spec.source) {
    case SourceKind::white: {
      const auto n = static_cast<std::size_t>(
          std::lround(spec.duration_seconds * spec.sample_rate));
      return white_noise(1, n, spec.sample_rate, spec.seed);
    }
    case SourceKind::speech: {
      // Band-limited noise standing in for speech material: white noise
      // forward-backward lowpassed at 3.4 kHz (or 0.35 Nyquist when lower).
      const auto n = static_cast<std::size_t>(
          std::lround(spec.duration_seconds * spec.sample_rate));
      MultichannelSignal noise = white_noise(1, n, spec.sample_rate, spec.seed);
      LowpassSpec lp;
      lp.cutoff_hz = std::min(3400.0, 0.35 * spec.sample_rate);
      lp.sample_rate = spec.sample_rate;
      return filtfilt(noise, design_lowpass_fir(lp));
    }
    case SourceKind::file: {
      MultichannelSignal source = read_wav(spec.source_path);
      if (source.num_channels() != 1)
        throw InvalidArgument("sweep source file must be mono");
      return source;
    }
  }
  throw InvalidArgument("unknown source kind");
}

namespace {

void score_point(SweepPoint& point, const MultichannelSignal& test,
                 const MultichannelSignal& ref, const EvalConfig& cfg) {
  const EvalReport report = evaluate(test, ref, cfg);
  bool any_ok = false;
  for (const auto& f : report.frames) any_ok |= f.status == FrameStatus::ok;
  if (!any_ok) {
    point.status = report.frames.empty() ? FrameStatus::error
                                         : report.frames.front().status;
    point.message = report.frames.empty() ? "no frames evaluated"
                                          : report.frames.front().message;
    return;
  }
  point.status = FrameStatus::ok;
  point.ssr_db = report.ssr_aggregate_db;
  point.srr_db = report.srr_aggregate_db;
}

}  // namespace

SweepResult run_sweep(const SweepSpec& spec) {
  SweepResult result;
  result.kind = spec.kind;
  if (spec.grid.empty()) throw InvalidArgument("sweep grid is empty");

  const MultichannelSignal source = make_sweep_source(spec);
  const MultichannelSignal reference =
      pan_mono_to_stereo(source, spec.ref_pan);
  const double cap = spec.eval.db_cap;

  switch (spec.kind) {
    case SweepKind::pan: {
      for (const double p_hat : spec.grid) {
        SweepPoint point;
        point.param1 = p_hat;
        point.theory_ssr_db = theoretical_ssr_pan(spec.ref_pan, p_hat, cap);
        try {
          score_point(point, pan_mono_to_stereo(source, p_hat), reference,
                      spec.eval);
        } catch (const Error& e) {
          point.status = FrameStatus::error;
          point.message = e.what();
        }
        result.points.push_back(std::move(point));
      }
      break;
    }
    case SweepKind::delay: {
      const std::vector<double> pans =
          spec.pan_grid.empty() ? std::vector<double>{spec.test_pan}
                                : spec.pan_grid;
      for (const double p_hat : pans) {
        for (const double delay : spec.grid) {
          SweepPoint point;
          point.param1 = p_hat;
          point.param2 = delay;
          const auto d = static_cast<std::size_t>(std::lround(delay));
          point.theory_ssr_db = theoretical_ssr_pan_delay(
              spec.ref_pan, p_hat, static_cast<long>(d), source.channel(0),
              cap);
          const auto bounds = theoretical_ssr_bounds(spec.ref_pan, p_hat, cap);
          point.theory_ssr_lower_db = bounds.first;
          point.theory_ssr_upper_db = bounds.second;
          try {
            const MultichannelSignal test =
                delay_channel(pan_mono_to_stereo(source, p_hat), 1, d);
            score_point(point, test, reference, spec.eval);
          } catch (const Error& e) {
            point.status = FrameStatus::error;
            point.message = e.what();
          }
          result.points.push_back(std::move(point));
        }
      }
      break;
    }
    case SweepKind::lowpass: {
      const MultichannelSignal panned =
          pan_mono_to_stereo(source, spec.test_pan);
      for (const double cutoff : spec.grid) {
        SweepPoint point;
        point.param1 = cutoff;
        point.theory_ssr_db =
            theoretical_ssr_pan(spec.ref_pan, spec.test_pan, cap);
        try {
          LowpassSpec lp;
          lp.cutoff_hz = cutoff;
          lp.sample_rate = source.sample_rate;
          std::vector<double> taps;
          try {
            taps = design_lowpass_fir(lp);
          } catch (const NoConvergence&) {
            taps = kaiser_lowpass(lp);
            std::ostringstream note;
            note << "lowpass " << cutoff
                 << " Hz: exchange did not converge; windowed fallback used";
            result.notes.push_back(note.str());
          }
          score_point(point, filtfilt(panned, taps), reference, spec.eval);
        } catch (const Error& e) {
          point.status = FrameStatus::error;
          point.message = e.what();
        }
        result.points.push_back(std::move(point));
      }
      break;
    }
    case SweepKind::noise: {
      const MultichannelSignal panned =
          pan_mono_to_stereo(source, spec.test_pan);
      std::uint64_t point_seed = spec.seed;
      for (const double snr_db : spec.grid) {
        SweepPoint point;
        point.param1 = snr_db;
        point.theory_ssr_db =
            theoretical_ssr_pan(spec.ref_pan, spec.test_pan, cap);
        point.theory_srr_db = snr_db;  // residual ratio tracks the SNR
        try {
          ++point_seed;  // decorrelate draws across grid points
          score_point(point, add_noise(panned, snr_db, point_seed), reference,
                      spec.eval);
        } catch (const Error& e) {
          point.status = FrameStatus::error;
          point.message = e.what();
        }
        result.points.push_back(std::move(point));
      }
      break;
    }
  }
  return result;
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  for (const auto& note : result.notes) out << "# " << note << '\n';

  const auto opt = [](const std::optional<double>& v) {
    return v ? format_db(*v) : std::string();
  };

  switch (result.kind) {
    case SweepKind::pan:
      out << "p_hat,ssr_db,srr_db,theory_ssr_db,status\n";
      for (const auto& pt : result.points) {
        out << format_db(pt.param1) << ','
            << (pt.status == FrameStatus::ok ? format_db(pt.ssr_db) : "") << ','
            << (pt.status == FrameStatus::ok ? format_db(pt.srr_db) : "") << ','
            << opt(pt.theory_ssr_db) << ',' << to_string(pt.status) << '\n';
      }
      break;
    case SweepKind::delay:
      out << "p_hat,delay_samples,ssr_db,srr_db,theory_ssr_db,"
             "theory_ssr_lower_db,theory_ssr_upper_db,status\n";
      for (const auto& pt : result.points) {
        out << format_db(pt.param1) << ','
            << static_cast<long>(std::lround(pt.param2)) << ','
            << (pt.status == FrameStatus::ok ? format_db(pt.ssr_db) : "") << ','
            << (pt.status == FrameStatus::ok ? format_db(pt.srr_db) : "") << ','
            << opt(pt.theory_ssr_db) << ',' << opt(pt.theory_ssr_lower_db)
            << ',' << opt(pt.theory_ssr_upper_db) << ','
            << to_string(pt.status) << '\n';
      }
      break;
    case SweepKind::lowpass:
      out << "cutoff_hz,ssr_db,srr_db,theory_ssr_db,status\n";
      for (const auto& pt : result.points) {
        out << format_db(pt.param1) << ','
            << (pt.status == FrameStatus::ok ? format_db(pt.ssr_db) : "") << ','
            << (pt.status == FrameStatus::ok ? format_db(pt.srr_db) : "") << ','
            << opt(pt.theory_ssr_db) << ',' << to_string(pt.status) << '\n';
      }
      break;
    case SweepKind::noise:
      out << "snr_db,ssr_db,srr_db,theory_ssr_db,theory_srr_db,status\n";
      for (const auto& pt : result.points) {
        out << format_db(pt.param1) << ','
            << (pt.status == FrameStatus::ok ? format_db(pt.ssr_db) : "") << ','
            << (pt.status == FrameStatus::ok ? format_db(pt.srr_db) : "") << ','
            << opt(pt.theory_ssr_db) << ',' << opt(pt.theory_srr_db) << ','
            << to_string(pt.status) << '\n';
      }
      break;
  }
  return out.str();
}

}  // namespace spadi
