// include/spadi/sweep.hpp

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

#ifndef SPADI_SWEEP_HPP
#define SPADI_SWEEP_HPP

#include <optional>
#include <string>
#include <vector>

#include "spadi/config.hpp"
#include "spadi/metrics.hpp"
#include "spadi/signal.hpp"

namespace spadi {

enum class SweepKind { pan, delay, lowpass, noise };
enum class SourceKind { white, speech, file };

std::string to_string(SweepKind k);

/// One degradation sweep: synthesize a degraded test signal per grid point,
/// evaluate it against the panned reference, and annotate with the matching
/// closed-form values where they exist.
struct SweepSpec {
  SweepKind kind = SweepKind::pan;

  SourceKind source = SourceKind::white;
  std::string source_path;  // used when source == file (mono WAV)
  double duration_seconds = 2.0;
  int sample_rate = 16000;
  std::uint64_t seed = 1;

  double ref_pan = 0.0;   // reference pan p
  double test_pan = 0.0;  // test pan for the lowpass and noise kinds

  // Primary grid: test pans / delays in samples / cutoffs in Hz / SNRs in dB.
  std::vector<double> grid;
  // Secondary grid of test pans for the delay kind.
  std::vector<double> pan_grid;

  EvalConfig eval;
};

/// Default grids mirroring the degradation battery.
SweepSpec default_sweep(SweepKind kind);

struct SweepPoint {
  double param1 = 0.0;  // p_hat / delay / cutoff_hz / snr_db
  double param2 = 0.0;  // delay kind: delay in samples (param1 is p_hat)
  double ssr_db = 0.0;
  double srr_db = 0.0;
  std::optional<double> theory_ssr_db;
  std::optional<double> theory_ssr_lower_db;
  std::optional<double> theory_ssr_upper_db;
  std::optional<double> theory_srr_db;
  FrameStatus status = FrameStatus::ok;
  std::string message;
};

struct SweepResult {
  SweepKind kind = SweepKind::pan;
  std::vector<SweepPoint> points;
  std::vector<std::string> notes;  // e.g. designer fallbacks
};

/// Runs the sweep; per-point failures are recorded in the point status and
/// do not abort the grid.
SweepResult run_sweep(const SweepSpec& spec);

/// CSV rendering with a kind-specific header; notes become leading '#' lines.
std::string sweep_csv(const SweepResult& result);

/// Builds the configured source signal (mono). Throws on unreadable files.
MultichannelSignal make_sweep_source(const SweepSpec& spec);

}  // namespace spadi

#endif  // SPADI_SWEEP_HPP
