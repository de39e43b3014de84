// include/spadi/config.hpp

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

#ifndef SPADI_CONFIG_HPP
#define SPADI_CONFIG_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>

namespace spadi {

enum class Aggregate { median, mean };

std::string to_string(Aggregate a);

/// Shared evaluation settings. Defaults: 2 s frames with 50% overlap, a delay
/// search limit of 50 ms, relative silence threshold 1e-6, and an 80 dB cap
/// on the reported ratios.
struct EvalConfig {
  double frame_seconds = 2.0;
  double hop_fraction = 0.5;  // in (0, 1]
  double max_shift_ms = 50.0;
  double silence_eps_rel = 1e-6;
  double db_cap = 80.0;
  std::optional<double> lowpass_cutoff_fraction;  // of Nyquist, in (0, 1]
  Aggregate aggregate = Aggregate::median;

  std::size_t frame_samples(int sample_rate) const {
    return static_cast<std::size_t>(std::lround(frame_seconds * sample_rate));
  }
  std::size_t hop_samples(int sample_rate) const {
    const auto hop = std::lround(hop_fraction * frame_seconds * sample_rate);
    return hop > 0 ? static_cast<std::size_t>(hop) : 1;
  }
  int max_shift_samples(int sample_rate) const {
    return static_cast<int>(std::lround(max_shift_ms * 1e-3 * sample_rate));
  }
};

}  // namespace spadi

#endif  // SPADI_CONFIG_HPP
