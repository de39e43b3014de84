// include/spadi/signal.hpp

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

#ifndef SPADI_SIGNAL_HPP
#define SPADI_SIGNAL_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "spadi/errors.hpp"

namespace spadi {

/// Planar (channel-major) multichannel signal. Each channel holds the same
/// number of samples; all samples are finite. Immutable by convention once
/// built: analysis functions never modify their inputs.
struct MultichannelSignal {
  std::vector<std::vector<double>> channels;  // C x N, contiguous per channel
  int sample_rate = 0;                        // samples per second, > 0

  std::size_t num_channels() const { return channels.size(); }
  std::size_t num_samples() const {
    return channels.empty() ? 0 : channels.front().size();
  }
  std::span<const double> channel(std::size_t c) const { return channels[c]; }
};

/// All-zero signal of the given shape.
MultichannelSignal zeros_like(std::size_t num_channels, std::size_t num_samples,
                              int sample_rate);

/// Throws InvalidArgument unless the signal satisfies the type invariants:
/// C >= 1, N >= 1, rectangular channel layout, finite samples, positive rate.
void validate_signal(const MultichannelSignal& x);

/// Copy of samples [start, start + length) of every channel.
MultichannelSignal slice(const MultichannelSignal& x, std::size_t start,
                         std::size_t length);

/// Half-open index interval [first, last). Empty when last <= first.
struct SampleRange {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t length() const { return last > first ? last - first : 0; }
  bool empty() const { return last <= first; }
  bool operator==(const SampleRange&) const = default;
};

SampleRange intersect(SampleRange a, SampleRange b);

/// Per-pair integer delays tau[c][d]: the shift applied to reference channel d
/// when projecting onto test channel c. Row-major C x C storage.
struct ShiftMatrix {
  std::size_t channels = 0;
  std::vector<int> tau;

  static ShiftMatrix zeros(std::size_t num_channels);
  int at(std::size_t c, std::size_t d) const { return tau[c * channels + d]; }
  int& at(std::size_t c, std::size_t d) { return tau[c * channels + d]; }
};

/// Leakage gains a[c][d] from reference channel d into test channel c.
/// Rows of silent test channels and columns of silent reference channels are
/// exactly zero after solving.
struct GainMatrix {
  std::size_t channels = 0;
  std::vector<double> a;

  static GainMatrix zeros(std::size_t num_channels);
  double at(std::size_t c, std::size_t d) const { return a[c * channels + d]; }
  double& at(std::size_t c, std::size_t d) { return a[c * channels + d]; }
};

/// Index sets over which shifted reads of the projection model are defined:
///   per_pair(c,d) = [max(0, tau_cd), N + min(0, tau_cd))
///   per_channel[c] = intersection over d of per_pair(c,d)
///   global = intersection over c of per_channel[c]
struct ValiditySets {
  std::size_t channels = 0;
  std::size_t num_samples = 0;
  std::vector<SampleRange> per_pair;     // row-major C x C
  std::vector<SampleRange> per_channel;  // C
  SampleRange global;

  SampleRange pair(std::size_t c, std::size_t d) const {
    return per_pair[c * channels + d];
  }
};

/// Builds the three-level validity structure for a shift matrix.
/// Throws EmptyValiditySet when any per-channel set (or the global set) is
/// empty, i.e. the delays are too large for the frame length.
ValiditySets validity_sets(const ShiftMatrix& tau, std::size_t n_samples);

/// Sum of squared samples over all channels and the given index range.
/// Throws IndexOutOfRange when the range reaches past the signal end.
double energy(const MultichannelSignal& x, SampleRange idx);

/// Single-channel energy over a range.
double channel_energy(std::span<const double> x, SampleRange idx);

}  // namespace spadi

#endif  // SPADI_SIGNAL_HPP
