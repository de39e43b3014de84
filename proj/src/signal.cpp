// src/signal.cpp

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

#include "spadi/signal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace spadi {

MultichannelSignal zeros_like(std::size_t num_channels,
                              std::size_t num_samples, int sample_rate) {
  MultichannelSignal out;
  out.sample_rate = sample_rate;
  out.channels.assign(num_channels, std::vector<double>(num_samples, 0.0));
  return out;
}

void validate_signal(const MultichannelSignal& x) {
  if (x.num_channels() == 0) throw InvalidArgument("signal has no channels");
  if (x.sample_rate <= 0) throw InvalidArgument("sample rate must be positive");
  const std::size_t n = x.num_samples();
  if (n == 0) throw InvalidArgument("signal has no samples");
  for (std::size_t c = 0; c < x.num_channels(); ++c) {
    if (x.channels[c].size() != n)
      throw InvalidArgument("channel " + std::to_string(c) +
                            " length differs from channel 0");
    for (double v : x.channels[c])
      if (!std::isfinite(v))
        throw InvalidArgument("non-finite sample in channel " +
                              std::to_string(c));
  }
}

MultichannelSignal slice(const MultichannelSignal& x, std::size_t start,
                         std::size_t length) {
  if (start + length > x.num_samples())
    throw IndexOutOfRange("slice past signal end");
  MultichannelSignal out;
  out.sample_rate = x.sample_rate;
  out.channels.reserve(x.num_channels());
  for (const auto& ch : x.channels)
    out.channels.emplace_back(ch.begin() + static_cast<std::ptrdiff_t>(start),
                              ch.begin() +
                                  static_cast<std::ptrdiff_t>(start + length));
  return out;
}

SampleRange intersect(SampleRange a, SampleRange b) {
  SampleRange r{std::max(a.first, b.first), std::min(a.last, b.last)};
  if (r.empty()) return SampleRange{r.first, r.first};
  return r;
}

ShiftMatrix ShiftMatrix::zeros(std::size_t num_channels) {
  return ShiftMatrix{num_channels,
                     std::vector<int>(num_channels * num_channels, 0)};
}

GainMatrix GainMatrix::zeros(std::size_t num_channels) {
  return GainMatrix{num_channels,
                    std::vector<double>(num_channels * num_channels, 0.0)};
}

namespace {

SampleRange pair_range(int tau, std::size_t n_samples) {
  const auto n = static_cast<std::int64_t>(n_samples);
  const std::int64_t lo = std::max<std::int64_t>(0, tau);
  const std::int64_t hi = std::max(lo, n + std::min<std::int64_t>(0, tau));
  return SampleRange{static_cast<std::size_t>(lo), static_cast<std::size_t>(hi)};
}

}  // namespace

ValiditySets validity_sets(const ShiftMatrix& tau, std::size_t n_samples) {
  const std::size_t c_count = tau.channels;
  if (c_count == 0 || n_samples == 0)
    throw InvalidArgument("validity_sets needs a non-empty shift matrix");

  ValiditySets sets;
  sets.channels = c_count;
  sets.num_samples = n_samples;
  sets.per_pair.resize(c_count * c_count);
  sets.per_channel.resize(c_count);
  sets.global = SampleRange{0, n_samples};

  for (std::size_t c = 0; c < c_count; ++c) {
    SampleRange row{0, n_samples};
    for (std::size_t d = 0; d < c_count; ++d) {
      const SampleRange r = pair_range(tau.at(c, d), n_samples);
      sets.per_pair[c * c_count + d] = r;
      row = intersect(row, r);
    }
    if (row.empty())
      throw EmptyValiditySet("no valid samples for test channel " +
                             std::to_string(c) +
                             "; delays too large for frame length");
    sets.per_channel[c] = row;
    sets.global = intersect(sets.global, row);
  }
  if (sets.global.empty())
    throw EmptyValiditySet("global validity set is empty");
  return sets;
}

double channel_energy(std::span<const double> x, SampleRange idx) {
  if (idx.last > x.size()) throw IndexOutOfRange("energy range past end");
  double acc = 0.0;
  for (std::size_t n = idx.first; n < idx.last; ++n) acc += x[n] * x[n];
  return acc;
}

double energy(const MultichannelSignal& x, SampleRange idx) {
  double acc = 0.0;
  for (std::size_t c = 0; c < x.num_channels(); ++c)
    acc += channel_energy(x.channel(c), idx);
  return acc;
}

}  // namespace spadi
