// src/projection.cpp

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

#include "spadi/projection.hpp"

namespace spadi {

MultichannelSignal project(const MultichannelSignal& ref,
                           const GainMatrix& gains, const ShiftMatrix& shifts) {
  const std::size_t c_count = ref.num_channels();
  if (gains.channels != c_count || shifts.channels != c_count)
    throw ChannelCountMismatch("gain/shift matrices do not match the signal");

  const ValiditySets sets = validity_sets(shifts, ref.num_samples());
  const SampleRange valid = sets.global;

  MultichannelSignal out = zeros_like(c_count, valid.length(), ref.sample_rate);
  for (std::size_t c = 0; c < c_count; ++c) {
    auto& dst = out.channels[c];
    for (std::size_t d = 0; d < c_count; ++d) {
      const double a = gains.at(c, d);
      if (a == 0.0) continue;
      const int tau = shifts.at(c, d);
      const auto src = ref.channel(d);
      for (std::size_t i = 0; i < valid.length(); ++i) {
        const auto n = static_cast<long>(valid.first + i);
        dst[i] += a * src[n - tau];
      }
    }
  }
  return out;
}

ErrorSignals error_signals(const MultichannelSignal& test,
                           const MultichannelSignal& ref,
                           const Decomposition& dec) {
  const SampleRange valid = dec.sets.global;
  const std::size_t c_count = test.num_channels();
  if (dec.projected.num_samples() != valid.length() ||
      dec.projected.num_channels() != c_count)
    throw InvalidArgument("decomposition does not match the signal pair");

  ErrorSignals errs;
  errs.spatial = zeros_like(c_count, valid.length(), test.sample_rate);
  errs.residual = zeros_like(c_count, valid.length(), test.sample_rate);
  errs.total = zeros_like(c_count, valid.length(), test.sample_rate);
  for (std::size_t c = 0; c < c_count; ++c) {
    const auto proj = dec.projected.channel(c);
    const auto s = ref.channel(c);
    const auto s_hat = test.channel(c);
    for (std::size_t i = 0; i < valid.length(); ++i) {
      const std::size_t n = valid.first + i;
      const double spat = proj[i] - s[n];
      const double resid = s_hat[n] - proj[i];
      errs.spatial.channels[c][i] = spat;
      errs.residual.channels[c][i] = resid;
      // Formed from the two parts so the decomposition identity is exact.
      errs.total.channels[c][i] = spat + resid;
    }
  }
  return errs;
}

}  // namespace spadi
