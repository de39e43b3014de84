// include/spadi/correlation.hpp

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

#ifndef SPADI_CORRELATION_HPP
#define SPADI_CORRELATION_HPP

#include <optional>
#include <span>
#include <vector>

#include "spadi/signal.hpp"

namespace spadi {

/// Settings for the integer delay search.
struct DelaySearchConfig {
  int max_shift_samples = 0;  // K, must satisfy 0 < K < N
  // Optional lowpass weighting of the cross-spectrum, as a fraction of
  // Nyquist in (0, 1]. Absent means an identity weighting.
  std::optional<double> lowpass_cutoff_fraction;
};

/// Generalized correlation sum_{n in idx} u[n - nu] * v[n - eta].
/// Throws IndexOutOfRange when a shifted read would leave either signal.
double generalized_correlation(std::span<const double> u,
                               std::span<const double> v, long nu, long eta,
                               SampleRange idx);

/// Integer delay in [-K, K] maximizing the magnitude of the zero-padded
/// cross-correlation between a test channel and a reference channel, computed
/// in the frequency domain. A positive result means the test channel lags the
/// reference. Ties are broken toward the smallest |lag|, then the negative
/// candidate. Throws DegenerateInput when either channel has zero energy.
int estimate_shift(std::span<const double> test_channel,
                   std::span<const double> ref_channel,
                   const DelaySearchConfig& cfg);

/// Per-pair delay estimates for all non-silent (test, reference) channel
/// pairs; entries on silent rows or columns are zero. Throws EmptyValiditySet
/// if the resulting matrix leaves no valid samples.
ShiftMatrix estimate_shift_matrix(const MultichannelSignal& test,
                                  const MultichannelSignal& ref,
                                  const DelaySearchConfig& cfg,
                                  const std::vector<bool>& silent_rows,
                                  const std::vector<bool>& silent_cols);

}  // namespace spadi

#endif  // SPADI_CORRELATION_HPP
