// src/correlation.cpp

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

#include "spadi/correlation.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>

#include "spadi/fft.hpp"
#include "spadi/fir.hpp"

namespace spadi {

double generalized_correlation(std::span<const double> u,
                               std::span<const double> v, long nu, long eta,
                               SampleRange idx) {
  if (idx.empty()) return 0.0;
  const auto first = static_cast<long>(idx.first);
  const auto last = static_cast<long>(idx.last);  // exclusive
  if (first - nu < 0 || last - nu > static_cast<long>(u.size()) ||
      first - eta < 0 || last - eta > static_cast<long>(v.size()))
    throw IndexOutOfRange("shifted correlation read outside signal");

  double acc = 0.0;
  for (long n = first; n < last; ++n) acc += u[n - nu] * v[n - eta];
  return acc;
}

namespace {

// |H[f]|^2 weighting from a linear-phase lowpass at the given fraction of
// Nyquist, evaluated on the zero-padded DFT grid. Falls back to a windowed
// design if the exchange fails; the weighting only shapes the peak search.
std::vector<double> lowpass_weight(double cutoff_fraction, std::size_t nfft) {
  const double fc = 0.5 * cutoff_fraction;  // fraction of sample rate
  const double pass = fc * std::pow(2.0, -1.0 / 6.0);
  const double stop = std::min(fc * std::pow(2.0, 1.0 / 6.0), 0.4975);
  if (cutoff_fraction <= 0.0 || cutoff_fraction > 1.0 || pass >= stop)
    throw InvalidArgument("lowpass cutoff fraction out of range");

  std::vector<double> taps;
  try {
    const fir::Band bands[] = {{0.0, pass, 1.0, 1.0}, {stop, 0.5, 0.0, 1.0}};
    taps = fir::remez(129, bands);
  } catch (const NoConvergence&) {
    taps = fir::kaiser_sinc_lowpass(129, fc, fir::kaiser_beta(60.0));
  }

  const auto spectrum = fft::rfft(taps, nfft);
  std::vector<double> weight(spectrum.size());
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    weight[i] = std::norm(spectrum[i]);
  return weight;
}

}  // namespace

int estimate_shift(std::span<const double> test_channel,
                   std::span<const double> ref_channel,
                   const DelaySearchConfig& cfg) {
  const std::size_t n = test_channel.size();
  if (n < 2 || ref_channel.size() != n)
    throw InvalidArgument("estimate_shift needs equal-length channels, N >= 2");
  const int k_max = cfg.max_shift_samples;
  if (k_max <= 0 || static_cast<std::size_t>(k_max) >= n)
    throw InvalidArgument("delay search limit must satisfy 0 < K < N");
  if (channel_energy(test_channel, {0, n}) == 0.0 ||
      channel_energy(ref_channel, {0, n}) == 0.0)
    throw DegenerateInput("zero-energy channel in delay estimation");

  // Zero padding to at least 2N-1 makes the circular correlation linear over
  // the whole +/-K search range.
  const std::size_t nfft = fft::next_pow2(2 * n - 1);
  const auto test_spec = fft::rfft(test_channel, nfft);
  const auto ref_spec = fft::rfft(ref_channel, nfft);

  std::vector<std::complex<double>> cross(test_spec.size());
  for (std::size_t i = 0; i < cross.size(); ++i)
    cross[i] = test_spec[i] * std::conj(ref_spec[i]);
  if (cfg.lowpass_cutoff_fraction) {
    const auto weight = lowpass_weight(*cfg.lowpass_cutoff_fraction, nfft);
    for (std::size_t i = 0; i < cross.size(); ++i) cross[i] *= weight[i];
  }
  const auto corr = fft::irfft(cross, nfft);

  // corr[kappa] = sum_n test[n] * ref[n - kappa]; negative lags wrap.
  const auto value_at = [&](int kappa) {
    const auto i = static_cast<std::size_t>(
        kappa >= 0 ? kappa : static_cast<long long>(nfft) + kappa);
    return std::abs(corr[i]);
  };

  // Visit lags as 0, -1, +1, -2, +2, ... so that a strictly-greater update
  // rule breaks ties toward the smallest |lag|, then the negative candidate.
  int best_lag = 0;
  double best = value_at(0);
  for (int k = 1; k <= k_max; ++k) {
    for (const int kappa : {-k, k}) {
      const double v = value_at(kappa);
      if (v > best) {
        best = v;
        best_lag = kappa;
      }
    }
  }
  return best_lag;
}

ShiftMatrix estimate_shift_matrix(const MultichannelSignal& test,
                                  const MultichannelSignal& ref,
                                  const DelaySearchConfig& cfg,
                                  const std::vector<bool>& silent_rows,
                                  const std::vector<bool>& silent_cols) {
  const std::size_t c_count = test.num_channels();
  if (ref.num_channels() != c_count)
    throw ChannelCountMismatch("test/reference channel counts differ");
  if (ref.num_samples() != test.num_samples())
    throw LengthMismatch("test/reference lengths differ");
  if (silent_rows.size() != c_count || silent_cols.size() != c_count)
    throw InvalidArgument("silence masks must have one flag per channel");

  ShiftMatrix shifts = ShiftMatrix::zeros(c_count);
  for (std::size_t c = 0; c < c_count; ++c) {
    if (silent_rows[c]) continue;
    for (std::size_t d = 0; d < c_count; ++d) {
      if (silent_cols[d]) continue;
      shifts.at(c, d) = estimate_shift(test.channel(c), ref.channel(d), cfg);
    }
  }
  validity_sets(shifts, test.num_samples());  // throws if the delays clash
  return shifts;
}

}  // namespace spadi
