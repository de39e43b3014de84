// src/degradations.cpp

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

#include "spadi/degradations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "spadi/fir.hpp"
#include "spadi/theory.hpp"

namespace spadi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Box-Muller on top of a seeded 64-bit engine keeps outputs bit-identical
// across standard library implementations.
class GaussianGenerator {
 public:
  explicit GaussianGenerator(std::uint64_t seed) : engine_(seed) {}

  double operator()() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = unit_open();  // (0, 1], safe under log
    const double u2 = unit_half_open();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double theta = kTwoPi * u2;
    spare_ = radius * std::sin(theta);
    have_spare_ = true;
    return radius * std::cos(theta);
  }

 private:
  double unit_open() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }
  double unit_half_open() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

std::vector<double> causal_fir(std::span<const double> x,
                               std::span<const double> h) {
  std::vector<double> y(x.size(), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    double acc = 0.0;
    const std::size_t k_max = std::min(h.size() - 1, i);
    for (std::size_t k = 0; k <= k_max; ++k) acc += h[k] * x[i - k];
    y[i] = acc;
  }
  return y;
}

}  // namespace

MultichannelSignal pan_mono_to_stereo(const MultichannelSignal& mono,
                                      double p) {
  if (mono.num_channels() != 1)
    throw InvalidArgument("panning expects a mono input");
  if (p < -1.0 || p > 1.0) throw InvalidArgument("pan must lie in [-1, 1]");

  const PanParams pan{p};
  const double g_left = pan.gain_left();
  const double g_right = pan.gain_right();
  const auto v = mono.channel(0);

  MultichannelSignal out = zeros_like(2, v.size(), mono.sample_rate);
  for (std::size_t n = 0; n < v.size(); ++n) {
    out.channels[0][n] = g_left * v[n];
    out.channels[1][n] = g_right * v[n];
  }
  return out;
}

MultichannelSignal delay_channel(const MultichannelSignal& x,
                                 std::size_t channel, std::size_t d) {
  if (channel >= x.num_channels())
    throw InvalidArgument("channel index out of range");
  if (d >= x.num_samples())
    throw DelayTooLarge("delay must be smaller than the signal length");

  MultichannelSignal out = x;
  auto& ch = out.channels[channel];
  std::copy_backward(ch.begin(), ch.end() - static_cast<std::ptrdiff_t>(d),
                     ch.end());
  std::fill(ch.begin(), ch.begin() + static_cast<std::ptrdiff_t>(d), 0.0);
  return out;
}

MultichannelSignal add_noise(const MultichannelSignal& x, double snr_db,
                             std::uint64_t seed) {
  const double signal_energy = energy(x, {0, x.num_samples()});
  if (signal_energy == 0.0)
    throw SilentSignal("cannot set an SNR against a silent signal");

  GaussianGenerator gauss(seed);
  MultichannelSignal noise =
      zeros_like(x.num_channels(), x.num_samples(), x.sample_rate);
  double noise_energy = 0.0;
  for (auto& ch : noise.channels)
    for (auto& v : ch) {
      v = gauss();
      noise_energy += v * v;
    }

  // Normalize against the realized draw so the requested ratio is exact.
  const double gain =
      std::sqrt(signal_energy / (noise_energy * std::pow(10.0, snr_db / 10.0)));
  MultichannelSignal out = x;
  for (std::size_t c = 0; c < out.num_channels(); ++c)
    for (std::size_t n = 0; n < out.num_samples(); ++n)
      out.channels[c][n] += gain * noise.channels[c][n];
  return out;
}

double LowpassSpec::passband_edge_hz() const {
  return cutoff_hz * std::pow(2.0, -1.0 / 6.0);
}

double LowpassSpec::stopband_edge_hz() const {
  const double nyquist = 0.5 * sample_rate;
  return std::min(cutoff_hz * std::pow(2.0, 1.0 / 6.0), 0.995 * nyquist);
}

namespace {

void check_lowpass_spec(const LowpassSpec& spec) {
  if (spec.sample_rate <= 0) throw InvalidArgument("sample rate must be > 0");
  if (spec.num_taps < 3 || spec.num_taps % 2 == 0)
    throw InvalidArgument("tap count must be odd and >= 3");
  if (spec.cutoff_hz <= 0.0 ||
      spec.passband_edge_hz() >= spec.stopband_edge_hz())
    throw InvalidArgument("cutoff leaves no usable transition band");
}

}  // namespace

std::vector<double> design_lowpass_fir(const LowpassSpec& spec) {
  check_lowpass_spec(spec);
  const double rate = static_cast<double>(spec.sample_rate);
  const fir::Band bands[] = {
      {0.0, spec.passband_edge_hz() / rate, 1.0, 1.0},
      {spec.stopband_edge_hz() / rate, 0.5, 0.0, 1.0},
  };
  return fir::remez(spec.num_taps, bands);
}

std::vector<double> kaiser_lowpass(const LowpassSpec& spec) {
  check_lowpass_spec(spec);
  const double rate = static_cast<double>(spec.sample_rate);
  const double center =
      0.5 * (spec.passband_edge_hz() + spec.stopband_edge_hz()) / rate;
  return fir::kaiser_sinc_lowpass(spec.num_taps, center, fir::kaiser_beta(60.0));
}

MultichannelSignal filtfilt(const MultichannelSignal& x,
                            std::span<const double> coeffs) {
  if (coeffs.empty()) throw InvalidArgument("empty coefficient vector");
  const std::size_t n = x.num_samples();
  if (n <= 3 * coeffs.size())
    throw SignalTooShort("filtfilt needs more than 3x the filter length");
  const std::size_t pad = coeffs.size() - 1;

  MultichannelSignal out = zeros_like(x.num_channels(), n, x.sample_rate);
  for (std::size_t c = 0; c < x.num_channels(); ++c) {
    const auto src = x.channel(c);

    // Odd reflection about the edge samples keeps levels continuous.
    std::vector<double> padded(n + 2 * pad);
    for (std::size_t i = 0; i < pad; ++i)
      padded[i] = 2.0 * src[0] - src[pad - i];
    std::copy(src.begin(), src.end(), padded.begin() + static_cast<std::ptrdiff_t>(pad));
    for (std::size_t i = 0; i < pad; ++i)
      padded[pad + n + i] = 2.0 * src[n - 1] - src[n - 2 - i];

    std::vector<double> y = causal_fir(padded, coeffs);
    std::reverse(y.begin(), y.end());
    y = causal_fir(y, coeffs);
    std::reverse(y.begin(), y.end());

    std::copy(y.begin() + static_cast<std::ptrdiff_t>(pad),
              y.begin() + static_cast<std::ptrdiff_t>(pad + n),
              out.channels[c].begin());
  }
  return out;
}

MultichannelSignal white_noise(std::size_t num_channels,
                               std::size_t num_samples, int sample_rate,
                               std::uint64_t seed) {
  GaussianGenerator gauss(seed);
  MultichannelSignal out = zeros_like(num_channels, num_samples, sample_rate);
  for (auto& ch : out.channels)
    for (auto& v : ch) v = gauss();
  return out;
}

}  // namespace spadi
