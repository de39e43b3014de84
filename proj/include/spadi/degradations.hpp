// include/spadi/degradations.hpp

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

#ifndef SPADI_DEGRADATIONS_HPP
#define SPADI_DEGRADATIONS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "spadi/signal.hpp"

namespace spadi {

/// Constant-power pan of a mono signal to stereo:
///   left = cos(pi/4*(p+1)) * v,  right = sin(pi/4*(p+1)) * v.
/// Total output energy equals the input energy for every p in [-1, 1].
MultichannelSignal pan_mono_to_stereo(const MultichannelSignal& mono,
                                      double p);

/// Shifts one channel by d samples with zero fill at the head; the length
/// and the other channels are untouched. Requires 0 <= d < N.
MultichannelSignal delay_channel(const MultichannelSignal& x,
                                 std::size_t channel, std::size_t d);

/// Adds seeded Gaussian noise scaled so that the realized (not expected)
/// energy ratio matches snr_db exactly. Throws SilentSignal for zero-energy
/// input.
MultichannelSignal add_noise(const MultichannelSignal& x, double snr_db,
                             std::uint64_t seed);

/// Equiripple lowpass specification. The transition band spans one third of
/// an octave centered geometrically on the cutoff: edges at cutoff * 2^(-1/6)
/// and cutoff * 2^(+1/6). The upper edge is clamped just below Nyquist so
/// cutoffs up to Nyquist stay designable.
struct LowpassSpec {
  std::size_t num_taps = 129;  // odd, type-I linear phase
  double cutoff_hz = 0.0;
  int sample_rate = 0;

  double passband_edge_hz() const;
  double stopband_edge_hz() const;
};

/// Parks-McClellan design for the spec above, equal passband/stopband
/// weights. Throws NoConvergence when the exchange fails; callers may fall
/// back to kaiser_lowpass and flag the substitution.
std::vector<double> design_lowpass_fir(const LowpassSpec& spec);

/// Kaiser-windowed sinc fallback for the same band edges (60 dB design).
std::vector<double> kaiser_lowpass(const LowpassSpec& spec);

/// Zero-phase filtering: forward pass, reverse, forward pass, reverse, with
/// reflected padding of length len(coeffs) - 1 on both ends, trimmed after.
/// Requires N > 3 * len(coeffs).
MultichannelSignal filtfilt(const MultichannelSignal& x,
                            std::span<const double> coeffs);

/// Seeded unit-variance Gaussian noise, planar layout.
MultichannelSignal white_noise(std::size_t num_channels,
                               std::size_t num_samples, int sample_rate,
                               std::uint64_t seed);

}  // namespace spadi

#endif  // SPADI_DEGRADATIONS_HPP
