// include/spadi/fir.hpp

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

#ifndef SPADI_FIR_HPP
#define SPADI_FIR_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace spadi::fir {

/// One approximation band for the equiripple design. Frequencies are
/// fractions of the sample rate in [0, 0.5].
struct Band {
  double low = 0.0;
  double high = 0.0;
  double gain = 0.0;    // desired response over the band
  double weight = 1.0;  // relative error weight
};

/// Minimax linear-phase FIR design by Remez exchange over a dense frequency
/// grid (type-I filters only: num_taps must be odd). Returns num_taps
/// symmetric coefficients. Throws NoConvergence when the extremal set fails
/// to settle within max_iterations exchanges.
std::vector<double> remez(std::size_t num_taps, std::span<const Band> bands,
                          int grid_density = 16, int max_iterations = 100);

/// Kaiser-windowed sinc lowpass (odd num_taps), used as a fallback when the
/// exchange does not converge. cutoff is a fraction of the sample rate in
/// (0, 0.5).
std::vector<double> kaiser_sinc_lowpass(std::size_t num_taps, double cutoff,
                                        double beta);

/// Beta for a requested stopband attenuation in dB (Kaiser's formula).
double kaiser_beta(double attenuation_db);

/// Real frequency response magnitude of a symmetric (linear-phase) FIR at a
/// frequency given as a fraction of the sample rate.
double symmetric_fir_response(std::span<const double> taps, double frequency);

}  // namespace spadi::fir

#endif  // SPADI_FIR_HPP
