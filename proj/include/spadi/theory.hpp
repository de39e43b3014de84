// include/spadi/theory.hpp

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

#ifndef SPADI_THEORY_HPP
#define SPADI_THEORY_HPP

#include <span>
#include <utility>
#include <vector>

namespace spadi {

/// Constant-power pan position p in [-1, 1] and its stereo gains.
struct PanParams {
  double p = 0.0;

  double gain_left() const;   // cos(pi/4 * (p + 1))
  double gain_right() const;  // sin(pi/4 * (p + 1))
};

/// Closed-form SSR for a pure panning error between reference pan p and test
/// pan p_hat: -10*log10(2 - 2*cos(pi/4 * (p_hat - p))), clamped to
/// [-cap, +cap]; +cap when p_hat == p.
double theoretical_ssr_pan(double p, double p_hat, double cap = 80.0);

/// SSR for a combined panning and right-channel delay error. The delay term
/// uses the empirical (biased) autocorrelation of the supplied mono source:
///   1/u = 2 - 2*cos(pi/4*(p_hat - p))
///         + 2*gr_hat*gr*(1 - acf[|d_hat|]/acf[0]).
/// Throws ZeroEnergySource for an all-zero source; requires |d_hat| < N.
double theoretical_ssr_pan_delay(double p, double p_hat, long d_hat,
                                 std::span<const double> source,
                                 double cap = 80.0);

/// Source-independent SSR interval for a panning + delay error:
///   [-10*log10(2 - 2*cos(delta) + 4*gr_hat*gr), -10*log10(2 - 2*cos(delta))]
/// with delta = pi/4 * (p_hat - p). Ends are clamped to [-cap, +cap].
std::pair<double, double> theoretical_ssr_bounds(double p, double p_hat,
                                                 double cap = 80.0);

/// Biased empirical autocorrelation: acf[d] = 1/N * sum_n v[n] * v[n + d]
/// for d = 0 .. max_lag. The normalization cancels in every ratio above.
std::vector<double> autocorrelation(std::span<const double> v,
                                    std::size_t max_lag);

}  // namespace spadi

#endif  // SPADI_THEORY_HPP
