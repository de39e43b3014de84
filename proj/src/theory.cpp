// src/theory.cpp

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

#include "spadi/theory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "spadi/errors.hpp"

namespace spadi {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

double clamp_db(double value, double cap) {
  return std::clamp(value, -cap, cap);
}

// -10*log10(inv_u) with the zero-error case mapped to +cap.
double inv_ratio_db(double inv_u, double cap) {
  if (inv_u <= 0.0) return cap;
  return clamp_db(-10.0 * std::log10(inv_u), cap);
}

}  // namespace

double PanParams::gain_left() const { return std::cos(kQuarterPi * (p + 1.0)); }

double PanParams::gain_right() const {
  return std::sin(kQuarterPi * (p + 1.0));
}

double theoretical_ssr_pan(double p, double p_hat, double cap) {
  const double inv_u = 2.0 - 2.0 * std::cos(kQuarterPi * (p_hat - p));
  return inv_ratio_db(inv_u, cap);
}

std::vector<double> autocorrelation(std::span<const double> v,
                                    std::size_t max_lag) {
  if (v.empty()) throw InvalidArgument("autocorrelation of an empty signal");
  if (max_lag >= v.size())
    throw InvalidArgument("autocorrelation lag exceeds signal support");
  const double inv_n = 1.0 / static_cast<double>(v.size());
  std::vector<double> acf(max_lag + 1, 0.0);
  for (std::size_t d = 0; d <= max_lag; ++d) {
    double acc = 0.0;
    for (std::size_t n = 0; n + d < v.size(); ++n) acc += v[n] * v[n + d];
    acf[d] = acc * inv_n;  // biased estimate; the bias cancels in ratios
  }
  return acf;
}

double theoretical_ssr_pan_delay(double p, double p_hat, long d_hat,
                                 std::span<const double> source, double cap) {
  const std::size_t lag = static_cast<std::size_t>(std::labs(d_hat));
  if (source.empty() || lag >= source.size())
    throw InvalidArgument("delay outside the autocorrelation support");
  const auto acf = autocorrelation(source, lag);
  if (acf[0] <= 0.0) throw ZeroEnergySource("source has zero energy");

  const double gr = PanParams{p}.gain_right();
  const double gr_hat = PanParams{p_hat}.gain_right();
  const double inv_u = 2.0 - 2.0 * std::cos(kQuarterPi * (p_hat - p)) +
                       2.0 * gr_hat * gr * (1.0 - acf[lag] / acf[0]);
  return inv_ratio_db(inv_u, cap);
}

std::pair<double, double> theoretical_ssr_bounds(double p, double p_hat,
                                                 double cap) {
  const double pan_term = 2.0 - 2.0 * std::cos(kQuarterPi * (p_hat - p));
  const double gr = PanParams{p}.gain_right();
  const double gr_hat = PanParams{p_hat}.gain_right();
  const double lower = inv_ratio_db(pan_term + 4.0 * gr_hat * gr, cap);
  const double upper = inv_ratio_db(pan_term, cap);
  return {lower, upper};
}

}  // namespace spadi
