// src/fir.cpp

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

#include "spadi/fir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "spadi/errors.hpp"

namespace spadi::fir {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Grid {
  std::vector<double> freq;     // fraction of the sample rate
  std::vector<double> desired;  // target amplitude per point
  std::vector<double> weight;
  std::vector<std::size_t> segment_start;  // one entry per band
  std::vector<std::size_t> segment_end;    // exclusive
};

Grid build_grid(std::span<const Band> bands, std::size_t r, int density) {
  const double spacing = 0.5 / (static_cast<double>(density * r));
  Grid grid;
  for (const Band& band : bands) {
    if (band.high < band.low || band.low < 0.0 || band.high > 0.5)
      throw InvalidArgument("band edges must satisfy 0 <= low <= high <= 0.5");
    const auto steps = static_cast<std::size_t>(
        std::max(1.0, std::ceil((band.high - band.low) / spacing)));
    grid.segment_start.push_back(grid.freq.size());
    for (std::size_t i = 0; i <= steps; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(steps);
      grid.freq.push_back(band.low + t * (band.high - band.low));
      grid.desired.push_back(band.gain);
      grid.weight.push_back(band.weight);
    }
    grid.segment_end.push_back(grid.freq.size());
  }
  return grid;
}

// Barycentric pieces for the Chebyshev-proxy interpolation through the
// current extremal nodes (x = cos(2*pi*f)).
struct Interpolant {
  std::vector<double> x;      // r + 1 nodes
  std::vector<double> gamma;  // barycentric weights
  std::vector<double> y;      // interpolated values (desired -/+ delta / W)
  double delta = 0.0;

  double eval(double xq) const {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
      const double dx = xq - x[k];
      if (std::abs(dx) < 1e-12) return y[k];
      const double c = gamma[k] / dx;
      num += c * y[k];
      den += c;
    }
    return num / den;
  }
};

Interpolant make_interpolant(const Grid& grid,
                             const std::vector<std::size_t>& extrema) {
  const std::size_t m = extrema.size();  // r + 1
  Interpolant ip;
  ip.x.resize(m);
  ip.gamma.resize(m);
  ip.y.resize(m);
  for (std::size_t k = 0; k < m; ++k)
    ip.x[k] = std::cos(kTwoPi * grid.freq[extrema[k]]);

  for (std::size_t k = 0; k < m; ++k) {
    double prod = 1.0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k) continue;
      prod *= ip.x[k] - ip.x[j];
    }
    ip.gamma[k] = 1.0 / prod;
  }

  double num = 0.0;
  double den = 0.0;
  double sign = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    num += ip.gamma[k] * grid.desired[extrema[k]];
    den += sign * ip.gamma[k] / grid.weight[extrema[k]];
    sign = -sign;
  }
  if (den == 0.0) throw NoConvergence("degenerate extremal configuration");
  ip.delta = num / den;

  sign = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    ip.y[k] = grid.desired[extrema[k]] -
              sign * ip.delta / grid.weight[extrema[k]];
    sign = -sign;
  }
  return ip;
}

// Weighted error on every grid point for the current interpolant.
std::vector<double> grid_error(const Grid& grid, const Interpolant& ip) {
  std::vector<double> err(grid.freq.size());
  for (std::size_t i = 0; i < grid.freq.size(); ++i) {
    const double a = ip.eval(std::cos(kTwoPi * grid.freq[i]));
    err[i] = grid.weight[i] * (grid.desired[i] - a);
  }
  return err;
}

// Local maxima of |E| per band segment, then thinned to an alternating set.
std::vector<std::size_t> pick_extrema(const Grid& grid,
                                      const std::vector<double>& err,
                                      std::size_t wanted) {
  std::vector<std::size_t> candidates;
  for (std::size_t seg = 0; seg < grid.segment_start.size(); ++seg) {
    const std::size_t lo = grid.segment_start[seg];
    const std::size_t hi = grid.segment_end[seg];
    for (std::size_t i = lo; i < hi; ++i) {
      const double here = std::abs(err[i]);
      const bool left_ok = (i == lo) || here >= std::abs(err[i - 1]);
      const bool right_ok = (i + 1 == hi) || here > std::abs(err[i + 1]);
      if (left_ok && right_ok && here > 0.0) candidates.push_back(i);
    }
  }

  // Merge same-sign neighbors, keeping the larger deviation.
  std::vector<std::size_t> alternating;
  for (const std::size_t i : candidates) {
    if (!alternating.empty() &&
        std::signbit(err[alternating.back()]) == std::signbit(err[i])) {
      if (std::abs(err[i]) > std::abs(err[alternating.back()]))
        alternating.back() = i;
      continue;
    }
    alternating.push_back(i);
  }

  if (alternating.size() < wanted)
    throw NoConvergence("too few alternations on the error grid");

  // Drop surplus extrema from whichever end deviates least.
  while (alternating.size() > wanted) {
    if (std::abs(err[alternating.front()]) < std::abs(err[alternating.back()]))
      alternating.erase(alternating.begin());
    else
      alternating.pop_back();
  }
  return alternating;
}

}  // namespace

std::vector<double> remez(std::size_t num_taps, std::span<const Band> bands,
                          int grid_density, int max_iterations) {
  if (num_taps < 3 || num_taps % 2 == 0)
    throw InvalidArgument("remez expects an odd tap count >= 3");
  if (bands.empty()) throw InvalidArgument("remez needs at least one band");
  if (max_iterations <= 0) throw NoConvergence("no exchange iterations allowed");

  const std::size_t r = (num_taps + 1) / 2;  // cosine-basis coefficients
  const Grid grid = build_grid(bands, r, grid_density);
  if (grid.freq.size() < r + 1)
    throw InvalidArgument("frequency grid too coarse for the tap count");

  // Initial extremal guess: uniform over the grid.
  std::vector<std::size_t> extrema(r + 1);
  for (std::size_t k = 0; k <= r; ++k)
    extrema[k] = (k * (grid.freq.size() - 1)) / r;

  Interpolant ip;
  bool converged = false;
  for (int iter = 0; iter < max_iterations; ++iter) {
    ip = make_interpolant(grid, extrema);
    const std::vector<double> err = grid_error(grid, ip);
    std::vector<std::size_t> next = pick_extrema(grid, err, r + 1);

    double peak = 0.0;
    for (const std::size_t i : next) peak = std::max(peak, std::abs(err[i]));
    const double overshoot =
        (peak - std::abs(ip.delta)) / std::max(std::abs(ip.delta), 1e-300);

    if (next == extrema || overshoot < 1e-9) {
      extrema = std::move(next);
      ip = make_interpolant(grid, extrema);
      converged = true;
      break;
    }
    extrema = std::move(next);
  }
  if (!converged)
    throw NoConvergence("extremal set failed to settle");

  // Sample the converged amplitude response at n uniform frequencies and
  // invert; exact for a degree r-1 cosine polynomial with n = 2r - 1.
  const std::size_t half = num_taps / 2;  // (n-1)/2
  std::vector<double> amplitude(half + 1);
  for (std::size_t j = 0; j <= half; ++j)
    amplitude[j] = ip.eval(
        std::cos(kTwoPi * static_cast<double>(j) / static_cast<double>(num_taps)));

  std::vector<double> taps(num_taps, 0.0);
  for (std::size_t k = 0; k <= half; ++k) {
    double acc = amplitude[0];
    for (std::size_t j = 1; j <= half; ++j)
      acc += 2.0 * amplitude[j] *
             std::cos(kTwoPi * static_cast<double>(j * k) /
                      static_cast<double>(num_taps));
    const double h = acc / static_cast<double>(num_taps);
    taps[half + k] = h;
    taps[half - k] = h;  // exact symmetry by construction
  }
  return taps;
}

double kaiser_beta(double attenuation_db) {
  if (attenuation_db > 50.0) return 0.1102 * (attenuation_db - 8.7);
  if (attenuation_db >= 21.0)
    return 0.5842 * std::pow(attenuation_db - 21.0, 0.4) +
           0.07886 * (attenuation_db - 21.0);
  return 0.0;
}

std::vector<double> kaiser_sinc_lowpass(std::size_t num_taps, double cutoff,
                                        double beta) {
  if (num_taps < 3 || num_taps % 2 == 0)
    throw InvalidArgument("kaiser lowpass expects an odd tap count >= 3");
  if (cutoff <= 0.0 || cutoff >= 0.5)
    throw InvalidArgument("cutoff must lie in (0, 0.5) of the sample rate");

  const auto half = static_cast<double>(num_taps / 2);
  const double i0_beta = std::cyl_bessel_i(0.0, beta);
  std::vector<double> taps(num_taps);
  for (std::size_t k = 0; k < num_taps; ++k) {
    const double m = static_cast<double>(k) - half;
    const double sinc = m == 0.0
                            ? 2.0 * cutoff
                            : std::sin(kTwoPi * cutoff * m) /
                                  (std::numbers::pi * m);
    const double t = m / half;
    const double window =
        std::cyl_bessel_i(0.0, beta * std::sqrt(std::max(0.0, 1.0 - t * t))) /
        i0_beta;
    taps[k] = sinc * window;
  }
  return taps;
}

double symmetric_fir_response(std::span<const double> taps, double frequency) {
  if (taps.empty() || taps.size() % 2 == 0)
    throw InvalidArgument("expected an odd-length symmetric filter");
  const std::size_t half = taps.size() / 2;
  double acc = taps[half];
  for (std::size_t k = 1; k <= half; ++k)
    acc += 2.0 * taps[half + k] * std::cos(kTwoPi * frequency * static_cast<double>(k));
  return acc;
}

}  // namespace spadi::fir
