// tests/oracles.hpp

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

// Independent brute-force reference routes used as test oracles. Everything
// here is deliberately written as plain loops over time-domain samples and
// stays independent of the FFT / eigensolver implementation paths it checks.

#ifndef SPADI_TESTS_ORACLES_HPP
#define SPADI_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spadi/signal.hpp"

namespace spadi::oracle {

// Validity sets by exhaustive index enumeration: sample n is valid for
// channel c iff every shifted read n - tau[c][d] lands inside [0, N).
struct EnumeratedValidity {
  std::vector<std::vector<bool>> per_channel;  // C x N
  std::vector<bool> global;                    // N
};

inline EnumeratedValidity enumerate_validity(const ShiftMatrix& tau,
                                             std::size_t n_samples) {
  const std::size_t c_count = tau.channels;
  EnumeratedValidity v;
  v.per_channel.assign(c_count, std::vector<bool>(n_samples, false));
  v.global.assign(n_samples, true);
  for (std::size_t c = 0; c < c_count; ++c) {
    for (std::size_t n = 0; n < n_samples; ++n) {
      bool ok = true;
      for (std::size_t d = 0; d < c_count; ++d) {
        const long shifted = static_cast<long>(n) - tau.at(c, d);
        if (shifted < 0 || shifted >= static_cast<long>(n_samples)) ok = false;
      }
      v.per_channel[c][n] = ok;
      if (!ok) v.global[n] = false;
    }
  }
  return v;
}

// Plain summation form of the generalized correlation operator.
inline double direct_correlation(std::span<const double> u,
                                 std::span<const double> v, long nu, long eta,
                                 std::size_t first, std::size_t last) {
  double acc = 0.0;
  for (std::size_t n = first; n < last; ++n)
    acc += u[static_cast<std::size_t>(static_cast<long>(n) - nu)] *
           v[static_cast<std::size_t>(static_cast<long>(n) - eta)];
  return acc;
}

// Time-domain delay search over lags -K..K using the overlap window
// M_kappa = [max(0, kappa), N + min(0, kappa)). Visits lags in the order
// 0, -1, +1, ... so ties break exactly like the implementation contract.
inline int brute_force_shift(std::span<const double> test,
                             std::span<const double> ref, int k_max) {
  const auto n = static_cast<long>(test.size());
  const auto corr_at = [&](int kappa) {
    const long first = std::max<long>(0, kappa);
    const long last = n + std::min<long>(0, kappa);
    double acc = 0.0;
    for (long i = first; i < last; ++i) acc += test[i] * ref[i - kappa];
    return std::abs(acc);
  };
  int best_lag = 0;
  double best = corr_at(0);
  for (int k = 1; k <= k_max; ++k) {
    for (const int kappa : {-k, k}) {
      const double v = corr_at(kappa);
      if (v > best) {
        best = v;
        best_lag = kappa;
      }
    }
  }
  return best_lag;
}

// Gauss-Jordan solve with partial pivoting (row-major square matrix).
inline std::vector<double> gauss_solve(std::vector<double> a,
                                       std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (std::abs(a[row * n + col]) > std::abs(a[pivot * n + col]))
        pivot = row;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(a[col * n + j], a[pivot * n + j]);
      std::swap(b[col], b[pivot]);
    }
    const double diag = a[col * n + col];
    for (std::size_t j = 0; j < n; ++j) a[col * n + j] /= diag;
    b[col] /= diag;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const double factor = a[row * n + col];
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j)
        a[row * n + j] -= factor * a[col * n + j];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

// Explicit dense normal-equation solve for one gain row: builds the shifted
// Gram matrix and cross-correlation vector by direct summation over the
// global validity range and solves with Gauss-Jordan.
inline std::vector<double> brute_force_gain_row(const MultichannelSignal& test,
                                                const MultichannelSignal& ref,
                                                const ShiftMatrix& tau,
                                                std::size_t c,
                                                std::size_t first,
                                                std::size_t last) {
  const std::size_t c_count = ref.num_channels();
  std::vector<double> gram(c_count * c_count, 0.0);
  std::vector<double> rhs(c_count, 0.0);
  for (std::size_t b = 0; b < c_count; ++b)
    for (std::size_t d = 0; d < c_count; ++d)
      gram[b * c_count + d] = direct_correlation(
          ref.channel(b), ref.channel(d), tau.at(c, b), tau.at(c, d), first,
          last);
  for (std::size_t d = 0; d < c_count; ++d)
    rhs[d] = direct_correlation(test.channel(c), ref.channel(d), 0,
                                tau.at(c, d), first, last);
  return gauss_solve(std::move(gram), std::move(rhs));
}

// Squared projection error over the global validity range for a full gain /
// shift assignment.
inline double objective(const MultichannelSignal& test,
                        const MultichannelSignal& ref, const GainMatrix& gains,
                        const ShiftMatrix& tau, std::size_t first,
                        std::size_t last) {
  double acc = 0.0;
  for (std::size_t c = 0; c < test.num_channels(); ++c) {
    for (std::size_t n = first; n < last; ++n) {
      double projected = 0.0;
      for (std::size_t d = 0; d < ref.num_channels(); ++d)
        projected += gains.at(c, d) *
                     ref.channel(d)[static_cast<std::size_t>(
                         static_cast<long>(n) - tau.at(c, d))];
      const double diff = test.channel(c)[n] - projected;
      acc += diff * diff;
    }
  }
  return acc;
}

inline MultichannelSignal random_signal(std::size_t channels, std::size_t n,
                                        int rate, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  MultichannelSignal out = zeros_like(channels, n, rate);
  for (auto& ch : out.channels)
    for (auto& v : ch) v = gauss(rng);
  return out;
}

}  // namespace spadi::oracle

#endif  // SPADI_TESTS_ORACLES_HPP
