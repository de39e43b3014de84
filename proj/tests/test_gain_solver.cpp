// tests/test_gain_solver.cpp

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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "spadi/gain_solver.hpp"
#include "spadi/projection.hpp"

using namespace spadi;

namespace {

EvalConfig small_config(double max_shift_ms = 1.0) {
  EvalConfig cfg;
  cfg.max_shift_ms = max_shift_ms;
  return cfg;
}

// Relative deviation against a reference row.
double row_distance(const std::vector<double>& a,
                    const std::vector<double>& b) {
  double diff = 0.0;
  double scale = 1e-12;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return diff / scale;
}

// Normal-equation residual, relative to the system scale.
double stationarity_residual(const MultichannelSignal& test,
                             const MultichannelSignal& ref,
                             const Decomposition& dec, std::size_t c) {
  const std::size_t c_count = ref.num_channels();
  const SampleRange valid = dec.sets.global;
  double worst = 0.0;
  double scale = 1e-300;
  for (std::size_t j = 0; j < c_count; ++j) {
    const double lhs = oracle::direct_correlation(
        test.channel(c), ref.channel(j), 0, dec.shifts.at(c, j), valid.first,
        valid.last);
    double rhs = 0.0;
    for (std::size_t d = 0; d < c_count; ++d)
      rhs += dec.gains.at(c, d) *
             oracle::direct_correlation(ref.channel(d), ref.channel(j),
                                        dec.shifts.at(c, d),
                                        dec.shifts.at(c, j), valid.first,
                                        valid.last);
    worst = std::max(worst, std::abs(lhs - rhs));
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  }
  return worst / scale;
}

}  // namespace

TEST_SUITE("gain_solver") {

TEST_CASE("prune: active channels survive, silent ones are flagged") {
  std::mt19937_64 rng(3);
  const auto test = oracle::random_signal(2, 64, 8000, rng);
  const auto ref = oracle::random_signal(2, 64, 8000, rng);
  const SilentChannels none = prune_silent_channels(test, ref, 1e-6);
  CHECK_FALSE(none.rows[0]);
  CHECK_FALSE(none.rows[1]);
  CHECK_FALSE(none.cols[0]);
  CHECK_FALSE(none.cols[1]);

  auto muted = test;
  std::fill(muted.channels[1].begin(), muted.channels[1].end(), 0.0);
  const SilentChannels one = prune_silent_channels(muted, ref, 1e-6);
  CHECK_FALSE(one.rows[0]);
  CHECK(one.rows[1]);
}

TEST_CASE("prune: relative threshold against the loudest channel") {
  MultichannelSignal ref = zeros_like(2, 32, 8000);
  for (std::size_t n = 0; n < 32; ++n) {
    ref.channels[0][n] = 1e-12;  // energy 32e-24
    ref.channels[1][n] = 1.0;    // energy 32: the scale
  }
  const auto test = ref;
  const SilentChannels silent = prune_silent_channels(test, ref, 1e-6);
  CHECK(silent.cols[0]);
  CHECK_FALSE(silent.cols[1]);
}

TEST_CASE("prune: fully silent side throws") {
  std::mt19937_64 rng(5);
  const auto loud = oracle::random_signal(2, 32, 8000, rng);
  const auto silent = zeros_like(2, 32, 8000);
  CHECK_THROWS_AS(prune_silent_channels(silent, loud, 1e-6),
                  AllChannelsSilent);
  CHECK_THROWS_AS(prune_silent_channels(loud, silent, 1e-6),
                  AllChannelsSilent);
  CHECK_THROWS_AS(prune_silent_channels(silent, silent, 1e-6),
                  AllChannelsSilent);
}

TEST_CASE("gram system: zero shifts reduce to the plain Gram matrix") {
  std::mt19937_64 rng(7);
  const auto ref = oracle::random_signal(2, 48, 8000, rng);
  const auto test = oracle::random_signal(2, 48, 8000, rng);
  const ShiftMatrix tau = ShiftMatrix::zeros(2);
  const auto sets = validity_sets(tau, 48);
  const std::vector<bool> active(2, true);

  const GramSystem sys = build_gram_system(test, ref, tau, 0, sets, active);
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t d = 0; d < 2; ++d)
      CHECK(sys.gram[b * 2 + d] ==
            doctest::Approx(oracle::direct_correlation(
                               ref.channel(b), ref.channel(d), 0, 0, 0, 48))
                .epsilon(1e-12));
  CHECK(sys.gram[1] == doctest::Approx(sys.gram[2]).epsilon(1e-12));
}

TEST_CASE("gram system: scalar case and hand-set shifts") {
  MultichannelSignal ref = zeros_like(1, 12, 8000);
  ref.channels[0] = {0, 1, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0};
  MultichannelSignal test = ref;
  ShiftMatrix tau = ShiftMatrix::zeros(1);
  tau.at(0, 0) = 2;
  const auto sets = validity_sets(tau, 12);
  const GramSystem sys =
      build_gram_system(test, ref, tau, 0, sets, {true});
  // sum over [2, 12) of ref[n-2]^2 = 1 + 4 + 1
  CHECK(sys.gram[0] == doctest::Approx(6.0));
  // sum over [2, 12) of test[n] * ref[n-2]: peaks at 4 vs 2 and 8 vs 6 miss;
  // direct enumeration oracle keeps this honest.
  CHECK(sys.rhs[0] == doctest::Approx(oracle::direct_correlation(
                          test.channel(0), ref.channel(0), 0, 2, 2, 12)));
}

TEST_CASE("solve: scalar least squares recovers a doubled channel") {
  std::mt19937_64 rng(11);
  const auto ref = oracle::random_signal(1, 40, 8000, rng);
  MultichannelSignal test = ref;
  for (auto& v : test.channels[0]) v *= 2.0;

  const ShiftMatrix tau = ShiftMatrix::zeros(1);
  const auto sets = validity_sets(tau, 40);
  const GramSystem sys = build_gram_system(test, ref, tau, 0, sets, {true});
  const auto row = solve_gain_row(sys);
  CHECK(row[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("solve: swapped channels produce the permutation gains") {
  std::mt19937_64 rng(13);
  const auto ref = oracle::random_signal(2, 64, 8000, rng);
  MultichannelSignal test = ref;
  std::swap(test.channels[0], test.channels[1]);

  const ShiftMatrix tau = ShiftMatrix::zeros(2);
  const auto sets = validity_sets(tau, 64);
  const std::vector<bool> active(2, true);
  for (std::size_t c = 0; c < 2; ++c) {
    const auto row =
        solve_gain_row(build_gram_system(test, ref, tau, c, sets, active));
    const auto expected =
        oracle::brute_force_gain_row(test, ref, tau, c, 0, 64);
    CHECK(row_distance(row, expected) < 1e-9);
    CHECK(row[c] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(row[1 - c] == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("solve: random instances match the dense normal-equation oracle") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> n_dist(16, 64);
  std::uniform_int_distribution<int> tau_dist(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = n_dist(rng);
    const auto ref = oracle::random_signal(2, n, 8000, rng);
    const auto test = oracle::random_signal(2, n, 8000, rng);
    ShiftMatrix tau = ShiftMatrix::zeros(2);
    for (auto& t : tau.tau) t = tau_dist(rng);

    const auto sets = validity_sets(tau, n);
    const std::vector<bool> active(2, true);
    for (std::size_t c = 0; c < 2; ++c) {
      const auto row =
          solve_gain_row(build_gram_system(test, ref, tau, c, sets, active));
      const auto expected = oracle::brute_force_gain_row(
          test, ref, tau, c, sets.global.first, sets.global.last);
      CHECK(row_distance(row, expected) < 1e-9);
    }
  }
}

TEST_CASE("solve: pruned columns stay exactly zero") {
  std::mt19937_64 rng(19);
  const auto ref = oracle::random_signal(2, 32, 8000, rng);
  const auto test = oracle::random_signal(2, 32, 8000, rng);
  const ShiftMatrix tau = ShiftMatrix::zeros(2);
  const auto sets = validity_sets(tau, 32);
  const auto row = solve_gain_row(
      build_gram_system(test, ref, tau, 0, sets, {true, false}));
  CHECK(row[1] == 0.0);
}

TEST_CASE("solve: an all-zero system is singular") {
  GramSystem sys;
  sys.channels = 2;
  sys.gram.assign(4, 0.0);
  sys.rhs.assign(2, 0.0);
  sys.active_cols = {true, true};
  CHECK_THROWS_AS(solve_gain_row(sys), SingularSystem);
}

TEST_CASE("decompose: identical signals give identity gains, zero shifts") {
  std::mt19937_64 rng(23);
  const auto x = oracle::random_signal(2, 400, 8000, rng);
  const Decomposition dec = decompose(x, x, small_config());
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t d = 0; d < 2; ++d) {
      CHECK(dec.shifts.at(c, d) == 0);
      CHECK(dec.gains.at(c, d) ==
            doctest::Approx(c == d ? 1.0 : 0.0).epsilon(1e-9));
    }
}

TEST_CASE("decompose: per-channel pan gains come back on the diagonal") {
  std::mt19937_64 rng(29);
  const auto ref = oracle::random_signal(2, 512, 8000, rng);
  MultichannelSignal test = ref;
  const double g_left = 0.3;
  const double g_right = 0.8;
  for (auto& v : test.channels[0]) v *= g_left;
  for (auto& v : test.channels[1]) v *= g_right;

  const Decomposition dec = decompose(test, ref, small_config());
  CHECK(dec.gains.at(0, 0) == doctest::Approx(g_left).epsilon(1e-9));
  CHECK(dec.gains.at(1, 1) == doctest::Approx(g_right).epsilon(1e-9));
  CHECK(dec.gains.at(0, 1) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(dec.gains.at(1, 0) == doctest::Approx(0.0).epsilon(1e-9));

  // Closed-form diagonal solve double-checked by the dense oracle.
  for (std::size_t c = 0; c < 2; ++c) {
    const auto expected = oracle::brute_force_gain_row(
        test, ref, dec.shifts, c, dec.sets.global.first,
        dec.sets.global.last);
    std::vector<double> row{dec.gains.at(c, 0), dec.gains.at(c, 1)};
    CHECK(row_distance(row, expected) < 1e-9);
  }
}

TEST_CASE("decompose: delayed and scaled channel is recovered per pair") {
  std::mt19937_64 rng(31);
  const auto ref = oracle::random_signal(2, 2048, 8000, rng);
  MultichannelSignal test = ref;
  // Right channel: reference delayed by 8 and scaled by 0.5.
  auto& right = test.channels[1];
  std::fill(right.begin(), right.end(), 0.0);
  for (std::size_t n = 8; n < right.size(); ++n)
    right[n] = 0.5 * ref.channels[1][n - 8];

  const Decomposition dec = decompose(test, ref, small_config(2.0));
  CHECK(dec.shifts.at(1, 1) == 8);
  CHECK(dec.gains.at(1, 1) == doctest::Approx(0.5).epsilon(1e-2));
  CHECK(std::abs(dec.gains.at(1, 0)) < 0.05);

  const auto expected = oracle::brute_force_gain_row(
      test, ref, dec.shifts, 1, dec.sets.global.first, dec.sets.global.last);
  std::vector<double> row{dec.gains.at(1, 0), dec.gains.at(1, 1)};
  CHECK(row_distance(row, expected) < 1e-9);
}

TEST_CASE("decompose: stationarity of every solved row") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const auto ref = oracle::random_signal(2, 256, 8000, rng);
    const auto test = oracle::random_signal(2, 256, 8000, rng);
    const Decomposition dec = decompose(test, ref, small_config());
    for (std::size_t c = 0; c < 2; ++c)
      CHECK(stationarity_residual(test, ref, dec, c) < 1e-8);
  }
}

TEST_CASE("decompose: solved gains minimize the projection error") {
  std::mt19937_64 rng(41);
  const auto ref = oracle::random_signal(2, 256, 8000, rng);
  const auto test = oracle::random_signal(2, 256, 8000, rng);
  const Decomposition dec = decompose(test, ref, small_config());
  const double best =
      oracle::objective(test, ref, dec.gains, dec.shifts,
                        dec.sets.global.first, dec.sets.global.last);

  std::uniform_real_distribution<double> delta(-0.1, 0.1);
  for (int trial = 0; trial < 100; ++trial) {
    GainMatrix perturbed = dec.gains;
    for (auto& a : perturbed.a) a += delta(rng);
    const double worse =
        oracle::objective(test, ref, perturbed, dec.shifts,
                          dec.sets.global.first, dec.sets.global.last);
    CHECK(worse >= best - 1e-9 * std::max(1.0, best));
  }
}

TEST_CASE("decompose: scaling the test scales the gains, not the shifts") {
  std::mt19937_64 rng(43);
  const auto ref = oracle::random_signal(2, 256, 8000, rng);
  const auto test = oracle::random_signal(2, 256, 8000, rng);
  const Decomposition base = decompose(test, ref, small_config());

  MultichannelSignal doubled = test;
  for (auto& ch : doubled.channels)
    for (auto& v : ch) v *= 2.0;
  const Decomposition scaled = decompose(doubled, ref, small_config());

  CHECK(scaled.shifts.tau == base.shifts.tau);
  for (std::size_t i = 0; i < base.gains.a.size(); ++i)
    CHECK(scaled.gains.a[i] == doctest::Approx(2.0 * base.gains.a[i])
                                   .epsilon(1e-12));
}

TEST_CASE("decompose: consistent channel permutation permutes the solution") {
  std::mt19937_64 rng(47);
  const auto ref = oracle::random_signal(2, 256, 8000, rng);
  const auto test = oracle::random_signal(2, 256, 8000, rng);
  const Decomposition base = decompose(test, ref, small_config());

  MultichannelSignal ref_swapped = ref;
  MultichannelSignal test_swapped = test;
  std::swap(ref_swapped.channels[0], ref_swapped.channels[1]);
  std::swap(test_swapped.channels[0], test_swapped.channels[1]);
  const Decomposition swapped =
      decompose(test_swapped, ref_swapped, small_config());

  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t d = 0; d < 2; ++d) {
      CHECK(swapped.gains.at(c, d) ==
            doctest::Approx(base.gains.at(1 - c, 1 - d)).epsilon(1e-9));
      CHECK(swapped.shifts.at(c, d) == base.shifts.at(1 - c, 1 - d));
    }
}

TEST_CASE("decompose: mismatched shapes are rejected") {
  std::mt19937_64 rng(53);
  const auto a = oracle::random_signal(2, 64, 8000, rng);
  const auto b = oracle::random_signal(1, 64, 8000, rng);
  auto c = oracle::random_signal(2, 64, 16000, rng);
  CHECK_THROWS_AS(decompose(a, b, small_config()), ChannelCountMismatch);
  CHECK_THROWS_AS(decompose(a, c, small_config()), SampleRateMismatch);
  c.sample_rate = 8000;
  c.channels[0].resize(32);
  c.channels[1].resize(32);
  CHECK_THROWS_AS(decompose(a, c, small_config()), LengthMismatch);
}

}  // TEST_SUITE
