// tests/test_correlation.cpp

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

#include <random>
#include <vector>

#include "oracles.hpp"
#include "spadi/correlation.hpp"

using namespace spadi;

namespace {

std::vector<double> impulse(std::size_t n, std::size_t at, double value = 1.0) {
  std::vector<double> x(n, 0.0);
  x[at] = value;
  return x;
}

std::vector<double> delayed_copy(std::span<const double> x, int d) {
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t n = 0; n < x.size(); ++n) {
    const long src = static_cast<long>(n) - d;
    if (src >= 0 && src < static_cast<long>(x.size())) out[n] = x[src];
  }
  return out;
}

}  // namespace

TEST_SUITE("correlation") {

TEST_CASE("generalized correlation: impulse identities") {
  const std::size_t n = 16;
  const auto unit = impulse(n, 0);
  CHECK(generalized_correlation(unit, unit, 0, 0, {0, n}) ==
        doctest::Approx(1.0));

  // Impulses at 5 and 2: shifting the second argument by 3 aligns them;
  // shifting the first argument moves the product off both peaks.
  const auto u = impulse(n, 5);
  const auto v = impulse(n, 2);
  CHECK(generalized_correlation(u, v, 0, 3, {3, n}) == doctest::Approx(1.0));
  CHECK(generalized_correlation(u, v, 3, 0, {3, n}) == doctest::Approx(0.0));
  CHECK(oracle::direct_correlation(u, v, 0, 3, 3, n) == doctest::Approx(1.0));
}

TEST_CASE("generalized correlation: nu == eta collapses to an energy") {
  std::mt19937_64 rng(2);
  const auto x = oracle::random_signal(1, 32, 8000, rng);
  const auto span = x.channel(0);
  const double corr = generalized_correlation(span, span, 4, 4, {4, 32});
  CHECK(corr == doctest::Approx(channel_energy(span, {0, 28})).epsilon(1e-12));
}

TEST_CASE("generalized correlation: shifted reads outside the signal throw") {
  const auto u = impulse(8, 0);
  CHECK_THROWS_AS(generalized_correlation(u, u, 3, 0, {0, 8}),
                  IndexOutOfRange);
  CHECK_THROWS_AS(generalized_correlation(u, u, 0, -2, {0, 8}),
                  IndexOutOfRange);
}

TEST_CASE("estimate_shift: impulse alignment") {
  const std::size_t n = 64;
  DelaySearchConfig cfg{20, std::nullopt};
  CHECK(estimate_shift(impulse(n, 15), impulse(n, 10), cfg) == 5);
}

TEST_CASE("estimate_shift: identical signals give zero lag") {
  std::mt19937_64 rng(7);
  const auto x = oracle::random_signal(1, 128, 8000, rng);
  DelaySearchConfig cfg{16, std::nullopt};
  CHECK(estimate_shift(x.channel(0), x.channel(0), cfg) == 0);
}

TEST_CASE("estimate_shift: inversion is caught by the magnitude") {
  std::mt19937_64 rng(19);
  const auto ref = oracle::random_signal(1, 96, 8000, rng);
  std::vector<double> test = delayed_copy(ref.channel(0), 7);
  for (auto& v : test) v = -v;

  DelaySearchConfig cfg{10, std::nullopt};
  const int estimated = estimate_shift(test, ref.channel(0), cfg);
  CHECK(estimated == 7);
  CHECK(estimated == oracle::brute_force_shift(test, ref.channel(0), 10));
}

TEST_CASE("estimate_shift: FFT path equals the brute-force argmax") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> n_dist(12, 64);
  std::uniform_int_distribution<int> k_dist(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = n_dist(rng);
    const int k_max = std::min<int>(k_dist(rng), static_cast<int>(n) - 1);
    const auto pair = oracle::random_signal(2, n, 8000, rng);
    DelaySearchConfig cfg{k_max, std::nullopt};
    CHECK(estimate_shift(pair.channel(0), pair.channel(1), cfg) ==
          oracle::brute_force_shift(pair.channel(0), pair.channel(1), k_max));
  }
}

TEST_CASE("estimate_shift: round trip for planted delays") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> d_dist(-12, 12);
  const auto ref = oracle::random_signal(1, 256, 8000, rng);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = d_dist(rng);
    const auto test = delayed_copy(ref.channel(0), d);
    DelaySearchConfig cfg{12, std::nullopt};
    CHECK(estimate_shift(test, ref.channel(0), cfg) == d);
  }
}

TEST_CASE("estimate_shift: scaling either input leaves the lag unchanged") {
  std::mt19937_64 rng(31);
  const auto pair = oracle::random_signal(2, 100, 8000, rng);
  DelaySearchConfig cfg{9, std::nullopt};
  const int base = estimate_shift(pair.channel(0), pair.channel(1), cfg);

  for (const double alpha : {2.0, 0.125, -3.0}) {
    MultichannelSignal scaled = pair;
    for (auto& v : scaled.channels[0]) v *= alpha;
    CHECK(estimate_shift(scaled.channel(0), scaled.channel(1), cfg) == base);
  }
}

TEST_CASE("estimate_shift: result stays inside the search range") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 25; ++trial) {
    const auto pair = oracle::random_signal(2, 48, 8000, rng);
    DelaySearchConfig cfg{5, std::nullopt};
    const int tau = estimate_shift(pair.channel(0), pair.channel(1), cfg);
    CHECK(tau >= -5);
    CHECK(tau <= 5);
  }
}

TEST_CASE("estimate_shift: zero-energy input is degenerate") {
  const std::vector<double> silent(32, 0.0);
  const auto active = impulse(32, 3);
  DelaySearchConfig cfg{4, std::nullopt};
  CHECK_THROWS_AS(estimate_shift(silent, active, cfg), DegenerateInput);
  CHECK_THROWS_AS(estimate_shift(active, silent, cfg), DegenerateInput);
}

TEST_CASE("estimate_shift: lowpass weighting keeps a broadband delay") {
  std::mt19937_64 rng(41);
  const auto ref = oracle::random_signal(1, 512, 16000, rng);
  const auto test = delayed_copy(ref.channel(0), 6);
  DelaySearchConfig cfg{16, 0.5};
  CHECK(estimate_shift(test, ref.channel(0), cfg) == 6);
}

TEST_CASE("estimate_shift_matrix: identical signals give a zero matrix") {
  std::mt19937_64 rng(43);
  const auto x = oracle::random_signal(2, 128, 8000, rng);
  const std::vector<bool> none(2, false);
  DelaySearchConfig cfg{8, std::nullopt};
  const ShiftMatrix shifts = estimate_shift_matrix(x, x, cfg, none, none);
  for (const int tau : shifts.tau) CHECK(tau == 0);
}

TEST_CASE("estimate_shift_matrix: delayed channel shows up in its row") {
  std::mt19937_64 rng(47);
  const auto mono = oracle::random_signal(1, 256, 8000, rng);
  MultichannelSignal ref = zeros_like(2, 256, 8000);
  ref.channels[0] = mono.channels[0];
  ref.channels[1] = mono.channels[0];

  MultichannelSignal test = ref;
  test.channels[1] = delayed_copy(ref.channel(1), 8);

  const std::vector<bool> none(2, false);
  DelaySearchConfig cfg{16, std::nullopt};
  const ShiftMatrix shifts = estimate_shift_matrix(test, ref, cfg, none, none);
  CHECK(shifts.at(0, 0) == 0);
  CHECK(shifts.at(0, 1) == 0);
  CHECK(shifts.at(1, 0) == 8);
  CHECK(shifts.at(1, 1) == 8);

  // Brute-force per-pair agreement.
  for (std::size_t c = 0; c < 2; ++c)
    for (std::size_t d = 0; d < 2; ++d)
      CHECK(shifts.at(c, d) ==
            oracle::brute_force_shift(test.channel(c), ref.channel(d), 16));
}

TEST_CASE("estimate_shift_matrix: silent rows and columns stay zero") {
  std::mt19937_64 rng(53);
  auto test = oracle::random_signal(2, 64, 8000, rng);
  const auto ref = oracle::random_signal(2, 64, 8000, rng);
  std::fill(test.channels[1].begin(), test.channels[1].end(), 0.0);

  const std::vector<bool> silent_rows{false, true};
  const std::vector<bool> silent_cols{false, false};
  DelaySearchConfig cfg{6, std::nullopt};
  const ShiftMatrix shifts =
      estimate_shift_matrix(test, ref, cfg, silent_rows, silent_cols);
  CHECK(shifts.at(1, 0) == 0);
  CHECK(shifts.at(1, 1) == 0);
}

TEST_CASE("estimate_shift_matrix: clashing delays leave no valid samples") {
  const std::size_t n = 10;
  MultichannelSignal ref = zeros_like(2, n, 8000);
  ref.channels[0][0] = 1.0;
  ref.channels[1][9] = 1.0;
  MultichannelSignal test = zeros_like(2, n, 8000);
  test.channels[0][8] = 1.0;  // +8 against reference channel 0
  test.channels[1][1] = 1.0;  // -8 against reference channel 1

  const std::vector<bool> none(2, false);
  DelaySearchConfig cfg{8, std::nullopt};
  CHECK_THROWS_AS(estimate_shift_matrix(test, ref, cfg, none, none),
                  EmptyValiditySet);
}

}  // TEST_SUITE
