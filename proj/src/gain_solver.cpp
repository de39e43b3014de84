// src/gain_solver.cpp

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

#include "spadi/gain_solver.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <vector>

#include "spadi/correlation.hpp"
#include "spadi/projection.hpp"

namespace spadi {

namespace {

constexpr double kAbsoluteSilenceFloor = 1e-30;
constexpr double kEigenvalueCutoffRel = 1e-10;

std::vector<double> channel_energies(const MultichannelSignal& x) {
  std::vector<double> e(x.num_channels());
  for (std::size_t c = 0; c < x.num_channels(); ++c)
    e[c] = channel_energy(x.channel(c), {0, x.num_samples()});
  return e;
}

}  // namespace

SilentChannels prune_silent_channels(const MultichannelSignal& test,
                                     const MultichannelSignal& ref,
                                     double eps_rel) {
  if (eps_rel <= 0.0) throw InvalidArgument("silence threshold must be > 0");
  if (test.num_channels() != ref.num_channels())
    throw ChannelCountMismatch("test/reference channel counts differ");

  const auto test_energy = channel_energies(test);
  const auto ref_energy = channel_energies(ref);
  double scale = 0.0;
  for (double e : test_energy) scale = std::max(scale, e);
  for (double e : ref_energy) scale = std::max(scale, e);
  const double threshold = std::max(eps_rel * scale, kAbsoluteSilenceFloor);

  SilentChannels silent;
  silent.rows.resize(test.num_channels());
  silent.cols.resize(test.num_channels());
  bool any_row_active = false;
  bool any_col_active = false;
  for (std::size_t c = 0; c < test.num_channels(); ++c) {
    silent.rows[c] = test_energy[c] < threshold;
    silent.cols[c] = ref_energy[c] < threshold;
    any_row_active |= !silent.rows[c];
    any_col_active |= !silent.cols[c];
  }
  if (!any_row_active)
    throw AllChannelsSilent("every test channel is silent in this frame");
  if (!any_col_active)
    throw AllChannelsSilent("every reference channel is silent in this frame");
  return silent;
}

GramSystem build_gram_system(const MultichannelSignal& test,
                             const MultichannelSignal& ref,
                             const ShiftMatrix& tau, std::size_t c,
                             const ValiditySets& sets,
                             const std::vector<bool>& active_cols) {
  const std::size_t c_count = ref.num_channels();
  if (sets.global.empty()) throw EmptyValiditySet("empty global validity set");

  GramSystem sys;
  sys.channels = c_count;
  sys.gram.assign(c_count * c_count, 0.0);
  sys.rhs.assign(c_count, 0.0);
  sys.active_cols = active_cols;

  // Both the Gram entries and the right-hand side are evaluated over the
  // global validity set so the normal equations stay consistent.
  for (std::size_t b = 0; b < c_count; ++b) {
    if (!active_cols[b]) continue;
    for (std::size_t d = b; d < c_count; ++d) {
      if (!active_cols[d]) continue;
      const double r =
          generalized_correlation(ref.channel(b), ref.channel(d), tau.at(c, b),
                                  tau.at(c, d), sets.global);
      sys.gram[b * c_count + d] = r;
      sys.gram[d * c_count + b] = r;
    }
  }
  for (std::size_t d = 0; d < c_count; ++d) {
    if (!active_cols[d]) continue;
    sys.rhs[d] = generalized_correlation(test.channel(c), ref.channel(d), 0,
                                         tau.at(c, d), sets.global);
  }
  return sys;
}

std::vector<double> solve_gain_row(const GramSystem& sys) {
  const std::size_t c_count = sys.channels;
  std::vector<std::size_t> active;
  for (std::size_t d = 0; d < c_count; ++d)
    if (sys.active_cols[d]) active.push_back(d);
  if (active.empty()) throw SingularSystem("no active reference channels");

  const auto m = static_cast<Eigen::Index>(active.size());
  Eigen::MatrixXd gram(m, m);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    rhs(i) = sys.rhs[active[i]];
    for (Eigen::Index j = 0; j < m; ++j)
      gram(i, j) = sys.gram[active[i] * c_count + active[j]];
  }

  // Spectral pseudo-inverse: eigenvalues below the relative cutoff are
  // dropped, which yields the minimum-norm row on rank-deficient frames
  // (e.g. a mono source feeding every reference channel).
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram);
  if (eig.info() != Eigen::Success)
    throw SingularSystem("eigendecomposition failed");
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  const double lambda_max = lambda.maxCoeff();
  if (!(lambda_max > 0.0))
    throw SingularSystem("Gram matrix has no positive eigenvalue");
  const double cutoff = kEigenvalueCutoffRel * lambda_max;

  Eigen::VectorXd inv_lambda(m);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (lambda(i) > cutoff) {
      inv_lambda(i) = 1.0 / lambda(i);
      ++rank;
    } else {
      inv_lambda(i) = 0.0;
    }
  }
  if (rank == 0) throw SingularSystem("effective rank zero after cutoff");

  const Eigen::VectorXd solution =
      eig.eigenvectors() *
      (inv_lambda.asDiagonal() * (eig.eigenvectors().transpose() * rhs));

  std::vector<double> row(c_count, 0.0);
  for (Eigen::Index i = 0; i < m; ++i) row[active[i]] = solution(i);
  return row;
}

Decomposition decompose(const MultichannelSignal& test,
                        const MultichannelSignal& ref, const EvalConfig& cfg) {
  if (test.num_channels() != ref.num_channels())
    throw ChannelCountMismatch("test/reference channel counts differ");
  if (test.num_samples() != ref.num_samples())
    throw LengthMismatch("test/reference lengths differ");
  if (test.sample_rate != ref.sample_rate)
    throw SampleRateMismatch("test/reference sample rates differ");

  const SilentChannels silent =
      prune_silent_channels(test, ref, cfg.silence_eps_rel);

  DelaySearchConfig search;
  search.max_shift_samples = cfg.max_shift_samples(test.sample_rate);
  search.lowpass_cutoff_fraction = cfg.lowpass_cutoff_fraction;

  std::vector<bool> active_cols(silent.cols.size());
  for (std::size_t d = 0; d < active_cols.size(); ++d)
    active_cols[d] = !silent.cols[d];

  Decomposition dec;
  dec.shifts =
      estimate_shift_matrix(test, ref, search, silent.rows, silent.cols);
  dec.sets = validity_sets(dec.shifts, test.num_samples());
  dec.gains = GainMatrix::zeros(test.num_channels());
  for (std::size_t c = 0; c < test.num_channels(); ++c) {
    if (silent.rows[c]) continue;  // row stays exactly zero
    const GramSystem sys =
        build_gram_system(test, ref, dec.shifts, c, dec.sets, active_cols);
    const std::vector<double> row = solve_gain_row(sys);
    for (std::size_t d = 0; d < row.size(); ++d) dec.gains.at(c, d) = row[d];
  }
  dec.projected = project(ref, dec.gains, dec.shifts);
  return dec;
}

}  // namespace spadi
