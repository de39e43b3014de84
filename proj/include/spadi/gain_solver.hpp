// include/spadi/gain_solver.hpp

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

#ifndef SPADI_GAIN_SOLVER_HPP
#define SPADI_GAIN_SOLVER_HPP

#include <cstddef>
#include <vector>

#include "spadi/config.hpp"
#include "spadi/signal.hpp"

namespace spadi {

/// Channels flagged as silent for the current frame. A silent test channel
/// zeroes a gain row; a silent reference channel zeroes a gain column.
struct SilentChannels {
  std::vector<bool> rows;  // test channels
  std::vector<bool> cols;  // reference channels
};

/// Flags channels whose frame energy falls below eps_rel times the maximum
/// channel energy across both signals (with an absolute floor of 1e-30).
/// Throws AllChannelsSilent when every row or every column would be pruned.
SilentChannels prune_silent_channels(const MultichannelSignal& test,
                                     const MultichannelSignal& ref,
                                     double eps_rel);

/// Normal equations for one gain row: gram holds the shifted reference Gram
/// matrix, rhs the test/reference cross-correlations, both restricted to the
/// global validity set. Entries outside active_cols are zero.
struct GramSystem {
  std::size_t channels = 0;
  std::vector<double> gram;  // row-major C x C, symmetric on the active block
  std::vector<double> rhs;   // C
  std::vector<bool> active_cols;
};

GramSystem build_gram_system(const MultichannelSignal& test,
                             const MultichannelSignal& ref,
                             const ShiftMatrix& tau, std::size_t c,
                             const ValiditySets& sets,
                             const std::vector<bool>& active_cols);

/// Solves the gain row through an eigendecomposition of the active Gram
/// block. Eigenvalues below 1e-10 of the largest are treated as zero, which
/// yields the minimum-norm least-squares row for rank-deficient frames.
/// Pruned columns come back exactly zero. Throws SingularSystem when no
/// usable eigenvalue remains.
std::vector<double> solve_gain_row(const GramSystem& sys);

/// Full decomposition of a test signal against a reference: estimated shift
/// matrix, solved gain matrix, projected signal on the global validity set.
struct Decomposition {
  GainMatrix gains;
  ShiftMatrix shifts;
  MultichannelSignal projected;  // defined on sets.global, length |global|
  ValiditySets sets;
};

/// Runs prune -> shift estimation -> per-row gain solves -> projection.
/// Uses cfg.max_shift_ms, cfg.silence_eps_rel and cfg.lowpass_cutoff_fraction.
Decomposition decompose(const MultichannelSignal& test,
                        const MultichannelSignal& ref, const EvalConfig& cfg);

}  // namespace spadi

#endif  // SPADI_GAIN_SOLVER_HPP
