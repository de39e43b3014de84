// include/spadi/projection.hpp

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

#ifndef SPADI_PROJECTION_HPP
#define SPADI_PROJECTION_HPP

#include "spadi/gain_solver.hpp"
#include "spadi/signal.hpp"

namespace spadi {

/// Applies the gain/delay model to the reference:
///   out_c[i] = sum_d a[c][d] * ref_d[n - tau[c][d]],  n = global.first + i.
/// The result is defined on the global validity set and has length |global|.
MultichannelSignal project(const MultichannelSignal& ref,
                           const GainMatrix& gains, const ShiftMatrix& shifts);

/// Error decomposition on the global validity set. All three signals share
/// the projected-domain indexing (sample i corresponds to absolute index
/// global.first + i). `total` is formed as spatial + residual elementwise, so
/// the decomposition identity holds exactly in floating point.
struct ErrorSignals {
  MultichannelSignal spatial;   // projected - reference
  MultichannelSignal residual;  // test - projected
  MultichannelSignal total;     // spatial + residual
};

ErrorSignals error_signals(const MultichannelSignal& test,
                           const MultichannelSignal& ref,
                           const Decomposition& dec);

}  // namespace spadi

#endif  // SPADI_PROJECTION_HPP
