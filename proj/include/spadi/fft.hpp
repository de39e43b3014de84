// include/spadi/fft.hpp

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

#ifndef SPADI_FFT_HPP
#define SPADI_FFT_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace spadi::fft {

std::size_t next_pow2(std::size_t n);

/// Real-input DFT of x zero-padded to nfft samples. Returns nfft/2 + 1 bins.
std::vector<std::complex<double>> rfft(std::span<const double> x,
                                       std::size_t nfft);

/// Inverse of rfft, normalized by 1/nfft. Returns nfft real samples.
std::vector<double> irfft(std::span<const std::complex<double>> spectrum,
                          std::size_t nfft);

}  // namespace spadi::fft

#endif  // SPADI_FFT_HPP
