// src/fft.cpp

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

#include "spadi/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cstring>
#include <mutex>

namespace spadi::fft {

namespace {

// FFTW's planner is not thread safe; executions on distinct plans are.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  void* ptr = nullptr;
  explicit FftwBuffer(std::size_t bytes) : ptr(fftw_malloc(bytes)) {}
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<std::complex<double>> rfft(std::span<const double> x,
                                       std::size_t nfft) {
  const std::size_t bins = nfft / 2 + 1;
  FftwBuffer in(sizeof(double) * nfft);
  FftwBuffer out(sizeof(fftw_complex) * bins);
  auto* in_d = static_cast<double*>(in.ptr);
  std::fill(in_d, in_d + nfft, 0.0);
  std::memcpy(in_d, x.data(), sizeof(double) * std::min(x.size(), nfft));

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(nfft), in_d,
                                static_cast<fftw_complex*>(out.ptr),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  std::vector<std::complex<double>> spectrum(bins);
  std::memcpy(spectrum.data(), out.ptr, sizeof(fftw_complex) * bins);
  return spectrum;
}

std::vector<double> irfft(std::span<const std::complex<double>> spectrum,
                          std::size_t nfft) {
  const std::size_t bins = nfft / 2 + 1;
  FftwBuffer in(sizeof(fftw_complex) * bins);
  FftwBuffer out(sizeof(double) * nfft);
  auto* in_c = static_cast<fftw_complex*>(in.ptr);
  std::memset(in_c, 0, sizeof(fftw_complex) * bins);
  std::memcpy(in_c, spectrum.data(),
              sizeof(fftw_complex) * std::min(spectrum.size(), bins));

  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    plan = fftw_plan_dft_c2r_1d(static_cast<int>(nfft), in_c,
                                static_cast<double*>(out.ptr), FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  std::vector<double> result(nfft);
  const auto* out_d = static_cast<const double*>(out.ptr);
  for (std::size_t i = 0; i < nfft; ++i)
    result[i] = out_d[i] / static_cast<double>(nfft);
  return result;
}

}  // namespace spadi::fft
