// include/spadi/wav.hpp

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

#ifndef SPADI_WAV_HPP
#define SPADI_WAV_HPP

#include <cstddef>
#include <filesystem>

#include "spadi/signal.hpp"

namespace spadi {

enum class WavFormat { pcm16, pcm24, float32 };

std::string to_string(WavFormat f);

struct WavMeta {
  int sample_rate = 0;
  std::size_t channels = 0;
  WavFormat format = WavFormat::pcm16;
  std::size_t num_samples = 0;  // per channel
};

/// Reads a RIFF/WAVE file (PCM16, PCM24 or IEEE float32). Integer samples
/// are normalized to [-1, 1) by 2^(bits-1); auxiliary chunks are skipped.
MultichannelSignal read_wav(const std::filesystem::path& path);

/// Header-only read of the same formats.
WavMeta read_wav_meta(const std::filesystem::path& path);

/// Writes an interleaved data chunk in the requested format. For integer
/// formats samples are clipped to the representable range; the number of
/// clipped samples is returned (0 for float32).
std::size_t write_wav(const std::filesystem::path& path,
                      const MultichannelSignal& x, WavFormat format);

struct PairCheck {
  std::size_t common_samples = 0;
  bool trimmed = false;  // lengths differed and were cut to the minimum
};

/// Checks that two files are comparable: equal sample rates and channel
/// counts. A length mismatch within 1% trims to the common minimum (flagged
/// in the result so callers can warn); a larger mismatch throws
/// LengthMismatch.
PairCheck validate_pair(const WavMeta& ref, const WavMeta& test);

}  // namespace spadi

#endif  // SPADI_WAV_HPP
