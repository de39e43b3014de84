// src/wav.cpp

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

#include "spadi/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

namespace spadi {

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatIeeeFloat = 3;

struct FmtChunk {
  std::uint16_t format = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits_per_sample = 0;
};

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) |
         static_cast<std::uint32_t>(p[1]) << 8 |
         static_cast<std::uint32_t>(p[2]) << 16 |
         static_cast<std::uint32_t>(p[3]) << 24;
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void append_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xFF));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xFF));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xFF));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xFF));
}

void append_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xFF));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xFF));
}

void append_tag(std::vector<unsigned char>& out, const char* tag) {
  out.insert(out.end(), tag, tag + 4);
}

struct ParsedWav {
  FmtChunk fmt;
  std::vector<unsigned char> data;
  std::size_t num_samples = 0;
};

WavFormat classify(const FmtChunk& fmt) {
  if (fmt.format == kFormatPcm && fmt.bits_per_sample == 16)
    return WavFormat::pcm16;
  if (fmt.format == kFormatPcm && fmt.bits_per_sample == 24)
    return WavFormat::pcm24;
  if (fmt.format == kFormatIeeeFloat && fmt.bits_per_sample == 32)
    return WavFormat::float32;
  throw UnsupportedFormat("only PCM16, PCM24 and IEEE float32 are supported");
}

ParsedWav parse_wav(const std::filesystem::path& path, bool want_data) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string());

  unsigned char header[12];
  if (!in.read(reinterpret_cast<char*>(header), 12))
    throw MalformedHeader("file too short for a RIFF header");
  if (std::memcmp(header, "RIFF", 4) != 0 ||
      std::memcmp(header + 8, "WAVE", 4) != 0)
    throw MalformedHeader("not a RIFF/WAVE file");

  ParsedWav wav;
  bool have_fmt = false;
  while (true) {
    unsigned char chunk_header[8];
    if (!in.read(reinterpret_cast<char*>(chunk_header), 8)) break;
    const std::uint32_t chunk_size = read_u32(chunk_header + 4);

    if (std::memcmp(chunk_header, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw MalformedHeader("fmt chunk too small");
      std::vector<unsigned char> body(chunk_size);
      if (!in.read(reinterpret_cast<char*>(body.data()), chunk_size))
        throw TruncatedData("fmt chunk cut short");
      wav.fmt.format = read_u16(body.data());
      wav.fmt.channels = read_u16(body.data() + 2);
      wav.fmt.sample_rate = read_u32(body.data() + 4);
      wav.fmt.bits_per_sample = read_u16(body.data() + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk_header, "data", 4) == 0) {
      if (!have_fmt) throw MalformedHeader("data chunk precedes fmt chunk");
      if (wav.fmt.channels == 0) throw MalformedHeader("zero channel count");
      const std::size_t bytes_per_sample = wav.fmt.bits_per_sample / 8;
      const std::size_t frame_bytes = bytes_per_sample * wav.fmt.channels;
      if (frame_bytes == 0 || chunk_size % frame_bytes != 0)
        throw MalformedHeader("data size inconsistent with the frame size");
      wav.num_samples = chunk_size / frame_bytes;
      if (want_data) {
        wav.data.resize(chunk_size);
        if (!in.read(reinterpret_cast<char*>(wav.data.data()), chunk_size))
          throw TruncatedData("data chunk cut short");
      }
      return wav;  // auxiliary chunks after data are irrelevant
    } else {
      // Skip auxiliary chunks; chunk payloads are word-aligned.
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
      if (!in) throw TruncatedData("auxiliary chunk cut short");
    }
  }
  throw MalformedHeader("missing data chunk");
}

}  // namespace

std::string to_string(WavFormat f) {
  switch (f) {
    case WavFormat::pcm16: return "pcm16";
    case WavFormat::pcm24: return "pcm24";
    case WavFormat::float32: return "float32";
  }
  return "unknown";
}

WavMeta read_wav_meta(const std::filesystem::path& path) {
  const ParsedWav wav = parse_wav(path, /*want_data=*/false);
  WavMeta meta;
  meta.sample_rate = static_cast<int>(wav.fmt.sample_rate);
  meta.channels = wav.fmt.channels;
  meta.format = classify(wav.fmt);
  meta.num_samples = wav.num_samples;
  return meta;
}

MultichannelSignal read_wav(const std::filesystem::path& path) {
  const ParsedWav wav = parse_wav(path, /*want_data=*/true);
  const WavFormat format = classify(wav.fmt);
  const std::size_t channels = wav.fmt.channels;
  const std::size_t n = wav.num_samples;

  MultichannelSignal out =
      zeros_like(channels, n, static_cast<int>(wav.fmt.sample_rate));
  const unsigned char* p = wav.data.data();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      double value = 0.0;
      switch (format) {
        case WavFormat::pcm16: {
          const auto raw = static_cast<std::int16_t>(read_u16(p));
          value = static_cast<double>(raw) / 32768.0;
          p += 2;
          break;
        }
        case WavFormat::pcm24: {
          std::int32_t raw = p[0] | (p[1] << 8) | (p[2] << 16);
          if (raw & 0x800000) raw |= ~0xFFFFFF;
          value = static_cast<double>(raw) / 8388608.0;
          p += 3;
          break;
        }
        case WavFormat::float32: {
          float f = 0.0f;
          std::memcpy(&f, p, 4);
          if (!std::isfinite(f))
            throw UnsupportedFormat("non-finite float sample");
          value = static_cast<double>(f);
          p += 4;
          break;
        }
      }
      out.channels[c][i] = value;
    }
  }
  return out;
}

std::size_t write_wav(const std::filesystem::path& path,
                      const MultichannelSignal& x, WavFormat format) {
  validate_signal(x);
  const std::size_t channels = x.num_channels();
  const std::size_t n = x.num_samples();
  const std::size_t bytes_per_sample = format == WavFormat::pcm16   ? 2
                                       : format == WavFormat::pcm24 ? 3
                                                                    : 4;
  const std::size_t data_bytes = bytes_per_sample * channels * n;
  const bool is_float = format == WavFormat::float32;

  std::vector<unsigned char> out;
  out.reserve(data_bytes + 64);
  append_tag(out, "RIFF");
  append_u32(out, 0);  // patched below
  append_tag(out, "WAVE");

  append_tag(out, "fmt ");
  append_u32(out, 16);
  append_u16(out, is_float ? kFormatIeeeFloat : kFormatPcm);
  append_u16(out, static_cast<std::uint16_t>(channels));
  append_u32(out, static_cast<std::uint32_t>(x.sample_rate));
  const auto block_align =
      static_cast<std::uint16_t>(bytes_per_sample * channels);
  append_u32(out, static_cast<std::uint32_t>(x.sample_rate) * block_align);
  append_u16(out, block_align);
  append_u16(out, static_cast<std::uint16_t>(bytes_per_sample * 8));

  if (is_float) {
    append_tag(out, "fact");
    append_u32(out, 4);
    append_u32(out, static_cast<std::uint32_t>(n));
  }

  append_tag(out, "data");
  append_u32(out, static_cast<std::uint32_t>(data_bytes));

  std::size_t clipped = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      const double v = x.channels[c][i];
      switch (format) {
        case WavFormat::pcm16: {
          auto raw = std::lrint(v * 32768.0);
          if (raw < -32768 || raw > 32767) {
            raw = std::clamp<long>(raw, -32768, 32767);
            ++clipped;
          }
          append_u16(out, static_cast<std::uint16_t>(
                              static_cast<std::int16_t>(raw)));
          break;
        }
        case WavFormat::pcm24: {
          auto raw = std::lrint(v * 8388608.0);
          if (raw < -8388608 || raw > 8388607) {
            raw = std::clamp<long>(raw, -8388608, 8388607);
            ++clipped;
          }
          const auto u = static_cast<std::uint32_t>(static_cast<std::int32_t>(raw));
          out.push_back(static_cast<unsigned char>(u & 0xFF));
          out.push_back(static_cast<unsigned char>((u >> 8) & 0xFF));
          out.push_back(static_cast<unsigned char>((u >> 16) & 0xFF));
          break;
        }
        case WavFormat::float32: {
          const auto f = static_cast<float>(v);
          unsigned char bytes[4];
          std::memcpy(bytes, &f, 4);
          out.insert(out.end(), bytes, bytes + 4);
          break;
        }
      }
    }
  }
  if (data_bytes & 1) out.push_back(0);  // RIFF chunks are word aligned

  const auto riff_size = static_cast<std::uint32_t>(out.size() - 8);
  out[4] = static_cast<unsigned char>(riff_size & 0xFF);
  out[5] = static_cast<unsigned char>((riff_size >> 8) & 0xFF);
  out[6] = static_cast<unsigned char>((riff_size >> 16) & 0xFF);
  out[7] = static_cast<unsigned char>((riff_size >> 24) & 0xFF);

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoFailure("cannot open " + path.string() + " for writing");
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) throw IoFailure("short write to " + path.string());
  return clipped;
}

PairCheck validate_pair(const WavMeta& ref, const WavMeta& test) {
  if (ref.sample_rate != test.sample_rate)
    throw SampleRateMismatch("sample rates differ: " +
                             std::to_string(ref.sample_rate) + " vs " +
                             std::to_string(test.sample_rate));
  if (ref.channels != test.channels)
    throw ChannelCountMismatch("channel counts differ: " +
                               std::to_string(ref.channels) + " vs " +
                               std::to_string(test.channels));

  PairCheck check;
  check.common_samples = std::min(ref.num_samples, test.num_samples);
  if (ref.num_samples != test.num_samples) {
    const std::size_t longer = std::max(ref.num_samples, test.num_samples);
    const std::size_t diff = longer - check.common_samples;
    if (static_cast<double>(diff) > 0.01 * static_cast<double>(longer))
      throw LengthMismatch("lengths differ by more than 1%: " +
                           std::to_string(ref.num_samples) + " vs " +
                           std::to_string(test.num_samples));
    check.trimmed = true;
  }
  return check;
}

}  // namespace spadi
