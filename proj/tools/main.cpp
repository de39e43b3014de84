// tools/main.cpp

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

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "spadi/degradations.hpp"
#include "spadi/metrics.hpp"
#include "spadi/report.hpp"
#include "spadi/sweep.hpp"
#include "spadi/wav.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;

bool is_usage_error(const spadi::Error& e) {
  return dynamic_cast<const spadi::IoFailure*>(&e) ||
         dynamic_cast<const spadi::MalformedHeader*>(&e) ||
         dynamic_cast<const spadi::UnsupportedFormat*>(&e) ||
         dynamic_cast<const spadi::TruncatedData*>(&e) ||
         dynamic_cast<const spadi::SampleRateMismatch*>(&e) ||
         dynamic_cast<const spadi::ChannelCountMismatch*>(&e) ||
         dynamic_cast<const spadi::LengthMismatch*>(&e) ||
         dynamic_cast<const spadi::SignalTooShort*>(&e) ||
         dynamic_cast<const spadi::DelayTooLarge*>(&e) ||
         dynamic_cast<const spadi::SilentSignal*>(&e) ||
         dynamic_cast<const spadi::InvalidArgument*>(&e);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw spadi::IoFailure("cannot open " + path + " for writing");
  out << text;
  if (!out) throw spadi::IoFailure("short write to " + path);
}

struct EvalOptions {
  std::string reference_path;
  std::string estimate_path;
  std::string output_path;
  std::string format = "json";
  std::string aggregate = "median";
  double lowpass_fraction = 0.0;  // 0 disables the weighting
  spadi::EvalConfig config;
};

spadi::EvalConfig finish_config(spadi::EvalConfig config,
                                const std::string& aggregate,
                                double lowpass_fraction) {
  config.aggregate = aggregate == "mean" ? spadi::Aggregate::mean
                                         : spadi::Aggregate::median;
  if (lowpass_fraction > 0.0) config.lowpass_cutoff_fraction = lowpass_fraction;
  return config;
}

void add_eval_flags(CLI::App* cmd, spadi::EvalConfig& config,
                    std::string& aggregate, double& lowpass_fraction) {
  cmd->add_option("--frame-secs", config.frame_seconds, "Frame length")
      ->capture_default_str();
  cmd->add_option("--hop-frac", config.hop_fraction, "Hop as frame fraction")
      ->capture_default_str();
  cmd->add_option("--max-shift-ms", config.max_shift_ms, "Delay search limit")
      ->capture_default_str();
  cmd->add_option("--eps-rel", config.silence_eps_rel,
                  "Relative silence threshold")
      ->capture_default_str();
  cmd->add_option("--cap-db", config.db_cap, "Symmetric cap on the ratios")
      ->capture_default_str();
  cmd->add_option("--aggregate", aggregate, "Frame aggregate: median|mean")
      ->check(CLI::IsMember({"median", "mean"}))
      ->capture_default_str();
  cmd->add_option("--lowpass", lowpass_fraction,
                  "Correlation lowpass cutoff as a fraction of Nyquist");
}

int run_eval(const EvalOptions& opt) {
  const spadi::WavMeta ref_meta = spadi::read_wav_meta(opt.reference_path);
  const spadi::WavMeta est_meta = spadi::read_wav_meta(opt.estimate_path);
  const spadi::PairCheck check = spadi::validate_pair(ref_meta, est_meta);
  if (check.trimmed)
    std::cerr << "warning: lengths differ (" << ref_meta.num_samples << " vs "
              << est_meta.num_samples << "); trimming to "
              << check.common_samples << " samples\n";

  spadi::MultichannelSignal reference = spadi::read_wav(opt.reference_path);
  spadi::MultichannelSignal estimate = spadi::read_wav(opt.estimate_path);
  if (check.trimmed) {
    reference = spadi::slice(reference, 0, check.common_samples);
    estimate = spadi::slice(estimate, 0, check.common_samples);
  }

  const spadi::EvalReport report =
      spadi::evaluate(estimate, reference, opt.config);

  if (opt.format == "csv") {
    write_text(opt.output_path, spadi::report_csv(report));
  } else {
    const spadi::SignalMeta ref_info{opt.reference_path, ref_meta};
    const spadi::SignalMeta est_info{opt.estimate_path, est_meta};
    write_text(opt.output_path, spadi::report_json(report, ref_info, est_info));
  }

  std::printf("SSR %.2f dB  SRR %.2f dB  (%s over %zu ok frames)\n",
              report.ssr_aggregate_db, report.srr_aggregate_db,
              spadi::to_string(report.config.aggregate).c_str(),
              static_cast<std::size_t>(std::count_if(
                  report.frames.begin(), report.frames.end(), [](const auto& f) {
                    return f.status == spadi::FrameStatus::ok;
                  })));
  return kExitOk;
}

spadi::WavFormat parse_bit_depth(const std::string& depth) {
  if (depth == "16") return spadi::WavFormat::pcm16;
  if (depth == "24") return spadi::WavFormat::pcm24;
  if (depth == "32f") return spadi::WavFormat::float32;
  throw spadi::InvalidArgument("unknown bit depth " + depth);
}

struct DegradeOptions {
  std::string kind;
  std::string input_path;
  std::string output_path;
  std::string bit_depth = "32f";
  double pan = 0.0;
  std::size_t channel = 1;
  std::size_t delay_samples = 0;
  double cutoff_hz = 4000.0;
  std::size_t num_taps = 129;
  double snr_db = 0.0;
  std::uint64_t seed = 1;
};

int run_degrade(const DegradeOptions& opt) {
  const spadi::MultichannelSignal input = spadi::read_wav(opt.input_path);
  spadi::MultichannelSignal output;

  if (opt.kind == "pan") {
    output = spadi::pan_mono_to_stereo(input, opt.pan);
  } else if (opt.kind == "delay") {
    output = spadi::delay_channel(input, opt.channel, opt.delay_samples);
  } else if (opt.kind == "lowpass") {
    spadi::LowpassSpec spec;
    spec.num_taps = opt.num_taps;
    spec.cutoff_hz = opt.cutoff_hz;
    spec.sample_rate = input.sample_rate;
    std::vector<double> taps;
    try {
      taps = spadi::design_lowpass_fir(spec);
    } catch (const spadi::NoConvergence&) {
      taps = spadi::kaiser_lowpass(spec);
      std::cerr << "warning: exchange did not converge; "
                   "windowed fallback design used\n";
    }
    output = spadi::filtfilt(input, taps);
  } else if (opt.kind == "noise") {
    output = spadi::add_noise(input, opt.snr_db, opt.seed);
  } else {
    throw spadi::InvalidArgument("unknown degradation kind " + opt.kind);
  }

  const std::size_t clipped =
      spadi::write_wav(opt.output_path, output, parse_bit_depth(opt.bit_depth));
  if (clipped > 0)
    std::cerr << "warning: " << clipped << " samples clipped on write\n";
  return kExitOk;
}

struct SweepOptions {
  std::string kind;
  std::string source = "white";
  std::string output_path;
  std::string aggregate = "median";
  double lowpass_fraction = 0.0;
  std::vector<double> grid;
  std::vector<double> pan_grid;
  spadi::SweepSpec spec;
};

int run_sweep_cmd(const SweepOptions& opt) {
  spadi::SweepKind kind;
  if (opt.kind == "pan") kind = spadi::SweepKind::pan;
  else if (opt.kind == "delay") kind = spadi::SweepKind::delay;
  else if (opt.kind == "lowpass") kind = spadi::SweepKind::lowpass;
  else if (opt.kind == "noise") kind = spadi::SweepKind::noise;
  else throw spadi::InvalidArgument("unknown sweep kind " + opt.kind);

  spadi::SweepSpec spec = spadi::default_sweep(kind);
  spec.duration_seconds = opt.spec.duration_seconds;
  spec.sample_rate = opt.spec.sample_rate;
  spec.seed = opt.spec.seed;
  spec.ref_pan = opt.spec.ref_pan;
  spec.test_pan = opt.spec.test_pan;
  spec.eval = finish_config(opt.spec.eval, opt.aggregate, opt.lowpass_fraction);
  if (!opt.grid.empty()) spec.grid = opt.grid;
  if (!opt.pan_grid.empty()) spec.pan_grid = opt.pan_grid;
  if (opt.source == "white") {
    spec.source = spadi::SourceKind::white;
  } else if (opt.source == "speech") {
    spec.source = spadi::SourceKind::speech;
  } else {
    spec.source = spadi::SourceKind::file;
    spec.source_path = opt.source;
  }

  const spadi::SweepResult result = spadi::run_sweep(spec);
  write_text(opt.output_path, spadi::sweep_csv(result));

  bool any_ok = false;
  for (const auto& p : result.points)
    any_ok |= p.status == spadi::FrameStatus::ok;
  return any_ok ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial distortion metrics for multichannel audio"};
  app.require_subcommand(1);

  EvalOptions eval_opt;
  CLI::App* eval_cmd = app.add_subcommand(
      "eval", "Evaluate an estimate against a reference WAV");
  eval_cmd->add_option("reference", eval_opt.reference_path, "Reference WAV")
      ->required();
  eval_cmd->add_option("estimate", eval_opt.estimate_path, "Estimate WAV")
      ->required();
  eval_cmd->add_option("-o,--output", eval_opt.output_path,
                       "Report path (stdout when omitted)");
  eval_cmd->add_option("--format", eval_opt.format, "Report format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  add_eval_flags(eval_cmd, eval_opt.config, eval_opt.aggregate,
                 eval_opt.lowpass_fraction);

  DegradeOptions degrade_opt;
  CLI::App* degrade_cmd = app.add_subcommand(
      "degrade", "Synthesize a degraded copy of a WAV file");
  degrade_cmd
      ->add_option("kind", degrade_opt.kind,
                   "Degradation: pan|delay|lowpass|noise")
      ->required()
      ->check(CLI::IsMember({"pan", "delay", "lowpass", "noise"}));
  degrade_cmd->add_option("input", degrade_opt.input_path, "Input WAV")
      ->required();
  degrade_cmd->add_option("output", degrade_opt.output_path, "Output WAV")
      ->required();
  degrade_cmd->add_option("--pan", degrade_opt.pan, "Pan position in [-1, 1]")
      ->capture_default_str();
  degrade_cmd
      ->add_option("--channel", degrade_opt.channel, "Channel to delay")
      ->capture_default_str();
  degrade_cmd->add_option("--delay-samples", degrade_opt.delay_samples,
                          "Delay in samples");
  degrade_cmd->add_option("--cutoff-hz", degrade_opt.cutoff_hz,
                          "Lowpass cutoff in Hz")
      ->capture_default_str();
  degrade_cmd->add_option("--taps", degrade_opt.num_taps,
                          "Lowpass tap count (odd)")
      ->capture_default_str();
  degrade_cmd->add_option("--snr-db", degrade_opt.snr_db, "Noise SNR in dB")
      ->capture_default_str();
  degrade_cmd->add_option("--seed", degrade_opt.seed, "Noise seed")
      ->capture_default_str();
  degrade_cmd
      ->add_option("--bit-depth", degrade_opt.bit_depth,
                   "Output sample format: 16|24|32f")
      ->check(CLI::IsMember({"16", "24", "32f"}))
      ->capture_default_str();

  SweepOptions sweep_opt;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Run a degradation sweep against a synthetic reference");
  sweep_cmd
      ->add_option("kind", sweep_opt.kind, "Sweep: pan|delay|lowpass|noise")
      ->required()
      ->check(CLI::IsMember({"pan", "delay", "lowpass", "noise"}));
  sweep_cmd->add_option("--source", sweep_opt.source,
                        "Source: white|speech|<mono wav path>")
      ->capture_default_str();
  sweep_cmd->add_option("-o,--output", sweep_opt.output_path,
                        "CSV path (stdout when omitted)");
  sweep_cmd
      ->add_option("--duration-secs", sweep_opt.spec.duration_seconds,
                   "Synthetic source duration")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--sample-rate", sweep_opt.spec.sample_rate,
                   "Synthetic source sample rate")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_opt.spec.seed, "Source/noise seed")
      ->capture_default_str();
  sweep_cmd->add_option("--ref-pan", sweep_opt.spec.ref_pan, "Reference pan")
      ->capture_default_str();
  sweep_cmd
      ->add_option("--test-pan", sweep_opt.spec.test_pan,
                   "Test pan for the lowpass/noise sweeps")
      ->capture_default_str();
  sweep_cmd->add_option("--grid", sweep_opt.grid,
                        "Grid values (comma separated)")
      ->delimiter(',');
  sweep_cmd->add_option("--pan-grid", sweep_opt.pan_grid,
                        "Test pans for the delay sweep (comma separated)")
      ->delimiter(',');
  add_eval_flags(sweep_cmd, sweep_opt.spec.eval, sweep_opt.aggregate,
                 sweep_opt.lowpass_fraction);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) {
      eval_opt.config = finish_config(eval_opt.config, eval_opt.aggregate,
                                      eval_opt.lowpass_fraction);
      return run_eval(eval_opt);
    }
    if (degrade_cmd->parsed()) return run_degrade(degrade_opt);
    if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_opt);
  } catch (const spadi::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_usage_error(e) ? kExitUsage : kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
