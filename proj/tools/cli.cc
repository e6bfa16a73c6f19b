// Copyright 2026 The SpecAug Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"
#include "specaug/augment.h"
#include "specaug/errors.h"
#include "specaug/fixtures.h"
#include "specaug/formats.h"
#include "specaug/frontend.h"
#include "specaug/pipeline.h"
#include "specaug/policy.h"
#include "specaug/rng.h"
#include "specaug/stacking.h"
#include "specaug/wav.h"

namespace specaug::cli {
namespace {

// Bad invocation that CLI11 cannot detect on its own.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Verbosity { kQuiet, kNormal, kVerbose };

class Logger {
 public:
  Logger(std::ostream& err, Verbosity v) : err_(err), verbosity_(v) {}
  void Info(const std::string& msg) const {
    if (verbosity_ != Verbosity::kQuiet) err_ << msg << '\n';
  }
  void Debug(const std::string& msg) const {
    if (verbosity_ == Verbosity::kVerbose) err_ << msg << '\n';
  }

 private:
  std::ostream& err_;
  Verbosity verbosity_;
};

bool HasSuffix(const std::string& path, std::string_view suffix) {
  if (path.size() < suffix.size()) return false;
  std::string tail = path.substr(path.size() - suffix.size());
  std::transform(tail.begin(), tail.end(), tail.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return tail == suffix;
}

std::string BytesToString(const std::vector<std::uint8_t>& bytes) {
  return std::string(bytes.begin(), bytes.end());
}

std::vector<std::uint8_t> StringToBytes(const std::string& s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

// A policy argument is a policy file if one exists at that path, otherwise
// a preset name.
AugmentPolicy ResolvePolicyArg(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    return ParsePolicy(BytesToString(ReadFileBytes(arg)));
  }
  try {
    return Preset(arg);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Spectrogram LoadInput(const std::string& path, const MelConfig& mel) {
  const auto bytes = ReadFileBytes(path);
  if (HasSuffix(path, ".wav")) return LogMel(DecodeWav(bytes), mel);
  if (HasSuffix(path, ".csv")) return ReadCsv(BytesToString(bytes));
  return ReadSgram(bytes);
}

void SaveOutput(const std::string& path, const Spectrogram& spec) {
  if (HasSuffix(path, ".csv")) {
    WriteFileBytes(path, StringToBytes(WriteCsv(spec)));
  } else {
    WriteFileBytes(path, WriteSgram(spec));
  }
}

int ThreadBudget() {
  int threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("SPECAUG_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

void AddMelOptions(CLI::App* cmd, MelConfig& mel) {
  cmd->add_option("--fft-size", mel.fft_size, "FFT size (power of two)")
      ->capture_default_str();
  cmd->add_option("--n-mels", mel.n_mels, "Number of mel filters")
      ->capture_default_str();
  cmd->add_option("--fmin", mel.fmin, "Lowest filterbank frequency, Hz")
      ->capture_default_str();
  cmd->add_option("--fmax", mel.fmax, "Highest filterbank frequency, Hz")
      ->capture_default_str();
  cmd->add_option("--log-floor", mel.log_floor, "Energy floor before log")
      ->capture_default_str();
}

void AddStackOptions(CLI::App* cmd, StackConfig& stack) {
  cmd->add_option("--height", stack.height, "Frames per stacked window")
      ->capture_default_str();
  cmd->add_option("--stride", stack.stride, "Frames between windows")
      ->capture_default_str();
  cmd->add_option("--frame-dim", stack.frame_dim, "Channels per frame")
      ->capture_default_str();
}

std::string TraceSummary(const AugmentTrace& trace) {
  std::ostringstream s;
  if (trace.warp) {
    s << "warp w0=" << trace.warp->w0 << " w=" << trace.warp->w << "; ";
  } else {
    s << "warp none; ";
  }
  s << "freq masks";
  for (const auto& b : trace.freq_masks) s << " [" << b.start << "," << b.start + b.size << ")";
  s << "; time masks";
  for (const auto& b : trace.time_masks) s << " [" << b.start << "," << b.start + b.size << ")";
  return s.str();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Deterministic spectrogram augmentation toolkit", "specaug"};
  app.require_subcommand(1);
  bool quiet = false;
  bool verbose = false;
  app.add_flag("-q,--quiet", quiet, "Only report errors");
  app.add_flag("-v,--verbose", verbose, "Extra diagnostics on stderr");

  MelConfig mel;
  StackConfig stack_cfg;

  // featurize
  std::string featurize_in, featurize_out;
  auto* featurize = app.add_subcommand("featurize", "WAV (PCM16 mono) to log-mel sgram");
  featurize->add_option("wav", featurize_in, "Input WAV")->required();
  featurize->add_option("-o,--output", featurize_out, "Output sgram/csv")->required();
  AddMelOptions(featurize, mel);

  // augment
  std::string augment_in, augment_out, augment_policy, augment_id;
  std::uint64_t augment_seed = 0;
  auto* augment = app.add_subcommand("augment", "Apply an augmentation policy");
  augment->add_option("input", augment_in, "Input sgram, csv or wav")->required();
  augment->add_option("--policy", augment_policy, "Preset name or policy file")->required();
  augment->add_option("--seed", augment_seed, "Base seed")->required();
  augment->add_option("--id", augment_id, "Utterance id (selects the random stream)")
      ->required();
  augment->add_option("-o,--output", augment_out, "Output sgram/csv")->required();
  AddMelOptions(augment, mel);

  // stack / unstack
  std::string stack_in, stack_out;
  auto* stack = app.add_subcommand("stack", "Stack frames into wider frames");
  stack->add_option("input", stack_in, "Input sgram")->required();
  stack->add_option("-o,--output", stack_out, "Output sgram")->required();
  AddStackOptions(stack, stack_cfg);

  std::string unstack_in, unstack_out;
  int unstack_tau = 0;
  bool unstack_strict = false;
  auto* unstack = app.add_subcommand("unstack", "Invert frame stacking");
  unstack->add_option("input", unstack_in, "Stacked sgram")->required();
  unstack->add_option("-o,--output", unstack_out, "Output sgram")->required();
  unstack->add_option("--tau", unstack_tau, "Frame count before stacking")->required();
  unstack->add_flag("--strict", unstack_strict, "Verify overlapping copies agree");
  AddStackOptions(unstack, stack_cfg);

  // mix
  std::string mix_manifest, mix_policy = "specaug-basic", mix_mtr_policy = "none",
                            mix_out_dir, mix_pairing = "by-id", mix_input_root;
  double mix_clean_fraction = 0.8;
  std::uint64_t mix_seed = 0;
  int mix_output_size = 0;
  bool mix_stack = false;
  auto* mix = app.add_subcommand("mix", "Mix augmented clean and MTR utterances");
  mix->add_option("--manifest", mix_manifest, "Input manifest (JSON Lines)")->required();
  mix->add_option("--clean-fraction", mix_clean_fraction, "Share of clean utterances")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  mix->add_option("--policy", mix_policy, "Policy for clean utterances")
      ->capture_default_str();
  mix->add_option("--mtr-policy", mix_mtr_policy,
                  "Policy for MTR utterances, or 'none' to pass through")
      ->capture_default_str();
  mix->add_option("--seed", mix_seed, "Base seed")->required();
  mix->add_option("--out-dir", mix_out_dir, "Output directory")->required();
  mix->add_option("--pairing", mix_pairing, "by-id or pools")
      ->capture_default_str()
      ->check(CLI::IsMember({"by-id", "pools"}));
  mix->add_option("--output-size", mix_output_size,
                  "Selected entries for --pairing pools (0 = larger pool)")
      ->capture_default_str();
  mix->add_option("--input-root", mix_input_root,
                  "Base for relative paths (default: manifest directory)");
  mix->add_flag("--stack", mix_stack, "Stack outputs after augmentation");
  AddMelOptions(mix, mel);
  AddStackOptions(mix, stack_cfg);

  // render
  std::string render_in, render_out;
  auto* render = app.add_subcommand("render", "Render a spectrogram as a PGM image");
  render->add_option("input", render_in, "Input sgram/csv")->required();
  render->add_option("-o,--output", render_out, "Output PGM")->required();

  // convert
  std::string convert_in, convert_out;
  auto* convert = app.add_subcommand("convert", "Convert between sgram and CSV");
  convert->add_option("input", convert_in, "Input (.sgram or .csv)")->required();
  convert->add_option("-o,--output", convert_out, "Output (.sgram or .csv)")->required();

  // policy show
  std::string policy_name;
  auto* policy = app.add_subcommand("policy", "Inspect augmentation policies");
  policy->require_subcommand(1);
  auto* policy_show = policy->add_subcommand("show", "Print a preset or policy file");
  policy_show->add_option("name", policy_name, "Preset name or policy file")->required();

  // gen-fixtures
  std::string fixtures_dir;
  auto* gen_fixtures = app.add_subcommand("gen-fixtures", "Write the golden test fixtures");
  gen_fixtures->add_option("-o,--output", fixtures_dir, "Output directory")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const Logger log(err, quiet ? Verbosity::kQuiet
                              : (verbose ? Verbosity::kVerbose : Verbosity::kNormal));
  try {
    if (*featurize) {
      const Spectrogram spec = LoadInput(featurize_in, mel);
      SaveOutput(featurize_out, spec);
      log.Debug("featurize: " + std::to_string(spec.tau()) + " frames x " +
                std::to_string(spec.nu()) + " channels");
    } else if (*augment) {
      const AugmentPolicy p = ResolvePolicyArg(augment_policy);
      const Spectrogram spec = LoadInput(augment_in, mel);
      SeededRng rng = DeriveStream(augment_seed, augment_id);
      AugmentTrace trace;
      SaveOutput(augment_out, ApplyPolicy(spec, p, rng, &trace));
      log.Debug("augment: " + TraceSummary(trace));
    } else if (*stack) {
      SaveOutput(stack_out, Stack(LoadInput(stack_in, mel), stack_cfg));
    } else if (*unstack) {
      SaveOutput(unstack_out,
                 Unstack(LoadInput(unstack_in, mel), unstack_tau, stack_cfg,
                         unstack_strict ? UnstackCheck::kStrict
                                        : UnstackCheck::kTrusting));
    } else if (*mix) {
      MixConfig cfg;
      cfg.clean_fraction = mix_clean_fraction;
      cfg.policy_clean = ResolvePolicyArg(mix_policy);
      if (mix_mtr_policy != "none") cfg.policy_mtr = ResolvePolicyArg(mix_mtr_policy);
      cfg.seed = mix_seed;
      cfg.pairing = mix_pairing == "pools" ? Pairing::kIndependentPools
                                           : Pairing::kByIdPairs;
      cfg.output_size = mix_output_size;
      const auto manifest = ParseManifest(BytesToString(ReadFileBytes(mix_manifest)));
      const auto plan = PlanMix(manifest, cfg);

      std::filesystem::create_directories(mix_out_dir);
      const std::string root =
          mix_input_root.empty()
              ? std::filesystem::path(mix_manifest).parent_path().string()
              : mix_input_root;
      FileSystemIo io(root, mix_out_dir);
      RunOptions options;
      options.mel = mel;
      if (mix_stack) options.stack = stack_cfg;
      options.threads = ThreadBudget();
      const PipelineSummary summary = RunPipeline(plan, io, options);
      for (const auto& f : summary.failures) {
        log.Info("failed " + f.id + " (" + std::string(SourceName(f.source)) +
                 "): " + f.message);
      }
      out << "entries=" << summary.total << " written=" << summary.written
          << " clean=" << summary.written_clean << " mtr=" << summary.written_mtr
          << " failures=" << summary.failures.size() << '\n';
    } else if (*render) {
      WriteFileBytes(render_out, RenderPgm(LoadInput(render_in, mel)));
    } else if (*convert) {
      SaveOutput(convert_out, LoadInput(convert_in, mel));
    } else if (*policy_show) {
      const AugmentPolicy p = ResolvePolicyArg(policy_name);
      out << "# " << policy_name << ": " << DescribePolicy(p) << '\n'
          << SerializePolicy(p);
    } else if (*gen_fixtures) {
      std::filesystem::create_directories(fixtures_dir);
      for (const auto& [name, bytes] : GenerateFixtures()) {
        WriteFileBytes((std::filesystem::path(fixtures_dir) / name).string(), bytes);
        log.Debug("wrote " + name);
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error (io): " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace specaug::cli
