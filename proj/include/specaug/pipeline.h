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

// Dataset-level mixing of clean (augmented) and MTR (precomputed noisy)
// utterances, and the batch runner that featurizes, augments, optionally
// stacks and writes each selected utterance.
//
// Randomness:
//   - Augmentation of utterance `id` uses DeriveStream(seed, id), the same
//     stream `specaug augment --seed S --id ID` uses.
//   - Selection draws use DeriveStream(MixSeed(seed), key), where key is
//     the id (by-id pairing) or "<source>/<id>" (independent pools). The
//     separate seed keeps selection and augmentation draws uncorrelated.

#ifndef SPECAUG_PIPELINE_H_
#define SPECAUG_PIPELINE_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "specaug/frontend.h"
#include "specaug/policy.h"
#include "specaug/stacking.h"

namespace specaug {

enum class Source { kClean, kMtr };

std::string_view SourceName(Source source);

struct ManifestEntry {
  std::string id;
  std::string path;
  Source source = Source::kClean;
  // Fields other than id/path/source, carried through untouched.
  nlohmann::json extra = nlohmann::json::object();

  bool operator==(const ManifestEntry&) const = default;
};

// JSON Lines, one object per line with string fields "id", "path" and
// "source" ("clean" or "mtr"). Blank lines are skipped. (id, source) pairs
// must be unique. Throws Error(kManifest) with the offending line number.
std::vector<ManifestEntry> ParseManifest(std::string_view jsonl);
std::string SerializeManifestLine(const ManifestEntry& entry);

enum class Pairing {
  kByIdPairs,         // each id has one clean and one mtr entry; pick one
  kIndependentPools,  // sample each pool separately to a target size
};

struct MixConfig {
  double clean_fraction = 0.8;
  AugmentPolicy policy_clean;
  std::optional<AugmentPolicy> policy_mtr;  // nullopt = pass through
  std::uint64_t seed = 0;
  Pairing pairing = Pairing::kByIdPairs;
  // Independent pools only: number of selected entries. 0 means the size
  // of the larger pool.
  int output_size = 0;
};

std::uint64_t MixSeed(std::uint64_t seed);

struct PlannedItem {
  ManifestEntry entry;
  std::optional<AugmentPolicy> policy;  // nullopt = no augmentation
  std::uint64_t seed = 0;               // for DeriveStream(seed, entry.id)
};

// Selects entries and attaches their policies.
//
// By-id pairs: for each id, Bernoulli(clean_fraction) picks the clean entry
// (with policy_clean) or the mtr entry (with policy_mtr). Throws
// Error(kPairing) naming an id that lacks its counterpart.
//
// Independent pools: of n = output_size entries, round(clean_fraction * n)
// come from the clean pool and the rest from the mtr pool (capped by pool
// size). Within a pool, entries are ranked by one Uniform01 draw each and
// the lowest ranks are kept.
//
// The result is sorted by (id, source). Throws Error(kDimension) if
// clean_fraction is outside [0, 1].
std::vector<PlannedItem> PlanMix(const std::vector<ManifestEntry>& manifest,
                                 const MixConfig& cfg);

// Storage the runner reads inputs from and writes outputs to.
class PipelineIo {
 public:
  virtual ~PipelineIo() = default;
  // Throw Error on failure.
  virtual std::vector<std::uint8_t> Read(const std::string& path) = 0;
  virtual void Write(const std::string& name, std::vector<std::uint8_t> bytes) = 0;
};

// Reads paths relative to input_root (absolute paths as given) and writes
// names under output_dir, which must exist.
class FileSystemIo : public PipelineIo {
 public:
  FileSystemIo(std::string input_root, std::string output_dir);
  std::vector<std::uint8_t> Read(const std::string& path) override;
  void Write(const std::string& name, std::vector<std::uint8_t> bytes) override;

 private:
  std::string input_root_;
  std::string output_dir_;
};

// Keeps everything in memory; handy for tests and bindings.
class MemoryIo : public PipelineIo {
 public:
  std::map<std::string, std::vector<std::uint8_t>> inputs;

  std::vector<std::uint8_t> Read(const std::string& path) override;
  void Write(const std::string& name, std::vector<std::uint8_t> bytes) override;
  std::map<std::string, std::vector<std::uint8_t>> outputs() const;

 private:
  mutable std::mutex mu_;
  std::map<std::string, std::vector<std::uint8_t>> outputs_;
};

struct RunOptions {
  MelConfig mel;
  std::optional<StackConfig> stack;
  int threads = 1;
  std::string manifest_name = "manifest.jsonl";
};

struct EntryFailure {
  std::string id;
  Source source = Source::kClean;
  std::string message;
};

struct PipelineSummary {
  int total = 0;
  int written = 0;
  int written_clean = 0;
  int written_mtr = 0;
  std::vector<EntryFailure> failures;  // sorted by (id, source)
};

// For each planned item: load the file (".wav" goes through LogMel, any
// other extension is read as sgram), apply its policy, optionally stack,
// and write "<id>.<source>.sgram". Then write the output manifest: the
// input entries that succeeded, in (id, source) order, with "path" pointing
// at the written file and other fields preserved. Per-entry failures are
// recorded, not thrown. Output bytes do not depend on options.threads.
PipelineSummary RunPipeline(const std::vector<PlannedItem>& plan,
                            PipelineIo& io, const RunOptions& options = {});

// Output file name for an entry.
std::string OutputName(const ManifestEntry& entry);

}  // namespace specaug

#endif  // SPECAUG_PIPELINE_H_
