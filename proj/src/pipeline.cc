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

#include "specaug/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <thread>
#include <tuple>
#include <utility>

#include "specaug/augment.h"
#include "specaug/errors.h"
#include "specaug/formats.h"
#include "specaug/rng.h"
#include "specaug/wav.h"

namespace specaug {
namespace {

bool EntryLess(const ManifestEntry& a, const ManifestEntry& b) {
  return std::tie(a.id, a.source) < std::tie(b.id, b.source);
}

bool IsSafeNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
}

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

std::string_view Lowercase(std::string& s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

Spectrogram LoadSpectrogram(const std::string& path,
                            const std::vector<std::uint8_t>& bytes,
                            const MelConfig& mel) {
  std::string lower = path;
  if (EndsWith(Lowercase(lower), ".wav")) {
    return LogMel(DecodeWav(bytes), mel);
  }
  return ReadSgram(bytes);
}

}  // namespace

std::string_view SourceName(Source source) {
  return source == Source::kClean ? "clean" : "mtr";
}

std::vector<ManifestEntry> ParseManifest(std::string_view jsonl) {
  std::vector<ManifestEntry> entries;
  std::set<std::pair<std::string, Source>> seen;
  int line_no = 0;
  while (!jsonl.empty()) {
    ++line_no;
    const auto nl = jsonl.find('\n');
    std::string_view line = jsonl.substr(0, nl);
    jsonl = nl == std::string_view::npos ? std::string_view() : jsonl.substr(nl + 1);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    auto fail = [&](const std::string& what) {
      throw Error(ErrorCode::kManifest,
                  "manifest line " + std::to_string(line_no) + ": " + what);
    };
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      fail(std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) fail("expected a JSON object");
    ManifestEntry entry;
    for (const char* key : {"id", "path", "source"}) {
      if (!obj.contains(key) || !obj[key].is_string()) {
        fail(std::string("missing string field '") + key + "'");
      }
    }
    entry.id = obj["id"].get<std::string>();
    entry.path = obj["path"].get<std::string>();
    const std::string source = obj["source"].get<std::string>();
    if (source == "clean") {
      entry.source = Source::kClean;
    } else if (source == "mtr") {
      entry.source = Source::kMtr;
    } else {
      fail("source must be 'clean' or 'mtr', got '" + source + "'");
    }
    if (entry.id.empty()) fail("empty id");
    if (!seen.emplace(entry.id, entry.source).second) {
      fail("duplicate " + source + " entry for id '" + entry.id + "'");
    }
    obj.erase("id");
    obj.erase("path");
    obj.erase("source");
    entry.extra = std::move(obj);
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string SerializeManifestLine(const ManifestEntry& entry) {
  // nlohmann::json keeps keys sorted, which makes the line canonical.
  nlohmann::json obj = entry.extra.is_object() ? entry.extra : nlohmann::json::object();
  obj["id"] = entry.id;
  obj["path"] = entry.path;
  obj["source"] = std::string(SourceName(entry.source));
  return obj.dump();
}

std::uint64_t MixSeed(std::uint64_t seed) { return seed ^ 0x9e3779b97f4a7c15ULL; }

std::vector<PlannedItem> PlanMix(const std::vector<ManifestEntry>& manifest,
                                 const MixConfig& cfg) {
  if (!(cfg.clean_fraction >= 0.0 && cfg.clean_fraction <= 1.0)) {
    throw Error(ErrorCode::kDimension, "clean_fraction must lie in [0, 1]");
  }
  auto make_item = [&](const ManifestEntry& e) {
    PlannedItem item;
    item.entry = e;
    item.policy = e.source == Source::kClean ? std::optional(cfg.policy_clean)
                                             : cfg.policy_mtr;
    item.seed = cfg.seed;
    return item;
  };

  std::vector<PlannedItem> plan;
  if (cfg.pairing == Pairing::kByIdPairs) {
    std::map<std::string, std::pair<const ManifestEntry*, const ManifestEntry*>> by_id;
    for (const auto& e : manifest) {
      auto& slot = by_id[e.id];
      auto& which = e.source == Source::kClean ? slot.first : slot.second;
      if (which != nullptr) {
        throw Error(ErrorCode::kPairing,
                    "id '" + e.id + "' has more than one " +
                        std::string(SourceName(e.source)) + " entry");
      }
      which = &e;
    }
    for (const auto& [id, pair] : by_id) {
      if (pair.first == nullptr || pair.second == nullptr) {
        throw Error(ErrorCode::kPairing,
                    "id '" + id + "' has no " +
                        (pair.first == nullptr ? "clean" : "mtr") + " counterpart");
      }
      SeededRng rng = DeriveStream(MixSeed(cfg.seed), id);
      plan.push_back(make_item(rng.Bernoulli(cfg.clean_fraction) ? *pair.first
                                                                 : *pair.second));
    }
  } else {
    std::vector<std::pair<double, const ManifestEntry*>> pools[2];
    for (const auto& e : manifest) {
      const std::string key = std::string(SourceName(e.source)) + "/" + e.id;
      SeededRng rng = DeriveStream(MixSeed(cfg.seed), key);
      pools[e.source == Source::kClean ? 0 : 1].emplace_back(rng.Uniform01(), &e);
    }
    const auto n_out = static_cast<double>(
        cfg.output_size > 0 ? cfg.output_size
                            : static_cast<int>(std::max(pools[0].size(), pools[1].size())));
    const auto want_clean = static_cast<std::size_t>(std::floor(cfg.clean_fraction * n_out + 0.5));
    const std::size_t want[2] = {want_clean,
                                 static_cast<std::size_t>(n_out) - want_clean};
    for (int p = 0; p < 2; ++p) {
      auto& pool = pools[p];
      std::sort(pool.begin(), pool.end(), [](const auto& a, const auto& b) {
        return std::tie(a.first, a.second->id) < std::tie(b.first, b.second->id);
      });
      const std::size_t take = std::min(want[p], pool.size());
      for (std::size_t i = 0; i < take; ++i) plan.push_back(make_item(*pool[i].second));
    }
  }
  std::sort(plan.begin(), plan.end(), [](const PlannedItem& a, const PlannedItem& b) {
    return EntryLess(a.entry, b.entry);
  });
  return plan;
}

FileSystemIo::FileSystemIo(std::string input_root, std::string output_dir)
    : input_root_(std::move(input_root)), output_dir_(std::move(output_dir)) {}

std::vector<std::uint8_t> FileSystemIo::Read(const std::string& path) {
  const std::filesystem::path p(path);
  if (p.is_absolute() || input_root_.empty()) return ReadFileBytes(path);
  return ReadFileBytes((std::filesystem::path(input_root_) / p).string());
}

void FileSystemIo::Write(const std::string& name, std::vector<std::uint8_t> bytes) {
  WriteFileBytes((std::filesystem::path(output_dir_) / name).string(), bytes);
}

std::vector<std::uint8_t> MemoryIo::Read(const std::string& path) {
  const auto it = inputs.find(path);
  if (it == inputs.end()) throw Error(ErrorCode::kIo, "no such input '" + path + "'");
  return it->second;
}

void MemoryIo::Write(const std::string& name, std::vector<std::uint8_t> bytes) {
  std::lock_guard<std::mutex> lock(mu_);
  outputs_[name] = std::move(bytes);
}

std::map<std::string, std::vector<std::uint8_t>> MemoryIo::outputs() const {
  std::lock_guard<std::mutex> lock(mu_);
  return outputs_;
}

std::string OutputName(const ManifestEntry& entry) {
  std::string stem;
  bool changed = entry.id.empty() || entry.id.front() == '.';
  for (char c : entry.id) {
    if (IsSafeNameChar(c)) {
      stem += c;
    } else {
      stem += '_';
      changed = true;
    }
  }
  if (changed) {
    char suffix[24];
    std::snprintf(suffix, sizeof(suffix), "-%016llx",
                  static_cast<unsigned long long>(Fnv1a64(entry.id)));
    stem += suffix;
  }
  return stem + "." + std::string(SourceName(entry.source)) + ".sgram";
}

PipelineSummary RunPipeline(const std::vector<PlannedItem>& plan, PipelineIo& io,
                            const RunOptions& options) {
  struct Outcome {
    bool ok = false;
    std::string output_name;
    std::string error;
  };
  std::vector<Outcome> outcomes(plan.size());

  auto process = [&](std::size_t i) {
    const PlannedItem& item = plan[i];
    Outcome& outcome = outcomes[i];
    try {
      Spectrogram spec = LoadSpectrogram(item.entry.path, io.Read(item.entry.path),
                                         options.mel);
      if (item.policy) {
        SeededRng rng = DeriveStream(item.seed, item.entry.id);
        spec = ApplyPolicy(spec, *item.policy, rng);
      }
      if (options.stack) spec = Stack(spec, *options.stack);
      outcome.output_name = OutputName(item.entry);
      io.Write(outcome.output_name, WriteSgram(spec));
      outcome.ok = true;
    } catch (const Error& e) {
      outcome.error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    }
  };

  const int threads =
      std::max(1, std::min<int>(options.threads, static_cast<int>(plan.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < plan.size(); ++i) process(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < plan.size(); i = next++) process(i);
      });
    }
  }

  std::vector<std::size_t> order(plan.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return EntryLess(plan[a].entry, plan[b].entry);
  });

  PipelineSummary summary;
  summary.total = static_cast<int>(plan.size());
  std::string manifest;
  for (std::size_t i : order) {
    const PlannedItem& item = plan[i];
    if (!outcomes[i].ok) {
      summary.failures.push_back({item.entry.id, item.entry.source, outcomes[i].error});
      continue;
    }
    ++summary.written;
    ++(item.entry.source == Source::kClean ? summary.written_clean
                                           : summary.written_mtr);
    ManifestEntry out = item.entry;
    out.path = outcomes[i].output_name;
    manifest += SerializeManifestLine(out);
    manifest += '\n';
  }
  io.Write(options.manifest_name,
           std::vector<std::uint8_t>(manifest.begin(), manifest.end()));
  return summary;
}

}  // namespace specaug
