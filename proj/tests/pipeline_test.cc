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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "specaug/augment.h"
#include "specaug/errors.h"
#include "specaug/formats.h"
#include "specaug/rng.h"
#include "test_util.h"

namespace specaug {
namespace {

std::vector<ManifestEntry> PairedManifest(int n) {
  std::vector<ManifestEntry> m;
  for (int i = 0; i < n; ++i) {
    const std::string id = "utt-" + std::to_string(i);
    m.push_back({id, "clean/" + id + ".sgram", Source::kClean, nlohmann::json::object()});
    m.push_back({id, "mtr/" + id + ".sgram", Source::kMtr, nlohmann::json::object()});
  }
  return m;
}

double CleanShare(const std::vector<PlannedItem>& plan) {
  int clean = 0;
  for (const auto& item : plan) clean += item.entry.source == Source::kClean;
  return static_cast<double>(clean) / plan.size();
}

TEST(ManifestTest, ParsesAndPreservesExtraFields) {
  const auto m = ParseManifest(
      "{\"id\":\"a\",\"path\":\"a.wav\",\"source\":\"clean\",\"speaker\":17}\n"
      "\n"
      "{\"source\":\"mtr\",\"path\":\"b.sgram\",\"id\":\"a\"}\n");
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m[0].extra["speaker"], 17);
  EXPECT_EQ(m[1].source, Source::kMtr);
  EXPECT_EQ(SerializeManifestLine(m[0]),
            "{\"id\":\"a\",\"path\":\"a.wav\",\"source\":\"clean\",\"speaker\":17}");
}

TEST(ManifestTest, RejectsBadLines) {
  for (const char* text :
       {"not json\n", "[1,2]\n", "{\"id\":\"a\",\"path\":\"p\"}\n",
        "{\"id\":\"a\",\"path\":\"p\",\"source\":\"noisy\"}\n",
        "{\"id\":\"\",\"path\":\"p\",\"source\":\"clean\"}\n",
        "{\"id\":\"a\",\"path\":\"p\",\"source\":\"clean\"}\n"
        "{\"id\":\"a\",\"path\":\"q\",\"source\":\"clean\"}\n"}) {
    try {
      ParseManifest(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kManifest);
    }
  }
}

TEST(PlanMixTest, DegenerateFractionsSelectOneSource) {
  const auto m = PairedManifest(500);
  MixConfig cfg;
  cfg.policy_clean = Preset("specaug-basic");
  for (double cf : {0.0, 1.0}) {
    cfg.clean_fraction = cf;
    for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
      cfg.seed = seed;
      const auto plan = PlanMix(m, cfg);
      ASSERT_EQ(plan.size(), 500u);
      EXPECT_EQ(CleanShare(plan), cf);
    }
  }
}

TEST(PlanMixTest, PureAndSortedAndSubset) {
  const auto m = PairedManifest(300);
  MixConfig cfg;
  cfg.seed = 42;
  const auto a = PlanMix(m, cfg);
  const auto b = PlanMix(m, cfg);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].entry, b[i].entry);
    if (i > 0) {
      EXPECT_LT(std::tie(a[i - 1].entry.id, a[i - 1].entry.source),
                std::tie(a[i].entry.id, a[i].entry.source));
    }
    EXPECT_NE(std::find(m.begin(), m.end(), a[i].entry), m.end());
  }
}

TEST(PlanMixTest, PoliciesFollowSource) {
  const auto m = PairedManifest(200);
  MixConfig cfg;
  cfg.clean_fraction = 0.5;
  cfg.policy_clean = Preset("specaug-basic");
  cfg.policy_mtr = Preset("freq-only");
  for (const auto& item : PlanMix(m, cfg)) {
    ASSERT_TRUE(item.policy.has_value());
    EXPECT_EQ(*item.policy, item.entry.source == Source::kClean ? Preset("specaug-basic")
                                                                : Preset("freq-only"));
  }
  cfg.policy_mtr.reset();
  for (const auto& item : PlanMix(m, cfg)) {
    EXPECT_EQ(item.policy.has_value(), item.entry.source == Source::kClean);
  }
}

TEST(PlanMixTest, ShareConcentratesNearFraction) {
  const auto m = PairedManifest(10000);
  MixConfig cfg;
  int within = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    const double share = CleanShare(PlanMix(m, cfg));
    within += share >= 0.79 && share <= 0.81;
    EXPECT_LT(std::abs(share - 0.8), 4 * std::sqrt(0.25 / 10000));
  }
  EXPECT_GE(within, 18);
}

TEST(PlanMixTest, PairingErrorsNameTheId) {
  auto m = PairedManifest(3);
  m.pop_back();  // utt-2 loses its mtr entry
  try {
    PlanMix(m, MixConfig{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPairing);
    EXPECT_NE(std::string(e.what()).find("utt-2"), std::string::npos);
  }
  MixConfig bad;
  bad.clean_fraction = 1.5;
  EXPECT_THROW(PlanMix(PairedManifest(1), bad), Error);
}

TEST(PlanMixTest, IndependentPoolsHitTargetSizes) {
  std::vector<ManifestEntry> m;
  for (int i = 0; i < 1000; ++i) m.push_back({"c" + std::to_string(i), "p", Source::kClean, {}});
  for (int i = 0; i < 400; ++i) m.push_back({"m" + std::to_string(i), "p", Source::kMtr, {}});
  MixConfig cfg;
  cfg.pairing = Pairing::kIndependentPools;
  cfg.seed = 3;
  auto plan = PlanMix(m, cfg);
  EXPECT_EQ(plan.size(), 1000u);
  EXPECT_EQ(CleanShare(plan), 0.8);
  cfg.output_size = 250;
  plan = PlanMix(m, cfg);
  EXPECT_EQ(plan.size(), 250u);
  EXPECT_EQ(CleanShare(plan), 0.8);
  // Unpaired ids are fine here.
  cfg.clean_fraction = 0.0;
  cfg.output_size = 0;
  plan = PlanMix(m, cfg);
  EXPECT_EQ(plan.size(), 400u);
  EXPECT_EQ(CleanShare(plan), 0.0);
}

// The five input configurations: clean, mtr, clean+SpecAugment,
// mtr+SpecAugment, and the 8:2 mix.
TEST(PlanMixTest, FiveConfigurationsExpressible) {
  const auto m = PairedManifest(100);
  const AugmentPolicy basic = Preset("specaug-basic");
  struct Case {
    double cf;
    std::optional<AugmentPolicy> clean_policy;
    std::optional<AugmentPolicy> mtr_policy;
    bool any_clean;
    bool any_mtr;
  };
  const Case cases[] = {
      {1.0, AugmentPolicy{}, std::nullopt, true, false},
      {0.0, AugmentPolicy{}, std::nullopt, false, true},
      {1.0, basic, std::nullopt, true, false},
      {0.0, AugmentPolicy{}, basic, false, true},
      {0.8, basic, std::nullopt, true, true},
  };
  for (const Case& c : cases) {
    MixConfig cfg;
    cfg.clean_fraction = c.cf;
    cfg.policy_clean = *c.clean_policy;
    cfg.policy_mtr = c.mtr_policy;
    const auto plan = PlanMix(m, cfg);
    bool clean = false;
    bool mtr = false;
    for (const auto& item : plan) {
      if (item.entry.source == Source::kClean) {
        clean = true;
        EXPECT_EQ(*item.policy, *c.clean_policy);
      } else {
        mtr = true;
        EXPECT_EQ(item.policy, c.mtr_policy);
      }
    }
    EXPECT_EQ(clean, c.any_clean);
    EXPECT_EQ(mtr, c.any_mtr);
  }
}

void AddInputs(const std::vector<ManifestEntry>& m, MemoryIo& io) {
  std::mt19937_64 gen(4);
  for (const auto& e : m) {
    io.inputs[e.path] = WriteSgram(testing::RandomSpectrogram(120, 128, gen));
  }
}

TEST(RunPipelineTest, EmptyPlan) {
  MemoryIo io;
  const PipelineSummary s = RunPipeline({}, io);
  EXPECT_EQ(s.total, 0);
  EXPECT_EQ(s.written, 0);
  EXPECT_TRUE(s.failures.empty());
  EXPECT_TRUE(io.outputs().at("manifest.jsonl").empty());
}

TEST(RunPipelineTest, DeterministicAcrossRunsAndThreadCounts) {
  const auto m = PairedManifest(3);
  MixConfig cfg;
  cfg.seed = 7;
  cfg.clean_fraction = 0.5;
  cfg.policy_clean = Preset("libri-full-adapt");
  const auto plan = PlanMix(m, cfg);
  MemoryIo a;
  MemoryIo b;
  AddInputs(m, a);
  AddInputs(m, b);
  RunOptions one;
  RunOptions four;
  four.threads = 4;
  four.stack = StackConfig{};
  one.stack = StackConfig{};
  const auto sa = RunPipeline(plan, a, one);
  const auto sb = RunPipeline(plan, b, four);
  EXPECT_EQ(sa.written, 3);
  EXPECT_EQ(sa.written_clean + sa.written_mtr, 3);
  EXPECT_EQ(a.outputs(), b.outputs());
  EXPECT_EQ(a.outputs().size(), 4u);
}

TEST(RunPipelineTest, OutputMatchesDirectAugmentation) {
  const auto m = PairedManifest(1);
  MixConfig cfg;
  cfg.clean_fraction = 1.0;
  cfg.seed = 11;
  cfg.policy_clean = Preset("librispeech-double");
  const auto plan = PlanMix(m, cfg);
  MemoryIo io;
  AddInputs(m, io);
  RunPipeline(plan, io);
  SeededRng rng = DeriveStream(11, "utt-0");
  const Spectrogram expected =
      ApplyPolicy(ReadSgram(io.inputs.at("clean/utt-0.sgram")), cfg.policy_clean, rng);
  EXPECT_EQ(io.outputs().at("utt-0.clean.sgram"), WriteSgram(expected));
  const auto manifest = io.outputs().at("manifest.jsonl");
  EXPECT_EQ(std::string(manifest.begin(), manifest.end()),
            "{\"id\":\"utt-0\",\"path\":\"utt-0.clean.sgram\",\"source\":\"clean\"}\n");
}

TEST(RunPipelineTest, CorruptFileIsRecordedNotFatal) {
  const auto m = PairedManifest(3);
  MixConfig cfg;
  cfg.clean_fraction = 1.0;
  const auto plan = PlanMix(m, cfg);
  MemoryIo io;
  AddInputs(m, io);
  io.inputs["clean/utt-1.sgram"] = {'j', 'u', 'n', 'k'};
  const auto s = RunPipeline(plan, io);
  EXPECT_EQ(s.total, 3);
  EXPECT_EQ(s.written, 2);
  ASSERT_EQ(s.failures.size(), 1u);
  EXPECT_EQ(s.failures[0].id, "utt-1");
}

TEST(OutputNameTest, SanitizesUnsafeIds) {
  EXPECT_EQ(OutputName({"u1", "", Source::kMtr, {}}), "u1.mtr.sgram");
  const std::string odd = OutputName({"a/b", "", Source::kClean, {}});
  EXPECT_EQ(odd.substr(0, 4), "a_b-");
  EXPECT_NE(odd, OutputName({"a_b", "", Source::kClean, {}}));
  EXPECT_EQ(OutputName({"..", "", Source::kClean, {}}).substr(0, 3), "..-");
}

}  // namespace
}  // namespace specaug
