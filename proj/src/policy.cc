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

#include "specaug/policy.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "specaug/errors.h"

namespace specaug {
namespace {

bool AdaptiveMultiplicity(TimeMode mode) {
  return mode == TimeMode::kAdaptiveMultiplicity ||
         mode == TimeMode::kAdaptiveBoth;
}

bool AdaptiveSize(TimeMode mode) {
  return mode == TimeMode::kAdaptiveSize || mode == TimeMode::kAdaptiveBoth;
}

int FloorProduct(double ratio, int tau) {
  return static_cast<int>(std::floor(ratio * static_cast<double>(tau)));
}

std::string_view FillModeName(MaskFill::Mode mode) {
  switch (mode) {
    case MaskFill::Mode::kConstant: return "constant";
    case MaskFill::Mode::kUtteranceMean: return "utterance-mean";
    case MaskFill::Mode::kGaussian: return "gaussian";
  }
  return "constant";
}

[[noreturn]] void SyntaxError(int line, const std::string& message) {
  throw Error(ErrorCode::kPolicySyntax,
              "policy line " + std::to_string(line) + ": " + message);
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int ParseNonNegativeInt(std::string_view value, int line, std::string_view key) {
  int out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || out < 0) {
    SyntaxError(line, std::string(key) + " must be a non-negative integer, got '" +
                          std::string(value) + "'");
  }
  return out;
}

double ParseReal(std::string_view value, int line, std::string_view key) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end || !std::isfinite(out)) {
    SyntaxError(line, std::string(key) + " must be a finite real, got '" +
                          std::string(value) + "'");
  }
  return out;
}

double ParseRatio(std::string_view value, int line, std::string_view key) {
  const double out = ParseReal(value, line, key);
  if (out < 0.0 || out > 1.0) {
    SyntaxError(line, std::string(key) + " must lie in [0, 1]");
  }
  return out;
}

}  // namespace

std::string_view TimeModeName(TimeMode mode) {
  switch (mode) {
    case TimeMode::kFixed: return "fixed";
    case TimeMode::kAdaptiveSize: return "adaptive-size";
    case TimeMode::kAdaptiveMultiplicity: return "adaptive-multiplicity";
    case TimeMode::kAdaptiveBoth: return "adaptive-both";
  }
  return "fixed";
}

ResolvedMaskPlan ResolvePolicy(const AugmentPolicy& policy, int tau) {
  if (tau < 0) throw ContractError("ResolvePolicy: tau must be >= 0");
  ResolvedMaskPlan plan;
  plan.n_freq_masks = policy.freq_mask_count;
  plan.freq_mask_param = policy.freq_mask_param;
  plan.n_time_masks =
      AdaptiveMultiplicity(policy.time_mode)
          ? std::min(policy.multiplicity_cap,
                     FloorProduct(policy.multiplicity_ratio, tau))
          : policy.time_mask_count;
  plan.time_mask_param = AdaptiveSize(policy.time_mode)
                             ? FloorProduct(policy.size_ratio, tau)
                             : policy.time_mask_param;
  return plan;
}

const std::vector<std::string>& PresetNames() {
  static const std::vector<std::string> kNames = {
      "librispeech-double", "libri-full-adapt", "specaug-basic", "freq-only"};
  return kNames;
}

AugmentPolicy Preset(std::string_view name) {
  AugmentPolicy p;
  p.freq_mask_param = 27;
  p.freq_mask_count = 2;
  if (name == "librispeech-double") {
    p.warp_param = 80;
    p.time_mask_param = 100;
    p.time_mask_count = 2;
  } else if (name == "libri-full-adapt") {
    p.warp_param = 80;
    p.time_mode = TimeMode::kAdaptiveBoth;
    p.multiplicity_ratio = 0.04;
    p.size_ratio = 0.04;
    p.multiplicity_cap = 20;
  } else if (name == "specaug-basic") {
    p.time_mask_param = 50;
    p.time_mask_count = 2;
  } else if (name == "freq-only") {
    // No time masks.
  } else {
    std::string valid;
    for (const auto& n : PresetNames()) {
      if (!valid.empty()) valid += ", ";
      valid += n;
    }
    throw Error(ErrorCode::kUnknownPreset, "unknown preset '" +
                                               std::string(name) +
                                               "'; valid presets: " + valid);
  }
  return p;
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string SerializePolicy(const AugmentPolicy& p) {
  std::ostringstream out;
  out << "warp_param=" << p.warp_param << '\n'
      << "freq_mask_param=" << p.freq_mask_param << '\n'
      << "freq_mask_count=" << p.freq_mask_count << '\n'
      << "time_mode=" << TimeModeName(p.time_mode) << '\n'
      << "time_mask_param=" << p.time_mask_param << '\n'
      << "time_mask_count=" << p.time_mask_count << '\n'
      << "multiplicity_ratio=" << FormatDouble(p.multiplicity_ratio) << '\n'
      << "size_ratio=" << FormatDouble(p.size_ratio) << '\n'
      << "multiplicity_cap=" << p.multiplicity_cap << '\n'
      << "fill_mode=" << FillModeName(p.fill.mode) << '\n'
      << "fill_constant=" << FormatDouble(p.fill.constant) << '\n'
      << "fill_sigma=" << FormatDouble(p.fill.sigma) << '\n';
  return out.str();
}

AugmentPolicy ParsePolicy(std::string_view text) {
  AugmentPolicy p;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) SyntaxError(line_no, "expected key=value");
    const std::string_view key = Trim(line.substr(0, eq));
    const std::string_view value = Trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) {
      SyntaxError(line_no, "duplicate key '" + std::string(key) + "'");
    }

    if (key == "warp_param") {
      p.warp_param = ParseNonNegativeInt(value, line_no, key);
    } else if (key == "freq_mask_param") {
      p.freq_mask_param = ParseNonNegativeInt(value, line_no, key);
    } else if (key == "freq_mask_count") {
      p.freq_mask_count = ParseNonNegativeInt(value, line_no, key);
    } else if (key == "time_mode") {
      if (value == "fixed") {
        p.time_mode = TimeMode::kFixed;
      } else if (value == "adaptive-size") {
        p.time_mode = TimeMode::kAdaptiveSize;
      } else if (value == "adaptive-multiplicity") {
        p.time_mode = TimeMode::kAdaptiveMultiplicity;
      } else if (value == "adaptive-both") {
        p.time_mode = TimeMode::kAdaptiveBoth;
      } else {
        SyntaxError(line_no, "unknown time_mode '" + std::string(value) + "'");
      }
    } else if (key == "time_mask_param") {
      p.time_mask_param = ParseNonNegativeInt(value, line_no, key);
    } else if (key == "time_mask_count") {
      p.time_mask_count = ParseNonNegativeInt(value, line_no, key);
    } else if (key == "multiplicity_ratio") {
      p.multiplicity_ratio = ParseRatio(value, line_no, key);
    } else if (key == "size_ratio") {
      p.size_ratio = ParseRatio(value, line_no, key);
    } else if (key == "multiplicity_cap") {
      p.multiplicity_cap = ParseNonNegativeInt(value, line_no, key);
    } else if (key == "fill_mode") {
      if (value == "constant") {
        p.fill.mode = MaskFill::Mode::kConstant;
      } else if (value == "utterance-mean") {
        p.fill.mode = MaskFill::Mode::kUtteranceMean;
      } else if (value == "gaussian") {
        p.fill.mode = MaskFill::Mode::kGaussian;
      } else {
        SyntaxError(line_no, "unknown fill_mode '" + std::string(value) + "'");
      }
    } else if (key == "fill_constant") {
      p.fill.constant = ParseReal(value, line_no, key);
    } else if (key == "fill_sigma") {
      p.fill.sigma = ParseReal(value, line_no, key);
      if (p.fill.sigma < 0.0) SyntaxError(line_no, "fill_sigma must be >= 0");
    } else {
      SyntaxError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  return p;
}

std::string DescribePolicy(const AugmentPolicy& p) {
  std::ostringstream out;
  out << "W=" << p.warp_param << " F=" << p.freq_mask_param
      << " m_F=" << p.freq_mask_count << " time=" << TimeModeName(p.time_mode);
  if (AdaptiveMultiplicity(p.time_mode)) {
    out << " p_M=" << FormatDouble(p.multiplicity_ratio)
        << " cap=" << p.multiplicity_cap;
  } else {
    out << " m_T=" << p.time_mask_count;
  }
  if (AdaptiveSize(p.time_mode)) {
    out << " p_S=" << FormatDouble(p.size_ratio);
  } else {
    out << " T=" << p.time_mask_param;
  }
  switch (p.fill.mode) {
    case MaskFill::Mode::kConstant:
      out << " fill=constant(" << FormatDouble(p.fill.constant) << ")";
      break;
    case MaskFill::Mode::kUtteranceMean:
      out << " fill=utterance-mean";
      break;
    case MaskFill::Mode::kGaussian:
      out << " fill=gaussian(" << FormatDouble(p.fill.sigma) << ")";
      break;
  }
  return out.str();
}

}  // namespace specaug
