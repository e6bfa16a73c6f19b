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

#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "specaug/augment.h"
#include "specaug/errors.h"
#include "specaug/formats.h"
#include "specaug/frontend.h"
#include "specaug/pipeline.h"
#include "specaug/policy.h"
#include "specaug/rng.h"
#include "specaug/stacking.h"
#include "specaug/wav.h"

namespace py = pybind11;

namespace {

using FloatArray = py::array_t<float, py::array::c_style | py::array::forcecast>;

specaug::Spectrogram ToSpectrogram(const FloatArray& array) {
  if (array.ndim() != 2) {
    throw py::value_error("expected a 2-D (frames, channels) array");
  }
  const auto tau = static_cast<int>(array.shape(0));
  const auto nu = static_cast<int>(array.shape(1));
  std::vector<float> values(array.data(), array.data() + array.size());
  return specaug::Spectrogram(tau, nu, std::move(values));
}

FloatArray ToArray(const specaug::Spectrogram& spec) {
  FloatArray out({spec.tau(), spec.nu()});
  std::copy(spec.values().begin(), spec.values().end(), out.mutable_data());
  return out;
}

py::bytes ToBytes(const std::vector<std::uint8_t>& bytes) {
  return py::bytes(reinterpret_cast<const char*>(bytes.data()), bytes.size());
}

std::vector<std::uint8_t> FromBytes(const py::bytes& bytes) {
  const std::string s = bytes;
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

PYBIND11_MODULE(_specaug, m) {
  m.doc() = "Deterministic SpecAugment with adaptive time masking.";

  py::register_exception<specaug::Error>(m, "SpecAugError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const specaug::ContractError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::enum_<specaug::TimeMode>(m, "TimeMode")
      .value("FIXED", specaug::TimeMode::kFixed)
      .value("ADAPTIVE_SIZE", specaug::TimeMode::kAdaptiveSize)
      .value("ADAPTIVE_MULTIPLICITY", specaug::TimeMode::kAdaptiveMultiplicity)
      .value("ADAPTIVE_BOTH", specaug::TimeMode::kAdaptiveBoth);

  py::class_<specaug::MaskFill> fill(m, "MaskFill");
  py::enum_<specaug::MaskFill::Mode>(fill, "Mode")
      .value("CONSTANT", specaug::MaskFill::Mode::kConstant)
      .value("UTTERANCE_MEAN", specaug::MaskFill::Mode::kUtteranceMean)
      .value("GAUSSIAN", specaug::MaskFill::Mode::kGaussian);
  fill.def(py::init<>())
      .def_readwrite("mode", &specaug::MaskFill::mode)
      .def_readwrite("constant", &specaug::MaskFill::constant)
      .def_readwrite("sigma", &specaug::MaskFill::sigma)
      .def_static("constant_fill", &specaug::MaskFill::Constant, py::arg("value"))
      .def_static("utterance_mean", &specaug::MaskFill::UtteranceMean)
      .def_static("gaussian", &specaug::MaskFill::Gaussian, py::arg("sigma"))
      .def(py::self == py::self);

  py::class_<specaug::AugmentPolicy>(m, "AugmentPolicy")
      .def(py::init<>())
      .def_readwrite("warp_param", &specaug::AugmentPolicy::warp_param)
      .def_readwrite("freq_mask_param", &specaug::AugmentPolicy::freq_mask_param)
      .def_readwrite("freq_mask_count", &specaug::AugmentPolicy::freq_mask_count)
      .def_readwrite("time_mode", &specaug::AugmentPolicy::time_mode)
      .def_readwrite("time_mask_param", &specaug::AugmentPolicy::time_mask_param)
      .def_readwrite("time_mask_count", &specaug::AugmentPolicy::time_mask_count)
      .def_readwrite("multiplicity_ratio", &specaug::AugmentPolicy::multiplicity_ratio)
      .def_readwrite("size_ratio", &specaug::AugmentPolicy::size_ratio)
      .def_readwrite("multiplicity_cap", &specaug::AugmentPolicy::multiplicity_cap)
      .def_readwrite("fill", &specaug::AugmentPolicy::fill)
      .def(py::self == py::self)
      .def("__repr__", [](const specaug::AugmentPolicy& p) {
        return "AugmentPolicy(" + specaug::DescribePolicy(p) + ")";
      });

  py::class_<specaug::ResolvedMaskPlan>(m, "ResolvedMaskPlan")
      .def_readonly("n_time_masks", &specaug::ResolvedMaskPlan::n_time_masks)
      .def_readonly("time_mask_param", &specaug::ResolvedMaskPlan::time_mask_param)
      .def_readonly("n_freq_masks", &specaug::ResolvedMaskPlan::n_freq_masks)
      .def_readonly("freq_mask_param", &specaug::ResolvedMaskPlan::freq_mask_param);

  m.def("preset", &specaug::Preset, py::arg("name"));
  m.def("preset_names", &specaug::PresetNames);
  m.def("resolve_policy", &specaug::ResolvePolicy, py::arg("policy"), py::arg("tau"));
  m.def("serialize_policy", &specaug::SerializePolicy, py::arg("policy"));
  m.def("parse_policy", [](const std::string& text) { return specaug::ParsePolicy(text); },
        py::arg("text"));
  m.def("describe_policy", &specaug::DescribePolicy, py::arg("policy"));

  m.def("fnv1a64", [](const std::string& s) { return specaug::Fnv1a64(s); },
        py::arg("data"));

  m.def(
      "apply_policy",
      [](const FloatArray& spec, const specaug::AugmentPolicy& policy,
         std::uint64_t seed, const std::string& utterance_id) {
        specaug::SeededRng rng = specaug::DeriveStream(seed, utterance_id);
        return ToArray(specaug::ApplyPolicy(ToSpectrogram(spec), policy, rng));
      },
      py::arg("spec"), py::arg("policy"), py::arg("seed"), py::arg("utterance_id"),
      "Augments a (frames, channels) float32 array with the stream derived "
      "from (seed, utterance_id).");
  m.def(
      "time_warp",
      [](const FloatArray& spec, int warp_param, std::uint64_t seed,
         const std::string& utterance_id) {
        specaug::SeededRng rng = specaug::DeriveStream(seed, utterance_id);
        return ToArray(specaug::TimeWarp(ToSpectrogram(spec), warp_param, rng));
      },
      py::arg("spec"), py::arg("warp_param"), py::arg("seed"), py::arg("utterance_id"));
  m.def("warp_function", &specaug::WarpFunction, py::arg("t"), py::arg("w0"),
        py::arg("w"), py::arg("tau"));

  m.def(
      "log_mel",
      [](const py::array_t<double, py::array::c_style | py::array::forcecast>& samples,
         int sample_rate, int n_mels, int fft_size, double fmin, double fmax,
         double log_floor) {
        specaug::AudioBuffer audio;
        audio.sample_rate = sample_rate;
        audio.samples.assign(samples.data(), samples.data() + samples.size());
        specaug::MelConfig cfg;
        cfg.sample_rate = sample_rate;
        cfg.n_mels = n_mels;
        cfg.fft_size = fft_size;
        cfg.fmin = fmin;
        cfg.fmax = fmax;
        cfg.log_floor = log_floor;
        return ToArray(specaug::LogMel(audio, cfg));
      },
      py::arg("samples"), py::arg("sample_rate") = 16000, py::arg("n_mels") = 128,
      py::arg("fft_size") = 512, py::arg("fmin") = 125.0, py::arg("fmax") = 7600.0,
      py::arg("log_floor") = 1e-10);
  m.def(
      "decode_wav",
      [](const py::bytes& data) {
        const specaug::AudioBuffer audio = specaug::DecodeWav(FromBytes(data));
        py::array_t<double> samples(static_cast<py::ssize_t>(audio.samples.size()));
        std::copy(audio.samples.begin(), audio.samples.end(), samples.mutable_data());
        return py::make_tuple(audio.sample_rate, samples);
      },
      py::arg("data"), "Returns (sample_rate, samples).");

  m.def(
      "stack",
      [](const FloatArray& spec, int height, int stride, int frame_dim) {
        return ToArray(specaug::Stack(ToSpectrogram(spec), {frame_dim, height, stride}));
      },
      py::arg("spec"), py::arg("height") = 4, py::arg("stride") = 3,
      py::arg("frame_dim") = 128);
  m.def(
      "unstack",
      [](const FloatArray& stacked, int original_tau, int height, int stride,
         int frame_dim, bool strict) {
        return ToArray(specaug::Unstack(
            ToSpectrogram(stacked), original_tau, {frame_dim, height, stride},
            strict ? specaug::UnstackCheck::kStrict : specaug::UnstackCheck::kTrusting));
      },
      py::arg("stacked"), py::arg("original_tau"), py::arg("height") = 4,
      py::arg("stride") = 3, py::arg("frame_dim") = 128, py::arg("strict") = false);

  m.def("read_sgram",
        [](const py::bytes& data) { return ToArray(specaug::ReadSgram(FromBytes(data))); },
        py::arg("data"));
  m.def("write_sgram",
        [](const FloatArray& spec) { return ToBytes(specaug::WriteSgram(ToSpectrogram(spec))); },
        py::arg("spec"));
  m.def("render_pgm",
        [](const FloatArray& spec) { return ToBytes(specaug::RenderPgm(ToSpectrogram(spec))); },
        py::arg("spec"));

  m.def(
      "plan_mix",
      [](const std::string& manifest_jsonl, double clean_fraction,
         const specaug::AugmentPolicy& policy_clean,
         std::optional<specaug::AugmentPolicy> policy_mtr, std::uint64_t seed,
         const std::string& pairing, int output_size) {
        specaug::MixConfig cfg;
        cfg.clean_fraction = clean_fraction;
        cfg.policy_clean = policy_clean;
        cfg.policy_mtr = std::move(policy_mtr);
        cfg.seed = seed;
        if (pairing == "by-id") {
          cfg.pairing = specaug::Pairing::kByIdPairs;
        } else if (pairing == "pools") {
          cfg.pairing = specaug::Pairing::kIndependentPools;
        } else {
          throw py::value_error("pairing must be 'by-id' or 'pools'");
        }
        cfg.output_size = output_size;
        py::list out;
        for (const auto& item :
             specaug::PlanMix(specaug::ParseManifest(manifest_jsonl), cfg)) {
          py::dict d;
          d["id"] = item.entry.id;
          d["path"] = item.entry.path;
          d["source"] = std::string(specaug::SourceName(item.entry.source));
          d["augmented"] = item.policy.has_value();
          out.append(d);
        }
        return out;
      },
      py::arg("manifest_jsonl"), py::arg("clean_fraction") = 0.8,
      py::arg("policy_clean") = specaug::Preset("specaug-basic"),
      py::arg("policy_mtr") = py::none(), py::arg("seed") = 0,
      py::arg("pairing") = "by-id", py::arg("output_size") = 0);
}
