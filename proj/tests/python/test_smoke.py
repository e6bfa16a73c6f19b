# Copyright 2026 The SpecAug Toolkit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.


import struct

import numpy as np
import pytest

import specaug


def ramp(tau, nu):
    return (1000 + nu * np.arange(tau)[:, None] + np.arange(nu)[None, :]).astype(np.float32)


def test_presets_and_resolution():
    assert specaug.preset_names() == [
        "librispeech-double", "libri-full-adapt", "specaug-basic", "freq-only"]
    p = specaug.preset("libri-full-adapt")
    assert p.time_mode == specaug.TimeMode.ADAPTIVE_BOTH
    plan = specaug.resolve_policy(p, 1000)
    assert (plan.n_time_masks, plan.time_mask_param) == (20, 40)
    plan = specaug.resolve_policy(p, 100)
    assert (plan.n_time_masks, plan.time_mask_param) == (4, 4)
    assert specaug.parse_policy(specaug.serialize_policy(p)) == p
    with pytest.raises(specaug.SpecAugError, match="unknown preset"):
        specaug.preset("no-such-policy")


def test_apply_policy_is_deterministic():
    rng = np.random.default_rng(0)
    x = rng.normal(size=(300, 128)).astype(np.float32)
    policy = specaug.preset("librispeech-double")
    a = specaug.apply_policy(x, policy, 7, "u1")
    b = specaug.apply_policy(x, policy, 7, "u1")
    c = specaug.apply_policy(x, policy, 7, "u2")
    assert a.shape == x.shape and a.dtype == np.float32
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_freq_only_changes_whole_channels():
    x = ramp(50, 128)
    y = specaug.apply_policy(x, specaug.preset("freq-only"), 3, "f")
    changed = np.any(y != x, axis=0)
    assert np.all((y[:, changed] == 0))


def test_warp_function_values():
    assert specaug.warp_function(10, 10, 3, 20) == 13
    assert specaug.warp_function(15, 10, 3, 20) == pytest.approx(147 / 9)
    assert specaug.warp_function(19, 10, 3, 20) == 19
    with pytest.raises(ValueError):
        specaug.warp_function(0, 0, 3, 20)


def test_time_warp_golden_seed():
    x = ramp(20, 6)
    y = specaug.time_warp(x, 5, 64, "warp-golden")
    assert np.array_equal(y[13], x[10])


def test_stack_round_trip():
    rng = np.random.default_rng(1)
    for tau in (1, 4, 10, 77):
        x = rng.normal(size=(tau, 128)).astype(np.float32)
        s = specaug.stack(x)
        assert s.shape == (-(-tau // 3), 512)
        assert np.array_equal(specaug.unstack(s, tau, strict=True), x)
    with pytest.raises(specaug.SpecAugError):
        specaug.unstack(specaug.stack(np.zeros((10, 128), np.float32)), 20)


def test_sgram_and_pgm_bytes():
    one = specaug.write_sgram(np.zeros((1, 1), np.float32))
    assert len(one) == 20 and one[:4] == b"SGRM"
    x = np.arange(4, dtype=np.float32).reshape(2, 2)
    assert np.array_equal(specaug.read_sgram(specaug.write_sgram(x)), x)
    assert specaug.render_pgm(x) == b"P5\n2 2\n255\n" + bytes([85, 255, 0, 170])
    with pytest.raises(specaug.SpecAugError):
        specaug.read_sgram(b"XXXX" + one[4:])


def test_log_mel_sine_and_silence():
    assert np.all(specaug.log_mel(np.zeros(16000)) == np.float32(np.log(1e-10)))
    n = np.arange(16000)
    s = specaug.log_mel(0.5 * np.sin(2 * np.pi * 1000 * n / 16000))
    assert s.shape == (97, 128)
    assert set(np.argmax(s, axis=1)) == {39}


def test_decode_wav():
    data = struct.pack("<hh", 32767, -32768)
    header = (b"RIFF" + struct.pack("<I", 36 + len(data)) + b"WAVEfmt "
              + struct.pack("<IHHIIHH", 16, 1, 1, 16000, 32000, 2, 16)
              + b"data" + struct.pack("<I", len(data)))
    rate, samples = specaug.decode_wav(header + data)
    assert rate == 16000
    assert samples.tolist() == [32767 / 32768, -1.0]
    with pytest.raises(specaug.SpecAugError):
        specaug.decode_wav(header + data[:2])


def test_plan_mix():
    lines = []
    for i in range(2000):
        lines.append('{"id":"u%d","path":"c%d","source":"clean"}' % (i, i))
        lines.append('{"id":"u%d","path":"m%d","source":"mtr"}' % (i, i))
    manifest = "\n".join(lines)
    plan = specaug.plan_mix(manifest, clean_fraction=0.8, seed=1)
    assert len(plan) == 2000
    share = sum(item["source"] == "clean" for item in plan) / len(plan)
    assert 0.76 < share < 0.84
    assert all(item["augmented"] == (item["source"] == "clean") for item in plan)
    only_mtr = specaug.plan_mix(manifest, clean_fraction=0.0, seed=1)
    assert {item["source"] for item in only_mtr} == {"mtr"}
    with pytest.raises(specaug.SpecAugError, match="counterpart"):
        specaug.plan_mix(manifest + '\n{"id":"x","path":"p","source":"clean"}')
