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


"""Deterministic SpecAugment with adaptive time masking.

Spectrograms are float32 arrays of shape (frames, channels). All randomness
comes from (seed, utterance_id), so the same inputs always give the same
output, here and in the ``specaug`` command-line tool.
"""

from ._specaug import (
    AugmentPolicy,
    MaskFill,
    ResolvedMaskPlan,
    SpecAugError,
    TimeMode,
    apply_policy,
    decode_wav,
    describe_policy,
    fnv1a64,
    log_mel,
    parse_policy,
    plan_mix,
    preset,
    preset_names,
    read_sgram,
    render_pgm,
    resolve_policy,
    serialize_policy,
    stack,
    time_warp,
    unstack,
    warp_function,
    write_sgram,
)

__all__ = [
    "AugmentPolicy",
    "MaskFill",
    "ResolvedMaskPlan",
    "SpecAugError",
    "TimeMode",
    "apply_policy",
    "decode_wav",
    "describe_policy",
    "fnv1a64",
    "log_mel",
    "parse_policy",
    "plan_mix",
    "preset",
    "preset_names",
    "read_sgram",
    "render_pgm",
    "resolve_policy",
    "serialize_policy",
    "stack",
    "time_warp",
    "unstack",
    "warp_function",
    "write_sgram",
]
