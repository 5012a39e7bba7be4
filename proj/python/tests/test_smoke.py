# Copyright 2026 The dpvo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
import math

import numpy as np
import pytest

import dpvo


def smooth_image(w, h, seed):
    rng = np.random.default_rng(seed)
    steps = rng.integers(-2, 3, size=(h, w))
    img = 128 + np.cumsum(steps, axis=1) // 4 + np.cumsum(steps, axis=0) // 4
    return np.clip(img, 0, 255).astype(np.uint8)


def test_round_trip_two_phase():
    cover = smooth_image(128, 128, 7)
    cap = dpvo.max_payload(cover, seed=3)
    assert cap > 0
    bits = dpvo.prng_payload(3, cap)
    stego, report = dpvo.encode(cover, bits)
    assert report["gross_bits"] == cap
    assert report["fwd_bits"] + report["bwd_bits"] >= cap
    restored, data = dpvo.decode(stego)
    assert np.array_equal(restored, cover)
    assert np.array_equal(data, bits)


def test_round_trip_forward_only():
    cover = smooth_image(96, 64, 11)
    bits = dpvo.prng_payload(5, 40)
    stego, _ = dpvo.encode(cover, bits, scheme="forward-only")
    restored, data = dpvo.decode(stego, scheme="forward-only")
    assert np.array_equal(restored, cover)
    assert np.array_equal(data, bits)


def test_capacity_report():
    cover = smooth_image(128, 128, 2)
    c = dpvo.capacity(cover)
    assert c["overall_bits"] == c["forward_bits"] + c["backward_bits"]
    assert c["backward_bits"] == c["backward_min_bits"] + c["backward_max_bits"]
    assert c["psnr_forward_db"] > 0


def test_over_capacity_raises():
    cover = smooth_image(64, 64, 4)
    bits = dpvo.prng_payload(1, 64 * 64)
    with pytest.raises(dpvo.DpvoError):
        dpvo.encode(cover, bits)


def test_plain_image_is_not_a_container():
    with pytest.raises(dpvo.DpvoError):
        dpvo.decode(smooth_image(64, 64, 9))


def test_psnr_and_coder():
    a = smooth_image(32, 32, 1)
    assert math.isinf(dpvo.psnr(a, a))
    bits = dpvo.prng_payload(0, 1000)
    code = dpvo.arith_encode(bits)
    assert np.array_equal(dpvo.arith_decode(code, 1000), bits)


def test_pgm_round_trip(tmp_path):
    a = smooth_image(40, 30, 6)
    path = tmp_path / "a.pgm"
    dpvo.write_pgm(a, str(path))
    assert np.array_equal(dpvo.read_pgm(str(path)), a)
