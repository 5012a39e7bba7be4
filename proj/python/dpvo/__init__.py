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
"""Two-phase dual pixel-value-ordering reversible data hiding."""

from dpvo._dpvo import (
    DpvoError,
    arith_decode,
    arith_encode,
    capacity,
    decode,
    encode,
    max_payload,
    prng_payload,
    psnr,
    read_pgm,
    write_pgm,
)

__all__ = [
    "DpvoError",
    "arith_decode",
    "arith_encode",
    "capacity",
    "decode",
    "encode",
    "max_payload",
    "prng_payload",
    "psnr",
    "read_pgm",
    "write_pgm",
]
