# Copyright 2026 The fastgen Authors.
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

"""Diffie-Hellman key agreement with fast generators.

Group elements, exponents and parameters are plain Python ints.
"""

from ._core import (
    CostCounter,
    FastgenError,
    GroupParams,
    amplification_rounds,
    amplified_dh,
    authority_recover,
    bench_exp,
    bsgs_dlog,
    celebrity_encrypt,
    celebrity_keygen,
    derive_key,
    dh_any_base,
    dl_any_base,
    exp_fast_base,
    find_fast_generator,
    forge_standard,
    generate_params,
    invert_exponent,
    is_probable_prime,
    is_subgroup_member,
    keygen,
    mod_exp,
    run_agreement,
    square_to_dh,
    subscriber_decrypt,
    subscriber_keygen,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
