# Copyright 2026 The egfkit Authors
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

"""Exact Bernoulli/zeta sequence algebra over EGF coefficient vectors.

Rational values cross the boundary as ``fractions.Fraction``; pass rationals
as ``int``, ``Fraction`` or ``"p/q"`` strings. Arbitrary-precision floats are
returned as decimal strings together with their precision in bits.
"""

from egfkit._core import (
    add,
    bernoulli_number,
    bernoulli_numbers,
    bernoulli_poly,
    bernoulli_poly_seq,
    definite_integral_01,
    diff_seq_via_star,
    diff_table_recursive,
    faulhaber_sum,
    forward_diff,
    geometric,
    h_seq,
    hadamard,
    hurwitz_neg,
    identity,
    integrate_shifted,
    inverse,
    power_sum_bruteforce,
    s_poly,
    s_poly_shifted,
    scale,
    shift_left,
    shift_right,
    star,
    suite_names,
    theorem21_check,
    theorem23_check,
    verify_suite,
    zeta_eval,
    zeta_neg,
    zeta_neg_vector,
    zeta_reference,
)

__version__ = "0.1.0"

__all__ = [
    "add",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_poly",
    "bernoulli_poly_seq",
    "definite_integral_01",
    "diff_seq_via_star",
    "diff_table_recursive",
    "faulhaber_sum",
    "forward_diff",
    "geometric",
    "h_seq",
    "hadamard",
    "hurwitz_neg",
    "identity",
    "integrate_shifted",
    "inverse",
    "power_sum_bruteforce",
    "s_poly",
    "s_poly_shifted",
    "scale",
    "shift_left",
    "shift_right",
    "star",
    "suite_names",
    "theorem21_check",
    "theorem23_check",
    "verify_suite",
    "zeta_eval",
    "zeta_neg",
    "zeta_neg_vector",
    "zeta_reference",
]
