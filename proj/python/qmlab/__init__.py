# Copyright 2026 The qmlab Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Finite-field leakage lab.

Elements are integer encodings (little-endian base-p digits of the
polynomial-basis coordinates) and sets are sorted lists of encodings.
"""

import json

from qmlab._qmlab import (
    Field,
    QmlabError,
    b11,
    bandwidth_bound,
    bucket_eval,
    cli,
    figure1_table,
    gf7_scheme_json,
    omega,
    one_bit_leak,
    scaled_pair,
    scaled_pair_union_size,
    sqrt_table,
    verify_gf7,
)

__all__ = [
    "Field",
    "QmlabError",
    "b11",
    "bandwidth_bound",
    "bucket_eval",
    "cli",
    "figure1_table",
    "gf7_scheme",
    "omega",
    "one_bit_leak",
    "run",
    "scaled_pair",
    "scaled_pair_union_size",
    "sqrt_table",
    "suite",
    "verify_gf7",
]


def gf7_scheme():
    """The 5-bit F_7 scheme as a scheme-file dict."""
    return json.loads(gf7_scheme_json())


def run(*args):
    """Runs a CLI command with --json and returns (exit code, report dict)."""
    code, out, err = cli([*map(str, args), "--json"])
    if code == 2:
        raise QmlabError(err.strip())
    return code, json.loads(out)


def suite(qmax=64, seed=0):
    """The verification battery as a report dict."""
    return run("suite", "--qmax", qmax, "--seed", seed)[1]
