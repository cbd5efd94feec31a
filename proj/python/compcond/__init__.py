# Copyright 2026 The compcond Authors
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

"""Exact condition numbers of companion matrices."""

import json as _json

from ._core import (
    CompcondError,
    char_poly,
    condition,
    equivalent,
    fiedler_matrix,
    frobenius_matrix,
    generalized_matrix,
    initial_step_size,
    inverse,
    kappa_fiedler_sq,
    kappa_generalized_sq,
    kappa_striped_sq,
    lattice_matrix,
    lattice_paths,
    parse_polynomial,
    stripe_tuples,
    striped_matrix,
    verify,
)
from ._core import analyze as _analyze

__all__ = [
    "CompcondError",
    "analyze",
    "analyze_text",
    "char_poly",
    "condition",
    "equivalent",
    "fiedler_matrix",
    "frobenius_matrix",
    "generalized_matrix",
    "initial_step_size",
    "inverse",
    "kappa_fiedler_sq",
    "kappa_generalized_sq",
    "kappa_striped_sq",
    "lattice_matrix",
    "lattice_paths",
    "parse_polynomial",
    "stripe_tuples",
    "striped_matrix",
    "verify",
]


def analyze_text(poly, families=None, a_grid=None, ell_range=None, steps=None, tuples=None, format="json"):
    """Report in any output format (json, csv, table, plotdata) as a string."""
    return _analyze(poly, families, a_grid, ell_range, steps, tuples, format)


def analyze(poly, families=None, a_grid=None, ell_range=None, steps=None, tuples=None):
    """Report as a dict; exact values stay as "p/q" strings."""
    return _json.loads(_analyze(poly, families, a_grid, ell_range, steps, tuples, "json"))
