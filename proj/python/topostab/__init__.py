# Copyright 2026 The topostab Authors
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

"""Exact U(1)_k state preparation from surgery links and tensor networks."""

from ._topostab import (
    IllDefinedError,
    Network,
    NotStabilizerError,
    ParseError,
    Presentation,
    State,
    contract,
    dimension_inequality,
    flat_entropy,
    fusion_rules,
    fusion_state,
    ghz_count,
    is_stabilizer,
    parse_manifold,
    parse_network,
    prepare,
    quadratic_gauss_sum,
    run,
    tableau,
    verlinde_dim,
)

__all__ = [
    "IllDefinedError",
    "Network",
    "NotStabilizerError",
    "ParseError",
    "Presentation",
    "State",
    "contract",
    "dimension_inequality",
    "flat_entropy",
    "fusion_rules",
    "fusion_state",
    "ghz_count",
    "is_stabilizer",
    "parse_manifold",
    "parse_network",
    "prepare",
    "quadratic_gauss_sum",
    "run",
    "tableau",
    "verlinde_dim",
]
