# Copyright 2026 The cyclepack Authors
# SPDX-License-Identifier: Apache-2.0

"""Vertex-disjoint cycle packing."""

from ._cyclepack import (
    MultiGraph,
    ParseError,
    cycles_or_fvs,
    emit_graph,
    generate,
    girth_bruteforce,
    ie_decide,
    ie_search,
    ie_signed_sum,
    is_fvs,
    max_cycle_packing_bruteforce,
    parse_graph,
    reduce,
    shortest_cycle,
    solve,
    theorem2_constant,
    verify_packing,
)

__all__ = [
    "MultiGraph",
    "ParseError",
    "cycles_or_fvs",
    "emit_graph",
    "generate",
    "girth_bruteforce",
    "ie_decide",
    "ie_search",
    "ie_signed_sum",
    "is_fvs",
    "max_cycle_packing_bruteforce",
    "parse_graph",
    "reduce",
    "shortest_cycle",
    "solve",
    "theorem2_constant",
    "verify_packing",
]
