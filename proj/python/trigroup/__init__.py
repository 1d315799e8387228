"""Exact projective configuration theorems and the additive group of triangles.

All coordinates are exact rationals carried as strings ("num/den" or plain
integers); every identity the library checks holds with zero tolerance.
"""

from ._core import (
    DegenerateConstructionError,
    GeometryError,
    ParseError,
    TriangleElement,
    TriangleKind,
    UnsupportedError,
    add,
    completely_pseudo,
    eval_expression,
    figure,
    figures,
    half,
    presum,
    presum_geometric,
    pseudo_parameterize,
    pseudo_presum_via_lemma,
    pseudo_vertices,
    realize,
    reflect_mass_center,
    sum_with_fixed,
    theorems,
    verify,
    zero,
)

__all__ = [
    "DegenerateConstructionError",
    "GeometryError",
    "ParseError",
    "TriangleElement",
    "TriangleKind",
    "UnsupportedError",
    "add",
    "completely_pseudo",
    "eval_expression",
    "figure",
    "figures",
    "half",
    "presum",
    "presum_geometric",
    "pseudo_parameterize",
    "pseudo_presum_via_lemma",
    "pseudo_vertices",
    "realize",
    "reflect_mass_center",
    "sum_with_fixed",
    "theorems",
    "verify",
    "zero",
]
