"""Exact invariants of projected rational normal scroll surfaces over GF(p).

The heavy lifting lives in the C++ extension `scrollreg._scrollreg`:
Groebner bases, Hilbert series, minimal free resolutions and Betti tables,
graded local cohomology, and the scroll/divisor/projection constructions.
"""

from scrollreg._scrollreg import (  # noqa: F401
    GradedIdeal,
    Polynomial,
    Ring,
    ScrollregError,
    betti_table,
    cohomology_window,
    colon,
    compile_recipe,
    eliminate,
    hilbert,
    ideal_equal,
    intersect,
    invariants,
    oracles,
    parse,
    reg_depth,
    saturate,
    saturate_irrelevant,
    scheme_length,
    scroll_ideal,
    verify,
)

__all__ = [
    "GradedIdeal",
    "Polynomial",
    "Ring",
    "ScrollregError",
    "betti_table",
    "cohomology_window",
    "colon",
    "compile_recipe",
    "eliminate",
    "hilbert",
    "ideal_equal",
    "intersect",
    "invariants",
    "oracles",
    "parse",
    "reg_depth",
    "saturate",
    "saturate_irrelevant",
    "scheme_length",
    "scroll_ideal",
    "verify",
]
