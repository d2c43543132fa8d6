"""Exact homotopy colimits and limits of diagrams of chain complexes over Z."""

from .bar_cobar import (
    HocolimResult,
    bar_simplicial,
    cobar_cosimplicial,
    cosimplicial_totalization,
    fat_realization,
    hocolim,
    holim,
    linearize,
    realization,
    simplicial_hocolim,
)
from .category_diagram import (
    Diagram,
    FiniteCategory,
    arrow_category,
    constant_diagram,
    cospan_category,
    cyclic_group_category,
    diagram_from_arrows,
    nerve_simplices,
    poset_chain,
    span_category,
    terminal_category,
    validate,
)
from .chain import ChainComplex, ChainMap, HomologyGroup, cone, homology, shift, tensor
from .exact_linalg import GF, QQ, ZZ, Matrix, Ring, smith_normal_form
from .totalization import DegreeWindow, tot_prod, tot_sum

__all__ = [
    "ChainComplex",
    "ChainMap",
    "DegreeWindow",
    "Diagram",
    "FiniteCategory",
    "GF",
    "HocolimResult",
    "HomologyGroup",
    "Matrix",
    "QQ",
    "Ring",
    "ZZ",
    "arrow_category",
    "bar_simplicial",
    "cobar_cosimplicial",
    "cone",
    "constant_diagram",
    "cosimplicial_totalization",
    "cospan_category",
    "cyclic_group_category",
    "diagram_from_arrows",
    "fat_realization",
    "hocolim",
    "holim",
    "homology",
    "linearize",
    "nerve_simplices",
    "poset_chain",
    "realization",
    "shift",
    "simplicial_hocolim",
    "smith_normal_form",
    "span_category",
    "tensor",
    "terminal_category",
    "tot_prod",
    "tot_sum",
    "validate",
]
