"""The fixed corpus of categories, diagrams and simplicial chain complexes
that property checks and the acceptance suite sweep over."""

from __future__ import annotations

from .bar_cobar import bar_simplicial, linearize
from .category_diagram import (
    Diagram,
    FiniteCategory,
    arrow_category,
    constant_diagram,
    cospan_category,
    cyclic_group_category,
    diagram_from_arrows,
    poset_chain,
    span_category,
    terminal_category,
)
from .chain import ChainComplex, ChainMap
from .dold_kan import SimplicialChainComplex, constant_simplicial
from .exact_linalg import ZZ, Matrix
from .simplicial_set import boundary, circle, horn, point, simplex


def z0() -> ChainComplex:
    return ChainComplex.free(ZZ, 0)


def zero() -> ChainComplex:
    return ChainComplex.zero(ZZ)


def times(c: int, S: ChainComplex | None = None, T: ChainComplex | None = None) -> ChainMap:
    S = S or z0()
    T = T or z0()
    return ChainMap(S, T, {0: Matrix(ZZ, [[c]])})


def moore_space(c: int = 3) -> ChainComplex:
    """Z --c--> Z in degrees 1, 0."""
    return ChainComplex(ZZ, {0: 1, 1: 1}, {1: Matrix(ZZ, [[c]])})


def categories() -> dict[str, FiniteCategory]:
    return {
        "terminal": terminal_category(),
        "arrow": arrow_category(),
        "span": span_category(),
        "cospan": cospan_category(),
        "[2]": poset_chain(2),
        "BZ/2": cyclic_group_category(2),
        "BZ/3": cyclic_group_category(3),
    }


def initial_objects(I: FiniteCategory) -> list[str]:
    """Objects with exactly one morphism to every object."""
    out = []
    for x in I.objects:
        if all(sum(1 for m, st in I.morphisms.items() if st == (x, y)) == 1 for y in I.objects):
            out.append(x)
    return out


def suspension_diagram() -> Diagram:
    """0 <- Z[0] -> 0 over the span."""
    I, O = span_category(), zero()
    return diagram_from_arrows(I, {"a": O, "b": O, "c": z0()}, {"u": ChainMap(z0(), O, {}), "v": ChainMap(z0(), O, {})})


def cofiber_diagram(c: int = 2) -> Diagram:
    """0 <- Z[0] --c--> Z[0] over the span."""
    I, O = span_category(), zero()
    return diagram_from_arrows(I, {"a": O, "b": z0(), "c": z0()}, {"u": ChainMap(z0(), O, {}), "v": times(c)})


def fiber_diagram(c: int = 2) -> Diagram:
    """0 -> Z[0] <--c-- Z[0] over the cospan."""
    I, O = cospan_category(), zero()
    return diagram_from_arrows(I, {"a": O, "b": z0(), "c": z0()}, {"u": ChainMap(O, z0(), {}), "v": times(c)})


def arrow_diagram() -> Diagram:
    """Z --3--> Z in degrees (1, 0), mapped by 2 onto Z --6--> Z."""
    C, D = moore_space(3), moore_space(6)
    f = ChainMap(C, D, {0: Matrix(ZZ, [[2]]), 1: Matrix(ZZ, [[1]])})
    return diagram_from_arrows(arrow_category(), {"0": C, "1": D}, {"f": f})


def diagrams() -> dict[str, Diagram]:
    out = {f"const {name}": constant_diagram(I, z0()) for name, I in categories().items()}
    out["suspension"] = suspension_diagram()
    out["cofiber x2"] = cofiber_diagram(2)
    out["fiber x2"] = fiber_diagram(2)
    out["arrow moore"] = arrow_diagram()
    out["BZ/2 on moore"] = constant_diagram(cyclic_group_category(2), moore_space(3))
    return out


def simplicial_sets():
    return {
        "point": point(),
        "Delta^1": simplex(1),
        "dDelta^2": boundary(2),
        "Lambda^2_1": horn(2, 1),
        "S^1": circle(),
    }


def simplicial_objects(level: int) -> dict[str, SimplicialChainComplex]:
    """Bar constructions and linearizations, truncated at ``level``."""
    out = {"constant Z[0]": constant_simplicial(z0(), level)}
    for name, F in diagrams().items():
        out[f"bar {name}"] = bar_simplicial(F.index, F, level)
    for name, K in simplicial_sets().items():
        out[f"lin {name} Z[0]"] = linearize(K, z0(), level)
        out[f"lin {name} moore"] = linearize(K, moore_space(3), level)
    return out
