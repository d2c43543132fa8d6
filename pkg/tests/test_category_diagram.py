from itertools import product

import pytest

from hocolim import corpus
from hocolim.category_diagram import (
    Diagram,
    FiniteCategory,
    constant_diagram,
    cospan_category,
    cyclic_group_category,
    diagram_from_arrows,
    is_loop_free,
    loop_witness,
    nerve_as_simplicial_set,
    nerve_degeneracy,
    nerve_face,
    nerve_simplices,
    nondegenerate_dimension,
    nondegenerate_nerve_simplices,
    poset_chain,
    span_category,
    terminal_category,
    validate,
)
from hocolim.chain import ChainComplex, ChainMap, homology
from hocolim.errors import ShapeError
from hocolim.exact_linalg import ZZ, Matrix
from hocolim.simplicial_set import normalized_chains


def brute_nerve(I, n):
    if n == 0:
        return sorted(I.objects)
    out = []
    for ms in product(sorted(I.morphisms), repeat=n):
        if all(I.target(ms[i]) == I.source(ms[i + 1]) for i in range(n - 1)):
            out.append(ms)
    return out


def test_nerve_counts_examples():
    sp = span_category()
    assert [len(nerve_simplices(sp, n)) for n in range(3)] == [3, 5, 7]
    g2 = cyclic_group_category(2)
    assert [len(nerve_simplices(g2, n)) for n in range(5)] == [1, 2, 4, 8, 16]


@pytest.mark.parametrize("name", sorted(corpus.categories()))
def test_nerve_matches_brute_force(name):
    I = corpus.categories()[name]
    for n in range(4):
        ours = nerve_simplices(I, n)
        expect = brute_nerve(I, n)
        if n == 0:
            assert [s.start for s in ours] == expect
        else:
            assert [s.morphisms for s in ours] == expect


@pytest.mark.parametrize("name", sorted(corpus.categories()))
def test_simplicial_identities_on_nerve(name):
    I = corpus.categories()[name]
    for n in range(2, 4):
        for s in nerve_simplices(I, n):
            for j in range(n + 1):
                for i in range(j):
                    assert nerve_face(I, nerve_face(I, s, j), i) == nerve_face(I, nerve_face(I, s, i), j - 1)
            for j in range(n + 1):
                t = nerve_degeneracy(I, s, j)
                assert nerve_face(I, t, j) == s and nerve_face(I, t, j + 1) == s


def test_loop_freeness():
    assert is_loop_free(span_category())
    assert not is_loop_free(cyclic_group_category(2))
    assert "endomorphism g" in loop_witness(cyclic_group_category(2))
    assert is_loop_free(poset_chain(2))
    two_way = FiniteCategory(
        ["x", "y"],
        {"id_x": ("x", "x"), "id_y": ("y", "y"), "f": ("x", "y"), "g": ("y", "x"), "gf": ("x", "x"), "fg": ("y", "y")},
        {"x": "id_x", "y": "id_y"},
        {
            **{(a, b): c for (a, b, c) in [
                ("id_x", "id_x", "id_x"), ("id_y", "id_y", "id_y"), ("id_x", "f", "f"), ("f", "id_y", "f"),
                ("id_y", "g", "g"), ("g", "id_x", "g"), ("f", "g", "gf"), ("g", "f", "fg"),
                ("id_x", "gf", "gf"), ("gf", "id_x", "gf"), ("id_y", "fg", "fg"), ("fg", "id_y", "fg"),
                ("gf", "f", "f"), ("fg", "g", "g"), ("f", "fg", "f"), ("g", "gf", "g"),
                ("gf", "gf", "gf"), ("fg", "fg", "fg"),
            ]},
        },
        "retract",
    )
    assert not is_loop_free(two_way)


@pytest.mark.parametrize("name", ["terminal", "arrow", "span", "cospan", "[2]"])
def test_loop_free_nerve_dimension_bound(name):
    I = corpus.categories()[name]
    D = nondegenerate_dimension(I)
    assert D <= len(I.objects) - 1
    assert nondegenerate_nerve_simplices(I, D + 1) == []
    assert nondegenerate_nerve_simplices(I, D + 2) == []


def test_nerve_as_simplicial_set_is_contractible_with_initial_object():
    for I in (span_category(), poset_chain(2), cospan_category()):
        K = nerve_as_simplicial_set(I)
        N = normalized_chains(K)
        assert [str(homology(N, n)) for n in range(3)] == ["Z^1", "0", "0"]


def test_category_axioms_checked():
    with pytest.raises(ShapeError, match="missing"):
        FiniteCategory(["a"], {"id": ("a", "a"), "g": ("a", "a")}, {"a": "id"},
                       {("id", "id"): "id", ("id", "g"): "g", ("g", "id"): "g"})
    with pytest.raises(ShapeError, match="identity"):
        FiniteCategory(["a"], {"id": ("a", "a")}, {}, {})
    # identity laws hold but (g g) g = h g = h while g (g g) = g h = g
    bad = {("e", "e"): "e", ("e", "g"): "g", ("g", "e"): "g", ("e", "h"): "h", ("h", "e"): "h",
           ("g", "g"): "h", ("g", "h"): "g", ("h", "g"): "h", ("h", "h"): "h"}
    with pytest.raises(ShapeError, match="associative"):
        FiniteCategory(["*"], {"e": ("*", "*"), "g": ("*", "*"), "h": ("*", "*")}, {"*": "e"}, bad)


def z0():
    return ChainComplex.free(ZZ, 0)


def times(c):
    return ChainMap(z0(), z0(), {0: Matrix(ZZ, [[c]])})


def test_validate_constant_ok():
    assert validate(constant_diagram(span_category(), z0())) == []


def test_validate_names_bad_composite():
    I = poset_chain(2)
    F = Diagram(
        I,
        {x: z0() for x in I.objects},
        {"0_0": z0().identity(), "1_1": z0().identity(), "2_2": z0().identity(),
         "0_1": times(2), "1_2": times(3), "0_2": times(5)},
    )
    bad = validate(F)
    assert [v.witness for v in bad] == [("0_1", "1_2")]


def test_validate_names_bad_identity():
    I = cyclic_group_category(2)
    F = Diagram(I, {"*": z0()}, {"e": times(-1), "g": times(-1)})
    kinds = {v.kind: v.witness for v in validate(F)}
    assert kinds["identity"] == ("*",)


def test_diagram_from_arrows_fills_composites():
    I = poset_chain(2)
    F = diagram_from_arrows(I, {x: z0() for x in I.objects}, {"0_1": times(2), "1_2": times(3)})
    assert validate(F) == []
    assert F.map("0_2") == times(6)


def test_group_action_must_be_a_representation():
    I = cyclic_group_category(2)
    ok = Diagram(I, {"*": z0()}, {"e": z0().identity(), "g": times(-1)})
    assert validate(ok) == []
    bad = Diagram(I, {"*": z0()}, {"e": z0().identity(), "g": times(2)})
    assert [v.witness for v in validate(bad)] == [("g", "g")]


def test_terminal():
    T = terminal_category()
    assert nondegenerate_dimension(T) == 0
