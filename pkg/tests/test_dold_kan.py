import numpy as np
import pytest

from hocolim import corpus
from hocolim.bar_cobar import bar_simplicial, cobar_cosimplicial, linearize
from hocolim.chain import ChainComplex, ChainMap, homology
from hocolim.dold_kan import (
    DoubleComplex,
    coface_image,
    constant_cosimplicial,
    constant_simplicial,
    degenerate_sub,
    mbar,
    mbar_cosimplicial,
    mbar_cosimplicial_inclusion,
    moore,
    moore_cosimplicial,
    normalization_composite,
    normalized,
    normalized_cosimplicial,
    normalized_cosimplicial_projection,
    normalized_inclusion,
    splitting_matrices,
)
from hocolim.errors import ShapeError, SimplicialIdentityError
from hocolim.exact_linalg import ZZ, Matrix, is_unimodular
from hocolim.simplicial_set import circle, simplex


def z0():
    return ChainComplex.free(ZZ, 0)


def test_double_complex_requires_commuting_squares():
    one = Matrix(ZZ, [[1]])
    ranks = {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 1}
    X = DoubleComplex(ZZ, ranks, {(1, 0): one, (1, 1): one}, {(0, 1): one, (1, 1): one})
    assert X.violations() == []
    with pytest.raises(ShapeError):
        DoubleComplex(ZZ, ranks, {(1, 0): one, (1, 1): one.scale(2)}, {(0, 1): one, (1, 1): one})


def test_constant_object_normalizes_to_level_zero():
    X = constant_simplicial(z0(), 4)
    assert sorted(moore(X).ranks) == [(k, 0) for k in range(5)]
    assert sorted(normalized(X).ranks) == [(0, 0)]
    assert sorted(k for k, r in mbar(X).target.ranks.items() if r) == [(0, 0)]


def test_planted_identity_error_is_caught():
    X = constant_simplicial(z0(), 2)
    two = ChainMap(z0(), z0(), {0: Matrix(ZZ, [[2]])})
    faces = [list(f) for f in X.faces]
    faces[2][1] = two
    with pytest.raises(SimplicialIdentityError):
        type(X)(X.levels, faces, X.degeneracies)


@pytest.mark.parametrize(
    "X",
    [
        linearize(circle(), z0(), 3),
        linearize(simplex(2), corpus.moore_space(3), 3),
        bar_simplicial(corpus.span_category(), corpus.cofiber_diagram(), 3),
        bar_simplicial(corpus.cyclic_group_category(2), corpus.diagrams()["BZ/2 on moore"], 3),
    ],
    ids=["circle", "simplex-moore", "cofiber-bar", "BZ2-moore"],
)
def test_moore_splits_as_normalized_plus_degenerate(X):
    for kl, B in splitting_matrices(X).items():
        assert B.rows == B.cols and is_unimodular(B), kl
    for kl, m in normalization_composite(X).items():
        assert is_unimodular(m), kl
    N = normalized_inclusion(X)
    assert N.violations() == []
    assert degenerate_sub(X).violations() == []
    assert mbar(X).violations() == []


def test_normalized_face_condition():
    X = linearize(circle(), z0(), 3)
    iN = normalized_inclusion(X)
    for (k, l) in iN.source.ranks:
        for i in range(1, k + 1):
            assert (X.d(k, i).f(l) @ iN.f(k, l)).is_zero()


def test_normalized_of_linearization_is_simplicial_chains():
    X = linearize(circle(), z0(), 3)
    assert {kl: r for kl, r in normalized(X).ranks.items() if r} == {(0, 0): 1, (1, 0): 1}


def test_constant_cosimplicial():
    Y = constant_cosimplicial(z0(), 3)
    assert sorted(moore_cosimplicial(Y).ranks) == [(-3, 0), (-2, 0), (-1, 0), (0, 0)]
    assert {kl for kl, r in normalized_cosimplicial(Y).ranks.items() if r} == {(0, 0)}
    assert {kl for kl, r in mbar_cosimplicial(Y).ranks.items() if r} == {(0, 0)}


def test_cosimplicial_pieces_of_cobar():
    F = corpus.fiber_diagram()
    Y = cobar_cosimplicial(F.index, F, 3)
    inc = mbar_cosimplicial_inclusion(Y)
    assert inc.violations() == []
    M = moore_cosimplicial(Y)
    for n in range(1, 4):
        for i in range(n):
            for l in Y.levels[n].degrees:
                assert (Y.sigma(n - 1, i).f(l) @ inc.f(-n, l)).is_zero()
    # M-bar is a complement of the coface image, so the projection is onto
    p = normalized_cosimplicial_projection(Y)
    img = coface_image(Y)
    for kl in M.ranks:
        assert inc.f(*kl).cols + img[kl].cols == M.rank(*kl)
        assert (p.f(*kl) @ img[kl]).is_zero()
    assert p.violations() == []


def test_cobar_of_loop_free_category_is_normalized_in_low_levels():
    F = corpus.diagrams()["const cospan"]
    Y = cobar_cosimplicial(F.index, F, 3)
    ranks = {kl: r for kl, r in mbar_cosimplicial(Y).ranks.items() if r}
    assert all(k >= -1 for k, _ in ranks)


def test_only_the_last_coface_survives_normalization():
    F = corpus.fiber_diagram()
    Y = cobar_cosimplicial(F.index, F, 3)
    p = normalized_cosimplicial_projection(Y)
    inc = mbar_cosimplicial_inclusion(Y)
    N = p.target
    checked = 0
    for (k, l), r in N.ranks.items():
        n = -k
        if not r or n + 1 > Y.truncation or not N.rank(k - 1, l):
            continue
        last = Y.delta(n + 1, n + 1).f(l).scale(-1 if (n + 1) % 2 else 1)
        assert N.h(k, l) == p.f(k - 1, l) @ last @ inc.f(k, l)
        checked += 1
    assert checked
