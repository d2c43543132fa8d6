import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hocolim.chain import ChainComplex, homology, is_quasi_iso, tensor
from hocolim.errors import InfiniteAntidiagonal
from hocolim.exact_linalg import ZZ, Matrix
from hocolim.random_models import random_complex, random_double_complex, random_levelwise_qiso, vertical_cone_of_identity
from hocolim.totalization import (
    DegreeWindow,
    column_quotient,
    is_quasi_iso_on,
    row_sub,
    staircase_exact_columns,
    staircase_exact_rows,
    tensor_double_complex,
    tot_map,
    tot_prod,
    tot_sum,
    truncation_transition,
)

seeds = st.integers(0, 2**32 - 1)


def test_window_materializes_one_degree_each_side():
    w = DegreeWindow(0, 3)
    assert list(w) == [0, 1, 2, 3]
    assert list(w.materialized) == [-1, 0, 1, 2, 3, 4]
    with pytest.raises(ValueError):
        DegreeWindow(2, 1)


@given(seeds)
def test_tot_of_tensor_double_complex_is_tensor(seed):
    rng = np.random.default_rng(seed)
    C, _ = random_complex(rng, -1, 2, 2)
    D, _ = random_complex(rng, -1, 2, 2)
    w = DegreeWindow(-2, 4)
    T, X = tensor(C, D), tot_sum(tensor_double_complex(C, D), w)
    for n in w:
        assert homology(X, n) == homology(T, n)
        assert X.rank(n) == T.rank(n)


def test_sign_convention_on_a_square():
    one = Matrix(ZZ, [[1]])
    X = tensor_double_complex(
        ChainComplex(ZZ, {0: 1, 1: 1}, {1: one}), ChainComplex(ZZ, {0: 1, 1: 1}, {1: one})
    )
    T = tot_sum(X, DegreeWindow(0, 2))
    # degree 2 block (1,1) maps to (0,1) by h and to (1,0) by (-1)^1 v
    assert T.d(2).to_lists() == [[1], [-1]]


def test_finite_double_complexes_have_equal_totalizations():
    X = random_double_complex(np.random.default_rng(1))
    w = DegreeWindow(-2, 4)
    assert tot_sum(X, w) == tot_prod(X, w)


@given(seeds)
def test_levelwise_quasi_isomorphisms_survive_tot_sum(seed):
    f = random_levelwise_qiso(np.random.default_rng(seed))
    for k in {k for k, _ in f.source.ranks} | {k for k, _ in f.target.ranks}:
        assert is_quasi_iso(f.column_map(k))
    w = DegreeWindow(-3, 5)
    assert is_quasi_iso_on(tot_map(f, w), w)


def test_vertical_cone_columns_are_acyclic():
    E = vertical_cone_of_identity(random_double_complex(np.random.default_rng(2)))
    for k in sorted({k for k, _ in E.ranks}):
        col = E.column(k)
        assert all(homology(col, n).is_zero() for n in col.degrees)


def test_infinite_antidiagonals_are_refused():
    for S in (staircase_exact_columns(ZZ), staircase_exact_rows(ZZ)):
        with pytest.raises(InfiniteAntidiagonal):
            tot_sum(S, DegreeWindow(0, 0))
        with pytest.raises(InfiniteAntidiagonal):
            tot_prod(S, DegreeWindow(0, 0))


def _h0(C):
    return homology(C, 0)


@pytest.mark.parametrize("P", [2, 3, 5])
def test_staircase_with_exact_rows(P):
    """Rows acyclic; Tot^Pi still has H_0 = Z while Tot(+) is acyclic."""
    S = staircase_exact_rows(ZZ)
    w = DegreeWindow(-1, 1)
    for l in range(P):
        row = S.box(-P - 2, 0, l, l).row(l)
        assert all(homology(row, n).is_zero() for n in row.degrees)
    q = tot_prod(column_quotient(S, P), w)
    assert [str(homology(q, n)) for n in w] == ["0", "Z^1", "0"]
    assert is_quasi_iso_on(truncation_transition(S, P, "quotient", w), w)
    s = tot_sum(row_sub(S, P), w)
    assert all(homology(s, n).is_zero() for n in w)


@pytest.mark.parametrize("P", [2, 3, 5])
def test_staircase_with_exact_columns(P):
    """Columns acyclic; Tot^Pi is acyclic while Tot(+) has H_0 = Z."""
    S = staircase_exact_columns(ZZ)
    w = DegreeWindow(-1, 1)
    for k in range(-P, 1):
        col = S.box(k, k, 0, P + 2).column(k)
        assert all(homology(col, n).is_zero() for n in col.degrees)
    q = tot_prod(column_quotient(S, P), w)
    assert all(homology(q, n).is_zero() for n in w)
    s = tot_sum(row_sub(S, P), w)
    assert [str(homology(s, n)) for n in w] == ["0", "Z^1", "0"]
    assert is_quasi_iso_on(truncation_transition(S, P, "sub", w), w)
