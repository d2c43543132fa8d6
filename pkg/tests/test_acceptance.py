"""Acceptance suite.  Each test carries ``criterion(n)``; the terminal
summary prints one PASS/FAIL line per criterion (see conftest.py)."""

import subprocess
import sys

import numpy as np
import pytest

from hocolim import corpus
from hocolim.bar_cobar import bar_simplicial, cobar_cosimplicial, fat_realization, hocolim, holim, realization
from hocolim.category_diagram import arrow_category, constant_diagram, diagram_from_arrows
from hocolim.chain import ChainComplex, ChainMap, cone, direct_sum, homology, kunneth_rhs, shift, tensor, zero_map
from hocolim.cli import main
from hocolim.dold_kan import mbar_cosimplicial, moore, normalization_composite, normalized_inclusion
from hocolim.exact_linalg import ZZ, is_unimodular, smith_normal_form
from hocolim.random_models import random_complex, random_double_complex, random_levelwise_qiso, random_matrix
from hocolim.simplicial_set import normalized_chains
from hocolim.totalization import (
    DegreeWindow,
    column_quotient,
    is_quasi_iso_on,
    row_sub,
    staircase_exact_columns,
    staircase_exact_rows,
    tot_map,
    tot_prod,
    tot_sum,
    truncation_transition,
)
from oracles import groups, homotopy_pullback, homotopy_pushout, periodic_resolution

CORPUS = corpus.__file__.rsplit("/src/", 1)[0] + "/corpus"


def H(C, w):
    return [str(homology(C, n)) for n in w]


@pytest.mark.criterion(1)
def test_kunneth():
    rng = np.random.default_rng(101)
    for name, K in corpus.simplicial_sets().items():
        NK = normalized_chains(K)
        for t in range(25):
            C, _ = random_complex(rng, -2, 3, 3)
            T = tensor(NK, C)
            for n in range(-3, 3 + K.top_dimension() + 2):
                assert homology(T, n) == kunneth_rhs(K, C, n), (name, t, n)


@pytest.mark.criterion(2)
def test_normalization_composite():
    w = DegreeWindow(0, 4)
    objs = corpus.simplicial_objects(5)
    assert len(objs) > 20
    for name, X in objs.items():
        assert all(is_unimodular(m) for m in normalization_composite(X).values()), name
        assert is_quasi_iso_on(tot_map(normalized_inclusion(X), w), w), name


@pytest.mark.criterion(3)
def test_totalization_preserves_levelwise_quasi_isos():
    rng = np.random.default_rng(303)
    w = DegreeWindow(-3, 5)
    for t in range(50):
        f = random_levelwise_qiso(rng)
        assert is_quasi_iso_on(tot_map(f, w), w), t


@pytest.mark.criterion(3)
def test_product_totalization_staircase():
    # acyclic rows, yet the product totalization sees Z in degree 0
    w = DegreeWindow(-1, 1)
    S = staircase_exact_rows(ZZ)
    for P in (2, 4):
        assert H(tot_prod(column_quotient(S, P), w), w) == ["0", "Z^1", "0"]
        assert is_quasi_iso_on(truncation_transition(S, P, "quotient", w), w)
        assert H(tot_sum(row_sub(S, P), w), w) == ["0", "0", "0"]
    # acyclic columns: the product totalization is acyclic, the sum is not
    S = staircase_exact_columns(ZZ)
    for P in (2, 4):
        assert H(tot_prod(column_quotient(S, P), w), w) == ["0", "0", "0"]
        assert H(tot_sum(row_sub(S, P), w), w) == ["0", "Z^1", "0"]
        assert is_quasi_iso_on(truncation_transition(S, P, "sub", w), w)


@pytest.mark.criterion(4)
def test_fat_vs_thin():
    w = DegreeWindow(0, 4)
    for name, X in corpus.simplicial_objects(5).items():
        assert H(fat_realization(X, w), w) == H(realization(X, w), w), name


W04 = DegreeWindow(0, 4)


def hocolim_cases():
    cats = corpus.categories()
    out = [
        ("BZ/2", corpus.diagrams()["const BZ/2"], W04, periodic_resolution(2, 6)),
        ("BZ/3", corpus.diagrams()["const BZ/3"], W04, periodic_resolution(3, 6)),
    ]
    O, z = corpus.zero(), corpus.z0()
    out.append(("suspension", corpus.suspension_diagram(), W04, homotopy_pushout(zero_map(z, O), zero_map(z, O))))
    out.append(("cofiber", corpus.cofiber_diagram(2), W04, homotopy_pushout(zero_map(z, O), corpus.times(2))))
    for name, I in cats.items():
        if corpus.initial_objects(I):
            out.append((f"const {name}", constant_diagram(I, z), W04, z))
    return out


@pytest.mark.criterion(5)
def test_hocolim_oracles():
    cases = hocolim_cases()
    assert {"const terminal", "const arrow", "const span", "const [2]"} <= {c[0] for c in cases}
    for name, F, w, oracle in cases:
        r = hocolim(F.index, F, w)
        assert [str(r.homology[n]) for n in w] == groups(oracle, w), name
    assert groups(periodic_resolution(2, 6), W04) == ["Z^1", "Z/2", "0", "Z/2", "0"]
    assert groups(periodic_resolution(3, 6), W04) == ["Z^1", "Z/3", "0", "Z/3", "0"]


WM = DegreeWindow(-3, 2)


def holim_cases():
    O, z = corpus.zero(), corpus.z0()
    out = [
        ("fiber", corpus.fiber_diagram(2), WM, homotopy_pullback(zero_map(O, z), corpus.times(2))),
        ("arrow moore", corpus.arrow_diagram(), WM, corpus.moore_space(3)),
    ]
    rng = np.random.default_rng(606)
    for t in range(5):
        C, _ = random_complex(rng, -2, 1, 2)
        D, _ = random_complex(rng, -2, 1, 2)
        F = diagram_from_arrows(arrow_category(), {"0": C, "1": D}, {"f": zero_map(C, D)})
        out.append((f"[1] random #{t}", F, WM, C))
    return out


@pytest.mark.criterion(6)
def test_holim_oracles():
    for name, F, w, oracle in holim_cases():
        r = holim(F.index, F, w)
        assert [str(r.homology[n]) for n in w] == groups(oracle, w), name
    r = holim(corpus.fiber_diagram(2).index, corpus.fiber_diagram(2), WM)
    assert [str(r.homology[n]) for n in WM] == ["0", "0", "Z/2", "0", "0", "0"]


@pytest.mark.criterion(6)
def test_holim_with_loops_exits_3(capsys):
    assert main(["holim", "F", "-1", "1", "-f", f"{CORPUS}/holim_loops.dsl"]) == 3
    assert "loop-free" in capsys.readouterr().err


@pytest.mark.criterion(7)
def test_window_stability():
    for name, F, w, _ in hocolim_cases():
        r = hocolim(F.index, F, w, certify=False)
        C = tot_sum(moore(bar_simplicial(F.index, F, r.bar_levels_used + 1, check=False)), w)
        assert {n: homology(C, n) for n in w} == r.homology, name
    for name, F, w, _ in holim_cases():
        r = holim(F.index, F, w, certify=False)
        C = tot_prod(mbar_cosimplicial(cobar_cosimplicial(F.index, F, r.bar_levels_used + 1, check=False)), w)
        assert {n: homology(C, n) for n in w} == r.homology, name


def square_zero(C: ChainComplex) -> bool:
    return all((C.d(n - 1) @ C.d(n)).is_zero() for n in range(C.bounds()[0], C.bounds()[1] + 2)) if not C.is_zero() else True


@pytest.mark.criterion(8)
def test_square_zero_sweep():
    rng = np.random.default_rng(808)
    w = DegreeWindow(-2, 4)
    diagrams = list(corpus.diagrams().values())
    for t in range(200):
        C, _ = random_complex(rng, -2, 3, 3)
        D, _ = random_complex(rng, -1, 2, 2)
        kind = t % 5
        if kind == 0:
            built = [C, shift(C, int(rng.integers(-2, 3))), direct_sum([C, D])]
        elif kind == 1:
            built = [tensor(C, D), cone(C.identity()), cone(zero_map(C, D))]
        elif kind == 2:
            X = random_double_complex(rng)
            built = [tot_sum(X, w), tot_prod(X, w)]
        elif kind == 3:
            f = random_levelwise_qiso(rng)
            built = [tot_sum(f.source, w), tot_sum(f.target, w), cone(tot_map(f, w))]
        else:
            F = diagrams[t % len(diagrams)]
            X = bar_simplicial(F.index, F, 3)
            built = list(X.levels) + [tot_sum(moore(X), DegreeWindow(0, 3))]
        for B in built:
            assert square_zero(B), (t, kind)


@pytest.mark.criterion(8)
def test_snf_invariants():
    rng = np.random.default_rng(809)
    for t in range(200):
        m, n = (int(x) for x in rng.integers(1, 9, size=2))
        A = random_matrix(rng, m, n, -50, 50)
        s = smith_normal_form(A)
        assert is_unimodular(s.U) and is_unimodular(s.V), t
        assert (s.U @ A @ s.V).to_lists() == s.D.to_lists(), t
        D = s.D.to_lists()
        assert all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j), t
        diag = s.diagonal
        assert all(d >= 0 for d in diag), t
        assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1) if diag[i]), t
        assert all(diag[i + 1] == 0 for i in range(len(diag) - 1) if diag[i] == 0), t


@pytest.mark.criterion(8)
def test_verify_props_is_byte_deterministic():
    cmd = [sys.executable, "-m", "hocolim", "verify-props", "--seed", "7"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a.count(b"PASS") == 6


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
