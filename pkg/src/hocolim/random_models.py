"""Seeded random complexes, maps and double complexes for property tests.

Everything takes a ``numpy.random.Generator`` so runs are reproducible.
Random complexes are sums of elementary pieces (a free summand, or
Z --c--> Z) conjugated degreewise by random unimodular matrices, so their
homology is known in advance.
"""

from __future__ import annotations

import numpy as np

from .category_diagram import Diagram, FiniteCategory, NaturalTransformation
from .chain import ChainComplex, ChainMap, HomologyGroup, cone, direct_sum, direct_sum_maps
from .dold_kan import DoubleComplex, DoubleComplexMap
from .exact_linalg import ZZ, Matrix, Ring, block_matrix, inverse
from .totalization import tensor_double_complex


def random_unimodular(rng: np.random.Generator, n: int, ring: Ring = ZZ, steps: int | None = None) -> Matrix:
    """Product of elementary row operations and sign flips."""
    a = np.eye(n, dtype=np.int64)
    for _ in range(steps if steps is not None else 2 * n):
        if n < 2:
            break
        i, j = rng.choice(n, size=2, replace=False)
        a[i] += int(rng.integers(-2, 3)) * a[j]
    for i in range(n):
        if rng.random() < 0.5:
            a[i] = -a[i]
    perm = rng.permutation(n)
    return Matrix(ring, a[perm])


def random_matrix(rng: np.random.Generator, rows: int, cols: int, lo: int = -50, hi: int = 50, ring: Ring = ZZ) -> Matrix:
    return Matrix(ring, rng.integers(lo, hi + 1, size=(rows, cols)).astype(np.int64))


def random_complex(
    rng: np.random.Generator,
    lo: int = -2,
    hi: int = 3,
    max_rank: int = 3,
    ring: Ring = ZZ,
    torsion: tuple[int, ...] = (1, 2, 3, 4, 6),
) -> tuple[ChainComplex, dict[int, HomologyGroup]]:
    """A random bounded complex in degrees [lo, hi] together with its homology."""
    ranks = {n: 0 for n in range(lo, hi + 1)}
    pieces = []  # (degree, None) free; (degree, c) for Z_degree --c--> Z_{degree-1}
    for _ in range(int(rng.integers(1, 3 * (hi - lo + 1)))):
        n = int(rng.integers(lo, hi + 1))
        if rng.random() < 0.4 or n == lo:
            if ranks[n] < max_rank:
                ranks[n] += 1
                pieces.append((n, None))
        elif ranks[n] < max_rank and ranks[n - 1] < max_rank:
            ranks[n] += 1
            ranks[n - 1] += 1
            pieces.append((n, int(rng.choice(torsion))))
    slots = {n: 0 for n in ranks}
    where = []
    for n, c in pieces:
        if c is None:
            where.append((n, slots[n], None))
            slots[n] += 1
        else:
            where.append((n, slots[n], (slots[n - 1], c)))
            slots[n] += 1
            slots[n - 1] += 1
    U = {n: random_unimodular(rng, r, ring) for n, r in ranks.items()}
    Uinv = {n: inverse(u) for n, u in U.items()}
    diffs = {}
    for n in range(lo + 1, hi + 1):
        d = np.zeros((ranks[n - 1], ranks[n]), dtype=np.int64)
        for deg, j, tgt in where:
            if deg == n and tgt is not None:
                d[tgt[0], j] = tgt[1]
        diffs[n] = U[n - 1] @ Matrix(ring, d) @ Uinv[n]
    C = ChainComplex(ring, {n: r for n, r in ranks.items() if r}, {n: m for n, m in diffs.items() if ranks[n] and ranks[n - 1]})
    free = {n: 0 for n in ranks}
    tors: dict[int, list[int]] = {n: [] for n in ranks}
    for n, c in pieces:
        if c is None:
            free[n] += 1
        elif c != 1:
            tors[n - 1].append(c)
    H = {n: HomologyGroup.from_orders(free[n], tors[n], ring) for n in ranks}
    return C, H


def random_null_homotopic(rng: np.random.Generator, C: ChainComplex, D: ChainComplex, scale: int = 2) -> ChainMap:
    """d s + s d for a random s : C_n -> D_{n+1}."""
    ring = C.ring
    degs = sorted(set(C.degrees) | set(D.degrees))
    s = {n: random_matrix(rng, D.rank(n + 1), C.rank(n), -scale, scale, ring) for n in range(degs[0] - 1, degs[-1] + 1)}
    comps = {}
    for n in C.degrees:
        comps[n] = D.d(n + 1) @ s[n] + s[n - 1] @ C.d(n)
    return ChainMap(C, D, comps)


def random_endomorphism(rng: np.random.Generator, C: ChainComplex, scale: int = 2) -> ChainMap:
    """c * id + (null-homotopic); a chain map for any complex."""
    c = int(rng.integers(-3, 4))
    h = random_null_homotopic(rng, C, C, scale)
    return ChainMap(C, C, {n: h.f(n) + Matrix.identity(C.ring, C.rank(n)).scale(c) for n in C.degrees})


def random_double_complex(rng: np.random.Generator, ring: Ring = ZZ) -> DoubleComplex:
    C, _ = random_complex(rng, -1, 2, 2, ring)
    D, _ = random_complex(rng, -1, 2, 2, ring)
    return tensor_double_complex(C, D)


def vertical_cone_of_identity(X: DoubleComplex) -> DoubleComplex:
    """E_{k,l} = X_{k,l} (+) X_{k,l-1}; every column is the cone of an identity."""
    ring = X.ring
    ranks, h, v = {}, {}, {}
    keys = set(X.ranks) | {(k, l + 1) for k, l in X.ranks}
    for k, l in keys:
        r = (X.rank(k, l), X.rank(k, l - 1))
        if sum(r):
            ranks[(k, l)] = sum(r)
    for k, l in ranks:
        a, b = X.rank(k, l), X.rank(k, l - 1)
        ta, tb = X.rank(k, l - 1), X.rank(k, l - 2)
        v[(k, l)] = block_matrix(ring, [ta, tb], [a, b], {(0, 0): X.v(k, l), (0, 1): Matrix.identity(ring, b), (1, 1): -X.v(k, l - 1)})
        ha, hb = X.rank(k - 1, l), X.rank(k - 1, l - 1)
        h[(k, l)] = block_matrix(ring, [ha, hb], [a, b], {(0, 0): X.h(k, l), (1, 1): X.h(k, l - 1)})
    return DoubleComplex(ring, ranks, h, v)


def _double_sum(X: DoubleComplex, E: DoubleComplex) -> DoubleComplex:
    ring = X.ring
    keys = sorted(set(X.ranks) | set(E.ranks))
    ranks = {kl: X.rank(*kl) + E.rank(*kl) for kl in keys}
    h, v = {}, {}
    for k, l in keys:
        h[(k, l)] = block_matrix(
            ring, [X.rank(k - 1, l), E.rank(k - 1, l)], [X.rank(k, l), E.rank(k, l)], {(0, 0): X.h(k, l), (1, 1): E.h(k, l)}
        )
        v[(k, l)] = block_matrix(
            ring, [X.rank(k, l - 1), E.rank(k, l - 1)], [X.rank(k, l), E.rank(k, l)], {(0, 0): X.v(k, l), (1, 1): E.v(k, l)}
        )
    return DoubleComplex(ring, ranks, h, v)


def random_levelwise_qiso(rng: np.random.Generator, ring: Ring = ZZ) -> DoubleComplexMap:
    """X -> X (+) E or X (+) E -> X with E column-acyclic, so every column map is a quasi-isomorphism."""
    X = random_double_complex(rng, ring)
    E = vertical_cone_of_identity(random_double_complex(rng, ring))
    Y = _double_sum(X, E)
    comps = {}
    into = rng.random() < 0.5
    for kl in set(X.ranks) | set(Y.ranks):
        a, e = X.rank(*kl), E.rank(*kl)
        incl = block_matrix(ring, [a, e], [a], {(0, 0): Matrix.identity(ring, a)})
        comps[kl] = incl if into else incl.T
    return DoubleComplexMap(X, Y, comps) if into else DoubleComplexMap(Y, X, comps)


def cone_of_identity(C: ChainComplex) -> ChainComplex:
    return cone(C.identity())


def cone_of_identity_map(f: ChainMap) -> ChainMap:
    """cone(id_S) -> cone(id_T) induced by f."""
    S, T = cone_of_identity(f.source), cone_of_identity(f.target)
    ring = f.ring
    comps = {
        n: block_matrix(
            ring,
            [f.target.rank(n), f.target.rank(n - 1)],
            [f.source.rank(n), f.source.rank(n - 1)],
            {(0, 0): f.f(n), (1, 1): f.f(n - 1)},
        )
        for n in S.degrees
    }
    return ChainMap(S, T, comps)


def padded_diagram(F: Diagram) -> tuple[Diagram, NaturalTransformation]:
    """G = F (+) cone(id_F) with the objectwise quasi-isomorphism F -> G."""
    I: FiniteCategory = F.index
    objs = {x: direct_sum([F(x), cone_of_identity(F(x))]) for x in I.objects}
    maps = {m: direct_sum_maps([F.map(m), cone_of_identity_map(F.map(m))]) for m in I.morphisms}
    G = Diagram(I, objs, maps)
    comps = {}
    for x in I.objects:
        a, E = F(x), cone_of_identity(F(x))
        comps[x] = ChainMap(
            a,
            objs[x],
            {
                n: block_matrix(a.ring, [a.rank(n), E.rank(n)], [a.rank(n)], {(0, 0): Matrix.identity(a.ring, a.rank(n))})
                for n in a.degrees
            },
        )
    return G, NaturalTransformation(F, G, comps)
