"""Direct-sum and direct-product totalizations of double complexes.

Both totalizations use the same convention: the block X_{k,l} of total
degree n = k + l maps to X_{k-1,l} by h and to X_{k,l-1} by (-1)^k v.
Blocks of a total degree are ordered by ascending k.  Output complexes
are materialized on the degrees [lo - 1, hi + 1] of a window, which is
exactly what H_n for n in [lo, hi] needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .chain import ChainComplex, ChainMap, homology, induced_is_iso
from .dold_kan import DoubleComplex, DoubleComplexMap
from .errors import InfiniteAntidiagonal, ShapeError
from .exact_linalg import Matrix, Ring, block_matrix


@dataclass(frozen=True)
class DegreeWindow:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty window [{self.lo}, {self.hi}]")

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    @property
    def materialized(self) -> range:
        return range(self.lo - 1, self.hi + 2)

    def widen(self, by: int = 1) -> "DegreeWindow":
        return DegreeWindow(self.lo - by, self.hi + by)

    def as_list(self) -> list[int]:
        return [self.lo, self.hi]


@dataclass(frozen=True)
class LazyDoubleComplex:
    """A double complex given by rules, possibly with infinite support.

    ``k_bounds``/``l_bounds`` are (lower, upper) with None for unbounded;
    outside those bounds the complex vanishes.
    """

    ring: Ring
    rank_at: Callable[[int, int], int]
    h_at: Callable[[int, int], Matrix]
    v_at: Callable[[int, int], Matrix]
    k_bounds: tuple[int | None, int | None]
    l_bounds: tuple[int | None, int | None]
    name: str = ""

    def antidiagonal(self, n: int) -> range:
        """The k-range of the antidiagonal k + l = n; raises if it is infinite."""
        klo, khi = self.k_bounds
        llo, lhi = self.l_bounds
        lo = max(x for x in (klo, None if lhi is None else n - lhi) if x is not None) if (
            klo is not None or lhi is not None
        ) else None
        hi = min(x for x in (khi, None if llo is None else n - llo) if x is not None) if (
            khi is not None or llo is not None
        ) else None
        if lo is None or hi is None:
            raise InfiniteAntidiagonal(
                f"{self.name or 'double complex'}: antidiagonal k + l = {n} has infinitely many bidegrees"
            )
        return range(lo, hi + 1)

    def box(self, k_lo: int, k_hi: int, l_lo: int, l_hi: int) -> DoubleComplex:
        """Brutal restriction to a finite box."""
        ranks, h, v = {}, {}, {}
        for k in range(k_lo, k_hi + 1):
            for l in range(l_lo, l_hi + 1):
                r = self.rank_at(k, l)
                if r:
                    ranks[(k, l)] = r
        for k, l in ranks:
            if (k - 1, l) in ranks:
                h[(k, l)] = self.h_at(k, l)
            if (k, l - 1) in ranks:
                v[(k, l)] = self.v_at(k, l)
        return DoubleComplex(self.ring, ranks, h, v)

    def materialize(self, w: DegreeWindow) -> DoubleComplex:
        ks = [(k, n - k) for n in w.materialized for k in self.antidiagonal(n)]
        if not ks:
            return DoubleComplex(self.ring, {})
        return self.box(
            min(k for k, _ in ks), max(k for k, _ in ks), min(l for _, l in ks), max(l for _, l in ks)
        )


def _blocks(X: DoubleComplex, n: int) -> list[tuple[int, int]]:
    return sorted((k, l) for (k, l) in X.ranks if k + l == n)


def _assemble(X: DoubleComplex, w: DegreeWindow) -> ChainComplex:
    ring = X.ring
    degs = list(w.materialized)
    blocks = {n: _blocks(X, n) for n in degs}
    ranks = {n: sum(X.rank(*kl) for kl in blocks[n]) for n in degs}
    diffs = {}
    for n in degs[1:]:
        src, tgt = blocks[n], blocks[n - 1]
        if not src or not tgt:
            continue
        tindex = {kl: i for i, kl in enumerate(tgt)}
        parts = {}
        for j, (k, l) in enumerate(src):
            if (k - 1, l) in tindex:
                parts[(tindex[(k - 1, l)], j)] = X.h(k, l)
            if (k, l - 1) in tindex:
                vv = X.v(k, l)
                parts[(tindex[(k, l - 1)], j)] = -vv if k % 2 else vv
        diffs[n] = block_matrix(ring, [X.rank(*kl) for kl in tgt], [X.rank(*kl) for kl in src], parts)
    return ChainComplex(ring, ranks, diffs)


def tot_sum(X, w: DegreeWindow) -> ChainComplex:
    """Tot^(+)(X) on the degrees [lo - 1, hi + 1]."""
    if isinstance(X, LazyDoubleComplex):
        X = X.materialize(w)
    return _assemble(X, w)


def tot_prod(X, w: DegreeWindow) -> ChainComplex:
    """Tot^Pi(X) on the degrees [lo - 1, hi + 1].

    The product-side formula, with X_{k+1,l} -> X_{k,l} by h and
    X_{k,l+1} -> X_{k,l} by (-1)^k v, assigns the same sign to each block
    as the direct-sum one, so on finite antidiagonals the two agree.
    Rule-defined complexes with an infinite antidiagonal in range are
    refused.
    """
    if isinstance(X, LazyDoubleComplex):
        X = X.materialize(w)
    return _assemble(X, w)


def tot_map(f: DoubleComplexMap, w: DegreeWindow) -> ChainMap:
    """Tot(f) between the windowed totalizations of source and target."""
    S, T = tot_sum(f.source, w), tot_sum(f.target, w)
    ring = f.source.ring
    comps = {}
    for n in w.materialized:
        src, tgt = _blocks(f.source, n), _blocks(f.target, n)
        tindex = {kl: i for i, kl in enumerate(tgt)}
        parts = {}
        for j, kl in enumerate(src):
            if kl in tindex:
                parts[(tindex[kl], j)] = f.f(*kl)
        comps[n] = block_matrix(
            ring, [f.target.rank(*kl) for kl in tgt], [f.source.rank(*kl) for kl in src], parts
        )
    return ChainMap(S, T, comps)


def window_homology(C: ChainComplex, w: DegreeWindow) -> dict:
    return {n: homology(C, n) for n in w}


def tensor_double_complex(C: ChainComplex, D: ChainComplex) -> DoubleComplex:
    """X_{k,l} = C_k (x) D_l with h = d (x) 1 and v = 1 (x) d (no signs)."""
    from .exact_linalg import kron

    if C.ring != D.ring:
        raise ShapeError("tensor double complex needs one ring")
    ring = C.ring
    ranks, h, v = {}, {}, {}
    for k in C.degrees:
        for l in D.degrees:
            ranks[(k, l)] = C.rank(k) * D.rank(l)
            h[(k, l)] = kron(C.d(k), Matrix.identity(ring, D.rank(l)))
            v[(k, l)] = kron(Matrix.identity(ring, C.rank(k)), D.d(l))
    return DoubleComplex(ring, ranks, h, v)


# ---------------------------------------------------------------------------
# staircases: Z in two bidegrees per column, identity differentials


def _unit(ring: Ring) -> Matrix:
    return Matrix.identity(ring, 1)


def staircase_exact_columns(ring: Ring) -> LazyDoubleComplex:
    """Z at (-p, p) and (-p, p+1) for p >= 0.

    v : (-p, p+1) -> (-p, p) and h : (-p, p+1) -> (-p-1, p+1) are the
    identity.  Every column is acyclic; every antidiagonal of degree 0 or
    1 is infinite.
    """

    def rank_at(k, l):
        return 1 if k <= 0 and l in (-k, -k + 1) else 0

    def h_at(k, l):
        if rank_at(k, l) and rank_at(k - 1, l):
            return _unit(ring)
        return Matrix.zeros(ring, rank_at(k - 1, l), rank_at(k, l))

    def v_at(k, l):
        if rank_at(k, l) and rank_at(k, l - 1):
            return _unit(ring)
        return Matrix.zeros(ring, rank_at(k, l - 1), rank_at(k, l))

    return LazyDoubleComplex(ring, rank_at, h_at, v_at, (None, 0), (0, None), "staircase with exact columns")


def staircase_exact_rows(ring: Ring) -> LazyDoubleComplex:
    """Z at (-p, p) and (-p-1, p) for p >= 0.

    h : (-p, p) -> (-p-1, p) and v : (-p-1, p+1) -> (-p-1, p) are the
    identity.  Every row is acyclic, and every column except the 0th.
    """

    def rank_at(k, l):
        return 1 if l >= 0 and k in (-l, -l - 1) else 0

    def h_at(k, l):
        if rank_at(k, l) and rank_at(k - 1, l):
            return _unit(ring)
        return Matrix.zeros(ring, rank_at(k - 1, l), rank_at(k, l))

    def v_at(k, l):
        if rank_at(k, l) and rank_at(k, l - 1):
            return _unit(ring)
        return Matrix.zeros(ring, rank_at(k, l - 1), rank_at(k, l))

    return LazyDoubleComplex(ring, rank_at, h_at, v_at, (None, 0), (0, None), "staircase with exact rows")


def is_quasi_iso_on(f: ChainMap, w: DegreeWindow) -> bool:
    """f induces isomorphisms on H_n for every n in the window (edges excluded)."""
    return all(induced_is_iso(f, n) for n in w)


def _staircase_extent(X: LazyDoubleComplex, P: int) -> tuple[int, int, int, int]:
    return -P - 1, 0, 0, P + 1


def column_quotient(X: LazyDoubleComplex, P: int) -> DoubleComplex:
    """Columns k >= -P of a staircase: a quotient double complex.

    Tot^Pi is the limit of these along surjections, so a degree whose
    homology is the same for all large P has that homology in Tot^Pi.
    """
    _, k_hi, l_lo, l_hi = _staircase_extent(X, P)
    return X.box(-P, k_hi, l_lo, l_hi)


def row_sub(X: LazyDoubleComplex, L: int) -> DoubleComplex:
    """Rows l <= L of a staircase: a subcomplex; Tot^(+) is their union."""
    k_lo, k_hi, l_lo, _ = _staircase_extent(X, L)
    return X.box(k_lo, k_hi, l_lo, L)


def truncation_transition(X: LazyDoubleComplex, P: int, kind: str, w: DegreeWindow) -> ChainMap:
    """Tot of quotient P+1 -> quotient P (kind "quotient") or sub P -> sub P+1 (kind "sub")."""
    if kind == "quotient":
        S, T = column_quotient(X, P + 1), column_quotient(X, P)
    elif kind == "sub":
        S, T = row_sub(X, P), row_sub(X, P + 1)
    else:
        raise ValueError(f"unknown truncation kind {kind!r}")
    comps = {}
    for kl in set(S.ranks) | set(T.ranks):
        r, c = T.rank(*kl), S.rank(*kl)
        comps[kl] = Matrix.identity(X.ring, r) if r == c else Matrix.zeros(X.ring, r, c)
    f = DoubleComplexMap(S, T, comps)
    return tot_map(f, w)
