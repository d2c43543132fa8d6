"""Simplicial sets stored by their nondegenerate simplices.

Every simplex is a pair ``(eta, x)`` with ``x`` a named nondegenerate
simplex of dimension m and ``eta`` a monotone surjection [n] -> [m]
(stored as the tuple of its values): the simplex x o eta.  Face data for
a nondegenerate simplex is written in Eilenberg-Zilber form, a strictly
decreasing degeneracy word ``(j_1, ..., j_k)`` meaning s_{j_1} ... s_{j_k}
applied to a nondegenerate simplex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Sequence

from .chain import ChainComplex, ChainMap
from .errors import ShapeError, SimplicialIdentityError, TruncationExceeded
from .exact_linalg import ZZ, Matrix, Ring

Simplex = tuple[tuple[int, ...], str]


def identity_surjection(m: int) -> tuple[int, ...]:
    return tuple(range(m + 1))


def degenerate(eta: tuple[int, ...], i: int) -> tuple[int, ...]:
    """eta o sigma^i : [n+1] -> [m]."""
    if not 0 <= i < len(eta):
        raise ShapeError(f"degeneracy s_{i} out of range on a {len(eta) - 1}-simplex")
    return eta[: i + 1] + eta[i:]


def word_to_surjection(word: Sequence[int], m: int) -> tuple[int, ...]:
    eta = identity_surjection(m)
    for j in reversed(word):
        eta = degenerate(eta, j)
    return eta


def surjection_to_word(eta: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(t for t in reversed(range(len(eta) - 1)) if eta[t] == eta[t + 1])


@dataclass(frozen=True, eq=False)
class FiniteSimplicialSet:
    """Nondegenerate simplices by dimension, with Eilenberg-Zilber face data.

    ``d_max`` is None for a complete (finite) simplicial set, otherwise
    the data is only known through dimension ``d_max``.
    """

    simplices: Mapping[int, Sequence[str]]
    faces: Mapping[str, Sequence[tuple[Sequence[int], str]]] = field(default_factory=dict)
    d_max: int | None = None
    name: str = ""

    def __post_init__(self):
        simp = {int(k): tuple(v) for k, v in sorted(self.simplices.items()) if v}
        object.__setattr__(self, "simplices", simp)
        dims = {}
        for k, names in simp.items():
            for s in names:
                if s in dims:
                    raise ShapeError(f"simplex name {s!r} used twice")
                dims[s] = k
        object.__setattr__(self, "_dim", dims)
        faces = {s: tuple((tuple(w), y) for w, y in fs) for s, fs in self.faces.items()}
        object.__setattr__(self, "faces", faces)
        for s, k in dims.items():
            if k == 0:
                continue
            fs = faces.get(s)
            if fs is None or len(fs) != k + 1:
                raise ShapeError(f"simplex {s!r} of dimension {k} needs {k + 1} faces")
            for i, (w, y) in enumerate(fs):
                if y not in dims:
                    raise ShapeError(f"face d_{i} of {s!r} names unknown simplex {y!r}")
                if any(w[t] <= w[t + 1] for t in range(len(w) - 1)):
                    raise ShapeError(f"face d_{i} of {s!r}: degeneracy word {w} not strictly decreasing")
                if len(w) + dims[y] != k - 1:
                    raise ShapeError(f"face d_{i} of {s!r} has the wrong dimension")
                word_to_surjection(w, dims[y])
        self.check_identities()

    def dim(self, name: str) -> int:
        return self._dim[name]

    def nondegenerate(self, n: int) -> tuple[str, ...]:
        return self.simplices.get(n, ())

    def top_dimension(self) -> int:
        if self.d_max is not None:
            return self.d_max
        return max(self.simplices, default=0)

    def counts(self) -> list[int]:
        return [len(self.nondegenerate(n)) for n in range(self.top_dimension() + 1)]

    # simplicial operators on arbitrary simplices

    def face(self, simplex: Simplex, i: int) -> Simplex:
        eta, x = simplex
        n = len(eta) - 1
        if not 0 <= i <= n or n == 0:
            raise ShapeError(f"face d_{i} undefined on a {n}-simplex")
        c = eta[:i] + eta[i + 1:]
        m = self._dim[x]
        missing = [j for j in range(m + 1) if j not in c]
        if not missing:
            return c, x
        (j,) = missing
        reduced = tuple(v if v < j else v - 1 for v in c)
        w, y = self.faces[x][j]
        eta_y = word_to_surjection(w, self._dim[y])
        return tuple(eta_y[v] for v in reduced), y

    def degeneracy(self, simplex: Simplex, i: int) -> Simplex:
        eta, x = simplex
        return degenerate(eta, i), x

    def all_simplices(self, n: int) -> list[Simplex]:
        """Every n-simplex, degenerate ones included, in a fixed order."""
        if self.d_max is not None and n > self.d_max:
            raise TruncationExceeded(f"level {n} exceeds the truncation {self.d_max}")
        out = []
        for m in range(min(n, self.top_dimension()) + 1):
            for x in self.nondegenerate(m):
                for cuts in combinations(range(n), m):
                    eta, v = [], 0
                    for t in range(n + 1):
                        eta.append(v)
                        if t in cuts:
                            v += 1
                    out.append((tuple(eta), x))
        return out

    def check_identities(self):
        """d_i d_j = d_{j-1} d_i for i < j on every stored nondegenerate simplex."""
        for k, names in self.simplices.items():
            if k < 2:
                continue
            for x in names:
                s = (identity_surjection(k), x)
                for j in range(k + 1):
                    dj = self.face(s, j)
                    for i in range(j):
                        if self.face(dj, i) != self.face(self.face(s, i), j - 1):
                            raise SimplicialIdentityError(
                                f"d_{i} d_{j} != d_{j - 1} d_{i} on simplex {x!r}"
                            )


def normalized_chains(K: FiniteSimplicialSet, d: int | None = None, ring: Ring = ZZ) -> ChainComplex:
    """N_*(K) through degree d: free on nondegenerate simplices, d = sum (-1)^i d_i."""
    if d is None:
        d = K.top_dimension()
    if K.d_max is not None and d > K.d_max:
        raise TruncationExceeded(f"degree {d} exceeds the truncation {K.d_max} of {K.name or 'K'}")
    ranks = {n: len(K.nondegenerate(n)) for n in range(d + 1)}
    diffs = {}
    for n in range(1, d + 1):
        src, tgt = K.nondegenerate(n), K.nondegenerate(n - 1)
        if not src or not tgt:
            continue
        index = {y: i for i, y in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for j, x in enumerate(src):
            for i, (w, y) in enumerate(K.faces[x]):
                if not w:
                    rows[index[y]][j] += -1 if i % 2 else 1
        diffs[n] = Matrix(ring, rows, shape=(len(tgt), len(src)))
    return ChainComplex(ring, ranks, diffs)


def inclusion_map(K: FiniteSimplicialSet, L: FiniteSimplicialSet, ring: Ring = ZZ) -> ChainMap:
    """N_*(K) -> N_*(L) for a sub-simplicial set K of L, matched by simplex names."""
    for x, fs in K.faces.items():
        if L.faces.get(x) != fs:
            raise ShapeError(f"simplex {x!r} of K is not a simplex of L with the same faces")
    NK, NL = normalized_chains(K, ring=ring), normalized_chains(L, ring=ring)
    comps = {}
    for n in NK.degrees:
        index = {y: i for i, y in enumerate(L.nondegenerate(n))}
        cols = K.nondegenerate(n)
        rows = [[0] * len(cols) for _ in L.nondegenerate(n)]
        for j, x in enumerate(cols):
            if x not in index:
                raise ShapeError(f"simplex {x!r} of K missing from L")
            rows[index[x]][j] = 1
        comps[n] = Matrix(ring, rows, shape=(len(rows), len(cols)))
    return ChainMap(NK, NL, comps)


# standard constructors


def _vertex_name(vs: tuple[int, ...]) -> str:
    return "(" + ",".join(map(str, vs)) + ")"


def _from_subsets(subsets, name: str) -> FiniteSimplicialSet:
    subsets = sorted(set(subsets), key=lambda s: (len(s), s))
    simplices: dict[int, list[str]] = {}
    faces = {}
    for s in subsets:
        simplices.setdefault(len(s) - 1, []).append(_vertex_name(s))
        if len(s) > 1:
            faces[_vertex_name(s)] = [((), _vertex_name(s[:i] + s[i + 1:])) for i in range(len(s))]
    return FiniteSimplicialSet(simplices, faces, None, name)


def _all_faces(n: int):
    for k in range(1, n + 2):
        yield from combinations(range(n + 1), k)


def simplex(n: int) -> FiniteSimplicialSet:
    if n < 0:
        raise ShapeError("simplex dimension must be nonnegative")
    return _from_subsets(_all_faces(n), f"Delta^{n}")


def point() -> FiniteSimplicialSet:
    return simplex(0)


def boundary(n: int) -> FiniteSimplicialSet:
    if n < 1:
        raise ShapeError("boundary(n) needs n >= 1")
    full = tuple(range(n + 1))
    return _from_subsets((s for s in _all_faces(n) if s != full), f"dDelta^{n}")


def horn(n: int, k: int) -> FiniteSimplicialSet:
    if n < 1 or not 0 <= k <= n:
        raise ShapeError(f"horn({n}, {k}) needs n >= 1 and 0 <= k <= n")
    full = tuple(range(n + 1))
    missing = tuple(v for v in full if v != k)
    return _from_subsets((s for s in _all_faces(n) if s not in (full, missing)), f"Lambda^{n}_{k}")


def circle() -> FiniteSimplicialSet:
    """Delta^1 / dDelta^1: one vertex, one edge whose two faces coincide."""
    return FiniteSimplicialSet({0: ["v"], 1: ["e"]}, {"e": [((), "v"), ((), "v")]}, None, "S^1")
