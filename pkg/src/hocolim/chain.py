"""Bounded chain complexes of finitely generated free modules.

A complex stores its nonzero ranks and the differentials d_n : C_n -> C_{n-1}
as ``rank(n-1) x rank(n)`` matrices.  Tensor products use the Koszul sign
d(x (x) y) = dx (x) y + (-1)^|x| x (x) dy, with summands of (C (x) D)_n
ordered by ascending degree of the C factor and then row-major in the
basis indices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence

from .errors import NonFreeHomology, RingMismatch, ShapeError
from .exact_linalg import (
    ZZ,
    Matrix,
    Ring,
    block_matrix,
    hstack,
    invariant_factors,
    kernel_basis,
    kron,
    rank,
    solve,
)


@dataclass(frozen=True, eq=False)
class ChainComplex:
    ring: Ring
    ranks: Mapping[int, int]
    differentials: Mapping[int, Matrix] = field(default_factory=dict)

    def __post_init__(self):
        ranks = {int(n): int(r) for n, r in self.ranks.items() if r}
        if any(r < 0 for r in ranks.values()):
            raise ShapeError("ranks must be nonnegative")
        diffs = {}
        for n, d in self.differentials.items():
            n = int(n)
            if d.ring != self.ring:
                raise RingMismatch(f"differential d_{n} is over {d.ring}, complex over {self.ring}")
            shape = (ranks.get(n - 1, 0), ranks.get(n, 0))
            if d.shape != shape:
                raise ShapeError(f"d_{n} has shape {d.shape}, expected {shape}")
            if shape[0] and shape[1]:
                diffs[n] = d
        for n in ranks:
            if ranks.get(n - 1) and n not in diffs:
                diffs[n] = Matrix.zeros(self.ring, ranks[n - 1], ranks[n])
        object.__setattr__(self, "ranks", dict(sorted(ranks.items())))
        object.__setattr__(self, "differentials", dict(sorted(diffs.items())))
        for n in self.differentials:
            if n - 1 in self.differentials:
                if not (self.differentials[n - 1] @ self.differentials[n]).is_zero():
                    raise ShapeError(f"d_{n - 1} d_{n} != 0 (degree pair ({n}, {n - 1}))")

    @classmethod
    def zero(cls, ring: Ring = ZZ) -> "ChainComplex":
        return cls(ring, {})

    @classmethod
    def free(cls, ring: Ring, degree: int, rank: int = 1) -> "ChainComplex":
        """R^rank concentrated in one degree."""
        return cls(ring, {degree: rank})

    def rank(self, n: int) -> int:
        return self.ranks.get(n, 0)

    def d(self, n: int) -> Matrix:
        m = self.differentials.get(n)
        if m is None:
            return Matrix.zeros(self.ring, self.rank(n - 1), self.rank(n))
        return m

    @property
    def degrees(self) -> list[int]:
        return list(self.ranks)

    @property
    def total_rank(self) -> int:
        return sum(self.ranks.values())

    def is_zero(self) -> bool:
        return not self.ranks

    def bounds(self) -> tuple[int, int] | None:
        if not self.ranks:
            return None
        return min(self.ranks), max(self.ranks)

    def __eq__(self, other):
        if not isinstance(other, ChainComplex):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.ranks == other.ranks
            and all(self.d(n) == other.d(n) for n in set(self.differentials) | set(other.differentials))
        )

    def __repr__(self):
        return f"ChainComplex({self.ring}, ranks={dict(self.ranks)})"

    def identity(self) -> "ChainMap":
        return ChainMap(self, self, {n: Matrix.identity(self.ring, r) for n, r in self.ranks.items()})

    def to_dict(self) -> dict:
        return {
            "ring": str(self.ring),
            "ranks": {str(n): r for n, r in self.ranks.items()},
            "differentials": {str(n): d.to_lists() for n, d in self.differentials.items()},
        }


@dataclass(frozen=True, eq=False)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    components: Mapping[int, Matrix] = field(default_factory=dict)
    check: bool = True

    def __post_init__(self):
        if self.source.ring != self.target.ring:
            raise RingMismatch("chain map between complexes over different rings")
        comps = {}
        for n, m in self.components.items():
            shape = (self.target.rank(n), self.source.rank(n))
            if m.shape != shape:
                raise ShapeError(f"component f_{n} has shape {m.shape}, expected {shape}")
            if shape[0] and shape[1]:
                comps[int(n)] = m
        object.__setattr__(self, "components", dict(sorted(comps.items())))
        if self.check:
            bad = self.noncommuting_degrees()
            if bad:
                raise ShapeError(f"not a chain map: d f != f d in degree {bad[0]}")

    @property
    def ring(self) -> Ring:
        return self.source.ring

    def f(self, n: int) -> Matrix:
        m = self.components.get(n)
        if m is None:
            return Matrix.zeros(self.ring, self.target.rank(n), self.source.rank(n))
        return m

    def noncommuting_degrees(self) -> list[int]:
        bad = []
        for n in sorted(set(self.source.ranks) | set(self.target.ranks)):
            lhs = self.target.d(n) @ self.f(n)
            rhs = self.f(n - 1) @ self.source.d(n)
            if lhs != rhs:
                bad.append(n)
        return bad

    def __matmul__(self, other: "ChainMap") -> "ChainMap":
        """Composite ``self o other``."""
        if other.target != self.source:
            raise ShapeError("composable chain maps need matching middle complex")
        degs = set(other.source.ranks)
        return ChainMap(other.source, self.target, {n: self.f(n) @ other.f(n) for n in degs}, check=False)

    def __eq__(self, other):
        if not isinstance(other, ChainMap):
            return NotImplemented
        degs = set(self.components) | set(other.components)
        return (
            self.source == other.source
            and self.target == other.target
            and all(self.f(n) == other.f(n) for n in degs)
        )

    def to_dict(self) -> dict:
        return {
            "source": self.source.to_dict(),
            "target": self.target.to_dict(),
            "components": {str(n): m.to_lists() for n, m in self.components.items()},
        }


@dataclass(frozen=True)
class HomologyGroup:
    """Z^free_rank plus cyclic torsion in invariant-factor form."""

    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    ring: Ring = ZZ

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        if any(d <= 1 for d in t) or any(t[i + 1] % t[i] for i in range(len(t) - 1)):
            raise ValueError(f"torsion {t} is not a divisor chain of integers > 1")
        if t and self.ring.is_field:
            raise ValueError("homology over a field has no torsion")
        object.__setattr__(self, "torsion", t)

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int], ring: Ring = ZZ) -> "HomologyGroup":
        """Normalize Z^free_rank (+) (+)_i Z/orders[i] to invariant factors."""
        orders = [abs(int(o)) for o in orders]
        free_rank += sum(1 for o in orders if o == 0)
        orders = [o for o in orders if o > 1]
        if not orders or ring.is_field:
            return cls(free_rank, (), ring)
        D = Matrix.diagonal(ZZ, orders)
        return cls(free_rank, tuple(d for d in invariant_factors(D) if d > 1), ring)

    def is_zero(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def is_free(self) -> bool:
        return not self.torsion

    def __add__(self, other: "HomologyGroup") -> "HomologyGroup":
        return HomologyGroup.from_orders(
            self.free_rank + other.free_rank, self.torsion + other.torsion, self.ring
        )

    def __str__(self):
        sym = "Z" if self.ring.kind == "Z" else str(self.ring)
        parts = []
        if self.free_rank:
            parts.append(f"{sym}^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " ⊕ ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def homology(C: ChainComplex, n: int) -> HomologyGroup:
    """H_n(C) via a kernel basis of d_n and the Smith form of the boundary inclusion."""
    r = C.rank(n)
    if r == 0:
        return HomologyGroup(ring=C.ring)
    Z = kernel_basis(C.d(n))
    if Z.cols == 0:
        return HomologyGroup(ring=C.ring)
    B = C.d(n + 1)
    if B.cols == 0:
        return HomologyGroup(Z.cols, (), C.ring)
    P = solve(Z, B)
    factors = invariant_factors(P)
    return HomologyGroup.from_orders(Z.cols - len(factors), factors, C.ring)


def homology_all(C: ChainComplex, degrees: Iterable[int] | None = None) -> dict[int, HomologyGroup]:
    if degrees is None:
        degrees = C.degrees
    return {n: homology(C, n) for n in degrees}


def homology_by_ranks(C: ChainComplex, n: int) -> HomologyGroup:
    """H_n from rank(C_n) - rank d_n - rank d_{n+1} and the Smith factors of d_{n+1}.

    Independent of :func:`homology`; used as a cross-check.
    """
    free = C.rank(n) - rank(C.d(n)) - rank(C.d(n + 1))
    tors = [d for d in invariant_factors(C.d(n + 1)) if d != 1] if C.ring.kind == "Z" else []
    return HomologyGroup.from_orders(free, tors, C.ring)


def cone(f: ChainMap) -> ChainComplex:
    """cone(f)_n = T_n (+) S_{n-1} with differential [[d_T, f], [0, -d_S]]."""
    S, T, ring = f.source, f.target, f.ring
    degs = set(T.ranks) | {n + 1 for n in S.ranks}
    ranks = {n: T.rank(n) + S.rank(n - 1) for n in degs}
    diffs = {}
    for n in degs:
        rows = [T.rank(n - 1), S.rank(n - 2)]
        cols = [T.rank(n), S.rank(n - 1)]
        diffs[n] = block_matrix(
            ring, rows, cols, {(0, 0): T.d(n), (0, 1): f.f(n - 1), (1, 1): -S.d(n - 1)}
        )
    return ChainComplex(ring, ranks, diffs)


def is_acyclic(C: ChainComplex) -> bool:
    return all(homology(C, n).is_zero() for n in C.degrees)


def is_quasi_iso(f: ChainMap) -> bool:
    return is_acyclic(cone(f))


def induced_is_iso(f: ChainMap, n: int) -> bool:
    """Whether H_n(f) is an isomorphism, decided without forming the cone.

    A surjection between isomorphic finitely generated modules is an
    isomorphism, so it is enough to compare the groups and test that the
    cycles of the source together with the boundaries of the target span
    all cycles of the target.
    """
    S, T = f.source, f.target
    if homology(S, n) != homology(T, n):
        return False
    ZT = kernel_basis(T.d(n))
    if ZT.cols == 0:
        return True
    ZS = kernel_basis(S.d(n))
    gens = hstack(f.ring, [f.f(n) @ ZS, T.d(n + 1)], rows=T.rank(n))
    coords = solve(ZT, gens)
    factors = invariant_factors(coords)
    return len(factors) == ZT.cols and (f.ring.is_field or all(abs(d) == 1 for d in factors))


def is_quasi_iso_degreewise(f: ChainMap) -> bool:
    degs = set(f.source.ranks) | set(f.target.ranks)
    return all(induced_is_iso(f, n) for n in degs)


def shift(C: ChainComplex, k: int) -> ChainComplex:
    """(Sigma^k C)_n = C_{n-k} with differential (-1)^k d."""
    sign = -1 if k % 2 else 1
    return ChainComplex(
        C.ring,
        {n + k: r for n, r in C.ranks.items()},
        {n + k: d.scale(sign) for n, d in C.differentials.items()},
    )


def shift_map(f: ChainMap, k: int) -> ChainMap:
    return ChainMap(
        shift(f.source, k), shift(f.target, k), {n + k: m for n, m in f.components.items()}, check=False
    )


def _tensor_blocks(C: ChainComplex, D: ChainComplex, n: int) -> list[tuple[int, int]]:
    return [(k, n - k) for k in C.degrees if D.rank(n - k)]


def tensor(C: ChainComplex, D: ChainComplex) -> ChainComplex:
    if C.ring != D.ring:
        raise RingMismatch("tensor of complexes over different rings")
    ring = C.ring
    degs = sorted({k + l for k in C.degrees for l in D.degrees})
    ranks = {n: sum(C.rank(k) * D.rank(l) for k, l in _tensor_blocks(C, D, n)) for n in degs}
    diffs = {}
    for n in degs:
        src = _tensor_blocks(C, D, n)
        tgt = _tensor_blocks(C, D, n - 1)
        if not tgt:
            continue
        tindex = {kl: i for i, kl in enumerate(tgt)}
        blocks = {}
        for j, (k, l) in enumerate(src):
            if (k - 1, l) in tindex:
                blocks[(tindex[(k - 1, l)], j)] = kron(C.d(k), Matrix.identity(ring, D.rank(l)))
            if (k, l - 1) in tindex:
                sign = -1 if k % 2 else 1
                blocks[(tindex[(k, l - 1)], j)] = kron(Matrix.identity(ring, C.rank(k)), D.d(l)).scale(sign)
        diffs[n] = block_matrix(
            ring, [C.rank(k) * D.rank(l) for k, l in tgt], [C.rank(k) * D.rank(l) for k, l in src], blocks
        )
    return ChainComplex(ring, ranks, diffs)


def tensor_maps(f: ChainMap, g: ChainMap) -> ChainMap:
    """f (x) g on the tensor complexes, blockwise Kronecker products (no signs: degree-0 maps)."""
    S, T = tensor(f.source, g.source), tensor(f.target, g.target)
    ring = f.ring
    comps = {}
    for n in S.degrees:
        src = _tensor_blocks(f.source, g.source, n)
        tgt = _tensor_blocks(f.target, g.target, n)
        tindex = {kl: i for i, kl in enumerate(tgt)}
        blocks = {}
        for j, (k, l) in enumerate(src):
            if (k, l) in tindex:
                blocks[(tindex[(k, l)], j)] = kron(f.f(k), g.f(l))
        comps[n] = block_matrix(
            ring,
            [f.target.rank(k) * g.target.rank(l) for k, l in tgt],
            [f.source.rank(k) * g.source.rank(l) for k, l in src],
            blocks,
        )
    return ChainMap(S, T, comps)


def direct_sum(Cs: Sequence[ChainComplex]) -> ChainComplex:
    if not Cs:
        return ChainComplex.zero()
    ring = Cs[0].ring
    if any(C.ring != ring for C in Cs):
        raise RingMismatch("direct sum of complexes over different rings")
    degs = sorted({n for C in Cs for n in C.degrees})
    ranks = {n: sum(C.rank(n) for C in Cs) for n in degs}
    diffs = {}
    for n in degs:
        diffs[n] = block_matrix(
            ring,
            [C.rank(n - 1) for C in Cs],
            [C.rank(n) for C in Cs],
            {(i, i): C.d(n) for i, C in enumerate(Cs)},
        )
    return ChainComplex(ring, ranks, diffs)


def direct_sum_maps(fs: Sequence[ChainMap]) -> ChainMap:
    S = direct_sum([f.source for f in fs])
    T = direct_sum([f.target for f in fs])
    ring = S.ring
    comps = {
        n: block_matrix(
            ring,
            [f.target.rank(n) for f in fs],
            [f.source.rank(n) for f in fs],
            {(i, i): f.f(n) for i, f in enumerate(fs)},
        )
        for n in S.degrees
    }
    return ChainMap(S, T, comps)


def zero_map(S: ChainComplex, T: ChainComplex) -> ChainMap:
    return ChainMap(S, T, {})


def tensor_groups(G: HomologyGroup, H: HomologyGroup) -> HomologyGroup:
    """Tensor of finitely generated abelian groups, using Z/d (x) Z/e = Z/gcd(d, e)."""
    orders = [d for d in G.torsion for _ in range(H.free_rank)]
    orders += [e for e in H.torsion for _ in range(G.free_rank)]
    orders += [gcd(d, e) for d in G.torsion for e in H.torsion]
    return HomologyGroup.from_orders(G.free_rank * H.free_rank, orders, G.ring)


def group_sum(groups: Iterable[HomologyGroup], ring: Ring = ZZ) -> HomologyGroup:
    out = HomologyGroup(ring=ring)
    for g in groups:
        out = out + g
    return out


def kunneth_rhs(K, C: ChainComplex, n: int) -> HomologyGroup:
    """(+)_{k+l=n} H_k(K) (x) H_l(C) for a simplicial set K with free homology."""
    from .simplicial_set import normalized_chains

    NK = normalized_chains(K, K.top_dimension(), ring=C.ring)
    HK = {k: homology(NK, k) for k in NK.degrees}
    for k, g in HK.items():
        if not g.is_free():
            raise NonFreeHomology(f"H_{k}(K) = {g} has torsion")
    terms = [tensor_groups(g, homology(C, n - k)) for k, g in HK.items()]
    return group_sum(terms, C.ring)
