"""(Co)simplicial chain complexes, double complexes and their Dold-Kan pieces.

A double complex stores X_{k,l} with a horizontal differential
h : X_{k,l} -> X_{k-1,l} and a vertical one v : X_{k,l} -> X_{k,l-1}
that commute (vh = hv); totalization introduces the signs.

For a simplicial chain complex X truncated at level d the Moore double
complex has (M X)_{k,l} = (X_k)_l and horizontal differential
sum_i (-1)^i d_i.  The normalized part N is the kernel of the faces
d_1..d_k, the degenerate part D is the image of the degeneracies, and the
quotient M/D gets a basis from the Smith form of D -> M.

For a cosimplicial X the Moore complex sits in nonpositive horizontal
degrees, (M X)_{-n,l} = (X^n)_l.  M-bar is the kernel of all
codegeneracies; the normalized quotient is the cokernel of the cofaces
delta^0..delta^{n-1}, written on the basis of M-bar, which is a
complement to their image.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .chain import ChainComplex, ChainMap
from .errors import RingMismatch, ShapeError, SimplicialIdentityError
from .exact_linalg import (
    Matrix,
    Ring,
    Solver,
    hstack,
    image_basis,
    inverse,
    kernel_basis,
    smith_normal_form,
    vstack,
)

Bidegree = tuple[int, int]


# ---------------------------------------------------------------------------
# double complexes


@dataclass(frozen=True, eq=False)
class DoubleComplex:
    ring: Ring
    ranks: Mapping[Bidegree, int]
    horizontal: Mapping[Bidegree, Matrix] = field(default_factory=dict)
    vertical: Mapping[Bidegree, Matrix] = field(default_factory=dict)
    check: bool = True

    def __post_init__(self):
        ranks = {(int(k), int(l)): int(r) for (k, l), r in self.ranks.items() if r}
        object.__setattr__(self, "ranks", dict(sorted(ranks.items())))
        object.__setattr__(self, "horizontal", self._clean(self.horizontal, (-1, 0), "h"))
        object.__setattr__(self, "vertical", self._clean(self.vertical, (0, -1), "v"))
        if self.check:
            bad = self.violations()
            if bad:
                raise ShapeError("not a double complex: " + "; ".join(bad[:3]))

    def _clean(self, maps, step, name):
        out = {}
        for (k, l), m in maps.items():
            if m.ring != self.ring:
                raise RingMismatch(f"{name}_{k},{l} over {m.ring}, double complex over {self.ring}")
            shape = (self.rank(k + step[0], l + step[1]), self.rank(k, l))
            if m.shape != shape:
                raise ShapeError(f"{name}_({k},{l}) has shape {m.shape}, expected {shape}")
            if shape[0] and shape[1] and not m.is_zero():
                out[(int(k), int(l))] = m
        return dict(sorted(out.items()))

    def rank(self, k: int, l: int) -> int:
        return self.ranks.get((k, l), 0)

    def h(self, k: int, l: int) -> Matrix:
        m = self.horizontal.get((k, l))
        return m if m is not None else Matrix.zeros(self.ring, self.rank(k - 1, l), self.rank(k, l))

    def v(self, k: int, l: int) -> Matrix:
        m = self.vertical.get((k, l))
        return m if m is not None else Matrix.zeros(self.ring, self.rank(k, l - 1), self.rank(k, l))

    def violations(self) -> list[str]:
        bad = []
        for k, l in self.ranks:
            if not (self.h(k - 1, l) @ self.h(k, l)).is_zero():
                bad.append(f"h h != 0 at ({k},{l})")
            if not (self.v(k, l - 1) @ self.v(k, l)).is_zero():
                bad.append(f"v v != 0 at ({k},{l})")
            if self.v(k - 1, l) @ self.h(k, l) != self.h(k, l - 1) @ self.v(k, l):
                bad.append(f"v h != h v at ({k},{l})")
        return bad

    @property
    def support(self) -> list[Bidegree]:
        return list(self.ranks)

    def column(self, k: int) -> ChainComplex:
        """The vertical complex X_{k,*}."""
        ls = [l for kk, l in self.ranks if kk == k]
        return ChainComplex(self.ring, {l: self.rank(k, l) for l in ls}, {l: self.v(k, l) for l in ls})

    def row(self, l: int) -> ChainComplex:
        """The horizontal complex X_{*,l}."""
        ks = [k for k, ll in self.ranks if ll == l]
        return ChainComplex(self.ring, {k: self.rank(k, l) for k in ks}, {k: self.h(k, l) for k in ks})

    def transpose(self) -> "DoubleComplex":
        return DoubleComplex(
            self.ring,
            {(l, k): r for (k, l), r in self.ranks.items()},
            {(l, k): m for (k, l), m in self.vertical.items()},
            {(l, k): m for (k, l), m in self.horizontal.items()},
        )

    def restrict(self, k_lo=None, k_hi=None, l_lo=None, l_hi=None) -> "DoubleComplex":
        """Brutal restriction to a box; differentials leaving the box are dropped."""

        def inside(k, l):
            return (
                (k_lo is None or k >= k_lo)
                and (k_hi is None or k <= k_hi)
                and (l_lo is None or l >= l_lo)
                and (l_hi is None or l <= l_hi)
            )

        ranks = {kl: r for kl, r in self.ranks.items() if inside(*kl)}
        h = {(k, l): m for (k, l), m in self.horizontal.items() if inside(k, l) and inside(k - 1, l)}
        v = {(k, l): m for (k, l), m in self.vertical.items() if inside(k, l) and inside(k, l - 1)}
        return DoubleComplex(self.ring, ranks, h, v, check=False)

    def __eq__(self, other):
        if not isinstance(other, DoubleComplex):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.ranks == other.ranks
            and self.horizontal == other.horizontal
            and self.vertical == other.vertical
        )


@dataclass(frozen=True, eq=False)
class DoubleComplexMap:
    source: DoubleComplex
    target: DoubleComplex
    components: Mapping[Bidegree, Matrix] = field(default_factory=dict)
    check: bool = True

    def __post_init__(self):
        comps = {}
        for (k, l), m in self.components.items():
            shape = (self.target.rank(k, l), self.source.rank(k, l))
            if m.shape != shape:
                raise ShapeError(f"component ({k},{l}) has shape {m.shape}, expected {shape}")
            if shape[0] and shape[1]:
                comps[(k, l)] = m
        object.__setattr__(self, "components", dict(sorted(comps.items())))
        if self.check:
            bad = self.violations()
            if bad:
                raise ShapeError("not a map of double complexes: " + "; ".join(bad[:3]))

    def f(self, k: int, l: int) -> Matrix:
        m = self.components.get((k, l))
        if m is None:
            return Matrix.zeros(self.source.ring, self.target.rank(k, l), self.source.rank(k, l))
        return m

    def violations(self) -> list[str]:
        S, T = self.source, self.target
        bad = []
        for k, l in set(S.ranks) | set(T.ranks):
            if T.h(k, l) @ self.f(k, l) != self.f(k - 1, l) @ S.h(k, l):
                bad.append(f"h f != f h at ({k},{l})")
            if T.v(k, l) @ self.f(k, l) != self.f(k, l - 1) @ S.v(k, l):
                bad.append(f"v f != f v at ({k},{l})")
        return bad

    def column_map(self, k: int) -> ChainMap:
        S, T = self.source.column(k), self.target.column(k)
        return ChainMap(S, T, {l: self.f(k, l) for l in set(S.ranks) | set(T.ranks)})

    def __matmul__(self, other: "DoubleComplexMap") -> "DoubleComplexMap":
        comps = {kl: self.f(*kl) @ other.f(*kl) for kl in other.source.ranks}
        return DoubleComplexMap(other.source, self.target, comps, check=False)


def _sub_double_complex(M: DoubleComplex, basis: dict[Bidegree, Matrix]) -> DoubleComplex:
    """Differentials of M restricted to the submodules spanned by ``basis``."""
    solvers = {kl: Solver(b) for kl, b in basis.items() if b.cols}
    ranks = {kl: b.cols for kl, b in basis.items()}
    h, v = {}, {}
    for (k, l), b in basis.items():
        if not b.cols:
            continue
        if (k - 1, l) in solvers:
            h[(k, l)] = solvers[(k - 1, l)].solve(M.h(k, l) @ b)
        elif not (M.h(k, l) @ b).is_zero():
            raise ShapeError(f"submodule at ({k},{l}) not closed under h")
        if (k, l - 1) in solvers:
            v[(k, l)] = solvers[(k, l - 1)].solve(M.v(k, l) @ b)
        elif not (M.v(k, l) @ b).is_zero():
            raise ShapeError(f"submodule at ({k},{l}) not closed under v")
    return DoubleComplex(M.ring, ranks, h, v)


# ---------------------------------------------------------------------------
# simplicial objects


def _sum_maps(ring, maps: Sequence[tuple[int, ChainMap]], l: int, rows: int, cols: int) -> Matrix:
    out = Matrix.zeros(ring, rows, cols)
    for sign, f in maps:
        out = out + f.f(l) if sign > 0 else out - f.f(l)
    return out


@dataclass(frozen=True, eq=False)
class SimplicialChainComplex:
    """Levels X_0..X_d with faces ``faces[n][i] = d_i : X_n -> X_{n-1}``
    (``faces[0]`` is empty) and degeneracies ``degeneracies[n][i] = s_i :
    X_n -> X_{n+1}`` for n < d."""

    levels: Sequence[ChainComplex]
    faces: Sequence[Sequence[ChainMap]]
    degeneracies: Sequence[Sequence[ChainMap]]
    check: bool = True

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))
        object.__setattr__(self, "degeneracies", tuple(tuple(s) for s in self.degeneracies))
        d = self.truncation
        if len(self.faces) != d + 1 or len(self.degeneracies) != d:
            raise ShapeError("need faces for levels 0..d and degeneracies for levels 0..d-1")
        rings = {X.ring for X in self.levels}
        if len(rings) > 1:
            raise RingMismatch("levels over different rings")
        for n in range(d + 1):
            if len(self.faces[n]) != (n + 1 if n else 0):
                raise ShapeError(f"level {n} needs {n + 1 if n else 0} faces")
            if n < d and len(self.degeneracies[n]) != n + 1:
                raise ShapeError(f"level {n} needs {n + 1} degeneracies")
        if self.check:
            bad = self.identity_violations()
            if bad:
                raise SimplicialIdentityError("; ".join(bad[:3]))

    @property
    def truncation(self) -> int:
        return len(self.levels) - 1

    @property
    def ring(self) -> Ring:
        return self.levels[0].ring

    def d(self, n: int, i: int) -> ChainMap:
        return self.faces[n][i]

    def s(self, n: int, i: int) -> ChainMap:
        return self.degeneracies[n][i]

    def internal_degrees(self) -> list[int]:
        return sorted({l for X in self.levels for l in X.degrees})

    def identity_violations(self) -> list[str]:
        bad = []
        degs = self.internal_degrees()
        d = self.truncation
        eq = lambda a, b: all(a(l) == b(l) for l in degs)  # noqa: E731

        def comp(*maps):
            def at(l):
                out = maps[-1].f(l)
                for m in reversed(maps[:-1]):
                    out = m.f(l) @ out
                return out

            return at

        for n in range(2, d + 1):
            for j in range(n + 1):
                for i in range(j):
                    if not eq(comp(self.d(n - 1, i), self.d(n, j)), comp(self.d(n - 1, j - 1), self.d(n, i))):
                        bad.append(f"d_{i} d_{j} != d_{j - 1} d_{i} on level {n}")
        for n in range(d):
            for j in range(n + 1):
                s = self.s(n, j)
                for i in range(n + 2):
                    lhs = comp(self.d(n + 1, i), s)
                    if i < j:
                        rhs = comp(self.s(n - 1, j - 1), self.d(n, i))
                    elif i in (j, j + 1):
                        rhs = self.levels[n].identity().f
                    else:
                        rhs = comp(self.s(n - 1, j), self.d(n, i - 1))
                    if not eq(lhs, rhs):
                        bad.append(f"d_{i} s_{j} identity fails on level {n}")
        for n in range(d - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    if not eq(comp(self.s(n + 1, i), self.s(n, j)), comp(self.s(n + 1, j + 1), self.s(n, i))):
                        bad.append(f"s_{i} s_{j} != s_{j + 1} s_{i} on level {n}")
        return bad

    def truncate(self, d: int) -> "SimplicialChainComplex":
        return SimplicialChainComplex(self.levels[: d + 1], self.faces[: d + 1], self.degeneracies[:d], check=False)


def constant_simplicial(C: ChainComplex, d: int) -> SimplicialChainComplex:
    idm = C.identity()
    return SimplicialChainComplex(
        [C] * (d + 1),
        [()] + [(idm,) * (n + 1) for n in range(1, d + 1)],
        [(idm,) * (n + 1) for n in range(d)],
    )


def moore(X: SimplicialChainComplex) -> DoubleComplex:
    ring = X.ring
    ranks, h, v = {}, {}, {}
    for k, Xk in enumerate(X.levels):
        for l in Xk.degrees:
            ranks[(k, l)] = Xk.rank(l)
            v[(k, l)] = Xk.d(l)
            if k:
                h[(k, l)] = _sum_maps(
                    ring,
                    [(1 if i % 2 == 0 else -1, X.d(k, i)) for i in range(k + 1)],
                    l,
                    X.levels[k - 1].rank(l),
                    Xk.rank(l),
                )
    return DoubleComplex(ring, ranks, h, v)


def normalized_inclusion(X: SimplicialChainComplex) -> DoubleComplexMap:
    """N X -> M X; N_k is the kernel of d_1..d_k, with differential d_0."""
    M = moore(X)
    basis = {}
    for k, Xk in enumerate(X.levels):
        for l in Xk.degrees:
            if k == 0:
                basis[(k, l)] = Matrix.identity(X.ring, Xk.rank(l))
            else:
                stacked = vstack(X.ring, [X.d(k, i).f(l) for i in range(1, k + 1)], cols=Xk.rank(l))
                basis[(k, l)] = kernel_basis(stacked)
    N = _sub_double_complex(M, basis)
    return DoubleComplexMap(N, M, basis)


def normalized(X: SimplicialChainComplex) -> DoubleComplex:
    return normalized_inclusion(X).source


def degenerate_sub(X: SimplicialChainComplex) -> DoubleComplexMap:
    """D X -> M X; D_k is the image of s_0..s_{k-1} : X_{k-1} -> X_k."""
    M = moore(X)
    basis = {}
    for k, Xk in enumerate(X.levels):
        for l in Xk.degrees:
            if k == 0:
                basis[(k, l)] = Matrix.zeros(X.ring, Xk.rank(l), 0)
            else:
                stacked = hstack(X.ring, [X.s(k - 1, i).f(l) for i in range(k)], rows=Xk.rank(l))
                basis[(k, l)] = image_basis(stacked)
    D = _sub_double_complex(M, basis)
    return DoubleComplexMap(D, M, basis)


def splitting_matrices(X: SimplicialChainComplex) -> dict[Bidegree, Matrix]:
    """[N-basis | D-basis] at every bidegree; square and invertible when M = N (+) D."""
    iN, iD = normalized_inclusion(X), degenerate_sub(X)
    out = {}
    for kl in moore(X).ranks:
        out[kl] = hstack(X.ring, [iN.f(*kl), iD.f(*kl)])
    return out


def mbar(X: SimplicialChainComplex) -> DoubleComplexMap:
    """Quotient M X -> M X / D X on a cokernel basis read off the Smith form of D -> M.

    The basis is independent of N, so N -> M -> M-bar being invertible is a
    genuine check of M = N (+) D.
    """
    M = moore(X)
    iD = degenerate_sub(X)
    q, lift, ranks = {}, {}, {}
    for kl in M.ranks:
        B = iD.f(*kl)
        if B.cols == 0:
            q[kl] = lift[kl] = Matrix.identity(X.ring, B.rows)
            ranks[kl] = B.rows
            continue
        snf = smith_normal_form(B)
        r = snf.rank
        if not X.ring.is_field and any(abs(x) != 1 for x in snf.diagonal[:r]):
            raise ShapeError(f"degenerate part is not a direct summand at {kl}; M/D has torsion")
        q[kl] = snf.U[r:, :]
        lift[kl] = inverse(snf.U)[:, r:]
        ranks[kl] = B.rows - r
    h, v = {}, {}
    for (k, l), r in ranks.items():
        if not r:
            continue
        if ranks.get((k - 1, l)):
            h[(k, l)] = q[(k - 1, l)] @ M.h(k, l) @ lift[(k, l)]
        if ranks.get((k, l - 1)):
            v[(k, l)] = q[(k, l - 1)] @ M.v(k, l) @ lift[(k, l)]
    Mbar = DoubleComplex(X.ring, ranks, h, v)
    return DoubleComplexMap(M, Mbar, q)


def normalization_composite(X: SimplicialChainComplex) -> dict[Bidegree, Matrix]:
    """N -> M -> M-bar at every bidegree."""
    iN, q = normalized_inclusion(X), mbar(X)
    return {kl: q.f(*kl) @ iN.f(*kl) for kl in q.source.ranks}


# ---------------------------------------------------------------------------
# cosimplicial objects


@dataclass(frozen=True, eq=False)
class CosimplicialChainComplex:
    """Levels X^0..X^d with cofaces ``cofaces[n][i] = delta^i : X^{n-1} -> X^n``
    (``cofaces[0]`` empty) and codegeneracies ``codegeneracies[n][i] =
    sigma^i : X^{n+1} -> X^n`` for n < d."""

    levels: Sequence[ChainComplex]
    cofaces: Sequence[Sequence[ChainMap]]
    codegeneracies: Sequence[Sequence[ChainMap]]
    check: bool = True

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple(self.levels))
        object.__setattr__(self, "cofaces", tuple(tuple(f) for f in self.cofaces))
        object.__setattr__(self, "codegeneracies", tuple(tuple(s) for s in self.codegeneracies))
        d = self.truncation
        if len(self.cofaces) != d + 1 or len(self.codegeneracies) != d:
            raise ShapeError("need cofaces for levels 0..d and codegeneracies for levels 0..d-1")
        if len({X.ring for X in self.levels}) > 1:
            raise RingMismatch("levels over different rings")
        for n in range(d + 1):
            if len(self.cofaces[n]) != (n + 1 if n else 0):
                raise ShapeError(f"level {n} needs {n + 1 if n else 0} cofaces")
            if n < d and len(self.codegeneracies[n]) != n + 1:
                raise ShapeError(f"level {n} needs {n + 1} codegeneracies")
        if self.check:
            bad = self.identity_violations()
            if bad:
                raise SimplicialIdentityError("; ".join(bad[:3]))

    @property
    def truncation(self) -> int:
        return len(self.levels) - 1

    @property
    def ring(self) -> Ring:
        return self.levels[0].ring

    def delta(self, n: int, i: int) -> ChainMap:
        """delta^i : X^{n-1} -> X^n."""
        return self.cofaces[n][i]

    def sigma(self, n: int, i: int) -> ChainMap:
        """sigma^i : X^{n+1} -> X^n."""
        return self.codegeneracies[n][i]

    def internal_degrees(self) -> list[int]:
        return sorted({l for X in self.levels for l in X.degrees})

    def identity_violations(self) -> list[str]:
        bad = []
        degs = self.internal_degrees()
        d = self.truncation
        eq = lambda a, b: all(a(l) == b(l) for l in degs)  # noqa: E731

        def comp(*maps):
            def at(l):
                out = maps[-1].f(l)
                for m in reversed(maps[:-1]):
                    out = m.f(l) @ out
                return out

            return at

        # delta^j delta^i = delta^i delta^{j-1}  (i < j), X^{n-2} -> X^n
        for n in range(2, d + 1):
            for j in range(n + 1):
                for i in range(j):
                    if not eq(comp(self.delta(n, j), self.delta(n - 1, i)), comp(self.delta(n, i), self.delta(n - 1, j - 1))):
                        bad.append(f"delta^{j} delta^{i} identity fails into level {n}")
        # sigma^j delta^i : X^n -> X^n  (sigma^j : X^{n+1} -> X^n)
        for n in range(d):
            for j in range(n + 1):
                for i in range(n + 2):
                    lhs = comp(self.sigma(n, j), self.delta(n + 1, i))
                    if i < j:
                        rhs = comp(self.delta(n, i), self.sigma(n - 1, j - 1))
                    elif i in (j, j + 1):
                        rhs = self.levels[n].identity().f
                    else:
                        rhs = comp(self.delta(n, i - 1), self.sigma(n - 1, j))
                    if not eq(lhs, rhs):
                        bad.append(f"sigma^{j} delta^{i} identity fails on level {n}")
        # sigma^j sigma^i = sigma^i sigma^{j+1}  (i <= j), X^{n+2} -> X^n
        for n in range(d - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    if not eq(comp(self.sigma(n, j), self.sigma(n + 1, i)), comp(self.sigma(n, i), self.sigma(n + 1, j + 1))):
                        bad.append(f"sigma^{j} sigma^{i} identity fails on level {n}")
        return bad


def constant_cosimplicial(C: ChainComplex, d: int) -> CosimplicialChainComplex:
    idm = C.identity()
    return CosimplicialChainComplex(
        [C] * (d + 1),
        [()] + [(idm,) * (n + 1) for n in range(1, d + 1)],
        [(idm,) * (n + 1) for n in range(d)],
    )


def moore_cosimplicial(X: CosimplicialChainComplex) -> DoubleComplex:
    """(M X)_{-n,l} = (X^n)_l with horizontal differential sum_i (-1)^i delta^i."""
    ring = X.ring
    ranks, h, v = {}, {}, {}
    d = X.truncation
    for n, Xn in enumerate(X.levels):
        for l in Xn.degrees:
            ranks[(-n, l)] = Xn.rank(l)
            v[(-n, l)] = Xn.d(l)
            if n < d:
                h[(-n, l)] = _sum_maps(
                    ring,
                    [(1 if i % 2 == 0 else -1, X.delta(n + 1, i)) for i in range(n + 2)],
                    l,
                    X.levels[n + 1].rank(l),
                    Xn.rank(l),
                )
    return DoubleComplex(ring, ranks, h, v)


def mbar_cosimplicial_inclusion(X: CosimplicialChainComplex) -> DoubleComplexMap:
    """M-bar X -> M X; M-bar^n is the kernel of sigma^0..sigma^{n-1}."""
    M = moore_cosimplicial(X)
    basis = {}
    for n, Xn in enumerate(X.levels):
        for l in Xn.degrees:
            if n == 0:
                basis[(0, l)] = Matrix.identity(X.ring, Xn.rank(l))
            else:
                stacked = vstack(X.ring, [X.sigma(n - 1, i).f(l) for i in range(n)], cols=Xn.rank(l))
                basis[(-n, l)] = kernel_basis(stacked)
    Mbar = _sub_double_complex(M, basis)
    return DoubleComplexMap(Mbar, M, basis)


def mbar_cosimplicial(X: CosimplicialChainComplex) -> DoubleComplex:
    return mbar_cosimplicial_inclusion(X).source


def coface_image(X: CosimplicialChainComplex) -> dict[Bidegree, Matrix]:
    """Basis of the image of delta^0..delta^{n-1} in X^n at each bidegree (-n, l)."""
    out = {}
    for n, Xn in enumerate(X.levels):
        for l in Xn.degrees:
            if n == 0:
                out[(0, l)] = Matrix.zeros(X.ring, Xn.rank(l), 0)
            else:
                stacked = hstack(X.ring, [X.delta(n, i).f(l) for i in range(n)], rows=Xn.rank(l))
                out[(-n, l)] = image_basis(stacked)
    return out


def normalized_cosimplicial_projection(X: CosimplicialChainComplex) -> DoubleComplexMap:
    """M X -> N X, the cokernel of delta^0..delta^{n-1}, on the basis image of M-bar."""
    M = moore_cosimplicial(X)
    iMbar = mbar_cosimplicial_inclusion(X)
    img = coface_image(X)
    p, ranks = {}, {}
    for kl in M.ranks:
        B = hstack(X.ring, [iMbar.f(*kl), img[kl]])
        if B.rows != B.cols:
            raise ShapeError(f"M-bar and the coface image do not split M at {kl}")
        r = iMbar.f(*kl).cols
        p[kl] = inverse(B)[:r, :]
        ranks[kl] = r
    h, v = {}, {}
    for (k, l), r in ranks.items():
        if not r:
            continue
        sec = iMbar.f(k, l)
        if ranks.get((k - 1, l)):
            h[(k, l)] = p[(k - 1, l)] @ M.h(k, l) @ sec
        if ranks.get((k, l - 1)):
            v[(k, l)] = p[(k, l - 1)] @ M.v(k, l) @ sec
    N = DoubleComplex(X.ring, ranks, h, v)
    return DoubleComplexMap(M, N, p)


def normalized_cosimplicial(X: CosimplicialChainComplex) -> DoubleComplex:
    return normalized_cosimplicial_projection(X).target
