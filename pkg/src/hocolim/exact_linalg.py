"""Exact matrices over Z, Q and F_p.

Matrices act on column vectors: a map R^m -> R^n is an n x m matrix.

Entries live in numpy arrays.  Over Z (and F_p with small p) the array is
int64 whenever every entry and every intermediate product provably fits;
otherwise it is an object array of Python ints.  Over Q it is an object
array of ``Fraction``.  The dtype is an implementation detail: equality,
hashing and every public result depend only on the exact values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .errors import NoSolution, RingMismatch, ShapeError

_SAFE = 1 << 62
_GROWTH = 1 << 30


@dataclass(frozen=True)
class Ring:
    """Coefficient ring: ``"Z"``, ``"Q"`` or ``"F"`` with a prime ``p``."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "F"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == "F":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"F_p needs a prime p, got {self.p!r}")
        elif self.p is not None:
            raise ValueError("only prime fields carry p")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def __str__(self):
        return f"F{self.p}" if self.kind == "F" else self.kind

    def element(self, x):
        if self.kind == "Z":
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise ValueError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind == "Q":
            return Fraction(x)
        x = Fraction(x)
        return x.numerator * pow(x.denominator, -1, self.p) % self.p


ZZ = Ring("Z")
QQ = Ring("Q")


def GF(p: int) -> Ring:
    return Ring("F", p)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _maxabs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat) if a.size else 0
    return int(np.abs(a).max())


def _canon(ring: Ring, a: np.ndarray) -> np.ndarray:
    """Reduce entries to canonical representatives and pick the storage dtype."""
    if ring.kind == "Q":
        out = np.empty(a.shape, dtype=object)
        for idx, x in np.ndenumerate(a):
            out[idx] = Fraction(x)
        return out
    if ring.kind == "F":
        if a.dtype != object and ring.p < _GROWTH:
            return np.mod(a.astype(np.int64), ring.p)
        out = np.empty(a.shape, dtype=object)
        for idx, x in np.ndenumerate(a):
            out[idx] = ring.element(x)
        if ring.p < _GROWTH:
            return out.astype(np.int64)
        return out
    if a.dtype != object:
        return a.astype(np.int64)
    if _maxabs(a) < _SAFE:
        return a.astype(np.int64)
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = int(x)
    return out


def _as_object(a: np.ndarray) -> np.ndarray:
    if a.dtype == object:
        return a.copy()
    out = np.empty(a.shape, dtype=object)
    for idx, x in np.ndenumerate(a):
        out[idx] = int(x)
    return out


class Matrix:
    """Immutable exact matrix over a :class:`Ring`."""

    __slots__ = ("ring", "_a")

    def __init__(self, ring: Ring, entries, shape: tuple[int, int] | None = None):
        if isinstance(entries, np.ndarray):
            a = entries
        else:
            rows = [list(r) for r in entries]
            if shape is None:
                shape = (len(rows), len(rows[0]) if rows else 0)
            a = np.empty(shape, dtype=object)
            for i, r in enumerate(rows):
                if len(r) != shape[1]:
                    raise ShapeError(f"row {i} has {len(r)} entries, expected {shape[1]}")
                for j, x in enumerate(r):
                    a[i, j] = x
        if a.ndim != 2:
            if a.size == 0 and shape is not None:
                a = a.reshape(shape)
            else:
                raise ShapeError("matrix entries must be two-dimensional")
        if shape is not None and a.shape != tuple(shape):
            raise ShapeError(f"entries have shape {a.shape}, expected {tuple(shape)}")
        a = _canon(ring, a)
        a.flags.writeable = False
        self.ring = ring
        self._a = a

    # construction

    @classmethod
    def zeros(cls, ring: Ring, rows: int, cols: int) -> "Matrix":
        return cls(ring, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls(ring, np.eye(n, dtype=np.int64))

    @classmethod
    def diagonal(cls, ring: Ring, values: Sequence, rows: int | None = None, cols: int | None = None):
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        a = np.zeros((rows, cols), dtype=object)
        a[:] = 0
        for i, v in enumerate(values):
            a[i, i] = v
        return cls(ring, a)

    @classmethod
    def scalar(cls, ring: Ring, x) -> "Matrix":
        return cls(ring, [[x]])

    # access

    @property
    def shape(self) -> tuple[int, int]:
        return self._a.shape

    @property
    def rows(self) -> int:
        return self._a.shape[0]

    @property
    def cols(self) -> int:
        return self._a.shape[1]

    @property
    def array(self) -> np.ndarray:
        return self._a

    def __getitem__(self, key):
        if isinstance(key, tuple) and all(isinstance(k, (int, np.integer)) for k in key):
            return self._py(self._a[key])
        sub = self._a[key]
        if sub.ndim != 2:
            raise IndexError("use a 2d slice or a single (i, j) index")
        return Matrix(self.ring, sub.copy())

    def _py(self, x):
        if self.ring.kind == "Q":
            return x
        return int(x)

    def to_lists(self) -> list[list]:
        return [[self._py(x) for x in row] for row in self._a]

    def column(self, j: int) -> list:
        return [self._py(x) for x in self._a[:, j]]

    def is_zero(self) -> bool:
        return not np.any(self._a != 0)

    def nonzero_count(self) -> int:
        return int(np.count_nonzero(self._a != 0))

    def max_abs(self) -> int:
        if self.ring.kind == "Q":
            return max((abs(x) for x in self._a.flat), default=0)
        return _maxabs(self._a)

    # algebra

    def _check(self, other: "Matrix"):
        if not isinstance(other, Matrix):
            return NotImplemented
        if other.ring != self.ring:
            raise RingMismatch(f"rings {self.ring} and {other.ring} differ")
        return None

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.shape == other.shape
            and bool(np.all(self._a == other._a))
        )

    def __hash__(self):
        return hash((self.ring, self.shape, tuple(self._py(x) for x in self._a.flat)))

    def __repr__(self):
        return f"Matrix({self.ring}, {self.to_lists()})"

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot add {self.shape} and {other.shape}")
        return Matrix(self.ring, _binop(self._a, other._a, np.add))

    def __sub__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise ShapeError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix(self.ring, _binop(self._a, other._a, np.subtract))

    def __neg__(self):
        a = self._a
        if a.dtype != object:
            return Matrix(self.ring, -a)
        return Matrix(self.ring, -a)

    def scale(self, c) -> "Matrix":
        c = self.ring.element(c)
        if self.ring.kind != "Q" and self._a.dtype != object and abs(c) * (self.max_abs() + 1) < _SAFE:
            return Matrix(self.ring, self._a * int(c))
        return Matrix(self.ring, _as_object(self._a) * c)

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        return Matrix(self.ring, _matmul(self._a, other._a, self.ring))

    @property
    def T(self) -> "Matrix":
        return Matrix(self.ring, self._a.T.copy())


def _binop(a, b, op):
    if a.dtype != object and b.dtype != object:
        if _maxabs(a) < _GROWTH * _GROWTH // 4 and _maxabs(b) < _GROWTH * _GROWTH // 4:
            return op(a, b)
    return op(_as_object(a) if a.dtype != object else a, _as_object(b) if b.dtype != object else b)


def _matmul(a, b, ring):
    if a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if a.dtype != object and b.dtype != object:
        bound = _maxabs(a) * _maxabs(b) * a.shape[1]
        if bound < _SAFE:
            return a @ b
    oa = a if a.dtype == object else _as_object(a)
    ob = b if b.dtype == object else _as_object(b)
    out = oa @ ob
    if ring.kind == "Q":
        return out
    return out


def hstack(ring: Ring, blocks: Sequence[Matrix], rows: int | None = None) -> Matrix:
    if not blocks:
        return Matrix.zeros(ring, rows or 0, 0)
    return Matrix(ring, _stack([b._a for b in blocks], axis=1))


def vstack(ring: Ring, blocks: Sequence[Matrix], cols: int | None = None) -> Matrix:
    if not blocks:
        return Matrix.zeros(ring, 0, cols or 0)
    return Matrix(ring, _stack([b._a for b in blocks], axis=0))


def _stack(arrays, axis):
    if any(a.dtype == object for a in arrays):
        arrays = [a if a.dtype == object else _as_object(a) for a in arrays]
    return np.concatenate(arrays, axis=axis)


def block_matrix(ring: Ring, row_sizes: Sequence[int], col_sizes: Sequence[int], blocks: dict) -> Matrix:
    """Assemble a matrix from ``{(i, j): Matrix}`` blocks; missing blocks are zero."""
    ro = np.concatenate([[0], np.cumsum(row_sizes)]).astype(int)
    co = np.concatenate([[0], np.cumsum(col_sizes)]).astype(int)
    use_obj = any(b._a.dtype == object for b in blocks.values())
    a = np.zeros((int(ro[-1]), int(co[-1])), dtype=object if use_obj else np.int64)
    if use_obj:
        a[:] = 0
    for (i, j), b in blocks.items():
        if b.shape != (row_sizes[i], col_sizes[j]):
            raise ShapeError(f"block {(i, j)} has shape {b.shape}, expected {(row_sizes[i], col_sizes[j])}")
        a[ro[i]:ro[i + 1], co[j]:co[j + 1]] = b._a
    return Matrix(ring, a)


def block_diag(ring: Ring, blocks: Sequence[Matrix]) -> Matrix:
    return block_matrix(
        ring, [b.rows for b in blocks], [b.cols for b in blocks], {(i, i): b for i, b in enumerate(blocks)}
    )


def kron(A: Matrix, B: Matrix) -> Matrix:
    if A.ring != B.ring:
        raise RingMismatch("kron of matrices over different rings")
    a, b = A._a, B._a
    if a.dtype != object and b.dtype != object and _maxabs(a) * _maxabs(b) < _SAFE:
        return Matrix(A.ring, np.kron(a, b))
    oa, ob = _as_object(a), _as_object(b)
    out = np.empty((a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]), dtype=object)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            out[i * b.shape[0]:(i + 1) * b.shape[0], j * b.shape[1]:(j + 1) * b.shape[1]] = oa[i, j] * ob
    return Matrix(A.ring, out)


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class SmithDecomposition:
    """``D = U @ A @ V`` with U, V invertible and D diagonal."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list:
        return [self.D[i, i] for i in range(min(self.D.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


class _Work:
    """Mutable working arrays for elimination, promoting int64 to object on growth."""

    def __init__(self, ring: Ring, arrays: list[np.ndarray]):
        self.ring = ring
        self.obj = ring.kind == "Q" or any(a.dtype == object for a in arrays)
        if ring.kind == "F" and ring.p >= _GROWTH:
            self.obj = True
        self.arrays = [self._conv(a) for a in arrays]

    def _conv(self, a):
        if self.obj:
            return _as_object(a) if self.ring.kind != "Q" else a.copy()
        return a.astype(np.int64).copy()

    def guard(self):
        if self.obj or self.ring.kind == "F":
            return
        if any(_maxabs(a) >= _GROWTH for a in self.arrays):
            self.obj = True
            self.arrays = [_as_object(a) for a in self.arrays]


def smith_normal_form(A: Matrix, transforms: bool = True) -> SmithDecomposition:
    """Smith normal form with minimal-absolute-value pivoting.

    Pivot ties are broken lexicographically by (row, column).  Over Z the
    diagonal is nonnegative with d_1 | d_2 | ...; over a field the diagonal
    is 0/1.  With ``transforms=False`` U and V are returned as identities
    of the right size and are not meaningful.
    """
    ring = A.ring
    m, n = A.shape
    U0 = np.eye(m, dtype=np.int64)
    V0 = np.eye(n, dtype=np.int64)
    if ring.kind == "Q":
        U0, V0 = _canon(ring, U0), _canon(ring, V0)
    w = _Work(ring, [A._a, U0, V0] if transforms else [A._a])
    if ring.is_field:
        _field_elim(w, m, n, transforms)
    else:
        _integer_snf(w, m, n, transforms)
    if transforms:
        D, U, V = w.arrays
    else:
        D = w.arrays[0]
        U, V = np.eye(m, dtype=np.int64), np.eye(n, dtype=np.int64)
    return SmithDecomposition(Matrix(ring, U), Matrix(ring, D), Matrix(ring, V))


def _pick_pivot(sub, absfn):
    """Row-major first entry of minimal absolute value among the nonzeros."""
    if sub.size == 0:
        return None
    if sub.dtype != object:
        mag = np.abs(sub)
        if not mag.any():
            return None
        mag = np.where(mag == 0, np.iinfo(np.int64).max, mag)
        k = int(np.argmin(mag))
        return divmod(k, sub.shape[1])
    rs, cs = np.nonzero(sub != 0)
    if len(rs) == 0:
        return None
    vals = [absfn(sub[r, c]) for r, c in zip(rs, cs)]
    k = min(range(len(vals)), key=lambda i: vals[i])
    return int(rs[k]), int(cs[k])


def _swap_rows(a, i, j):
    if i != j:
        a[[i, j], :] = a[[j, i], :]


def _swap_cols(a, i, j):
    if i != j:
        a[:, [i, j]] = a[:, [j, i]]


def _integer_snf(w: _Work, m: int, n: int, transforms: bool):
    t = 0
    while t < min(m, n):
        D = w.arrays[0]
        piv = _pick_pivot(D[t:, t:], lambda x: abs(int(x)))
        if piv is None:
            break
        i, j = piv[0] + t, piv[1] + t
        _swap_rows(D, t, i)
        _swap_cols(D, t, j)
        if transforms:
            _swap_rows(w.arrays[1], t, i)
            _swap_cols(w.arrays[2], t, j)
        while True:
            D = w.arrays[0]
            p = D[t, t]
            col = D[t + 1:, t]
            if np.any(col != 0):
                q = col // p
                D[t + 1:, t:] -= np.outer(q, D[t, t:])
                if transforms:
                    U = w.arrays[1]
                    U[t + 1:, :] -= np.outer(q, U[t, :])
            row = D[t, t + 1:]
            if np.any(row != 0):
                q = row // p
                D[t:, t + 1:] -= np.outer(D[t:, t], q)
                if transforms:
                    V = w.arrays[2]
                    V[:, t + 1:] -= np.outer(V[:, t], q)
            w.guard()
            D = w.arrays[0]
            col_nz = np.nonzero(D[t + 1:, t] != 0)[0]
            row_nz = np.nonzero(D[t, t + 1:] != 0)[0]
            if len(col_nz) or len(row_nz):
                # a remainder is smaller than the pivot: make it the pivot
                cands = [(abs(int(D[t + 1 + r, t])), 0, t + 1 + int(r)) for r in col_nz]
                cands += [(abs(int(D[t, t + 1 + c])), 1, t + 1 + int(c)) for c in row_nz]
                _, kind, idx = min(cands)
                if kind == 0:
                    _swap_rows(D, t, idx)
                    if transforms:
                        _swap_rows(w.arrays[1], t, idx)
                else:
                    _swap_cols(D, t, idx)
                    if transforms:
                        _swap_cols(w.arrays[2], t, idx)
                continue
            rest = D[t + 1:, t + 1:]
            bad = np.nonzero(rest % p != 0) if rest.size else ((), ())
            if len(bad[0]) == 0:
                break
            r = t + 1 + int(bad[0][0])
            D[t, :] += D[r, :]
            if transforms:
                U = w.arrays[1]
                U[t, :] += U[r, :]
        D = w.arrays[0]
        if D[t, t] < 0:
            D[t, :] = -D[t, :]
            if transforms:
                U = w.arrays[1]
                U[t, :] = -U[t, :]
        t += 1


def _field_elim(w: _Work, m: int, n: int, transforms: bool):
    ring = w.ring
    if ring.kind == "Q":
        inv = lambda x: 1 / x  # noqa: E731
        absfn = abs
    else:
        p = ring.p
        inv = lambda x: pow(int(x), -1, p)  # noqa: E731
        absfn = lambda x: int(x)  # noqa: E731

    def red(a):
        if ring.kind == "F":
            a %= ring.p

    t = 0
    while t < min(m, n):
        D = w.arrays[0]
        piv = _pick_pivot(D[t:, t:], absfn)
        if piv is None:
            break
        i, j = piv[0] + t, piv[1] + t
        _swap_rows(D, t, i)
        _swap_cols(D, t, j)
        if transforms:
            _swap_rows(w.arrays[1], t, i)
            _swap_cols(w.arrays[2], t, j)
        c = inv(D[t, t])
        D[t, :] = D[t, :] * c
        red(D)
        if transforms:
            U = w.arrays[1]
            U[t, :] = U[t, :] * c
            red(U)
        q = D[t + 1:, t].copy()
        if np.any(q != 0):
            D[t + 1:, t:] -= np.outer(q, D[t, t:])
            red(D)
            if transforms:
                U = w.arrays[1]
                U[t + 1:, :] -= np.outer(q, U[t, :])
                red(U)
        q = D[t, t + 1:].copy()
        if np.any(q != 0):
            D[t, t + 1:] = 0
            if transforms:
                V = w.arrays[2]
                V[:, t + 1:] -= np.outer(V[:, t], q)
                red(V)
        t += 1


def invariant_factors(A: Matrix) -> list:
    """Nonzero Smith diagonal entries of ``A`` (no transforms computed)."""
    return [d for d in smith_normal_form(A, transforms=False).diagonal if d != 0]


def rank(A: Matrix) -> int:
    """Rank over the fraction field."""
    if min(A.shape) == 0:
        return 0
    if A.ring.kind == "Z":
        return _modular_free_rank(A)
    return len(invariant_factors(A))


def _modular_free_rank(A: Matrix) -> int:
    # exact: fraction-free (Bareiss) elimination over Z
    a = _as_object(A._a)
    m, n = a.shape
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        piv = None
        for i in range(r, m):
            if a[i, c] != 0:
                piv = i
                break
        if piv is None:
            continue
        _swap_rows(a, r, piv)
        for i in range(r + 1, m):
            a[i, c + 1:] = (a[r, c] * a[i, c + 1:] - a[i, c] * a[r, c + 1:]) // prev
            a[i, c] = 0
        prev = a[r, c]
        r += 1
    return r


def determinant(A: Matrix):
    """Exact determinant by fraction-free elimination."""
    n, m = A.shape
    if n != m:
        raise ShapeError("determinant of a non-square matrix")
    if n == 0:
        return A.ring.element(1)
    if A.ring.is_field:
        a = _as_object(A._a) if A.ring.kind == "F" else A._a.copy()
        det = A.ring.element(1)
        for c in range(n):
            piv = next((i for i in range(c, n) if a[i, c] != 0), None)
            if piv is None:
                return A.ring.element(0)
            if piv != c:
                _swap_rows(a, c, piv)
                det = -det
            det = det * a[c, c]
            inv = (1 / a[c, c]) if A.ring.kind == "Q" else pow(int(a[c, c]), -1, A.ring.p)
            for i in range(c + 1, n):
                a[i, c:] = a[i, c:] - a[i, c] * inv * a[c, c:]
                if A.ring.kind == "F":
                    a[i, c:] = a[i, c:] % A.ring.p
        return A.ring.element(det)
    a = _as_object(A._a)
    sign = 1
    prev = 1
    for c in range(n - 1):
        piv = next((i for i in range(c, n) if a[i, c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            _swap_rows(a, c, piv)
            sign = -sign
        for i in range(c + 1, n):
            a[i, c + 1:] = (a[c, c] * a[i, c + 1:] - a[i, c] * a[c, c + 1:]) // prev
            a[i, c] = 0
        prev = a[c, c]
    return sign * int(a[n - 1, n - 1])


def kernel_basis(A: Matrix) -> Matrix:
    """Columns form a basis of ker(A); over Z the basis spans a direct summand."""
    s = smith_normal_form(A)
    r = s.rank
    return s.V[:, r:]


def image_basis(A: Matrix) -> Matrix:
    """Columns form a basis of the column space of A (as a submodule)."""
    s = smith_normal_form(A)
    r = s.rank
    return A @ s.V[:, :r]


class Solver:
    """Reusable exact solver for ``A @ X = B`` built from one Smith decomposition."""

    def __init__(self, A: Matrix):
        self.A = A
        self.snf = smith_normal_form(A)
        self.diag = self.snf.diagonal
        self.r = self.snf.rank

    def solve(self, B: Matrix) -> Matrix:
        A, ring = self.A, self.A.ring
        if B.rows != A.rows:
            raise ShapeError(f"right-hand side has {B.rows} rows, expected {A.rows}")
        UB = self.snf.U @ B
        if B.cols == 0:
            return Matrix.zeros(ring, A.cols, 0)
        ub = UB.to_lists()
        if any(ub[i][j] != 0 for i in range(self.r, A.rows) for j in range(B.cols)):
            raise NoSolution("right-hand side is not in the column space")
        y = [[ring.element(0)] * B.cols for _ in range(A.cols)]
        for i in range(self.r):
            d = self.diag[i]
            for j in range(B.cols):
                v = ub[i][j]
                if ring.kind == "Z":
                    if v % d:
                        raise NoSolution("right-hand side is in the rational span only")
                    y[i][j] = v // d
                elif ring.kind == "Q":
                    y[i][j] = v / d
                else:
                    y[i][j] = v * pow(int(d), -1, ring.p) % ring.p
        return self.snf.V @ Matrix(ring, y, shape=(A.cols, B.cols))


def solve(A: Matrix, B: Matrix) -> Matrix:
    return Solver(A).solve(B)


def inverse(A: Matrix) -> Matrix:
    if A.rows != A.cols:
        raise ShapeError("inverse of a non-square matrix")
    return solve(A, Matrix.identity(A.ring, A.rows))


def is_unimodular(A: Matrix) -> bool:
    """Invertible over the ring (det a unit)."""
    if A.rows != A.cols:
        return False
    if A.rows == 0:
        return True
    d = determinant(A)
    if A.ring.kind == "Z":
        return abs(d) == 1
    return d != 0


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def from_columns(ring: Ring, columns: Iterable[Sequence], rows: int) -> Matrix:
    cols = list(columns)
    if not cols:
        return Matrix.zeros(ring, rows, 0)
    return Matrix(ring, [[c[i] for c in cols] for i in range(rows)], shape=(rows, len(cols)))
