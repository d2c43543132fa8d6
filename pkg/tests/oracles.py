"""Homology oracles built without bar constructions."""

from hocolim.chain import ChainComplex, ChainMap, cone, direct_sum, homology, shift
from hocolim.exact_linalg import ZZ, Matrix, block_matrix


def periodic_resolution(m: int, top: int) -> ChainComplex:
    """Z <-0- Z <-m- Z <-0- Z <-m- ... through degree top: H_*(Z/m; Z)."""
    ranks = {n: 1 for n in range(top + 1)}
    diffs = {n: Matrix(ZZ, [[0 if n % 2 else m]]) for n in range(1, top + 1)}
    return ChainComplex(ZZ, ranks, diffs)


def _pair(f: ChainMap, g: ChainMap, sign: int) -> ChainMap:
    """A -> B (+) C, a |-> (f a, sign * g a)."""
    A, B, C = f.source, f.target, g.target
    T = direct_sum([B, C])
    comps = {
        n: block_matrix(ZZ, [B.rank(n), C.rank(n)], [A.rank(n)], {(0, 0): f.f(n), (1, 0): g.f(n).scale(sign)})
        for n in A.degrees
    }
    return ChainMap(A, T, comps)


def homotopy_pushout(f: ChainMap, g: ChainMap) -> ChainComplex:
    """B <-f- A -g-> C glued: cone(A -> B (+) C)."""
    return cone(_pair(f, g, -1))


def homotopy_pullback(f: ChainMap, g: ChainMap) -> ChainComplex:
    """B -f-> D <-g- C: the desuspended cone of B (+) C -> D."""
    B, C, D = f.source, g.source, f.target
    S = direct_sum([B, C])
    comps = {
        n: block_matrix(ZZ, [D.rank(n)], [B.rank(n), C.rank(n)], {(0, 0): f.f(n), (0, 1): g.f(n).scale(-1)})
        for n in S.degrees
    }
    return shift(cone(ChainMap(S, D, comps)), -1)


def groups(C: ChainComplex, degrees) -> list[str]:
    return [str(homology(C, n)) for n in degrees]
