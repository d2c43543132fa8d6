"""Bar and cobar constructions of diagrams, realizations, and homotopy
(co)limits of diagrams of chain complexes.

Bar level n is the sum over nerve chains (m_1, ..., m_n) of F(source m_1),
blocks in nerve order.  Precomposition with the coface maps of [n] fixes
the orientation: d_0 forgets m_1 and so moves the start of the chain,
which is the only face acting through F.  The other faces compose or drop
a morphism without changing the start and act by identities.  Getting
this wrong breaks the square-zero check of the Moore complex, so the
convention checks itself.

The cobar construction is dual: level n is the sum over chains of
F(target m_n), and the last coface delta^n is the only one acting through F.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .category_diagram import (
    Diagram,
    FiniteCategory,
    NaturalTransformation,
    NerveSimplex,
    check_diagram,
    loop_witness,
    nerve_degeneracy,
    nerve_face,
    nerve_simplices,
    nondegenerate_dimension,
)
from .chain import ChainComplex, ChainMap, HomologyGroup, direct_sum, homology
from .dold_kan import (
    CosimplicialChainComplex,
    DoubleComplexMap,
    SimplicialChainComplex,
    mbar_cosimplicial,
    moore,
    normalized,
    normalized_cosimplicial,
)
from .errors import ComputationError, InfiniteAntidiagonal, InsufficientTruncation, LoopsInIndexCategory, ShapeError
from .exact_linalg import Matrix, block_matrix
from .simplicial_set import FiniteSimplicialSet
from .totalization import DegreeWindow, tot_map, tot_prod, tot_sum


def _level(blocks: list[ChainComplex]) -> ChainComplex:
    return direct_sum(blocks)


def _block_map(ring, src: list[ChainComplex], tgt: list[ChainComplex], entries, S, T) -> ChainMap:
    """Chain map with block (row, col) given by ``entries[(row, col)]``: a
    ChainMap, or None for an identity."""
    comps = {}
    for l in sorted(set(S.degrees) | set(T.degrees)):
        parts = {}
        for (r, c), m in entries.items():
            n = src[c].rank(l)
            if not n and not tgt[r].rank(l):
                continue
            parts[(r, c)] = Matrix.identity(ring, n) if m is None else m.f(l)
        comps[l] = block_matrix(ring, [X.rank(l) for X in tgt], [X.rank(l) for X in src], parts)
    return ChainMap(S, T, comps, check=False)


def _chains(I: FiniteCategory, d: int) -> list[list[NerveSimplex]]:
    return [nerve_simplices(I, n) for n in range(d + 1)]


def bar_simplicial(I: FiniteCategory, F: Diagram, d: int, check: bool = True) -> SimplicialChainComplex:
    """B_n(*, I, F) for n = 0..d."""
    if d < 0:
        raise ShapeError("bar truncation must be nonnegative")
    check_diagram(F)
    ring = F.ring
    chains = _chains(I, d)
    blocks = [[F(s.start) for s in lvl] for lvl in chains]
    levels = [_level(b) for b in blocks]
    index = [{s: i for i, s in enumerate(lvl)} for lvl in chains]
    faces = [()]
    for n in range(1, d + 1):
        fs = []
        for i in range(n + 1):
            entries = {}
            for c, s in enumerate(chains[n]):
                t = nerve_face(I, s, i)
                entries[(index[n - 1][t], c)] = F.map(s.morphisms[0]) if i == 0 else None
            fs.append(_block_map(ring, blocks[n], blocks[n - 1], entries, levels[n], levels[n - 1]))
        faces.append(tuple(fs))
    degens = []
    for n in range(d):
        ss = []
        for i in range(n + 1):
            entries = {(index[n + 1][nerve_degeneracy(I, s, i)], c): None for c, s in enumerate(chains[n])}
            ss.append(_block_map(ring, blocks[n], blocks[n + 1], entries, levels[n], levels[n + 1]))
        degens.append(tuple(ss))
    return SimplicialChainComplex(levels, faces, degens, check=check)


def cobar_cosimplicial(I: FiniteCategory, F: Diagram, d: int, check: bool = True) -> CosimplicialChainComplex:
    """C^n(*, I, F) for n = 0..d."""
    if d < 0:
        raise ShapeError("cobar truncation must be nonnegative")
    check_diagram(F)
    ring = F.ring
    chains = _chains(I, d)
    blocks = [[F(s.end) for s in lvl] for lvl in chains]
    levels = [_level(b) for b in blocks]
    index = [{s: i for i, s in enumerate(lvl)} for lvl in chains]
    cofaces = [()]
    for n in range(1, d + 1):
        fs = []
        for i in range(n + 1):
            entries = {}
            for r, s in enumerate(chains[n]):
                t = nerve_face(I, s, i)
                entries[(r, index[n - 1][t])] = F.map(s.morphisms[-1]) if i == n else None
            fs.append(_block_map(ring, blocks[n - 1], blocks[n], entries, levels[n - 1], levels[n]))
        cofaces.append(tuple(fs))
    codegens = []
    for n in range(d):
        ss = []
        for i in range(n + 1):
            entries = {(r, index[n + 1][nerve_degeneracy(I, s, i)]): None for r, s in enumerate(chains[n])}
            ss.append(_block_map(ring, blocks[n + 1], blocks[n], entries, levels[n + 1], levels[n]))
        codegens.append(tuple(ss))
    return CosimplicialChainComplex(levels, cofaces, codegens, check=check)


def bar_map(I: FiniteCategory, eta: NaturalTransformation, d: int) -> DoubleComplexMap:
    """Moore complex map B(*, I, F) -> B(*, I, G) induced by eta : F -> G."""
    F, G = eta.source, eta.target
    MF = moore(bar_simplicial(I, F, d, check=False))
    MG = moore(bar_simplicial(I, G, d, check=False))
    ring = F.ring
    comps = {}
    for n in range(d + 1):
        chains = nerve_simplices(I, n)
        for l in sorted({l for s in chains for l in F(s.start).degrees + G(s.start).degrees}):
            comps[(n, l)] = block_matrix(
                ring,
                [G(s.start).rank(l) for s in chains],
                [F(s.start).rank(l) for s in chains],
                {(i, i): eta.components[s.start].f(l) for i, s in enumerate(chains)},
            )
    return DoubleComplexMap(MF, MG, comps)


# ---------------------------------------------------------------------------
# realizations


def _min_degree(X) -> int:
    degs = X.internal_degrees()
    return min(degs) if degs else 0


def required_levels(X, w: DegreeWindow) -> int:
    """Top simplicial level that can meet total degree w.hi + 1."""
    return max(0, w.hi + 1 - _min_degree(X))


def _require(X: SimplicialChainComplex, w: DegreeWindow):
    need = required_levels(X, w)
    if X.truncation < need:
        raise InsufficientTruncation(
            f"window [{w.lo}, {w.hi}] needs simplicial levels through {need}, have {X.truncation}"
        )


def realization(X: SimplicialChainComplex, w: DegreeWindow) -> ChainComplex:
    _require(X, w)
    return tot_sum(normalized(X), w)


def fat_realization(X: SimplicialChainComplex, w: DegreeWindow) -> ChainComplex:
    _require(X, w)
    return tot_sum(moore(X), w)


def simplicial_hocolim(X: SimplicialChainComplex, w: DegreeWindow) -> ChainComplex:
    return fat_realization(X, w)


def cosimplicial_totalization(X: CosimplicialChainComplex, w: DegreeWindow) -> ChainComplex:
    """Tot^Pi of the normalized part; refused unless it provably stops inside the truncation."""
    N = normalized_cosimplicial(X)
    top = X.truncation
    if any(r for (k, _), r in N.ranks.items() if k == -top) and top > 0:
        raise InfiniteAntidiagonal(
            f"normalized part is nonzero at the truncation level {top}; Tot^Pi would need more levels"
        )
    return tot_prod(N, w)


# ---------------------------------------------------------------------------
# homotopy (co)limits


@dataclass(frozen=True, eq=False)
class HocolimResult:
    complex: ChainComplex
    window: DegreeWindow
    bar_levels_used: int
    homology: dict[int, HomologyGroup] = field(default_factory=dict)


def _window_homology(C: ChainComplex, w: DegreeWindow) -> dict[int, HomologyGroup]:
    return {n: homology(C, n) for n in w}


def _value_min_degree(F: Diagram) -> int:
    m = F.min_degree()
    return 0 if m is None else m


def hocolim(I: FiniteCategory, F: Diagram, w: DegreeWindow, certify: bool = True) -> HocolimResult:
    check_diagram(F)
    k_max = max(0, w.hi + 1 - _value_min_degree(F))
    C = tot_sum(moore(bar_simplicial(I, F, k_max)), w)
    H = _window_homology(C, w)
    if certify:
        C2 = tot_sum(moore(bar_simplicial(I, F, k_max + 1, check=False)), w)
        if _window_homology(C2, w) != H:
            raise ComputationError("homology changed with one more bar level")
    return HocolimResult(C, w, k_max, H)


def hocolim_map(I: FiniteCategory, eta: NaturalTransformation, w: DegreeWindow) -> ChainMap:
    """The map of hocolim complexes induced by a natural transformation."""
    k_max = max(0, w.hi + 1 - min(_value_min_degree(eta.source), _value_min_degree(eta.target)))
    return tot_map(bar_map(I, eta, k_max), w)


def holim(I: FiniteCategory, F: Diagram, w: DegreeWindow, certify: bool = True) -> HocolimResult:
    """Tot^Pi of the normalized cobar construction, for loop-free I only."""
    why = loop_witness(I)
    if why is not None:
        raise LoopsInIndexCategory(f"holim needs a loop-free index category; {I.name or 'I'} has a {why}")
    check_diagram(F)
    D = nondegenerate_dimension(I)
    X = cobar_cosimplicial(I, F, D + 1)
    Mb = mbar_cosimplicial(X)
    stray = [kl for kl, r in Mb.ranks.items() if r and kl[0] < -D]
    if stray:
        raise ComputationError(f"normalized cobar is nonzero above the nerve dimension {D} at {stray[0]}")
    C = tot_prod(Mb, w)
    H = _window_homology(C, w)
    if certify:
        C2 = tot_prod(mbar_cosimplicial(cobar_cosimplicial(I, F, D + 2, check=False)), w)
        if _window_homology(C2, w) != H:
            raise ComputationError("homology changed with one more cobar level")
    return HocolimResult(C, w, D + 1, H)


# ---------------------------------------------------------------------------
# linearization of simplicial sets


def linearize(K: FiniteSimplicialSet, C: ChainComplex, d: int) -> SimplicialChainComplex:
    """Level n is C summed over all n-simplices of K, degenerate ones included."""
    ring = C.ring
    simp = [K.all_simplices(n) for n in range(d + 1)]
    index = [{s: i for i, s in enumerate(lvl)} for lvl in simp]
    blocks = [[C] * len(lvl) for lvl in simp]
    levels = [_level(b) for b in blocks]
    faces = [()]
    for n in range(1, d + 1):
        fs = []
        for i in range(n + 1):
            entries = {(index[n - 1][K.face(s, i)], c): None for c, s in enumerate(simp[n])}
            fs.append(_block_map(ring, blocks[n], blocks[n - 1], entries, levels[n], levels[n - 1]))
        faces.append(tuple(fs))
    degens = []
    for n in range(d):
        ss = []
        for i in range(n + 1):
            entries = {(index[n + 1][K.degeneracy(s, i)], c): None for c, s in enumerate(simp[n])}
            ss.append(_block_map(ring, blocks[n], blocks[n + 1], entries, levels[n], levels[n + 1]))
        degens.append(tuple(ss))
    return SimplicialChainComplex(levels, faces, degens)
