"""Finite categories given by explicit composition tables, their nerves,
and diagrams of chain complexes over them.

``composition[(f, g)]`` is the composite g o f ("f, then g").  Nerve
simplices of level n are chains (m_1, ..., m_n) with target(m_i) =
source(m_{i+1}); they are enumerated in lexicographic order of morphism
names, and level-0 simplices are the objects in name order.  That order
is the basis order of every bar and cobar level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

from .chain import ChainComplex, ChainMap
from .errors import InvalidDiagram, ShapeError
from .exact_linalg import Matrix


@dataclass(frozen=True, eq=False)
class FiniteCategory:
    objects: Sequence[str]
    morphisms: Mapping[str, tuple[str, str]]
    identities: Mapping[str, str]
    composition: Mapping[tuple[str, str], str]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "morphisms", {m: tuple(st) for m, st in self.morphisms.items()})
        object.__setattr__(self, "identities", dict(self.identities))
        object.__setattr__(self, "composition", dict(self.composition))
        problems = self.violations()
        if problems:
            raise ShapeError(f"category {self.name or ''}: " + "; ".join(problems[:5]))

    def source(self, m: str) -> str:
        return self.morphisms[m][0]

    def target(self, m: str) -> str:
        return self.morphisms[m][1]

    def compose(self, f: str, g: str) -> str:
        """g o f."""
        return self.composition[(f, g)]

    def is_identity(self, m: str) -> bool:
        return self.identities.get(self.source(m)) == m

    def violations(self) -> list[str]:
        out = []
        objs = set(self.objects)
        if len(objs) != len(self.objects):
            out.append("duplicate object names")
        for m, (s, t) in self.morphisms.items():
            if s not in objs or t not in objs:
                out.append(f"morphism {m} has unknown endpoint")
        for x in self.objects:
            i = self.identities.get(x)
            if i is None or self.morphisms.get(i) != (x, x):
                out.append(f"object {x} lacks an identity endomorphism")
        if out:
            return out
        for f, (s, t) in self.morphisms.items():
            for g, (s2, t2) in self.morphisms.items():
                if s2 != t:
                    if (f, g) in self.composition:
                        out.append(f"composite of non-composable pair ({f}, {g})")
                    continue
                c = self.composition.get((f, g))
                if c is None:
                    out.append(f"composite of ({f}, {g}) missing")
                elif self.morphisms.get(c) != (s, t2):
                    out.append(f"composite of ({f}, {g}) = {c} has wrong endpoints")
        if out:
            return out
        for f, (s, t) in self.morphisms.items():
            if self.compose(self.identities[s], f) != f or self.compose(f, self.identities[t]) != f:
                out.append(f"identity law fails for {f}")
        for f in self.morphisms:
            for g in self.morphisms:
                if self.source(g) != self.target(f):
                    continue
                fg = self.compose(f, g)
                for h in self.morphisms:
                    if self.source(h) != self.target(g):
                        continue
                    if self.compose(fg, h) != self.compose(f, self.compose(g, h)):
                        out.append(f"composition not associative on ({f}, {g}, {h})")
        return out

    @cached_property
    def _by_source(self) -> dict[str, list[str]]:
        out = {x: [] for x in self.objects}
        for m in sorted(self.morphisms):
            out[self.source(m)].append(m)
        return out

    def nonidentity(self) -> list[str]:
        return sorted(m for m in self.morphisms if not self.is_identity(m))


@dataclass(frozen=True)
class NerveSimplex:
    """A chain of composable morphisms; level 0 simplices carry only an object."""

    morphisms: tuple[str, ...]
    start: str
    end: str

    @property
    def level(self) -> int:
        return len(self.morphisms)

    def __str__(self):
        return "(" + ",".join(self.morphisms) + ")" if self.morphisms else self.start


def nerve_simplices(I: FiniteCategory, n: int) -> list[NerveSimplex]:
    if n < 0:
        raise ShapeError("nerve level must be nonnegative")
    if n == 0:
        return [NerveSimplex((), x, x) for x in sorted(I.objects)]
    out = []

    def extend(chain, end):
        if len(chain) == n:
            out.append(NerveSimplex(tuple(chain), I.source(chain[0]), end))
            return
        for m in I._by_source[end]:
            extend(chain + [m], I.target(m))

    for m in sorted(I.morphisms):
        extend([m], I.target(m))
    return out


def nondegenerate_nerve_simplices(I: FiniteCategory, n: int) -> list[NerveSimplex]:
    return [s for s in nerve_simplices(I, n) if not any(I.is_identity(m) for m in s.morphisms)]


def nerve_face(I: FiniteCategory, s: NerveSimplex, i: int) -> NerveSimplex:
    ms, n = s.morphisms, s.level
    if n == 0 or not 0 <= i <= n:
        raise ShapeError(f"face d_{i} undefined on a level-{n} nerve simplex")
    if n == 1:
        x = I.target(ms[0]) if i == 0 else I.source(ms[0])
        return NerveSimplex((), x, x)
    if i == 0:
        return NerveSimplex(ms[1:], I.target(ms[0]), s.end)
    if i == n:
        return NerveSimplex(ms[:-1], s.start, I.source(ms[-1]))
    comp = I.compose(ms[i - 1], ms[i])
    return NerveSimplex(ms[: i - 1] + (comp,) + ms[i + 1:], s.start, s.end)


def nerve_degeneracy(I: FiniteCategory, s: NerveSimplex, i: int) -> NerveSimplex:
    n = s.level
    if not 0 <= i <= n:
        raise ShapeError(f"degeneracy s_{i} undefined on a level-{n} nerve simplex")
    obj = s.start if i == 0 else I.target(s.morphisms[i - 1])
    ms = s.morphisms[:i] + (I.identities[obj],) + s.morphisms[i:]
    return NerveSimplex(ms, s.start, s.end)


def is_loop_free(I: FiniteCategory) -> bool:
    return loop_witness(I) is None


def loop_witness(I: FiniteCategory) -> str | None:
    """A nonidentity endomorphism or a cycle of nonidentity morphisms, if any."""
    for m in I.nonidentity():
        if I.source(m) == I.target(m):
            return f"nonidentity endomorphism {m} of {I.source(m)}"
    adj = {x: sorted({I.target(m) for m in I.nonidentity() if I.source(m) == x}) for x in I.objects}
    color = {x: 0 for x in I.objects}

    def dfs(x, path):
        color[x] = 1
        for y in adj[x]:
            if color[y] == 1:
                return " -> ".join(path + [y])
            if color[y] == 0:
                found = dfs(y, path + [y])
                if found:
                    return found
        color[x] = 2
        return None

    for x in sorted(I.objects):
        if color[x] == 0:
            found = dfs(x, [x])
            if found:
                return f"cycle of nonidentity morphisms {found}"
    return None


def nondegenerate_dimension(I: FiniteCategory) -> int:
    """Top level with a nondegenerate nerve simplex (loop-free categories only)."""
    if not is_loop_free(I):
        raise ShapeError("nerve of a category with loops has nondegenerate simplices in every dimension")
    n = 0
    while nondegenerate_nerve_simplices(I, n + 1):
        n += 1
    return n


def nerve_as_simplicial_set(I: FiniteCategory, d_max: int | None = None):
    """The nerve as a FiniteSimplicialSet (truncated at d_max when I has loops)."""
    from .simplicial_set import FiniteSimplicialSet

    if d_max is None:
        d_max = nondegenerate_dimension(I)
        complete = True
    else:
        complete = False
    names = lambda s: str(s)  # noqa: E731
    simplices, faces = {}, {}
    for n in range(d_max + 1):
        simplices[n] = [names(s) for s in nondegenerate_nerve_simplices(I, n)]
        if n == 0:
            continue
        for s in nondegenerate_nerve_simplices(I, n):
            fs = []
            for i in range(n + 1):
                t = nerve_face(I, s, i)
                word = tuple(j for j in reversed(range(t.level)) if I.is_identity(t.morphisms[j]))
                core = tuple(m for m in t.morphisms if not I.is_identity(m))
                y = NerveSimplex(core, t.start, t.end) if core else NerveSimplex((), t.start, t.start)
                fs.append((word, names(y)))
            faces[names(s)] = fs
    return FiniteSimplicialSet(simplices, faces, None if complete else d_max, f"N({I.name})")


# ---------------------------------------------------------------------------
# standard categories


def _category(objects, arrows, name) -> FiniteCategory:
    """Category from objects and nonidentity arrows {name: (src, tgt)}, when no
    two nonidentity arrows are composable (posets of length 1)."""
    morphisms = {f"id_{x}": (x, x) for x in objects}
    morphisms.update(arrows)
    identities = {x: f"id_{x}" for x in objects}
    comp = {}
    for f, (s, t) in morphisms.items():
        for g, (s2, t2) in morphisms.items():
            if s2 != t:
                continue
            if f == identities[s]:
                comp[(f, g)] = g
            elif g == identities[t]:
                comp[(f, g)] = f
            else:
                raise ShapeError(f"composite of {f} and {g} must be named explicitly")
    return FiniteCategory(objects, morphisms, identities, comp, name)


def terminal_category() -> FiniteCategory:
    return _category(["*"], {}, "pt")


def span_category() -> FiniteCategory:
    """a <-u- c -v-> b."""
    return _category(["a", "b", "c"], {"u": ("c", "a"), "v": ("c", "b")}, "span")


def cospan_category() -> FiniteCategory:
    """a -u-> c <-v- b."""
    return _category(["a", "b", "c"], {"u": ("a", "c"), "v": ("b", "c")}, "cospan")


def arrow_category() -> FiniteCategory:
    """The poset [1] = {0 -> 1}."""
    return _category(["0", "1"], {"f": ("0", "1")}, "[1]")


def poset_chain(n: int) -> FiniteCategory:
    """The poset [n]; morphism i<=j is named ``"ij"``-style ``"i_j"``."""
    objects = [str(i) for i in range(n + 1)]
    morphisms, identities, comp = {}, {}, {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            morphisms[f"{i}_{j}"] = (str(i), str(j))
        identities[str(i)] = f"{i}_{i}"
    for i in range(n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                comp[(f"{i}_{j}", f"{j}_{k}")] = f"{i}_{k}"
    return FiniteCategory(objects, morphisms, identities, comp, f"[{n}]")


def cyclic_group_category(m: int) -> FiniteCategory:
    """One object with morphisms e, g, g2, ..., g{m-1} composing as Z/m."""
    names = ["e"] + ["g" if k == 1 else f"g{k}" for k in range(1, m)]
    morphisms = {x: ("*", "*") for x in names}
    comp = {(names[a], names[b]): names[(a + b) % m] for a in range(m) for b in range(m)}
    return FiniteCategory(["*"], morphisms, {"*": "e"}, comp, f"BZ/{m}")


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: tuple
    message: str


@dataclass(frozen=True, eq=False)
class Diagram:
    index: FiniteCategory
    on_objects: Mapping[str, ChainComplex]
    on_morphisms: Mapping[str, ChainMap] = field(default_factory=dict)

    def __call__(self, x: str) -> ChainComplex:
        return self.on_objects[x]

    def map(self, m: str) -> ChainMap:
        return self.on_morphisms[m]

    @property
    def ring(self):
        return next(iter(self.on_objects.values())).ring

    def min_degree(self) -> int | None:
        degs = [C.bounds()[0] for C in self.on_objects.values() if not C.is_zero()]
        return min(degs) if degs else None

    def max_degree(self) -> int | None:
        degs = [C.bounds()[1] for C in self.on_objects.values() if not C.is_zero()]
        return max(degs) if degs else None


def validate(F: Diagram) -> list[Violation]:
    """Every functoriality failure of F, each with its witness; empty when F is a functor."""
    I = F.index
    out = []
    for x in I.objects:
        if x not in F.on_objects:
            out.append(Violation("missing-object", (x,), f"no complex assigned to object {x}"))
    for m in I.morphisms:
        if m not in F.on_morphisms:
            out.append(Violation("missing-morphism", (m,), f"no chain map assigned to morphism {m}"))
    if out:
        return out
    rings = {C.ring for C in F.on_objects.values()}
    if len(rings) > 1:
        out.append(Violation("ring", (), "values over different rings"))
    for m, (s, t) in I.morphisms.items():
        f = F.on_morphisms[m]
        if f.source != F.on_objects[s] or f.target != F.on_objects[t]:
            out.append(Violation("endpoints", (m,), f"F({m}) does not go F({s}) -> F({t})"))
        elif f.noncommuting_degrees():
            out.append(Violation("chain-map", (m,), f"F({m}) is not a chain map"))
    if out:
        return out
    for x in I.objects:
        i = I.identities[x]
        if F.on_morphisms[i] != F.on_objects[x].identity():
            out.append(Violation("identity", (x,), f"F({i}) is not the identity of F({x})"))
    for (f, g), c in sorted(I.composition.items()):
        if F.on_morphisms[g] @ F.on_morphisms[f] != F.on_morphisms[c]:
            out.append(Violation("composition", (f, g), f"F({g}) F({f}) != F({c})"))
    return out


def check_diagram(F: Diagram) -> None:
    bad = validate(F)
    if bad:
        raise InvalidDiagram("; ".join(v.message for v in bad))


def constant_diagram(I: FiniteCategory, C: ChainComplex) -> Diagram:
    idm = C.identity()
    return Diagram(I, {x: C for x in I.objects}, {m: idm for m in I.morphisms})


def diagram_from_arrows(I: FiniteCategory, objects: Mapping[str, ChainComplex], arrows: Mapping[str, ChainMap]) -> Diagram:
    """Fill in identities and composites from the given nonidentity arrows."""
    maps = dict(arrows)
    for x in I.objects:
        maps.setdefault(I.identities[x], objects[x].identity())
    changed = True
    while changed:
        changed = False
        for (f, g), c in I.composition.items():
            if c not in maps and f in maps and g in maps:
                maps[c] = maps[g] @ maps[f]
                changed = True
    return Diagram(I, dict(objects), maps)


@dataclass(frozen=True, eq=False)
class NaturalTransformation:
    source: Diagram
    target: Diagram
    components: Mapping[str, ChainMap]

    def violations(self) -> list[str]:
        out = []
        for m, (s, t) in self.source.index.morphisms.items():
            lhs = self.components[t] @ self.source.map(m)
            rhs = self.target.map(m) @ self.components[s]
            if lhs != rhs:
                out.append(f"naturality fails on {m}")
        return out


def zero_matrix_map(S: ChainComplex, T: ChainComplex) -> ChainMap:
    return ChainMap(S, T, {n: Matrix.zeros(S.ring, T.rank(n), S.rank(n)) for n in S.degrees})
