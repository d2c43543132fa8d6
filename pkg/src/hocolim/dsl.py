"""A small declarative language for rings, complexes, maps, categories,
diagrams and simplicial objects, with a command line at the end.

Example::

    ring Z
    complex C { 0: rank 1 }
    complex D { 0: rank 1  1: rank 1  d 1: [[2]] }
    map f : C -> C { 0: [[2]] }
    category I = span
    diagram F over I { a: C  b: C  c: C  u: f  v: f }
    cmd hocolim F 0 3

Whitespace and newlines are insignificant and ``#`` starts a comment.
Matrices are row-major, ``[[1, 2], [3, 4]]``; a map component between
rank-0 pieces, or a component left out, is zero.  In a category,
``compose f g = h`` declares h = g o f ("f, then g"); composites with
identities are filled in.  Identities default to ``id_<object>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .category_diagram import (
    Diagram,
    FiniteCategory,
    arrow_category,
    check_diagram,
    constant_diagram,
    cospan_category,
    cyclic_group_category,
    diagram_from_arrows,
    poset_chain,
    span_category,
    terminal_category,
)
from .chain import ChainComplex, ChainMap
from .errors import DSLSyntaxError, ResolutionError, ShapeError, ValidationError
from .exact_linalg import GF, QQ, ZZ, Matrix, Ring
from .simplicial_set import FiniteSimplicialSet, boundary, circle, horn, point, simplex

KEYWORDS = {"ring", "matrix", "complex", "map", "category", "diagram", "sset", "simplicial", "cmd"}
COMMANDS = {"homology": 3, "hocolim": 3, "holim": 3, "realize": 3, "bar": 2, "snf": 1}

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<arrow>->)|(?P<int>-?\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<punct>[{}\[\](),:=/])"
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    out, line, start, pos = [], 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise DSLSyntaxError("unexpected character", line, pos - start + 1, text[pos])
        kind = m.lastgroup
        if kind == "nl":
            line, start = line + 1, m.end()
        elif kind not in ("ws", "comment"):
            out.append(Token(kind if kind != "punct" else m.group(), m.group(), line, pos - start + 1))
        pos = m.end()
    out.append(Token("eof", "", line, pos - start + 1))
    return out


# ---------------------------------------------------------------------------
# syntax tree

Entry = Any  # int or Fraction
MatrixLit = tuple[tuple[Entry, ...], ...]


@dataclass(frozen=True)
class MatrixDecl:
    name: str
    rows: MatrixLit


@dataclass(frozen=True)
class ComplexDecl:
    name: str
    ranks: tuple[tuple[int, int], ...]
    diffs: tuple[tuple[int, MatrixLit], ...]


@dataclass(frozen=True)
class MapDecl:
    name: str
    source: str
    target: str
    components: tuple[tuple[int, MatrixLit], ...]


@dataclass(frozen=True)
class CategoryDecl:
    name: str
    builtin: tuple | None = None
    objects: tuple[str, ...] = ()
    morphisms: tuple[tuple[str, str, str], ...] = ()
    identities: tuple[tuple[str, str], ...] = ()
    composites: tuple[tuple[str, str, str], ...] = ()


@dataclass(frozen=True)
class DiagramDecl:
    name: str
    category: str
    constant: str | None = None
    assignments: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class SSetDecl:
    name: str
    builtin: tuple | None = None
    simplices: tuple[tuple[int, tuple[str, ...]], ...] = ()
    faces: tuple[tuple[str, tuple[tuple[tuple[int, ...], str], ...]], ...] = ()


@dataclass(frozen=True)
class SimplicialDecl:
    name: str
    kind: str  # bar | linearize | constant
    args: tuple[str, ...]


@dataclass(frozen=True)
class Command:
    name: str
    args: tuple


Decl = MatrixDecl | ComplexDecl | MapDecl | CategoryDecl | DiagramDecl | SSetDecl | SimplicialDecl


@dataclass(frozen=True)
class Manifest:
    ring: Ring
    decls: tuple
    command: Command | None = None
    positions: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def names(self) -> dict[str, Decl]:
        return {d.name: d for d in self.decls}


# ---------------------------------------------------------------------------
# parser

_BUILTIN_CATEGORIES = {"terminal": 0, "span": 0, "cospan": 0, "arrow": 0, "poset": 1, "cyclic": 1}
_BUILTIN_SSETS = {"point": 0, "circle": 0, "simplex": 1, "boundary": 1, "horn": 2}


class _Parser:
    def __init__(self, text: str):
        self.toks = tokenize(text)
        self.i = 0
        self.positions: dict[str, tuple[int, int]] = {}

    # token helpers

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def error(self, expected: str, tok: Token | None = None):
        t = tok or self.tok
        return DSLSyntaxError(f"expected {expected}", t.line, t.col, t.text or "end of input")

    def take(self, kind: str, expected: str | None = None) -> Token:
        t = self.tok
        if t.kind != kind:
            raise self.error(expected or repr(kind))
        self.i += 1
        return t

    def at(self, kind: str, text: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (text is None or t.text == text)

    def accept(self, kind: str, text: str | None = None) -> Token | None:
        if self.at(kind, text):
            t = self.tok
            self.i += 1
            return t
        return None

    def keyword(self, word: str):
        if not self.accept("ident", word):
            raise self.error(f"'{word}'")

    def ident(self, what: str = "a name") -> str:
        t = self.tok
        if t.kind != "ident" or t.text in KEYWORDS:
            raise self.error(what)
        self.i += 1
        return t.text

    def integer(self, what: str = "an integer") -> int:
        return int(self.take("int", what).text)

    def declare(self, name: str, tok: Token):
        if name in self.positions:
            line, col = self.positions[name]
            raise DSLSyntaxError(f"name {name!r} already declared at line {line}, column {col}", tok.line, tok.col, name)
        self.positions[name] = (tok.line, tok.col)

    # grammar

    def manifest(self) -> Manifest:
        ring = ZZ
        if self.accept("ident", "ring"):
            ring = self.ring()
        decls, command = [], None
        while not self.at("eof"):
            t = self.tok
            if t.kind != "ident" or t.text not in KEYWORDS - {"ring"}:
                raise self.error("a declaration (matrix, complex, map, category, diagram, sset, simplicial) or cmd")
            if t.text == "cmd":
                if command is not None:
                    raise DSLSyntaxError("only one cmd line is allowed", t.line, t.col, "cmd")
                self.i += 1
                self.positions["<cmd>"] = (t.line, t.col)
                command = self.command()
                continue
            self.i += 1
            name_tok = self.tok
            decl = getattr(self, "decl_" + t.text)()
            self.declare(decl.name, name_tok)
            decls.append(decl)
        return Manifest(ring, tuple(decls), command, dict(self.positions))

    def ring(self) -> Ring:
        t = self.tok
        name = self.ident("a ring (Z, Q or F<p>)")
        if name == "Z":
            return ZZ
        if name == "Q":
            return QQ
        m = re.fullmatch(r"F(\d+)", name)
        if m:
            try:
                return GF(int(m.group(1)))
            except ValueError:
                pass
        raise DSLSyntaxError("expected a ring (Z, Q or F<p> with p prime)", t.line, t.col, name)

    def entry(self) -> Entry:
        num = self.integer("a matrix entry")
        if self.accept("/"):
            den_tok = self.tok
            den = self.integer("a denominator")
            if den == 0:
                raise DSLSyntaxError("zero denominator", den_tok.line, den_tok.col, "0")
            return Fraction(num, den)
        return num

    def matrix(self) -> MatrixLit:
        self.take("[", "'[' to open a matrix")
        rows = []
        if self.accept("]"):
            return ()
        while True:
            self.take("[", "'[' to open a matrix row")
            row = []
            if not self.at("]"):
                row.append(self.entry())
                while self.accept(","):
                    row.append(self.entry())
            self.take("]", "']' or ','")
            rows.append(tuple(row))
            if not self.accept(","):
                break
        self.take("]", "']' to close the matrix")
        return tuple(rows)

    def decl_matrix(self) -> MatrixDecl:
        name = self.ident()
        self.take("=", "'='")
        return MatrixDecl(name, self.matrix())

    def decl_complex(self) -> ComplexDecl:
        name = self.ident()
        self.take("{", "'{'")
        ranks, diffs = {}, {}
        while not self.accept("}"):
            if self.accept("ident", "d"):
                t = self.tok
                n = self.integer("a degree")
                if n in diffs:
                    raise DSLSyntaxError(f"differential d {n} given twice", t.line, t.col, str(n))
                self.take(":", "':'")
                diffs[n] = self.matrix()
            else:
                t = self.tok
                n = self.integer("a degree, 'd', or '}'")
                if n in ranks:
                    raise DSLSyntaxError(f"rank in degree {n} given twice", t.line, t.col, str(n))
                self.take(":", "':'")
                self.keyword("rank")
                ranks[n] = self.integer("a rank")
        return ComplexDecl(name, tuple(sorted(ranks.items())), tuple(sorted(diffs.items())))

    def decl_map(self) -> MapDecl:
        name = self.ident()
        self.take(":", "':'")
        src = self.ident("a source complex")
        self.take("arrow", "'->'")
        tgt = self.ident("a target complex")
        comps = {}
        if self.accept("{"):
            while not self.accept("}"):
                t = self.tok
                n = self.integer("a degree or '}'")
                if n in comps:
                    raise DSLSyntaxError(f"component in degree {n} given twice", t.line, t.col, str(n))
                self.take(":", "':'")
                comps[n] = self.matrix()
        return MapDecl(name, src, tgt, tuple(sorted(comps.items())))

    def decl_category(self) -> CategoryDecl:
        name = self.ident()
        if self.accept("="):
            t = self.tok
            kind = self.ident("a built-in category")
            if kind not in _BUILTIN_CATEGORIES:
                raise DSLSyntaxError(
                    "expected a built-in category (" + ", ".join(sorted(_BUILTIN_CATEGORIES)) + ")", t.line, t.col, kind
                )
            args = tuple(self.integer("a size") for _ in range(_BUILTIN_CATEGORIES[kind]))
            return CategoryDecl(name, (kind,) + args)
        self.take("{", "'{' or '='")
        objects, morphisms, identities, composites = [], [], [], []
        while not self.accept("}"):
            t = self.tok
            word = self.ident("objects, morphism, identity, compose or '}'")
            if word == "objects":
                while self.at("ident") and self.tok.text not in ("objects", "morphism", "identity", "compose"):
                    objects.append(self.ident())
            elif word == "morphism":
                m = self.ident("a morphism name")
                self.take(":", "':'")
                s = self.ident("a source object")
                self.take("arrow", "'->'")
                morphisms.append((m, s, self.ident("a target object")))
            elif word == "identity":
                x = self.ident("an object")
                identities.append((x, self.ident("an identity morphism name")))
            elif word == "compose":
                f = self.ident("a morphism")
                g = self.ident("a morphism")
                self.take("=", "'='")
                composites.append((f, g, self.ident("a morphism")))
            else:
                raise self.error("objects, morphism, identity, compose or '}'", t)
        return CategoryDecl(name, None, tuple(objects), tuple(morphisms), tuple(identities), tuple(composites))

    def decl_diagram(self) -> DiagramDecl:
        name = self.ident()
        if self.accept("="):
            self.keyword("constant")
            cat = self.ident("a category")
            return DiagramDecl(name, cat, self.ident("a complex"))
        self.keyword("over")
        cat = self.ident("a category")
        self.take("{", "'{'")
        assignments = []
        while not self.accept("}"):
            num = self.accept("int")
            key = num.text if num else self.ident("an object or morphism of the category, or '}'")
            self.take(":", "':'")
            assignments.append((key, self.ident("a complex or map")))
        return DiagramDecl(name, cat, None, tuple(assignments))

    def decl_sset(self) -> SSetDecl:
        name = self.ident()
        if self.accept("="):
            t = self.tok
            kind = self.ident("a built-in simplicial set")
            if kind not in _BUILTIN_SSETS:
                raise DSLSyntaxError(
                    "expected a built-in simplicial set (" + ", ".join(sorted(_BUILTIN_SSETS)) + ")", t.line, t.col, kind
                )
            args = tuple(self.integer("a dimension") for _ in range(_BUILTIN_SSETS[kind]))
            return SSetDecl(name, (kind,) + args)
        self.take("{", "'{' or '='")
        simplices, faces = {}, []
        while not self.accept("}"):
            if self.accept("ident", "face"):
                x = self.ident("a simplex")
                self.take(":", "':'")
                fs = [self.face()]
                while self.accept(","):
                    fs.append(self.face())
                faces.append((x, tuple(fs)))
            else:
                n = self.integer("a dimension, 'face', or '}'")
                self.take(":", "':'")
                names = []
                while self.at("ident") and self.tok.text != "face":
                    names.append(self.ident())
                simplices.setdefault(n, []).extend(names)
        return SSetDecl(name, None, tuple((n, tuple(v)) for n, v in sorted(simplices.items())), tuple(faces))

    def face(self) -> tuple[tuple[int, ...], str]:
        word = []
        while self.at("ident") and re.fullmatch(r"s\d+", self.tok.text):
            word.append(int(self.ident()[1:]))
        return tuple(word), self.ident("a face simplex")

    def decl_simplicial(self) -> SimplicialDecl:
        name = self.ident()
        self.take("=", "'='")
        t = self.tok
        kind = self.ident("bar, linearize or constant")
        arity = {"bar": 1, "linearize": 2, "constant": 1}
        if kind not in arity:
            raise DSLSyntaxError("expected bar, linearize or constant", t.line, t.col, kind)
        return SimplicialDecl(name, kind, tuple(self.ident() for _ in range(arity[kind])))

    def command(self) -> Command:
        t = self.tok
        name = self.ident("a command")
        if name not in COMMANDS:
            raise DSLSyntaxError("expected a command (" + ", ".join(sorted(COMMANDS)) + ")", t.line, t.col, name)
        target = self.ident("a target name")
        args = tuple(self.integer("an integer argument") for _ in range(COMMANDS[name] - 1))
        return Command(name, (target,) + args)


def parse(text: str) -> Manifest:
    """Parse and resolve; the returned Manifest is fully validated."""
    m = parse_syntax(text)
    resolve(m)
    return m


def parse_syntax(text: str) -> Manifest:
    p = _Parser(text)
    m = p.manifest()
    p.take("eof", "end of input")
    return m


# ---------------------------------------------------------------------------
# resolution


def _culprit(m: Manifest, name: str) -> str:
    pos = m.positions.get(name)
    return f"{name!r} (line {pos[0]}, column {pos[1]})" if pos else repr(name)


def _matrix(ring: Ring, rows: MatrixLit, shape: tuple[int, int], what: str) -> Matrix:
    r, c = shape
    if not rows and (r == 0 or c == 0):
        return Matrix.zeros(ring, r, c)
    got = (len(rows), len(rows[0]) if rows else 0)
    if got != shape or any(len(x) != c for x in rows):
        raise ShapeError(f"{what} must be {r}x{c}, got {got[0]}x{got[1]}")
    try:
        return Matrix(ring, [[ring.element(x) for x in row] for row in rows], shape=shape)
    except ValueError as e:
        raise ShapeError(f"{what}: {e}") from None


@dataclass
class Environment:
    ring: Ring
    matrices: dict[str, Matrix] = field(default_factory=dict)
    complexes: dict[str, ChainComplex] = field(default_factory=dict)
    maps: dict[str, ChainMap] = field(default_factory=dict)
    categories: dict[str, FiniteCategory] = field(default_factory=dict)
    diagrams: dict[str, Diagram] = field(default_factory=dict)
    ssets: dict[str, FiniteSimplicialSet] = field(default_factory=dict)
    simplicial: dict[str, SimplicialDecl] = field(default_factory=dict)

    def lookup(self, table: str, name: str, m: Manifest, what: str):
        d = getattr(self, table)
        if name not in d:
            raise ResolutionError(f"undefined {what} {name!r}")
        return d[name]


def _builtin_category(spec: tuple) -> FiniteCategory:
    kind, *args = spec
    return {
        "terminal": terminal_category,
        "span": span_category,
        "cospan": cospan_category,
        "arrow": arrow_category,
        "poset": poset_chain,
        "cyclic": cyclic_group_category,
    }[kind](*args)


def _builtin_sset(spec: tuple) -> FiniteSimplicialSet:
    kind, *args = spec
    return {"point": point, "circle": circle, "simplex": simplex, "boundary": boundary, "horn": horn}[kind](*args)


def _category(d: CategoryDecl) -> FiniteCategory:
    if d.builtin is not None:
        return _builtin_category(d.builtin)
    objs = list(d.objects)
    ids = {x: f"id_{x}" for x in objs}
    for x, i in d.identities:
        if x not in ids:
            raise ResolutionError(f"category {d.name}: identity for unknown object {x!r}")
        ids[x] = i
    morphisms = {i: (x, x) for x, i in ids.items()}
    for m, s, t in d.morphisms:
        if m in morphisms:
            raise ShapeError(f"category {d.name}: morphism {m!r} declared twice")
        for x in (s, t):
            if x not in ids:
                raise ResolutionError(f"category {d.name}: morphism {m!r} uses unknown object {x!r}")
        morphisms[m] = (s, t)
    comp = {}
    for f, (s, t) in morphisms.items():
        for g, (s2, t2) in morphisms.items():
            if s2 != t:
                continue
            if f == ids[s]:
                comp[(f, g)] = g
            elif g == ids[t]:
                comp[(f, g)] = f
    for f, g, h in d.composites:
        for x in (f, g, h):
            if x not in morphisms:
                raise ResolutionError(f"category {d.name}: compose uses unknown morphism {x!r}")
        comp[(f, g)] = h
    return FiniteCategory(objs, morphisms, ids, comp, d.name)


def resolve(m: Manifest) -> Environment:
    """Build every declared object, checking names, shapes and functoriality."""
    ring = m.ring
    env = Environment(ring)
    for d in m.decls:
        where = _culprit(m, d.name)
        try:
            _resolve_one(env, m, d, ring)
        except ValidationError as e:
            raise type(e)(f"{where}: {e}") from None
    if m.command is not None:
        try:
            _check_command(env, m, m.command)
        except ValidationError as e:
            pos = m.positions.get("<cmd>")
            where = f"cmd (line {pos[0]}, column {pos[1]})" if pos else "cmd"
            raise type(e)(f"{where}: {e}") from None
    return env


def _resolve_one(env: Environment, m: Manifest, d, ring: Ring):
    if isinstance(d, MatrixDecl):
        rows = d.rows
        shape = (len(rows), len(rows[0]) if rows else 0)
        env.matrices[d.name] = _matrix(ring, rows, shape, f"matrix {d.name}")
    elif isinstance(d, ComplexDecl):
        ranks = dict(d.ranks)
        diffs = {}
        for n, rows in d.diffs:
            diffs[n] = _matrix(ring, rows, (ranks.get(n - 1, 0), ranks.get(n, 0)), f"d {n}")
        env.complexes[d.name] = ChainComplex(ring, ranks, diffs)
    elif isinstance(d, MapDecl):
        S = env.lookup("complexes", d.source, m, "complex")
        T = env.lookup("complexes", d.target, m, "complex")
        comps = {n: _matrix(ring, rows, (T.rank(n), S.rank(n)), f"component {n}") for n, rows in d.components}
        for n in S.degrees:
            comps.setdefault(n, Matrix.zeros(ring, T.rank(n), S.rank(n)))
        f = ChainMap(S, T, comps, check=False)
        bad = f.noncommuting_degrees()
        if bad:
            raise ShapeError(f"not a chain map: d f != f d in degree {bad[0]}")
        env.maps[d.name] = f
    elif isinstance(d, CategoryDecl):
        env.categories[d.name] = _category(d)
    elif isinstance(d, DiagramDecl):
        I = env.lookup("categories", d.category, m, "category")
        if d.constant is not None:
            F = constant_diagram(I, env.lookup("complexes", d.constant, m, "complex"))
        else:
            objs, arrows = {}, {}
            for key, val in d.assignments:
                if key in I.objects:
                    objs[key] = env.lookup("complexes", val, m, "complex")
                elif key in I.morphisms:
                    arrows[key] = env.lookup("maps", val, m, "map")
                else:
                    raise ResolutionError(f"{key!r} is neither an object nor a morphism of {d.category}")
            missing = [x for x in I.objects if x not in objs]
            if missing:
                raise ResolutionError(f"no complex assigned to object {missing[0]!r}")
            F = diagram_from_arrows(I, objs, arrows)
        check_diagram(F)
        env.diagrams[d.name] = F
    elif isinstance(d, SSetDecl):
        if d.builtin is not None:
            env.ssets[d.name] = _builtin_sset(d.builtin)
        else:
            env.ssets[d.name] = FiniteSimplicialSet(
                {n: list(v) for n, v in d.simplices}, {x: list(fs) for x, fs in d.faces}, None, d.name
            )
    elif isinstance(d, SimplicialDecl):
        if d.kind == "bar":
            env.lookup("diagrams", d.args[0], m, "diagram")
        elif d.kind == "linearize":
            env.lookup("ssets", d.args[0], m, "simplicial set")
            env.lookup("complexes", d.args[1], m, "complex")
        else:
            env.lookup("complexes", d.args[0], m, "complex")
        env.simplicial[d.name] = d


_TARGET_TABLE = {
    "homology": ("complexes", "complex"),
    "hocolim": ("diagrams", "diagram"),
    "holim": ("diagrams", "diagram"),
    "realize": ("simplicial", "simplicial object"),
    "bar": ("diagrams", "diagram"),
    "snf": ("matrices", "matrix"),
}


def _check_command(env: Environment, m: Manifest, c: Command):
    table, what = _TARGET_TABLE[c.name]
    env.lookup(table, c.args[0], m, what)
    if c.name in ("homology", "hocolim", "holim", "realize") and c.args[1] > c.args[2]:
        raise ShapeError(f"cmd {c.name}: empty window [{c.args[1]}, {c.args[2]}]")
    if c.name == "bar" and c.args[1] < 0:
        raise ShapeError("cmd bar: level must be nonnegative")


# ---------------------------------------------------------------------------
# serialization


def _entry(x) -> str:
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def _mat(rows: MatrixLit) -> str:
    return "[" + ", ".join("[" + ", ".join(_entry(x) for x in r) + "]" for r in rows) + "]"


def serialize(m: Manifest) -> str:
    """Canonical text; ``parse_syntax(serialize(m)) == m``."""
    out = [f"ring {m.ring}"]
    for d in m.decls:
        if isinstance(d, MatrixDecl):
            out.append(f"matrix {d.name} = {_mat(d.rows)}")
        elif isinstance(d, ComplexDecl):
            body = [f"  {n}: rank {r}" for n, r in d.ranks] + [f"  d {n}: {_mat(x)}" for n, x in d.diffs]
            out.append(f"complex {d.name} {{\n" + "\n".join(body) + ("\n" if body else "") + "}")
        elif isinstance(d, MapDecl):
            body = [f"  {n}: {_mat(x)}" for n, x in d.components]
            out.append(f"map {d.name} : {d.source} -> {d.target} {{\n" + "\n".join(body) + ("\n" if body else "") + "}")
        elif isinstance(d, CategoryDecl):
            if d.builtin is not None:
                out.append(f"category {d.name} = " + " ".join(map(str, d.builtin)))
            else:
                body = []
                if d.objects:
                    body.append("  objects " + " ".join(d.objects))
                body += [f"  identity {x} {i}" for x, i in d.identities]
                body += [f"  morphism {n} : {s} -> {t}" for n, s, t in d.morphisms]
                body += [f"  compose {f} {g} = {h}" for f, g, h in d.composites]
                out.append(f"category {d.name} {{\n" + "\n".join(body) + ("\n" if body else "") + "}")
        elif isinstance(d, DiagramDecl):
            if d.constant is not None:
                out.append(f"diagram {d.name} = constant {d.category} {d.constant}")
            else:
                body = [f"  {k}: {v}" for k, v in d.assignments]
                out.append(f"diagram {d.name} over {d.category} {{\n" + "\n".join(body) + ("\n" if body else "") + "}")
        elif isinstance(d, SSetDecl):
            if d.builtin is not None:
                out.append(f"sset {d.name} = " + " ".join(map(str, d.builtin)))
            else:
                body = [f"  {n}: " + " ".join(v) for n, v in d.simplices]
                for x, fs in d.faces:
                    parts = [" ".join([f"s{j}" for j in w] + [y]) for w, y in fs]
                    body.append(f"  face {x}: " + ", ".join(parts))
                out.append(f"sset {d.name} {{\n" + "\n".join(body) + ("\n" if body else "") + "}")
        elif isinstance(d, SimplicialDecl):
            out.append(f"simplicial {d.name} = {d.kind} " + " ".join(d.args))
    if m.command is not None:
        out.append("cmd " + " ".join(map(str, (m.command.name,) + m.command.args)))
    return "\n".join(out) + "\n"
