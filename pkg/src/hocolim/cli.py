"""Command line front end.

    hocolim run FILE                      execute the file's cmd line
    hocolim homology NAME LO HI [-f FILE]
    hocolim hocolim  NAME LO HI [-f FILE]
    hocolim holim    NAME LO HI [-f FILE]
    hocolim realize  NAME LO HI [-f FILE]
    hocolim bar      NAME LEVEL [-f FILE]
    hocolim snf      NAME|LITERAL [-f FILE]
    hocolim verify-props [--seed N] [--trials N]

FILE defaults to standard input.  ``--json`` switches to the structured
report.  Exit status: 0 ok, 1 parse error, 2 validation error,
3 computation refused (for instance holim over a category with loops).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from .bar_cobar import bar_simplicial, fat_realization, hocolim, holim, linearize
from .chain import HomologyGroup, homology
from .dold_kan import constant_simplicial
from .dsl import Command, Manifest, parse_syntax, resolve
from .errors import HocolimError, ShapeError
from .exact_linalg import ZZ, invariant_factors, rank
from .totalization import DegreeWindow
from .verify import run_properties


@dataclass
class Report:
    command: str
    homology: list[tuple[int, HomologyGroup]] = field(default_factory=list)
    window: tuple[int, int] | None = None
    extra: dict = field(default_factory=dict)
    lines: list[str] = field(default_factory=list)
    exit_status: int = 0

    def text(self) -> str:
        out = [f"# {self.command}"]
        out += [f"H_{n} = {g}" for n, g in self.homology]
        out += self.lines
        return "\n".join(out) + "\n"

    def to_json(self) -> str:
        body = {
            "command": self.command,
            "homology": [{"degree": n, **g.to_dict()} for n, g in self.homology],
            "window": list(self.window) if self.window is not None else None,
        }
        body.update(self.extra)
        return json.dumps(body, sort_keys=False) + "\n"


def _window_homology(C, w: DegreeWindow) -> list[tuple[int, HomologyGroup]]:
    return [(n, homology(C, n)) for n in w]


def _simplicial(env, name: str, w: DegreeWindow):
    d = env.simplicial[name]
    if d.kind == "bar":
        F = env.diagrams[d.args[0]]
        low = F.min_degree() or 0
        return bar_simplicial(F.index, F, max(0, w.hi + 1 - low))
    if d.kind == "linearize":
        K, C = env.ssets[d.args[0]], env.complexes[d.args[1]]
        low = C.bounds()[0] if not C.is_zero() else 0
        return linearize(K, C, max(0, w.hi + 1 - low))
    C = env.complexes[d.args[0]]
    low = C.bounds()[0] if not C.is_zero() else 0
    return constant_simplicial(C, max(0, w.hi + 1 - low))


def run(m: Manifest, command: Command | None = None) -> Report:
    """Execute ``command`` (default: the manifest's cmd line)."""
    env = resolve(m)
    c = command or m.command
    if c is None:
        raise ShapeError("no command given: add a 'cmd' line or name one on the command line")
    name = c.name
    echo = " ".join(map(str, (name,) + c.args))
    if name in ("homology", "hocolim", "holim", "realize"):
        target, lo, hi = c.args
        if lo > hi:
            raise ShapeError(f"empty window [{lo}, {hi}]")
        w = DegreeWindow(lo, hi)
        if name == "homology":
            C = env.lookup("complexes", target, m, "complex")
            H = [(n, homology(C, n)) for n in w]
            return Report(echo, H, (lo, hi))
        if name in ("hocolim", "holim"):
            F = env.lookup("diagrams", target, m, "diagram")
            r = (hocolim if name == "hocolim" else holim)(F.index, F, w)
            return Report(echo, sorted(r.homology.items()), (lo, hi), {"levels_used": r.bar_levels_used})
        env.lookup("simplicial", target, m, "simplicial object")
        X = _simplicial(env, target, w)
        return Report(echo, _window_homology(fat_realization(X, w), w), (lo, hi), {"levels_used": X.truncation})
    if name == "bar":
        target, level = c.args
        F = env.lookup("diagrams", target, m, "diagram")
        X = bar_simplicial(F.index, F, level)
        levels = [{"level": n, "ranks": {str(l): L.rank(l) for l in L.degrees}} for n, L in enumerate(X.levels)]
        lines = [
            f"B_{n}: total rank {L.total_rank}" + ("" if not L.degrees else "  (" + ", ".join(f"deg {l}: {L.rank(l)}" for l in L.degrees) + ")")
            for n, L in enumerate(X.levels)
        ]
        return Report(echo, [], None, {"levels": levels}, lines)
    if name == "snf":
        A = env.lookup("matrices", c.args[0], m, "matrix")
        factors = [int(x) if A.ring == ZZ else str(x) for x in invariant_factors(A)]
        r = rank(A)
        lines = [f"shape = {A.rows}x{A.cols}", f"rank = {r}", "invariant factors = " + (", ".join(map(str, factors)) or "none")]
        return Report(echo, [], None, {"shape": [A.rows, A.cols], "rank": r, "invariant_factors": factors}, lines)
    raise ShapeError(f"unknown command {name!r}")


def verify_report(seed: int, trials: int) -> Report:
    results = run_properties(seed, trials)
    rep = Report(f"verify-props --seed {seed} --trials {trials}")
    rep.lines = [r.line() for r in results]
    rep.extra = {
        "seed": seed,
        "trials": trials,
        "properties": [{"name": r.name, "passed": r.passed, "total": r.total, "failures": r.failures} for r in results],
    }
    rep.exit_status = 0 if all(r.ok for r in results) else 3
    return rep


def _read(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _literal_matrix_manifest(text: str) -> Manifest:
    return parse_syntax(f"matrix M = {text}\n")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hocolim", description="Exact homotopy (co)limits of chain complexes over Z.")
    p.add_argument("--json", action="store_true", help="print the structured report")
    sub = p.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="execute the cmd line of a DSL file")
    r.add_argument("file", nargs="?")
    for name in ("homology", "hocolim", "holim", "realize"):
        s = sub.add_parser(name)
        s.add_argument("name")
        s.add_argument("lo", type=int)
        s.add_argument("hi", type=int)
        s.add_argument("-f", "--file")
    b = sub.add_parser("bar")
    b.add_argument("name")
    b.add_argument("level", type=int)
    b.add_argument("-f", "--file")
    s = sub.add_parser("snf", help="Smith normal form of a named matrix or a literal like '[[2,4],[6,8]]'")
    s.add_argument("matrix")
    s.add_argument("-f", "--file")
    v = sub.add_parser("verify-props")
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--trials", type=int, default=25)
    for sp in sub.choices.values():
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="print the structured report")
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "verify-props":
            rep = verify_report(args.seed, args.trials)
        elif args.cmd == "run":
            rep = run(parse_syntax(_read(args.file)))
        elif args.cmd == "snf" and args.matrix.lstrip().startswith("["):
            rep = run(_literal_matrix_manifest(args.matrix), Command("snf", ("M",)))
        else:
            m = parse_syntax(_read(args.file))
            if args.cmd == "snf":
                cargs = (args.matrix,)
            elif args.cmd == "bar":
                cargs = (args.name, args.level)
            else:
                cargs = (args.name, args.lo, args.hi)
            rep = run(m, Command(args.cmd, cargs))
    except HocolimError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    sys.stdout.write(rep.to_json() if args.json else rep.text())
    return rep.exit_status


if __name__ == "__main__":
    sys.exit(main())
