import json
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hocolim.cli import main, run
from hocolim.dsl import (
    CategoryDecl,
    ComplexDecl,
    DiagramDecl,
    Manifest,
    MapDecl,
    MatrixDecl,
    parse,
    parse_syntax,
    serialize,
)
from hocolim.errors import DSLSyntaxError, FunctorialityError, ResolutionError, ShapeError
from hocolim.exact_linalg import ZZ

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def test_minimal_manifest():
    m = parse("ring Z\ncomplex C { 0: rank 1 }\ncmd homology C 0 0")
    assert m.ring == ZZ
    assert [d.name for d in m.decls] == ["C"]
    assert m.command.name == "homology" and m.command.args == ("C", 0, 0)


def test_homology_report():
    m = parse("complex C { 0: rank 1 1: rank 1 d 1: [[2]] }\ncmd homology C 0 0")
    assert run(m).text() == "# homology C 0 0\nH_0 = Z/2\n"


def test_syntax_errors_carry_positions():
    with pytest.raises(DSLSyntaxError) as e:
        parse("ring Z\ncomplex C {\n  0: rank x\n}")
    assert (e.value.line, e.value.column, e.value.token) == (3, 11, "x")
    with pytest.raises(DSLSyntaxError) as e:
        parse("ring R")
    assert e.value.token == "R"
    with pytest.raises(DSLSyntaxError, match="already declared"):
        parse("complex C { }\ncomplex C { }")
    with pytest.raises(DSLSyntaxError, match="unexpected character"):
        parse("complex C { 0: rank 1 } $")


def test_square_zero_failure_names_degrees():
    with pytest.raises(ShapeError, match=r"'C'.*\(2, 1\)"):
        parse("complex C { 0: rank 1 1: rank 1 2: rank 1 d 1: [[1]] d 2: [[1]] }")


def test_shape_mismatch():
    with pytest.raises(ShapeError, match="must be 1x1"):
        parse("complex C { 0: rank 1 1: rank 1 d 1: [[1, 2]] }")
    with pytest.raises(ShapeError, match="not a chain map"):
        parse("complex C { 0: rank 1 1: rank 1 d 1: [[2]] }\nmap f : C -> C { 0: [[1]] 1: [[3]] }")


def test_unresolved_names():
    with pytest.raises(ResolutionError, match="'D'"):
        parse("complex C { }\nmap f : C -> D")
    with pytest.raises(ResolutionError, match="line 2"):
        parse("complex C { }\ncmd hocolim F 0 1")


def test_functoriality_errors():
    text = """
    complex Z0 { 0: rank 1 }
    map two : Z0 -> Z0 { 0: [[2]] }
    category G = cyclic 2
    diagram F over G { *: Z0 }
    """
    with pytest.raises(DSLSyntaxError):
        parse(text)  # '*' is not a name
    text = """
    complex Z0 { 0: rank 1 }
    map two : Z0 -> Z0 { 0: [[2]] }
    category G { objects x  morphism g : x -> x  compose g g = id_x }
    diagram F over G { x: Z0  g: two }
    """
    with pytest.raises(FunctorialityError, match=r"F\(g\) F\(g\)"):
        parse(text)


def test_category_needs_named_composites():
    with pytest.raises(ShapeError, match="missing"):
        parse("category P { objects a b c  morphism f : a -> b  morphism g : b -> c }")


def test_rationals_and_big_integers():
    m = parse("ring Q\nmatrix A = [[1/2, 3], [0, -2/4]]\ncmd snf A")
    assert m.decls[0].rows[0][0].denominator == 2
    big = 2**100
    m = parse(f"matrix A = [[{big}, 0], [0, {3 * big}]]\ncmd snf A")
    assert json.loads(run(m).to_json())["invariant_factors"] == [big, 3 * big]


@pytest.mark.parametrize("path", sorted(CORPUS.glob("*.dsl")), ids=lambda p: p.name)
def test_corpus_round_trip(path):
    m = parse(path.read_text())
    text = serialize(m)
    assert parse_syntax(text) == m
    assert serialize(parse_syntax(text)) == text


names = st.sampled_from(["A", "B", "C", "x1", "y_2"])
ints = st.integers(-(2**70), 2**70)


@st.composite
def manifests(draw):
    decls, used = [], set()
    for _ in range(draw(st.integers(0, 4))):
        name = draw(names.filter(lambda n: n not in used))
        used.add(name)
        kind = draw(st.sampled_from(["matrix", "complex", "map", "category", "diagram"]))
        if kind == "matrix":
            r, c = draw(st.integers(1, 3)), draw(st.integers(1, 3))
            decls.append(MatrixDecl(name, tuple(tuple(draw(ints) for _ in range(c)) for _ in range(r))))
        elif kind == "complex":
            degs = sorted(draw(st.sets(st.integers(-3, 3), max_size=3)))
            decls.append(ComplexDecl(name, tuple((d, draw(st.integers(0, 3))) for d in degs), ()))
        elif kind == "map":
            decls.append(MapDecl(name, "P", "Q", ((0, ((1, 2),)),)))
        elif kind == "category":
            decls.append(CategoryDecl(name, draw(st.sampled_from([("span",), ("poset", 3), ("cyclic", 4)]))))
        else:
            decls.append(DiagramDecl(name, "I", None, (("a", "P"), ("u", "f"))))
    return Manifest(ZZ, tuple(decls), None)


@given(manifests())
def test_round_trip_on_syntax(m):
    assert parse_syntax(serialize(m)) == m


def run_cli(args, capsys, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_exit_codes(capsys, monkeypatch):
    assert run_cli(["run", str(CORPUS / "suspension.dsl")], capsys)[0] == 0
    code, _, err = run_cli(["run"], capsys, "complex C { 0: rank }", monkeypatch)
    assert code == 1 and "line 1" in err
    code, _, err = run_cli(["run"], capsys, "complex C { }\ncmd homology D 0 1", monkeypatch)
    assert code == 2 and "'D'" in err
    code, _, err = run_cli(["run", str(CORPUS / "holim_loops.dsl")], capsys)
    assert code == 3 and "nonidentity endomorphism g" in err


def test_cli_json_schema(capsys):
    code, out, _ = run_cli(["--json", "hocolim", "F", "0", "3", "-f", str(CORPUS / "suspension.dsl")], capsys)
    body = json.loads(out)
    assert code == 0
    assert body["command"] == "hocolim F 0 3"
    assert body["window"] == [0, 3]
    assert body["homology"][1] == {"degree": 1, "free_rank": 1, "torsion": []}
    assert [h["degree"] for h in body["homology"]] == [0, 1, 2, 3]


def test_cli_snf_literal(capsys):
    code, out, _ = run_cli(["snf", "[[2, 4], [6, 8]]"], capsys)
    assert code == 0 and "invariant factors = 2, 4" in out


def test_cli_bar_and_realize(capsys):
    code, out, _ = run_cli(["run", str(CORPUS / "span_bar.dsl")], capsys)
    assert "B_2: total rank 7" in out
    code, out, _ = run_cli(["realize", "X", "0", "2", "-f", str(CORPUS / "circle.dsl")], capsys)
    assert out.splitlines()[1:] == ["H_0 = Z^1", "H_1 = Z^1", "H_2 = 0"]


EXPECTED = {
    "times2.dsl": ["H_0 = Z/2", "H_1 = 0"],
    "suspension.dsl": ["H_0 = 0", "H_1 = Z^1", "H_2 = 0", "H_3 = 0"],
    "cofiber.dsl": ["H_0 = Z/2", "H_1 = 0", "H_2 = 0", "H_3 = 0"],
    "bz2.dsl": ["H_0 = Z^1", "H_1 = Z/2", "H_2 = 0", "H_3 = Z/2", "H_4 = 0"],
    "bz3.dsl": ["H_0 = Z^1", "H_1 = Z/3", "H_2 = 0", "H_3 = Z/3", "H_4 = 0"],
    "fiber.dsl": ["H_-3 = 0", "H_-2 = 0", "H_-1 = Z/2", "H_0 = 0", "H_1 = 0"],
    "arrow_holim.dsl": ["H_-2 = 0", "H_-1 = 0", "H_0 = Z/3", "H_1 = 0", "H_2 = 0"],
    "chain2.dsl": ["H_0 = Z^1", "H_1 = 0", "H_2 = 0", "H_3 = 0"],
    "circle.dsl": ["H_0 = Z^1", "H_1 = Z^1", "H_2 = 0", "H_3 = 0"],
    "rational.dsl": ["H_0 = Q^1", "H_1 = 0"],
}


@pytest.mark.parametrize("name", sorted(EXPECTED))
def test_corpus_outputs(name):
    rep = run(parse((CORPUS / name).read_text()))
    assert rep.text().splitlines()[1:] == EXPECTED[name]
