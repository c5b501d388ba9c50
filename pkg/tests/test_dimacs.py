import pytest
from hypothesis import given

from mucnf.cnf import CnfFormula, make_clause
from mucnf.constructions import build_extremal_ksat, gen_f0_3sat, gen_f2
from mucnf.dimacs import emit_dimacs, parse_dimacs, read_dimacs, write_dimacs
from mucnf.errors import DimacsSyntaxError, HeaderMismatch

from oracles import formulas


def test_parse_simple():
    f = parse_dimacs("p cnf 2 1\n1 -2 0\n")
    assert f.num_vars == 2
    assert f.to_ints() == [[1, -2]]


def test_emit_f2():
    text = emit_dimacs(gen_f2(1))
    lines = text.splitlines()
    assert lines[0] == "p cnf 2 4"
    assert lines[1:] == ["1 2 0", "-1 -2 0", "1 -2 0", "-1 2 0"]
    assert text.endswith("\n")


def test_header_mismatch():
    with pytest.raises(HeaderMismatch):
        parse_dimacs("p cnf 2 2\n1 0\n")
    with pytest.raises(HeaderMismatch):
        parse_dimacs("p cnf 1 1\n1 2 0\n")


@pytest.mark.parametrize(
    "text, line",
    [
        ("p cnf 2 1\n1 x 0\n", 2),
        ("1 2 0\np cnf 2 1\n", 1),
        ("c only\n", None),
        ("p cnf 2 1\n1 2\n", 2),
        ("p cnf 2\n1 2 0\n", 1),
        ("p cnf 2 2\n1 0\n0\n", 3),
    ],
)
def test_syntax_errors(text, line):
    with pytest.raises(DimacsSyntaxError) as info:
        parse_dimacs(text)
    assert info.value.line == line


def test_comments_multiline_clauses_and_tautologies():
    text = "c hello\nc world\np cnf 3 2\n1 -1\n 2 0 3\n0\n%\n0\n"
    f = parse_dimacs(text)
    assert f.num_clauses == 2
    assert f.clauses[0].is_tautological
    assert f.to_ints()[1] == [3]


def test_parse_sorts_literals():
    f = parse_dimacs("p cnf 3 1\n3 -1 2 3 0\n")
    assert f.to_ints() == [[-1, 2, 3]]


def test_comments_emitted_first():
    text = emit_dimacs(gen_f2(1), comments=["family f2", ""])
    assert text.startswith("c family f2\nc\np cnf 2 4\n")
    assert parse_dimacs(text) == gen_f2(1)


def test_empty_formula_roundtrip():
    assert emit_dimacs(CnfFormula(3)) == "p cnf 3 0\n"
    assert parse_dimacs("p cnf 0 0\n") == CnfFormula(0)


@pytest.mark.parametrize(
    "f",
    [gen_f2(3), gen_f0_3sat(1), build_extremal_ksat(3, 2).formula, build_extremal_ksat(4, 2).formula],
)
def test_roundtrip_generated(f):
    assert parse_dimacs(emit_dimacs(f)) == f


@given(formulas(max_vars=12, max_clauses=20, max_width=5))
def test_roundtrip_property(f):
    assert parse_dimacs(emit_dimacs(f)) == f


def test_file_io(tmp_path):
    path = tmp_path / "f.cnf"
    f = CnfFormula(3, (make_clause([1, -3]), make_clause([2])))
    write_dimacs(f, str(path))
    assert path.read_bytes() == b"p cnf 3 2\n1 -3 0\n2 0\n"
    assert read_dimacs(str(path)) == f
