"""DIMACS CNF reading and writing.

Emitted text is byte-stable: header, one clause per line in formula order,
literals in canonical clause order, each line ending in " 0\\n".
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .cnf import CnfFormula, make_clause
from .errors import DimacsSyntaxError, HeaderMismatch


def emit_dimacs(f: CnfFormula, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" if c else "c" for c in comments]
    lines.append(f"p cnf {f.num_vars} {f.num_clauses}")
    for clause in f.clauses:
        lines.append(" ".join(map(str, clause.to_ints())) + " 0")
    return "\n".join(lines) + "\n"


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text.

    Clauses may span lines. Comment lines start with ``c``; a lone ``%``
    line (SATLIB style) ends the body.
    """
    header = None
    header_line = None
    clauses = []
    current: list[int] = []
    current_start = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line == "%":
            break
        if line.startswith("p"):
            if header is not None:
                raise DimacsSyntaxError("duplicate problem line", lineno)
            parts = line.split()
            if len(parts) != 4 or parts[0] != "p" or parts[1] != "cnf":
                raise DimacsSyntaxError(f"malformed problem line {line!r}", lineno)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise DimacsSyntaxError(f"non-integer counts in {line!r}", lineno) from None
            if header[0] < 0 or header[1] < 0:
                raise DimacsSyntaxError("negative counts in problem line", lineno)
            header_line = lineno
            continue
        if header is None:
            raise DimacsSyntaxError("clause data before problem line", lineno)
        for token in line.split():
            try:
                value = int(token)
            except ValueError:
                raise DimacsSyntaxError(f"bad token {token!r}", lineno) from None
            if value == 0:
                if not current:
                    raise DimacsSyntaxError("empty clause", lineno)
                clauses.append(current)
                current = []
            else:
                if not current:
                    current_start = lineno
                current.append(value)
    if header is None:
        raise DimacsSyntaxError("missing problem line 'p cnf <vars> <clauses>'")
    if current:
        raise DimacsSyntaxError("last clause is not terminated by 0", current_start)

    num_vars, num_clauses = header
    if len(clauses) != num_clauses:
        raise HeaderMismatch(
            f"header on line {header_line} declares {num_clauses} clauses, found {len(clauses)}"
        )
    top = max((abs(x) for c in clauses for x in c), default=0)
    if top > num_vars:
        raise HeaderMismatch(
            f"header on line {header_line} declares {num_vars} variables, found variable {top}"
        )
    return CnfFormula(num_vars, tuple(make_clause(c) for c in clauses))


def read_dimacs(path: str) -> CnfFormula:
    with open(path) as fh:
        return parse_dimacs(fh.read())


def write_dimacs(f: CnfFormula, out: str | TextIO, comments: Iterable[str] = ()) -> None:
    text = emit_dimacs(f, comments)
    if isinstance(out, str):
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
