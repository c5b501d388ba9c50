"""Decision procedures: exhaustive enumeration and DPLL.

Both are pure functions of their input formula and safe to call from several
threads or processes at once.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .cnf import Assignment, CnfFormula
from .errors import InvalidParameter, SolverTimeout, TooManyVariables

BRUTE_FORCE_MAX_VARS = 24
_CHUNK_BITS = 16


@dataclass(frozen=True)
class SatResult:
    satisfiable: bool
    witness: Optional[Assignment] = None
    # 2-SAT only: a variable whose two literals share a strongly connected component
    conflict_variable: Optional[int] = None

    @classmethod
    def sat(cls, witness: Assignment) -> SatResult:
        return cls(True, witness)

    @classmethod
    def unsat(cls, conflict_variable: Optional[int] = None) -> SatResult:
        return cls(False, None, conflict_variable)

    @property
    def status(self) -> str:
        return "sat" if self.satisfiable else "unsat"


def _deadline(timeout):
    return None if timeout is None else time.monotonic() + timeout


def brute_force_sat(
    f: CnfFormula,
    max_vars: int = BRUTE_FORCE_MAX_VARS,
    timeout: Optional[float] = None,
) -> SatResult:
    """Enumerate all 2**n assignments.

    Assignments are visited in lexicographic order of (x1, ..., xn) with
    False < True, so the witness is the lexicographically first model.
    """
    n = f.num_vars
    if n > max_vars:
        raise TooManyVariables(f"{n} variables exceeds brute-force cap {max_vars}")
    if not f.clauses:
        return SatResult.sat(Assignment((False,) * n))
    deadline = _deadline(timeout)

    lits = [
        [(lit.variable, lit.negated) for lit in clause.literals] for clause in f.clauses
    ]
    total = 1 << n
    chunk = 1 << min(n, _CHUNK_BITS)
    for start in range(0, total, chunk):
        if deadline is not None and time.monotonic() > deadline:
            raise SolverTimeout("brute force exceeded its time budget")
        idx = np.arange(start, start + chunk, dtype=np.int64)
        # x1 is the most significant bit of the enumeration index
        bits = [None] + [((idx >> (n - v)) & 1).astype(bool) for v in range(1, n + 1)]
        inv = [None] + [~b for b in bits[1:]]
        ok = np.ones(chunk, dtype=bool)
        for clause in lits:
            var, negated = clause[0]
            sat = (inv if negated else bits)[var].copy()
            for var, negated in clause[1:]:
                sat |= (inv if negated else bits)[var]
            ok &= sat
            if not ok.any():
                break
        else:
            first = start + int(np.argmax(ok))
            return SatResult.sat(
                Assignment(tuple(bool((first >> (n - v)) & 1) for v in range(1, n + 1)))
            )
    return SatResult.unsat()


def dpll_sat(f: CnfFormula, timeout: Optional[float] = None) -> SatResult:
    """DPLL with unit propagation over two watched literals.

    Branches on the lowest-indexed unassigned variable, trying True first.
    Conflicts backjump over decision levels that played no part in them;
    nothing is learned, so the search is deterministic and memory-flat. Without
    backjumping, formulas made of independent sub-formulas (the spliced
    constructions) force re-solving one part for every model of another.
    """
    deadline = _deadline(timeout)
    n = f.num_vars
    value = [0] * (n + 1)  # 1 true, -1 false, 0 unassigned
    level = [0] * (n + 1)
    reason: list[Optional[int]] = [None] * (n + 1)
    watches = [[] for _ in range(2 * n + 1)]  # indexed by lit + n
    clauses: list[list[int]] = []
    units = []
    for clause in f.clauses:
        if clause.is_tautological:
            continue
        lits = clause.to_ints()
        if len(lits) == 1:
            units.append(lits[0])
            continue
        ci = len(clauses)
        clauses.append(lits)
        watches[lits[0] + n].append(ci)
        watches[lits[1] + n].append(ci)

    trail: list[int] = []
    # per decision level: (trail position, literal, flipped, levels blamed by the first branch)
    decisions: list[tuple[int, int, bool, frozenset]] = []

    def lit_value(lit):
        v = value[lit if lit > 0 else -lit]
        return v if lit > 0 else -v

    def assign(lit, why):
        var = lit if lit > 0 else -lit
        value[var] = 1 if lit > 0 else -1
        level[var] = len(decisions)
        reason[var] = why
        trail.append(lit)

    def propagate(qhead):
        """Returns (conflicting clause index or None, new queue head)."""
        while qhead < len(trail):
            false_lit = -trail[qhead]
            qhead += 1
            wl = watches[false_lit + n]
            i = j = 0
            end = len(wl)
            while i < end:
                ci = wl[i]
                i += 1
                c = clauses[ci]
                if c[0] == false_lit:
                    c[0], c[1] = c[1], false_lit
                first = c[0]
                if lit_value(first) == 1:
                    wl[j] = ci
                    j += 1
                    continue
                for k in range(2, len(c)):
                    if lit_value(c[k]) != -1:
                        c[1], c[k] = c[k], false_lit
                        watches[c[1] + n].append(ci)
                        break
                else:
                    wl[j] = ci
                    j += 1
                    if lit_value(first) == -1:
                        while i < end:
                            wl[j] = wl[i]
                            j += 1
                            i += 1
                        del wl[j:]
                        return ci, qhead
                    assign(first, ci)
            del wl[j:]
        return None, qhead

    def blamed_levels(ci):
        """Decision levels the falsified clause ``ci`` depends on."""
        levels = set()
        seen = set()
        stack = [abs(x) for x in clauses[ci]]
        while stack:
            var = stack.pop()
            if var in seen:
                continue
            seen.add(var)
            if level[var] == 0:
                continue
            why = reason[var]
            if why is None:
                levels.add(level[var])
            else:
                stack.extend(abs(x) for x in clauses[why] if abs(x) != var)
        return levels

    def undo(start):
        for lit in trail[start:]:
            value[abs(lit)] = 0
        del trail[start:]

    for u in units:
        v = lit_value(u)
        if v == -1:
            return SatResult.unsat()
        if v == 0:
            assign(u, None)
    conflict, qhead = propagate(0)
    if conflict is not None:
        return SatResult.unsat()

    steps = 0
    while True:
        steps += 1
        if deadline is not None and steps % 256 == 0 and time.monotonic() > deadline:
            raise SolverTimeout("DPLL exceeded its time budget")
        var = next((v for v in range(1, n + 1) if value[v] == 0), None)
        if var is None:
            return SatResult.sat(Assignment(tuple(value[v] > 0 for v in range(1, n + 1))))
        decisions.append((len(trail), var, False, frozenset()))
        assign(var, None)
        while True:
            conflict, qhead = propagate(qhead)
            if conflict is None:
                break
            blame = blamed_levels(conflict)
            while True:
                if not blame:
                    return SatResult.unsat()
                top = max(blame)
                start, lit, flipped, first_blame = decisions[top - 1]
                undo(start)
                del decisions[top - 1:]
                qhead = start
                if not flipped:
                    decisions.append((start, -lit, True, frozenset(blame - {top})))
                    assign(-lit, None)
                    break
                blame = (blame - {top}) | first_blame


Solver = Callable[..., SatResult]

SOLVERS = {"brute": brute_force_sat, "dpll": dpll_sat}


def resolve_solver(name: str, f: CnfFormula, max_vars: int = BRUTE_FORCE_MAX_VARS) -> str:
    """Map ``auto`` to a concrete backend name for ``f``."""
    if name == "auto":
        return "brute" if f.num_vars <= max_vars else "dpll"
    if name not in SOLVERS:
        raise InvalidParameter(f"unknown solver {name!r}; choose brute, dpll or auto")
    return name


def solve(f: CnfFormula, solver: str = "auto", timeout: Optional[float] = None) -> SatResult:
    name = resolve_solver(solver, f)
    return SOLVERS[name](f, timeout=timeout)
