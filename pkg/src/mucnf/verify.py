"""Minimal-unsatisfiability checks, deletion-based MUS extraction and bound checks."""

from __future__ import annotations

import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .cnf import Assignment, CnfFormula
from .errors import InputSatisfiable, NotTwoSat, SolverTimeout, UnusedVariable
from .solvers import SOLVERS, SatResult, resolve_solver

DEFAULT_TIMEOUT = 10.0


class Status(enum.Enum):
    MINIMAL_UNSATISFIABLE = "minimal-unsatisfiable"
    SATISFIABLE = "satisfiable"
    NOT_MINIMAL = "not-minimal"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class MuVerdict:
    status: Status
    witness: Optional[Assignment] = None
    # lowest index whose deletion leaves the formula unsatisfiable
    removable_clause_index: Optional[int] = None
    reason: str = ""

    @property
    def is_mu(self) -> bool:
        return self.status is Status.MINIMAL_UNSATISFIABLE

    @property
    def is_unknown(self) -> bool:
        return self.status is Status.UNKNOWN

    def __str__(self):
        text = self.status.value
        if self.removable_clause_index is not None:
            text += f" removable_clause={self.removable_clause_index}"
        if self.reason:
            text += f" ({self.reason})"
        return text


def _run(name: str, f: CnfFormula, timeout: Optional[float]) -> SatResult:
    return SOLVERS[name](f, timeout=timeout)


def _deletion_statuses(f, name, timeout, workers):
    """Satisfiability of ``f`` minus clause i, for every i, in index order.

    Sequential runs stop at the first unsatisfiable deletion; the parallel path
    evaluates everything and the caller applies the same lowest-index rule.
    """
    subformulas = (f.without_clause(i) for i in range(f.num_clauses))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            n = f.num_clauses
            yield from pool.map(_run, [name] * n, subformulas, [timeout] * n, chunksize=8)
        return
    for sub in subformulas:
        yield _run(name, sub, timeout)


def _default_workers(name: str, f: CnfFormula) -> int:
    if name != "dpll" or f.num_clauses < 64:
        return 1
    return os.cpu_count() or 1


def is_minimal_unsatisfiable(
    f: CnfFormula,
    solver: str = "auto",
    timeout: Optional[float] = DEFAULT_TIMEOUT,
    workers: Optional[int] = None,
) -> MuVerdict:
    """Check that ``f`` is unsatisfiable and that every single-clause deletion is satisfiable.

    ``solver`` is ``brute``, ``dpll`` or ``auto`` (brute force up to 24
    variables). ``timeout`` bounds each solver call; exceeding it yields an
    UNKNOWN verdict instead of an exception. With the DPLL backend the
    deletion checks fan out over ``workers`` processes (default: CPU count for
    formulas of 64+ clauses).
    """
    name = resolve_solver(solver, f)
    if workers is None:
        workers = _default_workers(name, f)
    try:
        whole = _run(name, f, timeout)
        if whole.satisfiable:
            return MuVerdict(Status.SATISFIABLE, witness=whole.witness)
        for i, result in enumerate(_deletion_statuses(f, name, timeout, workers)):
            if not result.satisfiable:
                return MuVerdict(
                    Status.NOT_MINIMAL,
                    removable_clause_index=i,
                    reason=f"formula without clause {i} is still unsatisfiable",
                )
    except SolverTimeout as exc:
        return MuVerdict(Status.UNKNOWN, reason=str(exc))
    return MuVerdict(Status.MINIMAL_UNSATISFIABLE)


def shrink_to_mus(
    f: CnfFormula, solver: str = "auto", timeout: Optional[float] = DEFAULT_TIMEOUT
) -> CnfFormula:
    """Deletion-based MUS extraction.

    Scans clauses in ascending index order and drops a clause whenever the
    remaining clauses stay unsatisfiable. One pass suffices: a clause kept
    because its removal made the rest satisfiable stays necessary as more
    clauses are dropped. The variable count is left unchanged.

    Raises InputSatisfiable for satisfiable input and SolverTimeout if a call
    exceeds ``timeout``.
    """
    name = resolve_solver(solver, f)
    if _run(name, f, timeout).satisfiable:
        raise InputSatisfiable("input satisfiable")
    kept = list(f.clauses)
    i = 0
    while i < len(kept):
        trial = CnfFormula(f.num_vars, tuple(kept[:i] + kept[i + 1:]))
        if _run(name, trial, timeout).satisfiable:
            i += 1
        else:
            del kept[i]
    return CnfFormula(f.num_vars, tuple(kept))


def check_deficiency(f: CnfFormula) -> bool:
    """Clause count exceeds variable count, the lower bound for MU formulas.

    ``f`` is expected to be minimal unsatisfiable already; a False return
    means something upstream is wrong.
    """
    unused = set(range(1, f.num_vars + 1)) - f.used_variables()
    if unused:
        raise UnusedVariable(f"variables {sorted(unused)} occur in no clause")
    return f.num_clauses >= f.num_vars + 1


def check_2sat_upper_bound(f: CnfFormula) -> bool:
    """At most 4n clauses, the ceiling for minimal unsatisfiable 2-SAT."""
    for i, clause in enumerate(f.clauses):
        if clause.width != 2:
            raise NotTwoSat(f"clause {i} has width {clause.width}")
    return f.num_clauses <= 4 * f.num_vars
