"""Formula data model: literals, clauses, CNF formulas and assignments.

All values are immutable once built. Variables are dense 1-based indices so
that formulas map one-to-one onto DIMACS files.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import EmptyClause, IncompleteAssignment, InvalidParameter


@dataclass(frozen=True, order=True)
class Literal:
    variable: int
    negated: bool = False

    def __post_init__(self):
        if self.variable < 1:
            raise InvalidParameter(f"variable index must be >= 1, got {self.variable}")

    def __neg__(self) -> Literal:
        return Literal(self.variable, not self.negated)

    def to_int(self) -> int:
        return -self.variable if self.negated else self.variable

    @classmethod
    def from_int(cls, value: int) -> Literal:
        if value == 0:
            raise InvalidParameter("0 is not a literal")
        return cls(abs(value), value < 0)

    def __str__(self):
        return ("~x" if self.negated else "x") + str(self.variable)


def pos(variable: int) -> Literal:
    return Literal(variable, False)


def neg(variable: int) -> Literal:
    return Literal(variable, True)


def negate(lit: Literal) -> Literal:
    return Literal(lit.variable, not lit.negated)


@dataclass(frozen=True)
class Clause:
    """Disjunction of literals, kept sorted by (variable, negated) and duplicate-free.

    Build through :func:`make_clause`; the constructor trusts its input.
    """

    literals: tuple[Literal, ...]

    @property
    def width(self) -> int:
        return len(self.literals)

    @property
    def is_tautological(self) -> bool:
        lits = self.literals
        return any(a.variable == b.variable for a, b in zip(lits, lits[1:]))

    @property
    def variables(self) -> tuple[int, ...]:
        return tuple(sorted({lit.variable for lit in self.literals}))

    def to_ints(self) -> list[int]:
        return [lit.to_int() for lit in self.literals]

    def __iter__(self):
        return iter(self.literals)

    def __len__(self):
        return len(self.literals)

    def __str__(self):
        return "(" + " | ".join(map(str, self.literals)) + ")"


def make_clause(lits: Iterable[Literal | int]) -> Clause:
    """Sort and deduplicate literals. Integers are read as DIMACS literals."""
    items = [lit if isinstance(lit, Literal) else Literal.from_int(lit) for lit in lits]
    if not items:
        raise EmptyClause("a clause needs at least one literal")
    return Clause(tuple(sorted(set(items))))


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[Clause, ...] = ()

    def __post_init__(self):
        if not isinstance(self.clauses, tuple):
            object.__setattr__(self, "clauses", tuple(self.clauses))
        if self.num_vars < 0:
            raise InvalidParameter("num_vars must be non-negative")
        for clause in self.clauses:
            for lit in clause.literals:
                if lit.variable > self.num_vars:
                    raise InvalidParameter(
                        f"literal {lit} exceeds num_vars={self.num_vars}"
                    )

    @classmethod
    def from_ints(cls, num_vars: int, clauses: Iterable[Iterable[int]]) -> CnfFormula:
        return cls(num_vars, tuple(make_clause(c) for c in clauses))

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def to_ints(self) -> list[list[int]]:
        return [c.to_ints() for c in self.clauses]

    def widths(self) -> Counter:
        return Counter(c.width for c in self.clauses)

    def without_clause(self, index: int) -> CnfFormula:
        return CnfFormula(self.num_vars, self.clauses[:index] + self.clauses[index + 1:])

    def with_clauses(self, extra: Iterable[Clause]) -> CnfFormula:
        return CnfFormula(self.num_vars, self.clauses + tuple(extra))

    def used_variables(self) -> set[int]:
        return {lit.variable for c in self.clauses for lit in c.literals}

    def __len__(self):
        return len(self.clauses)


@dataclass(frozen=True)
class Assignment:
    """Total truth assignment; ``values[i]`` is the value of variable ``i + 1``."""

    values: tuple[bool, ...]

    @classmethod
    def from_mapping(cls, mapping: Mapping[int, bool], num_vars: int) -> Assignment:
        missing = [v for v in range(1, num_vars + 1) if v not in mapping]
        if missing:
            raise IncompleteAssignment(f"no value for variables {missing}")
        return cls(tuple(bool(mapping[v]) for v in range(1, num_vars + 1)))

    @classmethod
    def from_ints(cls, lits: Iterable[int], num_vars: int) -> Assignment:
        return cls.from_mapping({abs(x): x > 0 for x in lits}, num_vars)

    @property
    def num_vars(self) -> int:
        return len(self.values)

    def __getitem__(self, variable: int) -> bool:
        if variable < 1:
            raise KeyError(variable)
        return self.values[variable - 1]

    def satisfies(self, lit: Literal) -> bool:
        return self.values[lit.variable - 1] != lit.negated

    def to_ints(self) -> list[int]:
        return [v if val else -v for v, val in enumerate(self.values, start=1)]


def evaluate(f: CnfFormula, a: Assignment) -> bool:
    if a.num_vars != f.num_vars:
        raise IncompleteAssignment(
            f"assignment covers {a.num_vars} variables, formula has {f.num_vars}"
        )
    values = a.values
    return all(
        any(values[lit.variable - 1] != lit.negated for lit in clause.literals)
        for clause in f.clauses
    )


def falsified_clauses(f: CnfFormula, a: Assignment) -> list[int]:
    """Indices of the clauses that ``a`` makes false."""
    if a.num_vars != f.num_vars:
        raise IncompleteAssignment("assignment does not match formula")
    return [
        i
        for i, clause in enumerate(f.clauses)
        if not any(a.satisfies(lit) for lit in clause.literals)
    ]


def rename_variables(f: CnfFormula, offset: int) -> CnfFormula:
    """Shift every variable index up by ``offset``."""
    if offset < 0:
        raise InvalidParameter("offset must be non-negative")
    if offset == 0:
        return f
    # shifting preserves sort order, so clauses can be rebuilt directly
    clauses = tuple(
        Clause(tuple(Literal(lit.variable + offset, lit.negated) for lit in c.literals))
        for c in f.clauses
    )
    return CnfFormula(f.num_vars + offset, clauses)


def compact_variables(f: CnfFormula) -> CnfFormula:
    """Renumber the occurring variables densely as 1..k, keeping their order."""
    used = sorted(f.used_variables())
    remap = {old: new for new, old in enumerate(used, start=1)}
    clauses = tuple(
        Clause(tuple(Literal(remap[lit.variable], lit.negated) for lit in c.literals))
        for c in f.clauses
    )
    return CnfFormula(len(used), clauses)

