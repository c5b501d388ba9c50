"""Seeded random CNF generators for test corpora and noise injection."""

from __future__ import annotations

import random

from .cnf import Clause, CnfFormula, Literal, make_clause


def random_clause(rng: random.Random, num_vars: int, width: int) -> Clause:
    """Clause over ``width`` distinct variables with random polarities."""
    variables = rng.sample(range(1, num_vars + 1), width)
    return make_clause(Literal(v, rng.random() < 0.5) for v in variables)


def random_cnf(
    rng: random.Random, num_vars: int, num_clauses: int, max_width: int = 3
) -> CnfFormula:
    widths = [rng.randint(1, min(max_width, num_vars)) for _ in range(num_clauses)]
    return CnfFormula(num_vars, tuple(random_clause(rng, num_vars, w) for w in widths))


def random_ksat(rng: random.Random, num_vars: int, num_clauses: int, k: int) -> CnfFormula:
    return CnfFormula(
        num_vars, tuple(random_clause(rng, num_vars, k) for _ in range(num_clauses))
    )


def random_2sat(rng: random.Random, num_vars: int, num_clauses: int) -> CnfFormula:
    return random_ksat(rng, num_vars, num_clauses, 2)


def add_noise(
    f: CnfFormula, count: int, rng: random.Random, width: int = 3
) -> CnfFormula:
    """Append ``count`` random clauses over ``f``'s variables."""
    width = min(width, f.num_vars)
    return f.with_clauses(random_clause(rng, f.num_vars, width) for _ in range(count))
