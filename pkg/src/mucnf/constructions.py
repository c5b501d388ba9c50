"""Generators for minimal unsatisfiable formula families and the splice combinator.

Families
--------
``gen_f2(l)``
    Cyclic 2-SAT formula on y_1..y_2l with 4l clauses.
``gen_f0_ksat(k, m)``
    k blocks of m variables: every positive k-clause taking one variable per
    block, followed by one all-negative clause per block.
``gen_f0_3sat(m)``
    ``gen_f0_ksat(3, 2m)``.
``build_extremal_3sat(m)`` / ``build_extremal_ksat(k, m)``
    The block formula with each negative block clause replaced, via
    :func:`splice`, by a (k-1)-SAT minimal unsatisfiable donor. Every clause
    ends up with width exactly k while the m**k positive clauses survive.

Clause order is fixed per generator so DIMACS output is byte-stable: positive
clauses in lexicographic index order, then splice-derived clauses grouped per
replaced block clause in donor order.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .cnf import Clause, CnfFormula, Literal, make_clause, rename_variables
from .errors import BadIndex, InvalidParameter, NotSurjective, WidthExceedsDonor


@dataclass(frozen=True)
class Surjection:
    """Maps donor clause ``j`` to position ``targets[j]`` of the replaced clause."""

    targets: tuple[int, ...]

    def __post_init__(self):
        if not isinstance(self.targets, tuple):
            object.__setattr__(self, "targets", tuple(self.targets))

    def __len__(self):
        return len(self.targets)

    def is_onto(self, width: int) -> bool:
        return set(self.targets) == set(range(width))


def default_surjection(donor_clause_count: int, target_width: int) -> Surjection:
    """Round-robin: donor clause j goes to literal j mod width."""
    if target_width < 1 or donor_clause_count < target_width:
        raise InvalidParameter(
            f"no surjection from {donor_clause_count} donor clauses onto "
            f"{target_width} literals"
        )
    return Surjection(tuple(j % target_width for j in range(donor_clause_count)))


def random_surjection(
    donor_clause_count: int, target_width: int, rng: random.Random
) -> Surjection:
    if target_width < 1 or donor_clause_count < target_width:
        raise InvalidParameter(
            f"no surjection from {donor_clause_count} donor clauses onto "
            f"{target_width} literals"
        )
    targets = list(range(target_width))
    targets += [rng.randrange(target_width) for _ in range(donor_clause_count - target_width)]
    rng.shuffle(targets)
    return Surjection(tuple(targets))


def gen_f2(l: int) -> CnfFormula:
    if l < 1:
        raise InvalidParameter(f"l must be >= 1, got {l}")
    n = 2 * l
    clauses = []
    for i in range(1, n):
        clauses.append(make_clause([i, i + 1]))
        clauses.append(make_clause([-i, -(i + 1)]))
    clauses.append(make_clause([1, -n]))
    clauses.append(make_clause([-1, n]))
    return CnfFormula(n, tuple(clauses))


def gen_f0_ksat(k: int, m: int) -> CnfFormula:
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    blocks = [range(t * m + 1, (t + 1) * m + 1) for t in range(k)]
    # one variable per block, block order ascending, so tuples are already sorted
    clauses = [
        Clause(tuple(Literal(v) for v in combo)) for combo in itertools.product(*blocks)
    ]
    clauses += [Clause(tuple(Literal(v, True) for v in block)) for block in blocks]
    return CnfFormula(k * m, tuple(clauses))


def gen_f0_3sat(m: int) -> CnfFormula:
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    return gen_f0_ksat(3, 2 * m)


def splice(
    fx: CnfFormula,
    c0_index: int,
    fy: CnfFormula,
    h: Optional[Surjection | Sequence[int]] = None,
) -> CnfFormula:
    """Replace clause ``c0_index`` of ``fx`` by ``c_y | h(c_y)`` for each donor clause.

    ``fy`` is shifted past ``fx``'s variables first, so the two variable sets
    are always disjoint. When both inputs are minimal unsatisfiable so is the
    result.
    """
    if not 0 <= c0_index < fx.num_clauses:
        raise BadIndex(f"clause index {c0_index} out of range for {fx.num_clauses} clauses")
    c0 = fx.clauses[c0_index]
    width = c0.width
    if width > fy.num_clauses:
        raise WidthExceedsDonor(
            f"replaced clause has width {width} but donor has only {fy.num_clauses} clauses"
        )
    if h is None:
        h = default_surjection(fy.num_clauses, width)
    elif not isinstance(h, Surjection):
        h = Surjection(tuple(h))
    if len(h) != fy.num_clauses:
        raise InvalidParameter(
            f"surjection has {len(h)} entries, donor has {fy.num_clauses} clauses"
        )
    if any(not 0 <= t < width for t in h.targets):
        raise InvalidParameter(f"surjection targets must lie in [0, {width})")
    if not h.is_onto(width):
        missing = sorted(set(range(width)) - set(h.targets))
        raise NotSurjective(f"literal positions {missing} of the replaced clause have no preimage")

    donor = rename_variables(fy, fx.num_vars)
    spliced = tuple(
        make_clause(cy.literals + (c0.literals[t],)) for cy, t in zip(donor.clauses, h.targets)
    )
    kept = fx.clauses[:c0_index] + fx.clauses[c0_index + 1:]
    return CnfFormula(donor.num_vars, kept + spliced)


@dataclass(frozen=True)
class ConstructionReport:
    formula: CnfFormula
    predicted_vars: int
    predicted_clauses: int
    family: str
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        actual = (self.formula.num_vars, self.formula.num_clauses)
        if actual != (self.predicted_vars, self.predicted_clauses):
            raise RuntimeError(
                f"{self.family}{self.params}: predicted "
                f"{(self.predicted_vars, self.predicted_clauses)}, built {actual}"
            )


def _check_extremal_params(k: int, m: int) -> None:
    if k < 2:
        raise InvalidParameter(f"k must be >= 2, got {k}")
    if m < 1:
        raise InvalidParameter(f"m must be >= 1, got {m}")
    if k == 3 and m % 2:
        raise InvalidParameter(f"m must be even for extremal k=3, got {m}")


def _f2_param(clauses_needed: int) -> int:
    return max(1, math.ceil(clauses_needed / 4))


def _donor_plan(kd: int, m: int) -> tuple:
    """Pick the donor for replacing width-m block clauses by width-(kd+1) clauses.

    Returns ``("f2", l)``, ``("f0k", kd, kd)`` or ``("extremal", kd, m')``:
    the first ladder rung with at least m clauses.
    """
    if kd == 2:
        return ("f2", _f2_param(m))
    if kd**kd + kd >= m:
        return ("f0k", kd, kd)
    step = 2 if kd == 3 else 1
    mp = step
    while predicted_counts(kd, mp)[1] < m:
        mp += step
    return ("extremal", kd, mp)


def _plan_counts(plan: tuple) -> tuple[int, int]:
    if plan[0] == "f2":
        return 2 * plan[1], 4 * plan[1]
    if plan[0] == "f0k":
        kd, md = plan[1], plan[2]
        return kd * md, md**kd + kd
    return predicted_counts(plan[1], plan[2])


def _plan_formula(plan: tuple) -> CnfFormula:
    if plan[0] == "f2":
        return gen_f2(plan[1])
    if plan[0] == "f0k":
        return gen_f0_ksat(plan[1], plan[2])
    return build_extremal_ksat(plan[1], plan[2]).formula


def predicted_counts(k: int, m: int) -> tuple[int, int]:
    """Closed-form (num_vars, num_clauses) of ``build_extremal_ksat(k, m)``."""
    _check_extremal_params(k, m)
    if k == 2:
        l = max(1, math.ceil(m / 2))
        return 2 * l, 4 * l
    if k == 3:
        return 9 * m, 8 * m**3 + 6 * m
    dv, dc = _plan_counts(_donor_plan(k - 1, m))
    return k * m + k * dv, m**k + k * dc


def _splice_blocks(
    f: CnfFormula, first_block: int, blocks: int, donor: CnfFormula, rng: Optional[random.Random]
) -> CnfFormula:
    # each splice removes the clause at first_block and appends its replacements,
    # so the next block clause slides into the same index
    for _ in range(blocks):
        width = f.clauses[first_block].width
        h = (
            default_surjection(donor.num_clauses, width)
            if rng is None
            else random_surjection(donor.num_clauses, width, rng)
        )
        f = splice(f, first_block, donor, h)
    return f


def _rng(surjection: str, seed: Optional[int]) -> Optional[random.Random]:
    if surjection == "round-robin":
        return None
    if surjection == "random":
        return random.Random(seed)
    raise InvalidParameter(f"unknown surjection mode {surjection!r}")


def build_extremal_3sat(
    m: int, surjection: str = "round-robin", seed: Optional[int] = None
) -> ConstructionReport:
    """3-SAT minimal unsatisfiable formula on 9m variables with 8m^3 + 6m clauses."""
    if m < 2 or m % 2:
        raise InvalidParameter(f"m must be even for extremal k=3 (m >= 2), got {m}")
    rng = _rng(surjection, seed)
    f = gen_f0_3sat(m)
    donor = gen_f2(m // 2)  # m variables, 2m clauses
    f = _splice_blocks(f, (2 * m) ** 3, 3, donor, rng)
    n, c = predicted_counts(3, m)
    return ConstructionReport(f, n, c, "extremal", {"k": 3, "m": m})


def build_extremal_ksat(
    k: int, m: int, surjection: str = "round-robin", seed: Optional[int] = None
) -> ConstructionReport:
    """Minimal unsatisfiable k-SAT formula keeping all m**k positive block clauses.

    k=2 falls back to ``gen_f2`` (2-SAT cannot exceed 4n clauses), k=3 to
    :func:`build_extremal_3sat`. For k >= 4 each of the k width-m block
    clauses is replaced using the (k-1)-SAT donor chosen by ``_donor_plan``.
    """
    _check_extremal_params(k, m)
    if k == 2:
        l = max(1, math.ceil(m / 2))
        return ConstructionReport(gen_f2(l), 2 * l, 4 * l, "extremal", {"k": 2, "m": m})
    if k == 3:
        return build_extremal_3sat(m, surjection, seed)
    rng = _rng(surjection, seed)
    donor = _plan_formula(_donor_plan(k - 1, m))
    f = _splice_blocks(gen_f0_ksat(k, m), m**k, k, donor, rng)
    n, c = predicted_counts(k, m)
    return ConstructionReport(f, n, c, "extremal", {"k": k, "m": m})


def build_family(
    family: str,
    k: Optional[int] = None,
    m: Optional[int] = None,
    l: Optional[int] = None,
    surjection: str = "round-robin",
    seed: Optional[int] = None,
) -> ConstructionReport:
    """Dispatch on a family tag: f2, f0 (3-SAT block formula), f0k, extremal."""

    def need(name, value):
        if value is None:
            raise InvalidParameter(f"family {family} requires --{name}")
        return value

    if family == "f2":
        l = need("l", l)
        f = gen_f2(l)
        return ConstructionReport(f, 2 * l, 4 * l, "f2", {"l": l})
    if family == "f0":
        m = need("m", m)
        f = gen_f0_3sat(m)
        return ConstructionReport(f, 6 * m, (2 * m) ** 3 + 3, "f0", {"m": m})
    if family == "f0k":
        k, m = need("k", k), need("m", m)
        f = gen_f0_ksat(k, m)
        return ConstructionReport(f, k * m, m**k + k, "f0k", {"k": k, "m": m})
    if family == "extremal":
        return build_extremal_ksat(need("k", k), need("m", m), surjection, seed)
    raise InvalidParameter(f"unknown family {family!r}")
