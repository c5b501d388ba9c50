import itertools
import random

import pytest
from hypothesis import given

from mucnf.cnf import Assignment, CnfFormula, evaluate
from mucnf.constructions import build_extremal_3sat, gen_f0_3sat, gen_f2
from mucnf.errors import InvalidParameter, SolverTimeout, TooManyVariables
from mucnf.random_formulas import random_cnf
from mucnf.solvers import brute_force_sat, dpll_sat, resolve_solver, solve

from oracles import falsified, formulas, oracle_sat


def pigeonhole(holes):
    """holes+1 pigeons into `holes` holes; unsatisfiable and hard for DPLL."""
    pigeons = holes + 1

    def var(p, h):
        return p * holes + h + 1

    clauses = [[var(p, h) for h in range(holes)] for p in range(pigeons)]
    for h in range(holes):
        for p, q in itertools.combinations(range(pigeons), 2):
            clauses.append([-var(p, h), -var(q, h)])
    return CnfFormula.from_ints(pigeons * holes, clauses)


def lex_first_model(f):
    clauses = f.to_ints()
    for a in itertools.product((False, True), repeat=f.num_vars):
        if not falsified(clauses, a):
            return Assignment(a)
    return None


class TestBruteForce:
    def test_f2_unsat(self):
        assert not brute_force_sat(gen_f2(2)).satisfiable

    def test_empty_formula_all_false(self):
        result = brute_force_sat(CnfFormula(4))
        assert result.satisfiable
        assert result.witness == Assignment((False,) * 4)

    def test_f0_unsat(self):
        assert not brute_force_sat(gen_f0_3sat(1)).satisfiable

    def test_cap(self):
        with pytest.raises(TooManyVariables):
            brute_force_sat(CnfFormula(25))
        with pytest.raises(TooManyVariables):
            brute_force_sat(CnfFormula(5), max_vars=4)

    def test_lexicographic_witness_across_chunks(self):
        # only model is x1 = ... = x18 = True, i.e. the very last assignment
        f = CnfFormula.from_ints(18, [[v] for v in range(1, 19)])
        assert brute_force_sat(f).witness == Assignment((True,) * 18)

    @given(formulas())
    def test_witness_is_lex_first(self, f):
        result = brute_force_sat(f)
        assert result.witness == lex_first_model(f)

    def test_timeout(self):
        f = CnfFormula.from_ints(22, [[1], [-1]])
        with pytest.raises(SolverTimeout):
            brute_force_sat(f, timeout=0.0)


class TestDpll:
    def test_f2_unsat(self):
        assert not dpll_sat(gen_f2(3)).satisfiable

    def test_f2_minus_clause_sat(self):
        f = gen_f2(3).without_clause(0)
        result = dpll_sat(f)
        assert result.satisfiable
        assert evaluate(f, result.witness)

    def test_extremal_3sat_unsat_cross_checked(self):
        f = build_extremal_3sat(2).formula
        assert not dpll_sat(f).satisfiable
        assert not brute_force_sat(f).satisfiable

    def test_units_and_tautologies(self):
        assert not dpll_sat(CnfFormula.from_ints(1, [[1], [-1]])).satisfiable
        f = CnfFormula.from_ints(2, [[1, -1], [2], [2]])
        result = dpll_sat(f)
        assert result.satisfiable and evaluate(f, result.witness)

    def test_true_first_branching(self):
        # unconstrained variables are decided True
        assert dpll_sat(CnfFormula(3)).witness == Assignment((True,) * 3)

    def test_pigeonhole_unsat(self):
        assert not dpll_sat(pigeonhole(4)).satisfiable

    def test_timeout(self):
        with pytest.raises(SolverTimeout):
            dpll_sat(pigeonhole(9), timeout=0.05)

    @given(formulas(max_vars=10, max_clauses=30))
    def test_agrees_with_oracle(self, f):
        result = dpll_sat(f)
        assert result.satisfiable == oracle_sat(f)
        if result.satisfiable:
            assert evaluate(f, result.witness)

    def test_seeded_sweep_against_brute_force(self):
        rng = random.Random(2024)
        for _ in range(300):
            n = rng.randint(1, 12)
            f = random_cnf(rng, n, rng.randint(1, 5 * n), max_width=rng.choice([2, 3, 4]))
            expected = brute_force_sat(f)
            got = dpll_sat(f)
            assert got.satisfiable == expected.satisfiable
            if got.satisfiable:
                assert evaluate(f, got.witness)


def test_resolve_solver():
    assert resolve_solver("auto", CnfFormula(24)) == "brute"
    assert resolve_solver("auto", CnfFormula(25)) == "dpll"
    assert resolve_solver("dpll", CnfFormula(3)) == "dpll"
    with pytest.raises(InvalidParameter):
        resolve_solver("cdcl", CnfFormula(3))


def test_solve_dispatch():
    assert not solve(gen_f2(2), "auto").satisfiable
    assert not solve(gen_f2(2), "dpll").satisfiable
