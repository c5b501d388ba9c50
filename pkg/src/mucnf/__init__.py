"""Generators and verifiers for minimal unsatisfiable CNF formulas."""

from .cnf import (
    Assignment,
    Clause,
    CnfFormula,
    Literal,
    compact_variables,
    evaluate,
    make_clause,
    negate,
    rename_variables,
)
from .constructions import (
    ConstructionReport,
    Surjection,
    build_extremal_3sat,
    build_extremal_ksat,
    default_surjection,
    gen_f0_3sat,
    gen_f0_ksat,
    gen_f2,
    predicted_counts,
    splice,
)
from .dimacs import emit_dimacs, parse_dimacs
from .solvers import SatResult, brute_force_sat, dpll_sat
from .twosat import build_implication_graph, tarjan_scc, twosat_solve
from .verify import (
    MuVerdict,
    Status,
    check_2sat_upper_bound,
    check_deficiency,
    is_minimal_unsatisfiable,
    shrink_to_mus,
)

__version__ = "0.1.0"
