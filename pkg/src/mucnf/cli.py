"""Command-line front end.

Exit codes: 0 property holds, 1 property fails, 2 usage or parse error,
3 unknown (solver budget exceeded).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from typing import Optional

from .cnf import CnfFormula
from .constructions import build_family
from .dimacs import emit_dimacs, parse_dimacs
from .errors import CnfError, InputSatisfiable, SolverTimeout
from .random_formulas import add_noise
from .solvers import solve
from .verify import DEFAULT_TIMEOUT, Status, is_minimal_unsatisfiable, shrink_to_mus

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3


@dataclass
class StatsRecord:
    family: str
    params: dict
    num_vars: int
    num_clauses: int
    widths: dict
    density: Optional[float]
    verdict: Optional[str] = None
    timings: dict = field(default_factory=dict)

    @classmethod
    def of(cls, f: CnfFormula, family: str = "file", params: Optional[dict] = None, **kw):
        params = dict(params or {})
        widths = dict(sorted(f.widths().items()))
        k = params.get("k") or (max(widths) if widths else None)
        density = f.num_clauses / f.num_vars**k if k and f.num_vars else None
        return cls(family, params, f.num_vars, f.num_clauses, widths, density, **kw)

    def to_line(self) -> str:
        parts = [f"family={self.family}"]
        parts += [f"{key}={value}" for key, value in self.params.items()]
        parts += [f"num_vars={self.num_vars}", f"num_clauses={self.num_clauses}"]
        hist = ",".join(f"{w}:{c}" for w, c in self.widths.items())
        parts.append(f"widths={hist or 'none'}")
        parts.append("density=" + ("none" if self.density is None else f"{self.density:.6g}"))
        if self.verdict is not None:
            parts.append(f"verdict={self.verdict}")
        parts += [f"time_{phase}={secs:.4f}" for phase, secs in self.timings.items()]
        return " ".join(parts)

    def to_json(self) -> str:
        record = asdict(self)
        record["widths"] = {str(w): c for w, c in self.widths.items()}
        return json.dumps(record, sort_keys=True)


def _read(path: str) -> CnfFormula:
    if path == "-":
        return parse_dimacs(sys.stdin.read())
    with open(path) as fh:
        return parse_dimacs(fh.read())


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)


def _print_record(record: StatsRecord, as_json: bool, stream=None) -> None:
    print(record.to_json() if as_json else record.to_line(), file=stream or sys.stdout)


def _witness_line(witness) -> str:
    return "v " + " ".join(map(str, witness.to_ints() + [0]))


def cmd_generate(args) -> int:
    t0 = time.perf_counter()
    report = build_family(
        args.family, k=args.k, m=args.m, l=args.l, surjection=args.surjection, seed=args.seed
    )
    f = report.formula
    if args.noise:
        f = add_noise(f, args.noise, random.Random(args.seed))
    elapsed = time.perf_counter() - t0
    _write(emit_dimacs(f), args.out)
    record = StatsRecord.of(f, report.family, report.params, timings={"generate": elapsed})
    # keep stdout clean when it carries the DIMACS text
    to_stdout = args.out is not None and args.out != "-"
    _print_record(record, args.json, sys.stdout if to_stdout else sys.stderr)
    return EXIT_HOLDS


def cmd_verify(args) -> int:
    f = _read(args.in_path)
    if args.mode == "sat":
        try:
            result = solve(f, args.solver, timeout=args.timeout_secs)
        except SolverTimeout as exc:
            print(f"unknown ({exc})")
            return EXIT_UNKNOWN
        if result.satisfiable:
            print("satisfiable")
            print(_witness_line(result.witness))
            return EXIT_HOLDS
        print("unsatisfiable")
        return EXIT_FAILS

    verdict = is_minimal_unsatisfiable(f, args.solver, timeout=args.timeout_secs)
    print(verdict)
    if verdict.witness is not None:
        print(_witness_line(verdict.witness))
    if verdict.status is Status.UNKNOWN:
        return EXIT_UNKNOWN
    return EXIT_HOLDS if verdict.is_mu else EXIT_FAILS


def cmd_shrink(args) -> int:
    f = _read(args.in_path)
    try:
        core = shrink_to_mus(f, args.solver, timeout=args.timeout_secs)
    except InputSatisfiable:
        print("input satisfiable", file=sys.stderr)
        return EXIT_FAILS
    except SolverTimeout as exc:
        print(f"unknown ({exc})", file=sys.stderr)
        return EXIT_UNKNOWN
    _write(emit_dimacs(core), args.out)
    print(
        f"kept {core.num_clauses} of {f.num_clauses} clauses",
        file=sys.stdout if args.out not in (None, "-") else sys.stderr,
    )
    return EXIT_HOLDS


def cmd_stats(args) -> int:
    t0 = time.perf_counter()
    f = _read(args.in_path)
    timings = {"parse": time.perf_counter() - t0}
    verdict = None
    code = EXIT_HOLDS
    if args.mu:
        t1 = time.perf_counter()
        v = is_minimal_unsatisfiable(f, args.solver, timeout=args.timeout_secs)
        timings["verify"] = time.perf_counter() - t1
        verdict = v.status.value
        if v.status is Status.UNKNOWN:
            code = EXIT_UNKNOWN
        elif not v.is_mu:
            code = EXIT_FAILS
    params = {"k": args.k} if args.k else {}
    _print_record(StatsRecord.of(f, "file", params, verdict=verdict, timings=timings), args.json)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mucnf", description="Generate and verify minimal unsatisfiable CNF formulas."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_opts(p):
        p.add_argument("--solver", choices=["brute", "dpll", "auto"], default="auto")
        p.add_argument("--timeout-secs", type=float, default=DEFAULT_TIMEOUT)

    gen = sub.add_parser("generate", help="write a formula family as DIMACS")
    gen.add_argument("--family", choices=["f2", "f0", "f0k", "extremal"], required=True)
    gen.add_argument("--l", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--surjection", choices=["round-robin", "random"], default="round-robin")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--noise", type=int, default=0, help="append N random 3-clauses")
    gen.add_argument("--out", help="output path (default: standard output)")
    gen.add_argument("--json", action="store_true")
    gen.set_defaults(func=cmd_generate)

    ver = sub.add_parser("verify", help="check satisfiability or minimal unsatisfiability")
    ver.add_argument("in_path")
    ver.add_argument("--mode", choices=["sat", "mu"], default="mu")
    solver_opts(ver)
    ver.set_defaults(func=cmd_verify)

    shr = sub.add_parser("shrink", help="extract a minimal unsatisfiable subformula")
    shr.add_argument("in_path")
    shr.add_argument("--out")
    solver_opts(shr)
    shr.set_defaults(func=cmd_shrink)

    st = sub.add_parser("stats", help="print counts, width histogram and density")
    st.add_argument("in_path")
    st.add_argument("--mu", action="store_true", help="also verify minimal unsatisfiability")
    st.add_argument("--k", type=int, help="exponent for the density ratio (default: max width)")
    st.add_argument("--json", action="store_true")
    solver_opts(st)
    st.set_defaults(func=cmd_stats)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CnfError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
