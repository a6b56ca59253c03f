"""Command-line front end: construct, invariants, formula, verify, core.

Exit codes: 0 success / all verdicts match, 1 verified violation, 2 usage or
parse error, 3 exact-solver or enumeration budget exceeded.  Reports are
line-delimited key=value records with sorted keys; XCL_BUDGET_MS caps exact
solver time.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import disintegration, extremal, search
from .graphs import (
    Graph6Error,
    GraphError,
    canonical_label,
    encode_graph6,
    parse_graph6,
)
from .invariants import (
    InvariantError,
    SolverBudgetError,
    circumference,
    count_cliques,
    detour_order,
    is_hamiltonian,
    is_traceable,
    is_two_connected,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_USAGE):
        super().__init__(message)
        self.code = code


def _emit_record(command: str, inputs: dict, outputs: dict, elapsed_ms: int, out) -> None:
    fields = {"schema_version": SCHEMA_VERSION, "command": command, "elapsed_ms": elapsed_ms}
    fields.update({f"in.{k}": v for k, v in inputs.items()})
    fields.update({f"out.{k}": v for k, v in outputs.items()})
    print(" ".join(f"{k}={_fmt(v)}" for k, v in sorted(fields.items())), file=out)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value)
    return str(value)


def _read_graph(arg: str):
    """Accept a literal graph6 line or a path to a one-graph file."""
    text = arg
    if os.path.exists(arg):
        with open(arg, encoding="ascii") as fh:
            text = fh.readline()
    try:
        return parse_graph6(text)
    except (Graph6Error, GraphError) as exc:
        raise CliError(f"cannot parse graph6 input: {exc}") from exc


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(spec)]


_FAMILIES = {
    "F": (extremal.build_F, ("n", "c", "k")),
    "G": (extremal.build_G, ("n", "c", "k")),
    "Gq": (extremal.build_Gq, ("n", "c", "k", "q")),
    "Fp": (extremal.build_Fprime, ("n", "p", "k")),
    "Gp": (extremal.build_Gprime, ("n", "p", "k")),
}


def _cmd_construct(args, out) -> int:
    builder, names = _FAMILIES[args.family]
    if len(args.params) != len(names):
        raise CliError(
            f"family {args.family} takes parameters {' '.join(names)}"
        )
    try:
        g = builder(*args.params)
    except extremal.ParameterError as exc:
        raise CliError(str(exc)) from exc
    length = detour_order(g) if args.family in ("Fp", "Gp") else circumference(g)
    length_key = "detour_order" if args.family in ("Fp", "Gp") else "circumference"
    print(encode_graph6(g), file=out)
    print(
        f"order={g.n} size={g.size()} delta={min(g.degree(v) for v in range(g.n))} "
        f"{length_key}={length} two_connected={_fmt(is_two_connected(g))}",
        file=out,
    )
    return EXIT_OK


def _cmd_invariants(args, out) -> int:
    t0 = time.monotonic()
    g = _read_graph(args.input)
    profile = count_cliques(g)
    outputs = {
        "order": g.n,
        "size": g.size(),
        "degree_sequence": g.degree_sequence(),
        "delta": min(g.degree_sequence()) if g.n else 0,
        "circumference": circumference(g),
        "detour_order": detour_order(g) if g.n else 0,
        "hamiltonian": is_hamiltonian(g),
        "traceable": is_traceable(g),
        "two_connected": is_two_connected(g),
        "clique_profile": profile.counts,
    }
    _emit_record(
        "invariants", {"graph6": encode_graph6(g)}, outputs,
        int((time.monotonic() - t0) * 1000), out,
    )
    return EXIT_OK


_FORMULAS = {
    "f": (lambda p, s: extremal.f_s(*p, s), 3),
    "g": (lambda p, s: extremal.g_s(*p, s), 3),
    "gq": (lambda p, s: extremal.g_sq(*p, s), 4),
    "phi": (lambda p, s: extremal.phi_s(*p, s), 3),
    "h": (lambda p, s: extremal.h_s_bound(*p, s), 3),
    "erdos": (lambda p, s: extremal.erdos_h(*p), 2),
    "lambda": (lambda p, s: extremal.lambda_s(*p, s), 3),
    "phi14": (lambda p, s: extremal.phi_piecewise(*p), 2),
    "psi": (lambda p, s: extremal.psi(*p), 3),
}


def _cmd_formula(args, out) -> int:
    fn, arity = _FORMULAS[args.name]
    if len(args.params) != arity:
        raise CliError(f"formula {args.name} takes {arity} parameters")
    try:
        value = fn(tuple(args.params), args.s)
    except extremal.ParameterError as exc:
        raise CliError(str(exc)) from exc
    if args.name == "phi14":
        value, families = value
        print(f"{value} families={','.join(sorted(families))}", file=out)
    else:
        print(value, file=out)
    return EXIT_OK


def _verify_one(theorem: str, n: int, s_values, corpus):
    if corpus is not None:
        raise CliError("corpus-backed verification supports only built-in theorems over enumerable orders; drop --corpus or the extra orders")
    return search.verify_theorem(theorem, [n], s_values)


def _cmd_verify(args, out) -> int:
    n_values = _parse_range(args.n)
    s_values = _parse_range(args.s) if args.s else [2]
    if args.theorem not in search.THEOREM_IDS:
        raise CliError(f"unknown theorem {args.theorem!r}; known: {', '.join(search.THEOREM_IDS)}")
    corpus = args.corpus

    def run(n):
        if corpus is not None:
            with open(corpus, encoding="ascii") as fh:
                graphs = list(search.ingest_graph6(fh))
            records = tuple(
                search.graph_record(g) for g in graphs if g.n == n
            )
            if args.theorem not in ("main8", "ning_peng7", "cor17"):
                raise CliError("--corpus supports main8, ning_peng7 and cor17")
            out_reports = []
            for c, k in search._nck_tuples(n):
                for s in s_values:
                    if args.theorem == "cor17":
                        for q in range(1, k + 1):
                            if q <= n - c - 1 + c // 2:
                                out_reports.append(
                                    search.max_cliques_over_class(
                                        n, c, k, s, "exact", q, records=records
                                    )
                                )
                    else:
                        mode = "exact" if args.theorem == "main8" else "at_least"
                        out_reports.append(
                            search.max_cliques_over_class(
                                n, c, k, s, mode, records=records
                            )
                        )
            return out_reports
        return search.verify_theorem(args.theorem, [n], s_values)

    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            chunks = list(pool.map(run, n_values))
    else:
        chunks = [run(n) for n in n_values]

    any_violation = False
    for chunk in chunks:
        for rep in chunk:
            outputs = {
                "verdict": rep.verdict,
                "graphs_examined": rep.graphs_examined,
            }
            if rep.empirical_max is not None:
                outputs["empirical_max"] = rep.empirical_max
            if rep.formula_value is not None:
                outputs["formula_value"] = rep.formula_value
            if rep.witnesses:
                outputs["witnesses"] = rep.witnesses
            _emit_record(
                f"verify.{rep.theorem_id}",
                dict(rep.params),
                outputs,
                int(rep.elapsed * 1000),
                out,
            )
            if rep.verdict == "violation":
                any_violation = True
    return EXIT_VIOLATION if any_violation else EXIT_OK


def _cmd_core(args, out) -> int:
    g = _read_graph(args.input)
    try:
        if args.seed is not None:
            trace = disintegration.core_with_seed(g, args.t, args.seed)
        else:
            trace = disintegration.core(g, args.t)
    except (disintegration.SeedDegreeError, GraphError) as exc:
        raise CliError(str(exc)) from exc
    for v, d in trace.deleted:
        print(f"delete vertex={v} degree={d}", file=out)
    if trace.is_null():
        print("core=null", file=out)
    else:
        print(f"core={encode_graph6(trace.core)} vertices={_fmt(trace.core_vertices)}", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xcl",
        description="Exhaustive small-graph laboratory for clique maxima under "
        "order, circumference and minimum-degree constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an extremal family graph")
    p.add_argument("family", choices=sorted(_FAMILIES))
    p.add_argument("params", type=int, nargs="*")
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("invariants", help="full invariant report for one graph")
    p.add_argument("input", help="graph6 line or file")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("formula", help="evaluate a closed-form count")
    p.add_argument("name", choices=sorted(_FORMULAS))
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--s", type=int, default=2)
    p.set_defaults(fn=_cmd_formula)

    p = sub.add_parser("verify", help="exhaustively verify a theorem")
    p.add_argument("theorem")
    p.add_argument("--n", required=True, help="order or range, e.g. 5..8")
    p.add_argument("--s", default=None, help="clique size or range")
    p.add_argument("--corpus", default=None, help="graph6 corpus file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "record"), default="record")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("core", help="low-degree peeling trace and core")
    p.add_argument("input", help="graph6 line or file")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help="vertex deleted first")
    p.set_defaults(fn=_cmd_core)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.fn(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (SolverBudgetError, search.EnumerationBudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (Graph6Error, GraphError, InvariantError, extremal.ParameterError, search.SearchError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
