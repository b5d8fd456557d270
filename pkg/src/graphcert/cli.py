"""Batch command-line front end.

Subcommands: generate (write family graphs), invariants (solve and emit
values plus certificates), verify (run a theorem check), explore (run a
conjecture exploration).  Exit code 0 means no theorem violation and no
error; 1 means a check reported a violation; 2 means a usage, parse, or
budget error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .certificates import certificate_to_json
from .families import graph_from_spec, parse_family_spec
from .formats import FormatError, read_graphs, to_dimacs, to_graph6
from .graph import Graph
from .solvers import (
    Budget,
    BudgetExceededError,
    UndecidedError,
    solve_all,
)
from .verify import (
    EXPLORE_IDS,
    THEOREM_CHECK_IDS,
    CheckReport,
    check_eight_fifths,
    check_eventually_identity_cover,
    check_kneser_alpha,
    check_kneser_chromatic,
    check_kneser_cover_ratio,
    check_small_gap,
    default_explore_instances,
    exhaustive_labeled_instances,
    explore_eight_fifths,
    run_default_check,
    tripartite_sample,
)
from .verify import (
    check_deficiency_bound,
    check_factor_critical,
    check_konig,
    check_theta_critical_bound,
)

_CHECK_FUNCS = {
    "konig": check_konig,
    "thm3col": check_eight_fifths,
    "gap912": check_small_gap,
    "gallai-theta": check_theta_critical_bound,
    "gallai-factor": check_factor_critical,
    "deficiency": check_deficiency_bound,
}


def _add_budget_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--budget-nodes", type=int, default=None, help="search node cap per solve"
    )
    parser.add_argument(
        "--budget-time", type=float, default=None, help="time cap per solve, seconds"
    )
    parser.add_argument(
        "--max-enum", type=int, default=None, help="subset-enumeration vertex cap"
    )


def _budget_from_args(args: argparse.Namespace) -> Budget | None:
    fields = {}
    if args.budget_nodes is not None:
        fields["max_nodes"] = args.budget_nodes
    if args.budget_time is not None:
        fields["time_cap"] = args.budget_time
    if args.max_enum is not None:
        fields["max_enum_vertices"] = args.max_enum
    return Budget(**fields) if fields else None


def _write_out(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_input_graphs(path: str) -> list[tuple[str, Graph]]:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    graphs = read_graphs(text)
    return [(f"graph6:{to_graph6(g)}", g) for g in graphs]


def _parse_range(text: str) -> range:
    lo_text, sep, hi_text = text.partition("..")
    if not sep:
        raise ValueError(f"range must look like A..B, got {text!r}")
    return range(int(lo_text), int(hi_text) + 1)


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = chunk.split(",")
        if len(parts) != 2:
            raise ValueError(f"pair must look like n,k, got {chunk!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    return pairs


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcert",
        description="Exact graph invariants with certificates, family "
        "constructors and theorem checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="construct a family graph")
    p_gen.add_argument("spec", help="family spec, e.g. g58 or extremalC:7")
    p_gen.add_argument(
        "--format", choices=("graph6", "dimacs"), default="graph6"
    )
    p_gen.add_argument("--out", default=None)

    p_inv = sub.add_parser("invariants", help="solve all invariants")
    p_inv.add_argument("--input", default=None, help="graph6 lines or DIMACS file")
    p_inv.add_argument("--spec", default=None, help="family spec to solve")
    p_inv.add_argument("--out", default=None)
    _add_budget_flags(p_inv)

    p_ver = sub.add_parser("verify", help="run a theorem check")
    p_ver.add_argument("check", choices=sorted(THEOREM_CHECK_IDS))
    p_ver.add_argument("--input", default=None, help="instances from a graph file")
    p_ver.add_argument("--family", default=None, help="family tag or full spec")
    p_ver.add_argument("--range", dest="range_", default=None, metavar="A..B")
    p_ver.add_argument("--pairs", default=None, help='e.g. "2,1;2,2;3,1"')
    p_ver.add_argument("--exhaustive-n", type=int, default=None)
    p_ver.add_argument("--samples", type=int, default=None)
    p_ver.add_argument("--seed", type=int, default=0)
    p_ver.add_argument("--c", type=int, default=2, help="threshold for evc-cover")
    p_ver.add_argument("--out", default=None)
    _add_budget_flags(p_ver)

    p_exp = sub.add_parser("explore", help="run a conjecture exploration")
    p_exp.add_argument("conjecture", choices=sorted(EXPLORE_IDS) + ["eight-fifths"])
    p_exp.add_argument("--input", default=None)
    p_exp.add_argument("--samples", type=int, default=1000)
    p_exp.add_argument("--max-n", type=int, default=18)
    p_exp.add_argument("--seed", type=int, default=0)
    p_exp.add_argument("--out", default=None)
    _add_budget_flags(p_exp)

    return parser


def cmd_generate(args: argparse.Namespace) -> int:
    g = graph_from_spec(args.spec)
    if args.format == "dimacs":
        text = to_dimacs(g)
    else:
        text = to_graph6(g) + "\n"
    _write_out(text, args.out)
    return 0


def cmd_invariants(args: argparse.Namespace) -> int:
    budget = _budget_from_args(args)
    graphs: list[tuple[str, Graph]] = []
    if args.spec is not None:
        spec = parse_family_spec(args.spec)
        graphs.append((spec.canonical(), graph_from_spec(args.spec)))
    if args.input is not None:
        graphs.extend(_read_input_graphs(args.input))
    if not graphs:
        raise ValueError("need --spec or --input")
    lines = []
    for label, g in graphs:
        solved = solve_all(g, budget)
        record = {
            "label": label,
            "n": g.n,
            "certificates": {
                name: certificate_to_json(res.certificate)
                for name, res in solved.items()
            },
        }
        for name, res in solved.items():
            record[name] = res.value
        lines.append(json.dumps(record, sort_keys=True, separators=(",", ":")))
    _write_out("\n".join(lines) + "\n", args.out)
    return 0


def exit_code_for(report: CheckReport) -> int:
    """Violations fail the run; findings and undecided instances do not."""
    return 1 if report.outcome == "violation" else 0


def _verify_instances(args: argparse.Namespace) -> list[tuple[str, Graph]] | None:
    """Explicit instance source from flags, or None for the default suite."""
    if args.input is not None:
        return _read_input_graphs(args.input)
    if args.family is not None:
        if args.range_ is not None:
            specs = [f"{args.family}:{x}" for x in _parse_range(args.range_)]
        else:
            specs = [args.family]
        return [(s, graph_from_spec(s)) for s in specs]
    if args.exhaustive_n is not None:
        return exhaustive_labeled_instances(args.exhaustive_n)
    return None


def cmd_verify(args: argparse.Namespace) -> int:
    budget = _budget_from_args(args)
    check = args.check
    seed = args.seed

    if check == "schrijver-chi":
        if args.pairs is not None:
            report = check_kneser_chromatic(_parse_pairs(args.pairs), budget)
        else:
            report = run_default_check(check, seed, budget, args.samples)
    elif check in ("kneser-alpha", "kneser-theta"):
        if args.pairs is not None:
            (n, k) = _parse_pairs(args.pairs)[0]
            fn = check_kneser_alpha if check == "kneser-alpha" else check_kneser_cover_ratio
            report = fn(n, k, args.samples or 200, seed, budget)
        else:
            report = run_default_check(check, seed, budget, args.samples)
    elif check == "evc-cover":
        instances = _verify_instances(args)
        if instances is None:
            from .verify import default_evc_instances

            instances = default_evc_instances(args.c, seed)
        report = check_eventually_identity_cover(instances, args.c, budget)
    else:
        instances = _verify_instances(args)
        if instances is None:
            report = run_default_check(check, seed, budget, args.samples)
        elif check == "thm3col" and args.samples:
            report = check_eight_fifths(
                instances + tripartite_sample(args.samples, 18, seed), budget
            )
        else:
            report = _CHECK_FUNCS[check](instances, budget)
    _write_out(report.jsonl_text(), args.out)
    return exit_code_for(report)


def cmd_explore(args: argparse.Namespace) -> int:
    budget = _budget_from_args(args)
    if args.input is not None:
        instances = _read_input_graphs(args.input)
    else:
        instances = default_explore_instances(args.seed, args.samples, args.max_n)
    report = explore_eight_fifths(instances, budget)
    _write_out(report.jsonl_text(), args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "generate":
            return cmd_generate(args)
        if args.command == "invariants":
            return cmd_invariants(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "explore":
            return cmd_explore(args)
    except (
        FormatError,
        ValueError,
        OSError,
        BudgetExceededError,
        UndecidedError,
    ) as exc:
        print(f"graphcert: error: {exc}", file=sys.stderr)
        return 2
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
