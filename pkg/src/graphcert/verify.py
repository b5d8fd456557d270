"""Executable checks for the structural results the solvers certify.

Each check runs over a list of (label, graph) instances and produces a
CheckReport: one JSON line of metadata, one line per instance, and a
summary line.  Violations carry the offending graph as graph6 plus the
certificates proving both sides of the violated inequality, so they can
be revalidated from the report alone.  Reports are byte-reproducible
from (check id, instance labels, seed, budget); the timestamp lives in
the metadata line only and is excluded from fingerprints.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field, replace
from datetime import datetime, timezone
from typing import Sequence

from .brute import all_labeled_graphs
from .certificates import Certificate, certificate_to_json, verify_certificate
from .families import (
    complete,
    cycle,
    eight_fifths_extremal,
    g58,
    gnp,
    kneser,
    ramsey_r35,
    random_3partite,
    random_bipartite,
    schrijver,
    schrijver_labels,
    schrijver_order,
)
from .formats import parse_graph6, to_graph6
from .graph import Graph, bits
from .solvers import (
    DEFAULT_BUDGET,
    Budget,
    UndecidedError,
    chromatic_number,
    clique_cover_number,
    eventually_identity_bound,
    in_third_stability_class,
    max_clique,
    max_deficiency,
    max_matching,
    max_stable_set,
    neighborhood_partition_cover,
    triangle_free_cover,
)

# premise tests that scan all induced subgraphs stay below this size;
# larger instances either take an exact shortcut or come back undecided
SCAN_CAP = 14

THEOREM_CHECK_IDS = (
    "konig",
    "thm3col",
    "gap912",
    "gallai-theta",
    "gallai-factor",
    "deficiency",
    "kneser-alpha",
    "kneser-theta",
    "schrijver-chi",
    "evc-cover",
)
EXPLORE_IDS = ("8/5",)

_EVC_PREMISE_NOTE = (
    "threshold convention: bounding functions are identity strictly above "
    "the threshold c; the alternative reading (identity at and above c) "
    "would shift every bound by one threshold step"
)


@dataclass(frozen=True)
class Counterexample:
    """A violated inequality with everything needed to re-derive it."""

    graph6: str
    values: dict
    inequality: str
    lhs: float
    rhs: float
    certificates: dict

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "values": dict(self.values),
            "inequality": self.inequality,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "certificates": dict(self.certificates),
        }

    @staticmethod
    def from_json(data: dict) -> "Counterexample":
        return Counterexample(
            graph6=data["graph6"],
            values=dict(data["values"]),
            inequality=data["inequality"],
            lhs=data["lhs"],
            rhs=data["rhs"],
            certificates=dict(data["certificates"]),
        )


def make_counterexample(
    g: Graph,
    values: dict,
    inequality: str,
    lhs: float,
    rhs: float,
    certificates: dict[str, Certificate],
) -> Counterexample:
    return Counterexample(
        graph6=to_graph6(g),
        values=dict(values),
        inequality=inequality,
        lhs=lhs,
        rhs=rhs,
        certificates={k: certificate_to_json(c) for k, c in certificates.items()},
    )


_REVALIDATORS = {
    "omega": lambda g, b: max_clique(g, b).value,
    "alpha": lambda g, b: max_stable_set(g, b).value,
    "chi": lambda g, b: chromatic_number(g, b).value,
    "theta": lambda g, b: clique_cover_number(g, b).value,
    "nu": lambda g, b: max_matching(g).value,
    "deficiency": lambda g, b: max_deficiency(g, b),
}


def revalidate(ce: Counterexample, budget: Budget | None = None) -> bool:
    """Re-solve the stored graph and confirm the recorded values; also
    re-check every embedded certificate from definitions."""
    from .certificates import certificate_from_json

    g = parse_graph6(ce.graph6)
    for key, recorded in ce.values.items():
        solver = _REVALIDATORS.get(key)
        if solver is not None and solver(g, budget) != recorded:
            return False
    for cert_json in ce.certificates.values():
        if not verify_certificate(g, certificate_from_json(cert_json)):
            return False
    return True


@dataclass
class InstanceResult:
    label: str
    n: int
    status: str  # pass | fail | skip | undecided | finding
    values: dict = field(default_factory=dict)
    note: str | None = None
    counterexample: Counterexample | None = None

    def to_json(self, index: int) -> dict:
        data = {
            "type": "instance",
            "index": index,
            "label": self.label,
            "n": self.n,
            "status": self.status,
            "values": dict(self.values),
        }
        if self.note is not None:
            data["note"] = self.note
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample.to_json()
        return data


@dataclass
class CheckReport:
    check_id: str
    meta: dict
    instances: list[InstanceResult]
    generated_at: str

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0, "undecided": 0, "finding": 0}
        for inst in self.instances:
            out[inst.status] += 1
        return out

    @property
    def outcome(self) -> str:
        counts = self.counts
        if counts["fail"]:
            return "violation"
        if counts["undecided"]:
            return "undecided"
        return "all-pass"

    def counterexamples(self) -> list[Counterexample]:
        return [
            inst.counterexample
            for inst in self.instances
            if inst.counterexample is not None
        ]

    def jsonl_lines(self, include_timestamp: bool = True) -> list[str]:
        meta = {"type": "meta", "check": self.check_id, **self.meta}
        meta["instances"] = len(self.instances)
        if include_timestamp:
            meta["generated_at"] = self.generated_at
        lines = [_dump(meta)]
        for i, inst in enumerate(self.instances):
            lines.append(_dump(inst.to_json(i)))
        summary = {
            "type": "summary",
            "outcome": self.outcome,
            "counts": self.counts,
            "instances": len(self.instances),
        }
        lines.append(_dump(summary))
        return lines

    def jsonl_text(self, include_timestamp: bool = True) -> str:
        return "\n".join(self.jsonl_lines(include_timestamp)) + "\n"

    def fingerprint(self) -> str:
        """Report text with the timestamp removed, for byte comparison."""
        return self.jsonl_text(include_timestamp=False)


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _report(check_id: str, meta: dict, instances: list[InstanceResult]) -> CheckReport:
    stamp = datetime.now(timezone.utc).isoformat()
    return CheckReport(check_id, dict(meta), instances, stamp)


def _budget_meta(budget: Budget) -> dict:
    return {
        "max_nodes": budget.max_nodes,
        "max_enum_vertices": budget.max_enum_vertices,
        "time_cap": budget.time_cap,
    }


# ----------------------------------------------------------------------
# instance suites

Instances = Sequence[tuple[str, Graph]]


def exhaustive_labeled_instances(max_n: int) -> list[tuple[str, Graph]]:
    """Every labeled graph on up to max_n vertices (max_n <= 6)."""
    out = []
    for n in range(max_n + 1):
        for i, g in enumerate(all_labeled_graphs(n)):
            out.append((f"labeled:{n},index={i}", g))
    return out


def gnp_sample(
    count: int, n_low: int, n_high: int, seed: int, p: float = 0.5
) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(n_low, n_high)
        sub_seed = rng.randrange(2**32)
        out.append((f"gnp:{n},{p!r},seed={sub_seed}", gnp(n, p, sub_seed)))
    return out


def bipartite_sample(
    count: int, max_n: int, seed: int, p: float = 0.5
) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_n)
        a = rng.randint(1, n - 1)
        b = n - a
        sub_seed = rng.randrange(2**32)
        label = f"random-bipartite:{a},{b},{p!r},seed={sub_seed}"
        out.append((label, random_bipartite(a, b, p, sub_seed)))
    return out


def tripartite_sample(
    count: int, max_n: int, seed: int, p: float = 0.5
) -> list[tuple[str, Graph]]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(3, max_n)
        a = rng.randint(1, n - 2)
        b = rng.randint(1, n - a - 1)
        c = n - a - b
        sub_seed = rng.randrange(2**32)
        label = f"random-3partite:{a},{b},{c},{p!r},seed={sub_seed}"
        out.append((label, random_3partite(a, b, c, p, sub_seed)))
    return out


def odd_gnp_sample(
    count: int, max_n: int, seed: int, p: float = 0.5
) -> list[tuple[str, Graph]]:
    """gnp draws restricted to odd vertex counts."""
    rng = random.Random(seed)
    out = []
    choices = [n for n in range(3, max_n + 1) if n % 2 == 1]
    for _ in range(count):
        n = rng.choice(choices)
        sub_seed = rng.randrange(2**32)
        out.append((f"gnp:{n},{p!r},seed={sub_seed}", gnp(n, p, sub_seed)))
    return out


def triangle_free_sample(
    count: int, max_n: int, seed: int, p: float = 0.2
) -> list[tuple[str, Graph]]:
    """Rejection-sampled triangle-free gnp draws (deterministic per seed)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(4, max_n)
        sub_seed = rng.randrange(2**32)
        g = gnp(n, p, sub_seed)
        if g.find_triangle() is None:
            out.append((f"gnp:{n},{p!r},seed={sub_seed}", g))
    return out


def induced_subgraph_masks(host_n: int, samples: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    return [rng.getrandbits(host_n) for _ in range(samples)]


# ----------------------------------------------------------------------
# theorem checks

def check_konig(instances: Instances, budget: Budget | None = None) -> CheckReport:
    """Bipartite graphs: clique cover number equals stability number."""
    budget = budget or DEFAULT_BUDGET
    results = []
    for label, g in instances:
        if not g.is_bipartite():
            results.append(
                InstanceResult(label, g.n, "skip", note="not bipartite")
            )
            continue
        alpha = max_stable_set(g, budget)
        theta = clique_cover_number(g, budget)
        values = {"alpha": alpha.value, "theta": theta.value}
        if theta.value == alpha.value:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                values,
                "theta == alpha",
                theta.value,
                alpha.value,
                {"stable_set": alpha.certificate, "clique_cover": theta.certificate},
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {"budget": _budget_meta(budget)}
    return _report("konig", meta, results)


def check_eight_fifths(
    instances: Instances,
    budget: Budget | None = None,
    scan_cap: int = SCAN_CAP,
) -> CheckReport:
    """Members of the one-third stability class: theta <= floor(8 alpha/5).

    Membership uses the exhaustive subset scan up to scan_cap vertices
    and the 3-colourability sufficiency above it; the route taken is
    recorded per instance.
    """
    budget = budget or DEFAULT_BUDGET
    membership_budget = replace(
        budget, max_enum_vertices=min(budget.max_enum_vertices, scan_cap)
    )
    results = []
    for label, g in instances:
        try:
            member = in_third_stability_class(g, membership_budget)
        except UndecidedError as exc:
            results.append(InstanceResult(label, g.n, "undecided", note=str(exc)))
            continue
        if not member.is_member:
            witness = member.witness or ()
            results.append(
                InstanceResult(
                    label,
                    g.n,
                    "skip",
                    {"witness_size": len(witness)},
                    note="not in the one-third stability class",
                )
            )
            continue
        alpha = max_stable_set(g, budget)
        theta = clique_cover_number(g, budget)
        bound = 8 * alpha.value // 5
        values = {
            "alpha": alpha.value,
            "theta": theta.value,
            "bound": bound,
            "membership": member.status,
        }
        if theta.value <= bound:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                {"alpha": alpha.value, "theta": theta.value},
                "theta <= floor(8*alpha/5)",
                theta.value,
                bound,
                {"stable_set": alpha.certificate, "clique_cover": theta.certificate},
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {"budget": _budget_meta(budget), "scan_cap": scan_cap}
    return _report("thm3col", meta, results)


def check_small_gap(instances: Instances, budget: Budget | None = None) -> CheckReport:
    """Gap between cover and stability: at most 1 up to 9 vertices, at
    most 2 up to 12; larger instances are recorded as notes only."""
    budget = budget or DEFAULT_BUDGET
    results = []
    for label, g in instances:
        alpha = max_stable_set(g, budget)
        theta = clique_cover_number(g, budget)
        gap = theta.value - alpha.value
        values = {"alpha": alpha.value, "theta": theta.value, "gap": gap}
        if g.n > 12:
            results.append(
                InstanceResult(
                    label, g.n, "skip", values, note="outside the size range"
                )
            )
            continue
        bound = 1 if g.n <= 9 else 2
        values["bound"] = bound
        if gap <= bound:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                {"alpha": alpha.value, "theta": theta.value},
                f"theta - alpha <= {bound}",
                gap,
                bound,
                {"stable_set": alpha.certificate, "clique_cover": theta.certificate},
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {"budget": _budget_meta(budget)}
    return _report("gap912", meta, results)


def check_theta_critical_bound(
    instances: Instances, budget: Budget | None = None
) -> CheckReport:
    """Connected graphs whose every vertex deletion lowers the cover
    number satisfy theta <= (n+1)/2."""
    budget = budget or DEFAULT_BUDGET
    results = []
    for label, g in instances:
        if g.n == 0 or not g.is_connected():
            results.append(InstanceResult(label, g.n, "skip", note="not connected"))
            continue
        theta = clique_cover_number(g, budget)
        if not is_theta_critical_cached(g, theta.value, budget):
            results.append(
                InstanceResult(
                    label,
                    g.n,
                    "skip",
                    {"theta": theta.value},
                    note="not cover-critical",
                )
            )
            continue
        values = {"theta": theta.value, "bound_times_2": g.n + 1}
        if 2 * theta.value <= g.n + 1:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                {"theta": theta.value},
                "2*theta <= n + 1",
                2 * theta.value,
                g.n + 1,
                {"clique_cover": theta.certificate},
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {"budget": _budget_meta(budget)}
    return _report("gallai-theta", meta, results)


def is_theta_critical_cached(g: Graph, theta_value: int, budget: Budget) -> bool:
    """Criticality test reusing an already-solved cover number."""
    for v in range(g.n):
        rest = tuple(w for w in range(g.n) if w != v)
        sub = g.induced_subgraph(rest)
        if clique_cover_number(sub, budget).value >= theta_value:
            return False
    return True


def check_factor_critical(
    instances: Instances, budget: Budget | None = None
) -> CheckReport:
    """Connected graphs where no vertex deletion lowers the matching
    number have a perfect matching after every single deletion."""
    budget = budget or DEFAULT_BUDGET
    results = []
    for label, g in instances:
        if g.n == 0 or not g.is_connected():
            results.append(InstanceResult(label, g.n, "skip", note="not connected"))
            continue
        nu = max_matching(g).value
        premise = True
        for v in range(g.n):
            rest = tuple(w for w in range(g.n) if w != v)
            if max_matching(g.induced_subgraph(rest)).value != nu:
                premise = False
                break
        if not premise:
            results.append(
                InstanceResult(
                    label,
                    g.n,
                    "skip",
                    {"nu": nu},
                    note="some deletion lowers the matching number",
                )
            )
            continue
        values = {"nu": nu}
        # premise forces odd order and nu == (n-1)/2, i.e. factor-critical
        factor_critical = g.n % 2 == 1 and 2 * nu == g.n - 1
        if factor_critical:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                {"nu": nu},
                "premise implies factor-critical",
                nu,
                (g.n - 1) // 2,
                {"matching": max_matching(g).certificate},
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {"budget": _budget_meta(budget)}
    return _report("gallai-factor", meta, results)


def check_deficiency_bound(
    instances: Instances, budget: Budget | None = None
) -> CheckReport:
    """theta <= alpha + max over induced H of (|V(H)| - 2 alpha(H))."""
    budget = budget or DEFAULT_BUDGET
    results = []
    for label, g in instances:
        try:
            deficiency = max_deficiency(g, budget)
        except UndecidedError as exc:
            results.append(InstanceResult(label, g.n, "undecided", note=str(exc)))
            continue
        alpha = max_stable_set(g, budget)
        theta = clique_cover_number(g, budget)
        values = {
            "alpha": alpha.value,
            "theta": theta.value,
            "deficiency": deficiency,
        }
        if theta.value <= alpha.value + deficiency:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                values,
                "theta <= alpha + deficiency",
                theta.value,
                alpha.value + deficiency,
                {"stable_set": alpha.certificate, "clique_cover": theta.certificate},
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {"budget": _budget_meta(budget)}
    return _report("deficiency", meta, results)


def _induced_instances(
    host_label: str, host: Graph, samples: int, seed: int
) -> list[tuple[str, Graph]]:
    out = [(host_label, host), (f"{host_label}/mask=1", host.induced_subgraph((0,)))]
    for mask in induced_subgraph_masks(host.n, samples, seed):
        verts = tuple(bits(mask))
        out.append((f"{host_label}/mask={mask}", host.induced_subgraph(verts)))
    return out


def check_kneser_alpha(
    n: int,
    k: int,
    samples: int = 200,
    seed: int = 0,
    budget: Budget | None = None,
) -> CheckReport:
    """Induced subgraphs H of the disjointness graph satisfy
    alpha(H) * (2n+k) >= n * |V(H)|."""
    budget = budget or DEFAULT_BUDGET
    host_label = f"kneser:{n},{k}"
    host = kneser(n, k)
    results = []
    for label, g in _induced_instances(host_label, host, samples, seed):
        alpha = max_stable_set(g, budget)
        lhs = alpha.value * (2 * n + k)
        rhs = n * g.n
        values = {"alpha": alpha.value, "lhs": lhs, "rhs": rhs}
        if lhs >= rhs:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                {"alpha": alpha.value},
                f"alpha * {2 * n + k} >= {n} * |V|",
                lhs,
                rhs,
                {"stable_set": alpha.certificate},
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {
        "budget": _budget_meta(budget),
        "host": host_label,
        "samples": samples,
        "seed": seed,
    }
    return _report("kneser-alpha", meta, results)


def check_kneser_cover_ratio(
    n: int,
    k: int,
    samples: int = 200,
    seed: int = 0,
    budget: Budget | None = None,
) -> CheckReport:
    """Induced subgraphs G of the disjointness graph satisfy
    theta(G) * n <= (n+k) * alpha(G)."""
    budget = budget or DEFAULT_BUDGET
    host_label = f"kneser:{n},{k}"
    host = kneser(n, k)
    results = []
    for label, g in _induced_instances(host_label, host, samples, seed):
        alpha = max_stable_set(g, budget)
        theta = clique_cover_number(g, budget)
        lhs = theta.value * n
        rhs = (n + k) * alpha.value
        values = {
            "alpha": alpha.value,
            "theta": theta.value,
            "lhs": lhs,
            "rhs": rhs,
        }
        if lhs <= rhs:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                {"alpha": alpha.value, "theta": theta.value},
                f"theta * {n} <= {n + k} * alpha",
                lhs,
                rhs,
                {"stable_set": alpha.certificate, "clique_cover": theta.certificate},
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {
        "budget": _budget_meta(budget),
        "host": host_label,
        "samples": samples,
        "seed": seed,
    }
    return _report("kneser-theta", meta, results)


def check_kneser_chromatic(
    pairs: Sequence[tuple[int, int] | tuple[int, int, str]],
    budget: Budget | None = None,
) -> CheckReport:
    """chi of the disjointness graph and of its sparse-set subgraph both
    equal k+2; the sparse-set vertex count matches the closed form.

    Each pair is (n, k) or (n, k, which) with which in {"both",
    "kneser", "schrijver"}.
    """
    budget = budget or DEFAULT_BUDGET
    results = []
    for pair in pairs:
        n, k = pair[0], pair[1]
        which = pair[2] if len(pair) > 2 else "both"
        expected = k + 2
        targets = []
        if which in ("both", "kneser"):
            targets.append(("kneser", f"kneser:{n},{k}"))
        if which in ("both", "schrijver"):
            targets.append(("schrijver", f"schrijver:{n},{k}"))
        for kind, label in targets:
            try:
                g = kneser(n, k) if kind == "kneser" else schrijver(n, k)
            except ValueError as exc:
                results.append(InstanceResult(label, 0, "undecided", note=str(exc)))
                continue
            values = {"expected_chi": expected}
            if kind == "schrijver":
                order = schrijver_order(n, k)
                enumerated = len(schrijver_labels(n, k))
                values["order_formula"] = order
                values["order_enumerated"] = enumerated
                if not g.n == order == enumerated:
                    ce = make_counterexample(
                        g,
                        {},
                        "vertex count == closed-form order",
                        g.n,
                        order,
                        {},
                    )
                    results.append(
                        InstanceResult(label, g.n, "fail", values, counterexample=ce)
                    )
                    continue
            chi = chromatic_number(g, budget)
            values["chi"] = chi.value
            if chi.value == expected:
                results.append(InstanceResult(label, g.n, "pass", values))
            else:
                ce = make_counterexample(
                    g,
                    {"chi": chi.value},
                    f"chi == {expected}",
                    chi.value,
                    expected,
                    {"coloring": chi.certificate},
                )
                results.append(
                    InstanceResult(label, g.n, "fail", values, counterexample=ce)
                )
    meta = {"budget": _budget_meta(budget)}
    return _report("schrijver-chi", meta, results)


def _scan_identity_premise(
    g: Graph, c: int, budget: Budget
) -> tuple[bool, tuple[int, ...] | None]:
    """Exhaustively test: every induced subgraph with clique number above
    c is colourable with clique-number many colours.  Returns (holds,
    witness vertex set)."""
    from .solvers import _alpha_table

    omega_by_subset = _alpha_table(g.complement())
    for m in range(1, 1 << g.n):
        w = omega_by_subset[m]
        if w <= c:
            continue
        verts = tuple(bits(m))
        if chromatic_number(g.induced_subgraph(verts), budget).value > w:
            return False, verts
    return True, None


def check_eventually_identity_cover(
    instances: Instances,
    c: int = 2,
    budget: Budget | None = None,
    scan_cap: int = SCAN_CAP,
) -> CheckReport:
    """For instances where colourings need only clique-number many
    colours above threshold c: theta <= B(c, alpha), and the
    neighbourhood-peeling cover is valid and also within the bound.

    The premise route per instance is either "clique-below-threshold"
    (clique number at most c, so the condition is vacuous) or
    "exhaustive-scan" (all induced subgraphs checked, n <= scan_cap).
    """
    budget = budget or DEFAULT_BUDGET
    results = []
    for label, g in instances:
        omega = max_clique(g, budget)
        if omega.value <= c:
            route = "clique-below-threshold"
        elif g.n <= scan_cap:
            holds, witness = _scan_identity_premise(g, c, budget)
            if not holds:
                results.append(
                    InstanceResult(
                        label,
                        g.n,
                        "skip",
                        {"witness_size": len(witness)},
                        note="premise fails: some induced subgraph needs "
                        "more colours than its clique number",
                    )
                )
                continue
            route = "exhaustive-scan"
        else:
            results.append(
                InstanceResult(
                    label,
                    g.n,
                    "undecided",
                    {"omega": omega.value},
                    note=f"premise scan needs n <= {scan_cap}",
                )
            )
            continue
        alpha = max_stable_set(g, budget)
        theta = clique_cover_number(g, budget)
        bound = eventually_identity_bound(c, alpha.value)
        cover = neighborhood_partition_cover(g, budget)
        cover_ok = verify_certificate(g, cover)
        values = {
            "alpha": alpha.value,
            "theta": theta.value,
            "bound": bound,
            "cover_size": cover.size,
            "cover_valid": cover_ok,
            "premise_route": route,
        }
        ok = theta.value <= bound and cover_ok and cover.size <= bound
        if ok:
            results.append(InstanceResult(label, g.n, "pass", values))
        else:
            ce = make_counterexample(
                g,
                {"alpha": alpha.value, "theta": theta.value},
                "theta <= B(c, alpha) and valid cover within bound",
                max(theta.value, cover.size),
                bound,
                {
                    "stable_set": alpha.certificate,
                    "clique_cover": theta.certificate,
                    "constructed_cover": cover,
                },
            )
            results.append(
                InstanceResult(label, g.n, "fail", values, counterexample=ce)
            )
    meta = {
        "budget": _budget_meta(budget),
        "c": c,
        "scan_cap": scan_cap,
        "premise_note": _EVC_PREMISE_NOTE,
    }
    return _report("evc-cover", meta, results)


# ----------------------------------------------------------------------
# conjecture exploration

def explore_eight_fifths(
    instances: Instances,
    budget: Budget | None = None,
    scan_cap: int = SCAN_CAP,
) -> CheckReport:
    """Record theta against floor(8 alpha/5) on instances that are
    colour-bounded by the map sending 2 to 3 and everything else to
    itself.  Exceeding the 8/5 line is archived as a finding, never a
    failure; the report also tracks the refuted 3/2 guess and the best
    cover seen at stability number 3."""
    budget = budget or DEFAULT_BUDGET
    results = []
    best_alpha3_theta = None
    best_alpha3_label = None
    max_ratio = None
    max_ratio_label = None
    for label, g in instances:
        chi = chromatic_number(g, budget)
        if chi.value <= 3:
            route = "three-colourable"
        elif g.n <= scan_cap:
            holds, _witness = _scan_shifted_premise(g, budget)
            if not holds:
                results.append(
                    InstanceResult(
                        label, g.n, "skip", note="not colour-bounded by the map"
                    )
                )
                continue
            route = "exhaustive-scan"
        else:
            results.append(
                InstanceResult(
                    label,
                    g.n,
                    "undecided",
                    {"chi": chi.value},
                    note=f"premise scan needs n <= {scan_cap}",
                )
            )
            continue
        alpha = max_stable_set(g, budget)
        theta = clique_cover_number(g, budget)
        bound = 8 * alpha.value // 5
        old_bound = 3 * alpha.value // 2
        values = {
            "alpha": alpha.value,
            "theta": theta.value,
            "bound": bound,
            "old_bound": old_bound,
            "exceeds_old_bound": theta.value > old_bound,
            "premise_route": route,
        }
        if alpha.value == 3 and (
            best_alpha3_theta is None or theta.value > best_alpha3_theta
        ):
            best_alpha3_theta = theta.value
            best_alpha3_label = label
        if alpha.value > 0:
            ratio = theta.value / alpha.value
            if max_ratio is None or ratio > max_ratio:
                max_ratio = ratio
                max_ratio_label = label
        if theta.value > bound:
            ce = make_counterexample(
                g,
                {"alpha": alpha.value, "theta": theta.value},
                "theta <= floor(8*alpha/5)",
                theta.value,
                bound,
                {"stable_set": alpha.certificate, "clique_cover": theta.certificate},
            )
            results.append(
                InstanceResult(label, g.n, "finding", values, counterexample=ce)
            )
        else:
            results.append(InstanceResult(label, g.n, "pass", values))
    meta = {
        "budget": _budget_meta(budget),
        "scan_cap": scan_cap,
        "best_theta_at_alpha3": best_alpha3_theta,
        "best_theta_at_alpha3_label": best_alpha3_label,
        "max_ratio": max_ratio,
        "max_ratio_label": max_ratio_label,
    }
    return _report("8/5", meta, results)


def _scan_shifted_premise(
    g: Graph, budget: Budget
) -> tuple[bool, tuple[int, ...] | None]:
    """Premise for the exploration: chi(H) <= 3 when omega(H) = 2 and
    chi(H) <= omega(H) when omega(H) >= 3, over all induced H."""
    from .solvers import _alpha_table

    omega_by_subset = _alpha_table(g.complement())
    for m in range(1, 1 << g.n):
        w = omega_by_subset[m]
        if w <= 1:
            continue
        limit = 3 if w == 2 else w
        verts = tuple(bits(m))
        if chromatic_number(g.induced_subgraph(verts), budget).value > limit:
            return False, verts
    return True, None


# ----------------------------------------------------------------------
# default suites

def default_konig_instances(seed: int = 0, count: int = 500) -> list[tuple[str, Graph]]:
    fixed = [
        ("cycle:6", cycle(6)),
        ("random-bipartite:1,5,1.0,seed=0", random_bipartite(1, 5, 1.0, 0)),
    ]
    return fixed + bipartite_sample(count, 16, seed)


def default_eight_fifths_instances(
    seed: int = 0, count: int = 1000, max_n: int = 18
) -> list[tuple[str, Graph]]:
    fixed = [("g58", g58())]
    fixed += [(f"extremalC:{x}", eight_fifths_extremal(x)) for x in range(16)]
    return fixed + tripartite_sample(count, max_n, seed)


def default_small_gap_instances(
    seed: int = 0, samples_per_size: int = 10_000, exhaustive_n: int = 6
) -> list[tuple[str, Graph]]:
    out = exhaustive_labeled_instances(exhaustive_n)
    for i, n in enumerate((7, 8, 9)):
        out += gnp_sample(samples_per_size, n, n, seed + i)
    out.append(("ramsey35", ramsey_r35()))
    return out


def default_theta_critical_instances(
    seed: int = 0, count: int = 200
) -> list[tuple[str, Graph]]:
    fixed = [("cycle:5", cycle(5)), ("cycle:7", cycle(7))]
    return fixed + gnp_sample(count, 4, 14, seed)


def default_factor_critical_instances(
    seed: int = 0, count: int = 200
) -> list[tuple[str, Graph]]:
    fixed = [("cycle:5", cycle(5)), ("cycle:6", cycle(6))]
    return fixed + odd_gnp_sample(count, 15, seed)


def default_deficiency_instances(
    seed: int = 0, count: int = 500
) -> list[tuple[str, Graph]]:
    fixed = [("g58", g58()), ("cycle:5", cycle(5)), ("cycle:6", cycle(6))]
    return fixed + gnp_sample(count, 1, 14, seed)


def default_schrijver_pairs() -> list[tuple[int, int, str]]:
    return [
        (2, 1, "both"),
        (2, 2, "both"),
        (3, 1, "both"),
        (2, 3, "schrijver"),
    ]


def default_evc_instances(c: int = 2, seed: int = 0) -> list[tuple[str, Graph]]:
    if c == 1:
        fixed = [
            ("complete:1", complete(1)),
            ("complete:4", complete(4)),
            ("cycle:4", cycle(4)),
            ("cycle:6", cycle(6)),
            ("random-bipartite:1,5,1.0,seed=0", random_bipartite(1, 5, 1.0, 0)),
        ]
        return fixed + bipartite_sample(10, 10, seed)
    fixed = [
        ("cycle:5", cycle(5)),
        ("cycle:7", cycle(7)),
        ("cycle:9", cycle(9)),
        ("kneser:2,1", kneser(2, 1)),
        ("g58", g58()),
        ("ramsey35", ramsey_r35()),
    ]
    return fixed + triangle_free_sample(10, 12, seed)


def default_explore_instances(
    seed: int = 0, count: int = 1000, max_n: int = 18
) -> list[tuple[str, Graph]]:
    fixed = [
        ("g58", g58()),
        ("cycle:5+isolated", cycle(5).add_isolated_vertices(1)),
    ]
    return fixed + tripartite_sample(count, max_n, seed)


def run_default_check(
    check_id: str,
    seed: int = 0,
    budget: Budget | None = None,
    samples: int | None = None,
) -> CheckReport:
    """The stock suite for a check id, used by the CLI when no explicit
    instance source is given."""
    if check_id == "konig":
        return check_konig(default_konig_instances(seed, samples or 500), budget)
    if check_id == "thm3col":
        return check_eight_fifths(
            default_eight_fifths_instances(seed, samples or 1000), budget
        )
    if check_id == "gap912":
        return check_small_gap(
            default_small_gap_instances(seed, samples or 10_000), budget
        )
    if check_id == "gallai-theta":
        return check_theta_critical_bound(
            default_theta_critical_instances(seed, samples or 200), budget
        )
    if check_id == "gallai-factor":
        return check_factor_critical(
            default_factor_critical_instances(seed, samples or 200), budget
        )
    if check_id == "deficiency":
        return check_deficiency_bound(
            default_deficiency_instances(seed, samples or 500), budget
        )
    if check_id == "kneser-alpha":
        return check_kneser_alpha(2, 2, samples or 200, seed, budget)
    if check_id == "kneser-theta":
        return check_kneser_cover_ratio(2, 2, samples or 200, seed, budget)
    if check_id == "schrijver-chi":
        return check_kneser_chromatic(default_schrijver_pairs(), budget)
    if check_id == "evc-cover":
        return check_eventually_identity_cover(
            default_evc_instances(2, seed), 2, budget
        )
    raise ValueError(f"unknown check id {check_id!r}")
