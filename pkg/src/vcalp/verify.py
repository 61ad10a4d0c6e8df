"""Oracle-equivalence sweeps over graph corpora.

:func:`check_instance` runs every cross-check on one graph and returns an
:class:`InstanceCheck`; :func:`summarize` folds many of them into per-check
pass/fail counts.  The CLI ``verify`` command and the acceptance tests are
both thin wrappers around these two functions.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import InvariantViolation
from .gallai_edmonds import decompose, is_factor_critical
from .graph import Graph
from .lpvc import lp_value2
from .matching import has_perfect_matching, matching_number
from .oracle import brute_gallai_edmonds, brute_lp, brute_matching_number, brute_opt, brute_surplus, random_graph
from .reductions import RULES, Budget
from .solver import solve_mode

SURPLUS_CAP = 12
GALLAI_EDMONDS_CAP = 8
REPLAY_ORACLE_CAP = 9

CHECKS = (
    "decision",
    "chain",
    "reduction_safety",
    "reduced_surplus",
    "measure_drop",
    "node_bound",
    "gallai_edmonds",
    "certificate",
)


@dataclass
class InstanceCheck:
    label: str
    n: int
    opt: int
    failures: dict[str, list[str]] = field(default_factory=dict)
    solves: int = 0
    yes_answers: int = 0
    reduction_steps: int = 0
    replayed_steps: int = 0
    branch_nodes: int = 0
    reduced_graphs_checked: int = 0
    max_ratio: float = 0.0
    max_depth_slack: int | None = None

    def fail(self, check: str, message: str) -> None:
        self.failures.setdefault(check, []).append(message)

    @property
    def ok(self) -> bool:
        return not self.failures


def _classify(exc: InvariantViolation) -> str:
    text = str(exc)
    if text.startswith("rule") or "reduction" in text:
        return "reduction_safety"
    if "certificate" in text or "lifted" in text:
        return "certificate"
    if "nodes exceed" in text:
        return "node_bound"
    return "measure_drop"


def _replay_root_reduction(g: Graph, check: InstanceCheck, opt: int) -> None:
    """Re-run the reduction loop step by step against oracle MM, LP and OPT."""
    current, current_opt = g, opt
    budget = Budget.of(g, opt)
    while True:
        app = None
        for rule in RULES:
            app = rule(current, budget)
            if app is not None:
                break
        if app is None:
            return
        g2 = app.graph
        new_opt = brute_opt(g2)[0]
        if new_opt != current_opt - app.step.cost:
            check.fail("reduction_safety", f"{check.label}: {type(app.step).__name__} changed OPT-k")
        if g2.n <= REPLAY_ORACLE_CAP:
            mm2, lp2 = brute_matching_number(g2), int(2 * brute_lp(g2))
            if (mm2, lp2) != (app.budget.mm, app.budget.lp2):
                check.fail("reduction_safety", f"{check.label}: oracle MM/LP disagree after {type(app.step).__name__}")
            k_hat_before = budget.k + budget.mm - budget.lp2
            if app.budget.k + mm2 - lp2 > k_hat_before:
                check.fail("reduction_safety", f"{check.label}: measure increased (oracle values)")
        check.replayed_steps += 1
        current, current_opt, budget = g2, new_opt, app.budget


def check_instance(g: Graph, label: str = "", *, replay: bool = True) -> InstanceCheck:
    """Run every oracle comparison on ``g`` for all budgets k in [0, n]."""
    opt, _ = brute_opt(g)
    check = InstanceCheck(label or repr(g), g.n, opt)

    mm, lp2 = matching_number(g), lp_value2(g)
    bound = lp2 - mm
    if not (2 * mm <= lp2 and lp2 <= 2 * bound and bound <= opt):
        check.fail("chain", f"{label}: MM={mm} 2LP={lp2} OPT={opt}")
    if g.n <= SURPLUS_CAP:
        if lp2 != int(2 * brute_lp(g)):
            check.fail("chain", f"{label}: LP disagrees with brute force")
        if mm != brute_matching_number(g):
            check.fail("chain", f"{label}: MM disagrees with brute force")

    if g.n <= GALLAI_EDMONDS_CAP:
        d, ref = decompose(g), brute_gallai_edmonds(g)
        if (d.O, d.I, d.P) != (ref.O, ref.I, ref.P):
            check.fail("gallai_edmonds", f"{label}: decomposition differs from definition")
        if not all(len(c) % 2 == 1 and is_factor_critical(g.induced_subgraph(c)) for c in d.O_components):
            check.fail("gallai_edmonds", f"{label}: O-component not factor-critical")
        if not has_perfect_matching(g.induced_subgraph(d.P)):
            check.fail("gallai_edmonds", f"{label}: G[P] has no perfect matching")

    if replay:
        try:
            _replay_root_reduction(g, check, opt)
        except InvariantViolation as exc:
            check.fail("reduction_safety", f"{label}: {exc}")

    surplus_seen: dict[Graph, int] = {}

    def on_reduced(h: Graph) -> None:
        if h.n == 0 or h.n > SURPLUS_CAP:
            return
        if h not in surplus_seen:
            surplus_seen[h] = brute_surplus(h)[0]
            check.reduced_graphs_checked += 1
        if surplus_seen[h] < 2:
            check.fail("reduced_surplus", f"{label}: reduced graph with surplus {surplus_seen[h]}")

    for k in range(g.n + 1):
        check.solves += 1
        try:
            report = solve_mode(g, "vc", k, on_reduced=on_reduced)
        except InvariantViolation as exc:
            check.fail(_classify(exc), f"{label} k={k}: {exc}")
            continue
        if report.answer != (opt <= k):
            check.fail("decision", f"{label} k={k}: solver says {report.answer}, OPT={opt}")
        check.reduction_steps += sum(report.reductions_applied.values())
        check.branch_nodes += sum(report.branches_applied.values())
        k_hat0 = report.initial_bounds.k_hat
        if k_hat0 >= 0:
            check.max_ratio = max(check.max_ratio, report.node_ratio)
            slack = k_hat0 - report.max_depth
            check.max_depth_slack = slack if check.max_depth_slack is None else min(check.max_depth_slack, slack)
            if slack < 0:
                check.fail("measure_drop", f"{label} k={k}: depth {report.max_depth} > k_hat {k_hat0}")
        if report.nodes_visited > report.node_bound:
            check.fail("node_bound", f"{label} k={k}: {report.nodes_visited} nodes")
        if report.answer:
            check.yes_answers += 1
            cert = report.certificate
            if cert is None or len(cert) > k or not g.is_vertex_cover(cert) or not cert <= g.vertex_set():
                check.fail("certificate", f"{label} k={k}: bad certificate {cert}")
    return check


# corpora --------------------------------------------------------------------


def random_corpus(count: int, seed: int, n_range: tuple[int, int] = (8, 12), ps=(0.2, 0.4, 0.6)) -> Iterator[tuple[str, Graph]]:
    """``count`` seeded G(n, p) graphs cycling through n in ``n_range`` and ``ps``."""
    lo, hi = n_range
    sizes = range(lo, hi + 1)
    for i in range(count):
        n = sizes[i % len(sizes)]
        p = ps[(i // len(sizes)) % len(ps)]
        s = seed + i
        yield f"gnp(n={n},p={p},seed={s})", random_graph(n, p, s)


def labeled_graphs(n: int) -> Iterator[tuple[str, Graph]]:
    """Every graph on vertex set {0..n-1}, one per edge subset."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        yield f"labeled(n={n},mask={mask})", Graph.from_edges(n, edges)


def _run_one(item: tuple[str, Graph]) -> InstanceCheck:
    label, g = item
    return check_instance(g, label)


def sweep(items: Iterable[tuple[str, Graph]], jobs: int = 1, progress: Callable[[int], None] | None = None) -> list[InstanceCheck]:
    """check_instance over a corpus; results come back in input order."""
    results = []
    if jobs <= 1:
        for i, item in enumerate(items):
            results.append(_run_one(item))
            if progress:
                progress(i + 1)
        return results
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for i, res in enumerate(pool.map(_run_one, items, chunksize=16)):
            results.append(res)
            if progress:
                progress(i + 1)
    return results


@dataclass
class Summary:
    instances: int
    solves: int
    failures: dict[str, list[str]]
    max_ratio: float
    reduction_steps: int
    replayed_steps: int
    branch_nodes: int
    reduced_graphs_checked: int
    yes_answers: int

    def passed(self, check: str) -> bool:
        return not self.failures.get(check)

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())


def summarize(results: Iterable[InstanceCheck]) -> Summary:
    failures: dict[str, list[str]] = {name: [] for name in CHECKS}
    totals = dict(instances=0, solves=0, reduction_steps=0, replayed_steps=0, branch_nodes=0, reduced_graphs_checked=0, yes_answers=0)
    max_ratio = 0.0
    for r in results:
        totals["instances"] += 1
        for key in ("solves", "reduction_steps", "replayed_steps", "branch_nodes", "reduced_graphs_checked", "yes_answers"):
            totals[key] += getattr(r, key)
        max_ratio = max(max_ratio, r.max_ratio)
        for name, msgs in r.failures.items():
            failures.setdefault(name, []).extend(msgs)
    return Summary(failures=failures, max_ratio=max_ratio, **totals)
