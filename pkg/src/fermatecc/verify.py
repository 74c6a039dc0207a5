"""Mechanical checks of the structural lemmas and comparison theorems.

Every check returns a CheckOutcome whose instance field is a graph6
string (or parameter tuple), so any failure can be re-checked standalone.
Sweeps run the applicable checks over every enumerated isomorphism class;
the counterexample search hunts multicyclic graphs on both sides of the
comparison inequality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError
from .fermat import eps3_profile, eps3_tree
from .generators import (
    decorate_tree,
    dumbbell,
    enumerate_bicyclic,
    enumerate_free_trees,
    enumerate_unicyclic,
    random_connected,
    theta,
    two_cycles_with_tail,
)
from .graph import (
    Graph,
    GraphKind,
    all_pairs_distances,
    classify,
    is_connected,
    make_graph,
    to_graph6,
)
from .indices import Comparison, full_report


@dataclass(frozen=True)
class CheckOutcome:
    check_name: str
    instance: str
    passed: bool
    detail: str = ""


@dataclass
class SweepSummary:
    swept: str
    instance_count: int = 0
    failures: list[CheckOutcome] = field(default_factory=list)
    equality_instances: list[str] = field(default_factory=list)
    positive_instances: list[str] = field(default_factory=list)
    negative_instances: list[str] = field(default_factory=list)
    complete: bool = True

    @property
    def passed(self) -> bool:
        return not self.failures


def _outcome(name: str, inst: str, problems: list[str]) -> CheckOutcome:
    if problems:
        return CheckOutcome(name, inst, False, "; ".join(problems))
    return CheckOutcome(name, inst, True)


def check_edge_lipschitz(g: Graph, eps3=None) -> CheckOutcome:
    """|eps3(u) - eps3(v)| <= 1 across every edge."""
    if eps3 is None:
        eps3 = eps3_profile(g).eps3
    problems = []
    for u, v in g.edges:
        if abs(eps3[u] - eps3[v]) > 1:
            problems.append(f"edge ({u},{v}): eps3 {eps3[u]} vs {eps3[v]}")
    return _outcome("edge_lipschitz", to_graph6(g), problems)


def check_diametrical_lemmas(t: Graph) -> CheckOutcome:
    """Symmetry, center minimality, edge partition, subtree additivity
    and the subtree-depth bound along a decorated diametrical path."""
    if classify(t).kind is not GraphKind.TREE:
        raise PreconditionError("check_diametrical_lemmas requires a tree")
    d = all_pairs_distances(t)
    dec = decorate_tree(t, d)
    eps3 = eps3_tree(t, d).eps3
    p = dec.diametrical_path
    dlen = len(p) - 1
    problems = []

    for i, depth in enumerate(dec.subtree_depths, start=1):
        if depth > min(i, dlen - i):
            problems.append(f"l_{i}={depth} exceeds min({i},{dlen - i})")

    for i in range(dlen + 1):
        if eps3[p[i]] != eps3[p[dlen - i]]:
            problems.append(
                f"symmetry: eps3(v_{i})={eps3[p[i]]} != eps3(v_{dlen - i})={eps3[p[dlen - i]]}"
            )

    half = dlen // 2
    for i in range(half):
        a, b = eps3[p[i]], eps3[p[i + 1]]
        if not (b <= a <= b + 1):
            problems.append(f"monotonicity fails at v_{i}: {a} vs {b}")
    for i in range(half, dlen):
        a, b = eps3[p[i]], eps3[p[i + 1]]
        if not (a <= b <= a + 1):
            problems.append(f"monotonicity fails at v_{i}: {a} vs {b}")
    path_min = min(eps3[v] for v in p)
    for c in dec.center:
        if eps3[c] != path_min:
            problems.append(f"center {c} misses the minimum eps3 on the path")

    ell = dec.ell
    for i in range(ell, dlen - ell):
        if eps3[p[i]] != eps3[p[i + 1]]:
            problems.append(f"middle-segment edge (v_{i},v_{i + 1}) not constant")
    for i in list(range(0, ell)) + list(range(dlen - ell, dlen)):
        if abs(eps3[p[i]] - eps3[p[i + 1]]) != 1:
            problems.append(f"outer-segment edge (v_{i},v_{i + 1}) differs by != 1")

    for u in range(t.n):
        i = dec.subtree_membership[u]
        root = p[i]
        if u == root or not (1 <= i <= dlen - 1):
            continue
        if eps3[u] != d[u, root] + eps3[root]:
            problems.append(
                f"subtree additivity fails at {u}: {eps3[u]} != {d[u, root]}+{eps3[root]}"
            )

    return _outcome("diametrical_lemmas", to_graph6(t), problems)


def check_cyclic_sequence(xs) -> CheckOutcome:
    """sum(x_i^2) >= sum(x_i * x_{i+1}) for cyclically 1-Lipschitz positive ints."""
    xs = list(xs)
    if len(xs) < 2:
        raise PreconditionError("cyclic sequence needs length >= 2")
    if any(x <= 0 for x in xs):
        raise PreconditionError("cyclic sequence entries must be positive")
    for i in range(len(xs)):
        if abs(xs[i] - xs[(i + 1) % len(xs)]) > 1:
            raise PreconditionError(f"|x_{i} - x_{i + 1}| > 1 violates the precondition")
    lhs = sum(x * x for x in xs)
    rhs = sum(xs[i] * xs[(i + 1) % len(xs)] for i in range(len(xs)))
    problems = []
    if lhs < rhs:
        problems.append(f"sum of squares {lhs} < cyclic product sum {rhs}")
    return _outcome("cyclic_sequence", str(xs), problems)


def is_path_graph(g: Graph) -> bool:
    """Structural path test: exactly two leaves, maximum degree <= 2."""
    if g.n == 1:
        return True
    degs = [g.degree(u) for u in range(g.n)]
    return max(degs) <= 2 and sum(1 for x in degs if x == 1) == 2


def verify_main_inequality(g: Graph, report=None) -> CheckOutcome:
    """n*F2 <= m*F1 on trees/unicyclic graphs; trees additionally must hit
    equality exactly when the tree is a path.  Multicyclic inputs only
    have their sign recorded."""
    if report is None:
        report = full_report(g)
    inst = to_graph6(g)
    problems = []
    if report.kind is GraphKind.MULTICYCLIC:
        return CheckOutcome(
            "main_inequality", inst, True, f"multicyclic, sign recorded: {report.comparison.value}"
        )
    if report.comparison is Comparison.POSITIVE:
        problems.append(f"n*F2 - m*F1 > 0 (F1={report.f1}, F2={report.f2})")
    if report.kind is GraphKind.TREE:
        is_zero = report.comparison is Comparison.ZERO
        if is_zero != is_path_graph(g):
            problems.append(
                f"equality characterization: comparison={report.comparison.value}, "
                f"is_path={is_path_graph(g)}"
            )
    return _outcome("main_inequality", inst, problems)


def check_eccentric_analogue(g: Graph, report=None) -> CheckOutcome:
    """n*E2 <= m*E1, the ordinary-eccentricity analogue, on the same classes."""
    if report is None:
        report = full_report(g)
    problems = []
    if report.n * report.e2 > report.m * report.e1:
        problems.append(f"n*E2={report.n * report.e2} > m*E1={report.m * report.e1}")
    return _outcome("eccentric_analogue", to_graph6(g), problems)


def sweep_class(kind: GraphKind, n_values, max_n: int | None = None) -> SweepSummary:
    """Run all applicable checks on every enumerated isomorphism class."""
    if kind is GraphKind.TREE:
        summary = SweepSummary(swept="tree")
    elif kind is GraphKind.UNICYCLIC:
        summary = SweepSummary(swept="unicyclic")
    else:
        raise ValueError("sweep_class handles tree and unicyclic classes only")

    for n in n_values:
        extremes: dict[str, tuple[int, str]] = {}
        star_vals = path_vals = None
        if kind is GraphKind.TREE:
            graphs = enumerate_free_trees(n, max_n=max_n or n)
        else:
            graphs = enumerate_unicyclic(n, max_n=max_n or n)
        for g in graphs:
            summary.instance_count += 1
            report = full_report(g)
            for outcome in (
                check_edge_lipschitz(g, report.eps3),
                verify_main_inequality(g, report),
                check_eccentric_analogue(g, report),
            ):
                if not outcome.passed:
                    summary.failures.append(outcome)
            if kind is GraphKind.TREE and n >= 2:
                outcome = check_diametrical_lemmas(g)
                if not outcome.passed:
                    summary.failures.append(outcome)
            if report.comparison is Comparison.ZERO:
                summary.equality_instances.append(to_graph6(g))
            if kind is GraphKind.TREE and n >= 3:
                g6 = to_graph6(g)
                for name, val in (("f1", report.f1), ("f2", report.f2)):
                    lo_key, hi_key = f"min_{name}", f"max_{name}"
                    if lo_key not in extremes or val < extremes[lo_key][0]:
                        extremes[lo_key] = (val, g6)
                    if hi_key not in extremes or val > extremes[hi_key][0]:
                        extremes[hi_key] = (val, g6)
                degs = sorted(g.degree(u) for u in range(g.n))
                if degs[-1] == n - 1:
                    star_vals = (report.f1, report.f2, g6)
                if is_path_graph(g):
                    path_vals = (report.f1, report.f2, g6)
        if kind is GraphKind.TREE and n >= 3:
            # extremal theorem: star minimises and path maximises F1 and F2
            for idx, name in ((0, "f1"), (1, "f2")):
                if star_vals[idx] != extremes[f"min_{name}"][0]:
                    summary.failures.append(
                        CheckOutcome(
                            "tree_extremes",
                            extremes[f"min_{name}"][1],
                            False,
                            f"n={n}: min {name}={extremes[f'min_{name}'][0]} "
                            f"not attained by the star ({star_vals[idx]})",
                        )
                    )
                if path_vals[idx] != extremes[f"max_{name}"][0]:
                    summary.failures.append(
                        CheckOutcome(
                            "tree_extremes",
                            extremes[f"max_{name}"][1],
                            False,
                            f"n={n}: max {name}={extremes[f'max_{name}'][0]} "
                            f"not attained by the path ({path_vals[idx]})",
                        )
                    )
    return summary


# ---------------------------------------------------------------------------
# counterexample search over multicyclic graphs

SEARCH_STRATEGIES = ("exhaustive-small", "family-sweep", "random-walk")


def _family_grid():
    # theta graphs with near-equal arms
    for a in (2, 3, 4, 6, 8, 12, 16, 24, 36, 50, 70):
        for da, db in ((0, 1), (1, 2)):
            yield theta(a, a + da, a + db)
    # dumbbells, optionally with pendant paths hanging off the cycles
    for c in (3, 5, 9, 15):
        for bridge in (1, 4, 10):
            for p in (0, 3):
                yield dumbbell(c, c, bridge, p, p)
    # two cycles joined by a long path that carries a pendant path at its
    # midpoint; this corner of the parameter grid crosses into violation
    # territory (n*F2 > m*F1) once the joining path is long enough
    for half in (6, 10, 14, 16, 18, 20, 24, 28, 32):
        for tail_frac in (2, 3):
            for c in (3, 4):
                yield two_cycles_with_tail(c, c, 2 * half, half // tail_frac)


def _record(summary: SweepSummary, g: Graph, report) -> None:
    g6 = to_graph6(g)
    if report.comparison is Comparison.POSITIVE:
        summary.positive_instances.append(g6)
    elif report.comparison is Comparison.NEGATIVE:
        summary.negative_instances.append(g6)


def search_counterexample(
    strategy: str,
    budget: int | None = None,
    seed: int = 0,
    max_n: int = 8,
    threads: int = 1,
) -> SweepSummary:
    """Hunt multicyclic graphs on both sides of the comparison inequality.

    Positive instances violate the tree/unicyclic inequality direction,
    negative ones violate its opposite.  Deterministic per (strategy,
    budget, seed).  complete=False flags an exhausted budget before both
    directions were seen.
    """
    if strategy not in SEARCH_STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; choose from {SEARCH_STRATEGIES}")
    summary = SweepSummary(swept=f"search:{strategy}")

    if strategy == "exhaustive-small":
        budget = budget if budget is not None else 10_000
        done = False
        for n in range(4, max_n + 1):
            for g in enumerate_bicyclic(n, max_n=max_n):
                if summary.instance_count >= budget:
                    done = True
                    break
                summary.instance_count += 1
                _record(summary, g, full_report(g, threads=threads))
            if done:
                break
        # exhaustive over all classes in range: complete even if one side
        # has no instance at these sizes, unless the budget cut it short
        summary.complete = not done
    elif strategy == "family-sweep":
        budget = budget if budget is not None else 200
        for g in _family_grid():
            if summary.instance_count >= budget:
                break
            summary.instance_count += 1
            _record(summary, g, full_report(g, threads=threads))
        summary.complete = bool(summary.positive_instances and summary.negative_instances)
    else:  # random-walk
        budget = budget if budget is not None else 300
        rng = random.Random(seed)
        g = random_connected(14, seed=rng.randrange(2**32), extra_edges=3)
        while classify(g).cyclomatic < 2:
            g = random_connected(14, seed=rng.randrange(2**32), extra_edges=3)
        while summary.instance_count < budget:
            summary.instance_count += 1
            _record(summary, g, full_report(g, threads=threads))
            # edge-swap perturbation preserving m (hence cyclomatic) and
            # connectivity
            for _ in range(50):
                edges = list(g.edges)
                u, v = edges[rng.randrange(len(edges))]
                a = rng.randrange(g.n)
                b = rng.randrange(g.n)
                if a == b or g.has_edge(a, b):
                    continue
                newe = [e for e in edges if e != (u, v)] + [(min(a, b), max(a, b))]
                cand = make_graph(g.n, newe, strict=False)
                if is_connected(cand):
                    g = cand
                    break
            if summary.positive_instances and summary.negative_instances:
                break
        summary.complete = bool(summary.positive_instances and summary.negative_instances)

    return summary
