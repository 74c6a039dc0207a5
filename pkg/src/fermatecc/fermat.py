"""Fermat (Steiner-3) distances and eccentricities.

Three interchangeable computation paths:

* eps3_oracle  -- exhaustive brute force over all pairs, the reference.
* eps3_pruned  -- same values, skips pairs using exact lower/upper bounds.
* eps3_tree    -- O(n) per vertex fast path valid on trees only.

The eccentricity of u maximises the Fermat distance of {u, v, w} over all
ordered pairs (v, w) in V x V, repeats included (the literal definition);
a flag restricts the maximum to distinct pairs for the dominance check.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError
from .graph import Graph, GraphKind, all_pairs_distances, classify


@dataclass(frozen=True)
class FermatWitness:
    pair: tuple[int, int]
    fermat_vertex: int
    value: int


@dataclass(frozen=True)
class FermatProfile:
    eps3: tuple[int, ...]
    witnesses: tuple[FermatWitness, ...] | None = None
    pair_evaluations: int | None = None


def _check_vertex(n: int, u: int) -> None:
    if not (0 <= u < n):
        raise ValueError(f"vertex id {u} out of range for n={n}")


def fermat_distance(d: np.ndarray, u: int, v: int, w: int) -> int:
    """min over all vertices s of d(s,u)+d(s,v)+d(s,w)."""
    n = d.shape[0]
    for x in (u, v, w):
        _check_vertex(n, x)
    return int((d[:, u] + d[:, v] + d[:, w]).min())


def fermat_vertices(d: np.ndarray, u: int, v: int, w: int) -> tuple[int, ...]:
    """The full argmin set of Fermat vertices for the triple {u, v, w}."""
    n = d.shape[0]
    for x in (u, v, w):
        _check_vertex(n, x)
    sums = d[:, u] + d[:, v] + d[:, w]
    best = sums.min()
    return tuple(int(s) for s in np.flatnonzero(sums == best))


def _pair_iter_limit(n: int, distinct_pairs: bool):
    # Ordered pairs (v, w); by symmetry only v <= w need scanning, and the
    # distinct-pair variant simply drops the diagonal.
    if distinct_pairs:
        return [(v, w) for v in range(n) for w in range(v + 1, n)]
    return [(v, w) for v in range(n) for w in range(v, n)]


def eps3_oracle(
    g: Graph,
    d: np.ndarray | None = None,
    witnesses: bool = False,
    distinct_pairs: bool = False,
) -> FermatProfile:
    """Exhaustive reference computation of all Fermat eccentricities.

    No pruning: for each u the maximum runs over every pair (v, w).
    Witnesses, when requested, pick the lexicographically smallest
    maximising (v, w) and then the smallest minimising Fermat vertex.
    """
    if d is None:
        d = all_pairs_distances(g)
    n = g.n
    eps = []
    wits: list[FermatWitness] = []
    for u in range(n):
        # F[v, w] = min_s (d[s,u] + d[s,v] + d[s,w]), full n x n table
        t = d[:, u][:, None, None] + d[:, :, None] + d[:, None, :]
        f = t.min(axis=0)
        if distinct_pairs and n >= 2:
            np.fill_diagonal(f, -1)
        best = int(f.max())
        eps.append(best)
        if witnesses:
            v, w = np.argwhere(f == best)[0]  # row-major -> lexicographic min
            v, w = int(v), int(w)
            sums = d[:, u] + d[:, v] + d[:, w]
            sigma = int(sums.argmin())
            wits.append(FermatWitness(pair=(v, w), fermat_vertex=sigma, value=best))
    return FermatProfile(
        eps3=tuple(eps),
        witnesses=tuple(wits) if witnesses else None,
    )


def _pair_bounds(d: np.ndarray, u: int):
    """Lower and upper bounds on the Fermat distance of (u, v, w) pairs.

    Lower: ceil of half the pairwise-distance perimeter (valid in every
    graph since d(s,a)+d(s,b) >= d(a,b) for each of the three pairs).
    Upper: route the triple through one of its own terminals.
    """
    row = d[u]
    pv = row[:, None]
    pw = row[None, :]
    vw = d
    perim = pv + pw + vw
    lb = (perim + 1) // 2
    ub = np.minimum(pv + pw, np.minimum(pv + vw, pw + vw))
    return lb, ub


def eps3_pruned(
    g: Graph,
    d: np.ndarray | None = None,
    witnesses: bool = False,
    distinct_pairs: bool = False,
    threads: int = 1,
) -> FermatProfile:
    """Bound-pruned computation; value-identical to eps3_oracle.

    Pairs are visited in decreasing lower-bound order; a pair is evaluated
    exactly only when its upper bound can still beat the running maximum.
    pair_evaluations counts exact evaluations across all vertices.
    """
    if d is None:
        d = all_pairs_distances(g)
    n = g.n

    def one_vertex(u: int):
        lb, ub = _pair_bounds(d, u)
        iu, iw = np.triu_indices(n, k=1 if distinct_pairs else 0)
        lbs = lb[iu, iw]
        ubs = ub[iu, iw]
        order = np.argsort(-lbs, kind="stable")
        lbs = lbs[order]
        ubs = ubs[order]
        # best starts from every pair whose bounds pin its value exactly
        tight = lbs == ubs
        best = int(lbs[tight].max()) if tight.any() else 0
        suffix_ub = np.maximum.accumulate(ubs[::-1])[::-1]
        evals = 0
        du = d[:, u]
        for k in range(len(order)):
            if suffix_ub[k] <= best:
                break
            if ubs[k] <= best or lbs[k] == ubs[k]:
                continue
            idx = order[k]
            v, w = int(iu[idx]), int(iw[idx])
            val = int((du + d[:, v] + d[:, w]).min())
            evals += 1
            if val > best:
                best = val
        wit = None
        if witnesses:
            wit = _lex_witness(d, u, best, lb, ub, distinct_pairs)
        return best, evals, wit

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as ex:
            results = list(ex.map(one_vertex, range(n)))
    else:
        results = [one_vertex(u) for u in range(n)]

    eps = tuple(r[0] for r in results)
    total_evals = sum(r[1] for r in results)
    wits = tuple(r[2] for r in results) if witnesses else None
    return FermatProfile(eps3=eps, witnesses=wits, pair_evaluations=total_evals)


def _lex_witness(d, u, target, lb, ub, distinct_pairs) -> FermatWitness:
    """Lexicographically smallest (v, w) with Fermat distance == target."""
    n = d.shape[0]
    du = d[:, u]
    for v in range(n):
        wstart = v + 1 if distinct_pairs else v
        for w in range(wstart, n):
            if ub[v, w] < target:
                continue
            if lb[v, w] == ub[v, w]:
                val = int(lb[v, w])
            else:
                val = int((du + d[:, v] + d[:, w]).min())
            if val == target:
                sums = du + d[:, v] + d[:, w]
                sigma = int(sums.argmin())
                return FermatWitness(pair=(v, w), fermat_vertex=sigma, value=target)
    raise AssertionError("witness search failed; bounds are inconsistent")


def eps3_tree(g: Graph, d: np.ndarray | None = None, witnesses: bool = False) -> FermatProfile:
    """Tree fast path: fix one eccentric endpoint, scan the second.

    On a tree the Fermat distance equals half the pairwise-distance
    perimeter, and a farthest vertex from u can always serve as one of
    the two maximisers, so eps3(u) is a single O(n) scan per vertex.
    """
    if classify(g).kind is not GraphKind.TREE:
        raise PreconditionError("eps3_tree requires a tree")
    if d is None:
        d = all_pairs_distances(g)
    n = g.n
    eps = []
    wits: list[FermatWitness] = []
    for u in range(n):
        vstar = int(d[u].argmax())
        perims = d[u, vstar] + d[u] + d[vstar]
        half = perims // 2  # tree perimeters are even
        best = int(half.max())
        eps.append(best)
        if witnesses:
            w = int(half.argmax())
            v, w = (vstar, w) if vstar <= w else (w, vstar)
            sums = d[:, u] + d[:, v] + d[:, w]
            sigma = int(sums.argmin())
            wits.append(FermatWitness(pair=(v, w), fermat_vertex=sigma, value=best))
    return FermatProfile(eps3=tuple(eps), witnesses=tuple(wits) if witnesses else None)


def eps3_profile(g: Graph, d: np.ndarray | None = None, threads: int = 1) -> FermatProfile:
    """Fastest valid path: tree formula on trees, pruned scan otherwise."""
    if d is None:
        d = all_pairs_distances(g)
    if classify(g).kind is GraphKind.TREE:
        return eps3_tree(g, d)
    return eps3_pruned(g, d, threads=threads)
