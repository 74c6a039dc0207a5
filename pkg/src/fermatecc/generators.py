"""Graph families, random generators, exhaustive enumerators, formulas.

Free trees are enumerated one representative per isomorphism class by
generating canonical rooted trees recursively and deduplicating on a
center-rooted AHU canonical form.  Unicyclic and bicyclic classes are
produced by edge augmentation plus isomorphism deduplication.

The two closed-form difference quotients for the multicyclic
counterexample families are evaluated in exact rational arithmetic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from heapq import heapify, heappop, heappush
from typing import Iterator

import networkx as nx
import numpy as np

from .errors import PreconditionError
from .graph import (
    Graph,
    GraphKind,
    all_pairs_distances,
    bfs_distances,
    classify,
    eccentricity2_profile,
    make_graph,
)

FREE_TREE_CAP = 12
UNICYCLIC_CAP = 9

# Isomorphism-class counts of free trees, n = 1..12 (reference sequence).
FREE_TREE_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)


# ---------------------------------------------------------------------------
# canonical families


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"star needs n >= 2, got {n}")
    return make_graph(n, [(0, i) for i in range(1, n)])


def theta(a: int, b: int, c: int) -> Graph:
    """Two hub vertices joined by three internally disjoint paths.

    a, b, c are the path lengths in edges; at most one may be 1 or the
    graph would not be simple.
    """
    lengths = sorted((a, b, c))
    if lengths[0] < 1 or lengths[1] < 2:
        raise ValueError(f"invalid theta path lengths ({a}, {b}, {c})")
    edges = []
    nxt = 2
    for length in (a, b, c):
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return make_graph(nxt, edges)


def dumbbell(c1: int, c2: int, bridge: int, pendant1: int = 0, pendant2: int = 0) -> Graph:
    """Two cycles joined by a bridge path, optional pendant paths.

    bridge counts edges between the two attachment vertices (0 makes the
    cycles share a vertex).  Pendant paths hang off the cycle vertex
    opposite each attachment point.
    """
    if c1 < 3 or c2 < 3 or bridge < 0 or pendant1 < 0 or pendant2 < 0:
        raise ValueError("invalid dumbbell parameters")
    if bridge == 0 and (c1 < 3 or c2 < 3):
        raise ValueError("invalid dumbbell parameters")
    edges = []
    # first cycle on 0..c1-1, attachment vertex 0
    for i in range(c1):
        edges.append((i, (i + 1) % c1))
    nxt = c1
    # bridge from 0 to the second cycle's attachment vertex
    prev = 0
    for _ in range(bridge):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    if bridge == 0:
        anchor = 0
        ring = [anchor] + list(range(nxt, nxt + c2 - 1))
        nxt += c2 - 1
    else:
        anchor = prev
        ring = [anchor] + list(range(nxt, nxt + c2 - 1))
        nxt += c2 - 1
    for i in range(len(ring)):
        edges.append((ring[i], ring[(i + 1) % len(ring)]))
    # pendants at vertices opposite the attachment points
    for plen, base_ring, attach_idx in (
        (pendant1, list(range(c1)), c1 // 2),
        (pendant2, ring, len(ring) // 2),
    ):
        prev = base_ring[attach_idx]
        for _ in range(plen):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return make_graph(nxt, edges)


def two_cycles_with_tail(c1: int, c2: int, bridge: int, tail: int) -> Graph:
    """Two cycles joined by a bridge path with a pendant path at its midpoint.

    bridge must be >= 2 so the midpoint is an interior bridge vertex.
    """
    if c1 < 3 or c2 < 3 or bridge < 2 or tail < 0:
        raise ValueError("invalid two_cycles_with_tail parameters")
    edges = []
    for i in range(c1):
        edges.append((i, (i + 1) % c1))
    nxt = c1
    prev = 0
    bridge_vertices = [0]
    for _ in range(bridge):
        edges.append((prev, nxt))
        bridge_vertices.append(nxt)
        prev = nxt
        nxt += 1
    ring = [prev] + list(range(nxt, nxt + c2 - 1))
    nxt += c2 - 1
    for i in range(c2):
        edges.append((ring[i], ring[(i + 1) % c2]))
    prev = bridge_vertices[bridge // 2]
    for _ in range(tail):
        edges.append((prev, nxt))
        prev = nxt
        nxt += 1
    return make_graph(nxt, edges)


# ---------------------------------------------------------------------------
# random generators (explicit seeds, never ambient randomness)


def _prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [u for u in range(n) if degree[u] == 1]
    heapify(leaves)
    edges = []
    for x in seq:
        leaf = heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heappush(leaves, x)
    u = heappop(leaves)
    v = heappop(leaves)
    edges.append((u, v))
    return edges


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a random Pruefer sequence."""
    if n < 1:
        raise ValueError(f"random_tree needs n >= 1, got {n}")
    if n == 1:
        return make_graph(1, [])
    if n == 2:
        return make_graph(2, [(0, 1)])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return make_graph(n, _prufer_decode(seq, n))


def random_unicyclic(n: int, girth: int, seed: int) -> Graph:
    """A girth-g cycle with random trees attached at its vertices."""
    if not 3 <= girth <= n:
        raise ValueError(f"need 3 <= girth <= n, got girth={girth}, n={n}")
    rng = random.Random(seed)
    edges = [(i, (i + 1) % girth) for i in range(girth)]
    for v in range(girth, n):
        edges.append((rng.randrange(v), v))
    return make_graph(n, edges)


def random_connected(n: int, seed: int, extra_edges: int | None = None) -> Graph:
    """Random connected graph: random tree plus random extra non-edges."""
    if n < 1:
        raise ValueError(f"random_connected needs n >= 1, got {n}")
    rng = random.Random(seed)
    if n <= 2:
        return random_tree(n, seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    edges = set(tuple(sorted(e)) for e in _prufer_decode(seq, n))
    max_extra = n * (n - 1) // 2 - len(edges)
    if extra_edges is None:
        extra_edges = rng.randint(0, min(n, max_extra))
    extra_edges = min(extra_edges, max_extra)
    while extra_edges > 0:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        e = (u, v) if u < v else (v, u)
        if e in edges:
            continue
        edges.add(e)
        extra_edges -= 1
    return make_graph(n, sorted(edges))


# ---------------------------------------------------------------------------
# free tree enumeration

# A rooted tree is canonically a tuple of child canonical forms sorted in
# decreasing (size, form) order; the empty tuple is the single vertex.


@lru_cache(maxsize=None)
def _canon_size(canon: tuple) -> int:
    return 1 + sum(_canon_size(c) for c in canon)


def _canon_key(canon: tuple):
    return (_canon_size(canon), canon)


@lru_cache(maxsize=None)
def _rooted_trees(n: int) -> tuple[tuple, ...]:
    if n == 1:
        return ((),)
    return tuple(_forests(n - 1, None))


def _forests(total: int, bound) -> Iterator[tuple]:
    # forests as non-increasing (size, canon) sequences summing to total
    if total == 0:
        yield ()
        return
    max_size = total if bound is None else min(total, bound[0])
    for size in range(max_size, 0, -1):
        for t in _rooted_trees(size):
            key = (size, t)
            if bound is not None and key > bound:
                continue
            for rest in _forests(total - size, key):
                yield (t,) + rest


def _canon_to_graph(canon: tuple) -> Graph:
    edges = []
    counter = [0]

    def build(node: tuple, parent: int) -> None:
        me = counter[0]
        counter[0] += 1
        if parent >= 0:
            edges.append((parent, me))
        for child in node:
            build(child, me)

    build(canon, -1)
    return make_graph(counter[0], edges)


def _tree_centers(adj: list[list[int]]) -> list[int]:
    n = len(adj)
    if n <= 2:
        return list(range(n))
    degree = [len(a) for a in adj]
    removed = [False] * n
    alive = n
    layer = [u for u in range(n) if degree[u] == 1]
    while alive > 2:
        nxt = []
        for u in layer:
            removed[u] = True
            alive -= 1
            for v in adj[u]:
                if not removed[v]:
                    degree[v] -= 1
                    if degree[v] == 1:
                        nxt.append(v)
        layer = nxt
    return sorted(u for u in range(n) if not removed[u])


def _ahu(adj, root: int, parent: int) -> tuple:
    children = [_ahu(adj, v, root) for v in adj[root] if v != parent]
    children.sort(key=_canon_key, reverse=True)
    return tuple(children)


def free_tree_canon(g: Graph) -> tuple:
    """Canonical form of an unrooted tree (center-rooted AHU form)."""
    adj = [list(a) for a in g.adj]
    centers = _tree_centers(adj)
    if len(centers) == 1:
        return _ahu(adj, centers[0], -1)
    c1, c2 = centers
    halves = sorted((_ahu(adj, c1, c2), _ahu(adj, c2, c1)), reverse=True)
    return tuple(halves)


def enumerate_free_trees(n: int, max_n: int = FREE_TREE_CAP) -> Iterator[Graph]:
    """One representative per isomorphism class of n-vertex trees."""
    if n < 1:
        raise ValueError(f"enumerate_free_trees needs n >= 1, got {n}")
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the free-tree enumeration cap {max_n}; raise max_n to override"
        )
    seen = set()
    for canon in _rooted_trees(n):
        g = _canon_to_graph(canon)
        key = free_tree_canon(g)
        if key in seen:
            continue
        seen.add(key)
        yield g


# ---------------------------------------------------------------------------
# unicyclic / bicyclic enumeration via augmentation + isomorphism dedup


class _IsoDedup:
    """Exact isomorphism-class dedup, bucketed by cheap invariants."""

    def __init__(self) -> None:
        self._buckets: dict[object, list[nx.Graph]] = {}

    def add(self, g: Graph) -> bool:
        h = nx.Graph()
        h.add_nodes_from(range(g.n))
        h.add_edges_from(g.edges)
        key = (
            g.n,
            g.m,
            tuple(sorted(g.degree(u) for u in range(g.n))),
            nx.weisfeiler_lehman_graph_hash(h),
        )
        bucket = self._buckets.setdefault(key, [])
        for other in bucket:
            if nx.is_isomorphic(h, other):
                return False
        bucket.append(h)
        return True


def _augmentations(g: Graph) -> Iterator[Graph]:
    adj = g.adj
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if v not in adj[u]:
                yield make_graph(g.n, list(g.edges) + [(u, v)])


def enumerate_unicyclic(n: int, max_n: int = UNICYCLIC_CAP) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs with m = n."""
    if n < 3:
        raise ValueError(f"enumerate_unicyclic needs n >= 3, got {n}")
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the unicyclic enumeration cap {max_n}; raise max_n to override"
        )
    dedup = _IsoDedup()
    for t in enumerate_free_trees(n, max_n=max(n, FREE_TREE_CAP)):
        for g in _augmentations(t):
            if dedup.add(g):
                yield g


def enumerate_bicyclic(n: int, max_n: int = 8) -> Iterator[Graph]:
    """One representative per isomorphism class of connected graphs with m = n + 1."""
    if n < 4:
        raise ValueError(f"enumerate_bicyclic needs n >= 4, got {n}")
    if n > max_n:
        raise ValueError(
            f"n={n} exceeds the bicyclic enumeration cap {max_n}; raise max_n to override"
        )
    dedup = _IsoDedup()
    for base in enumerate_unicyclic(n, max_n=max(n, UNICYCLIC_CAP)):
        for g in _augmentations(base):
            if dedup.add(g):
                yield g


# ---------------------------------------------------------------------------
# diametrical-path decoration of trees


@dataclass(frozen=True)
class TreeDecoration:
    """Diametrical-path scaffolding of a tree.

    diametrical_path is v_0..v_d and contains all central vertices.
    subtree_depths[i-1] is the depth of the subtree hanging off v_i for
    i = 1..d-1; ell is their maximum (0 when the path has no interior).
    subtree_membership maps every vertex to the path index of the root
    of its hanging subtree (path vertices map to their own index).
    """

    diametrical_path: tuple[int, ...]
    center: tuple[int, ...]
    subtree_depths: tuple[int, ...]
    ell: int
    subtree_membership: tuple[int, ...]


def decorate_tree(t: Graph, d: np.ndarray | None = None) -> TreeDecoration:
    if classify(t).kind is not GraphKind.TREE:
        raise PreconditionError("decorate_tree requires a tree")
    if d is None:
        d = all_pairs_distances(t)
    n = t.n
    ecc = eccentricity2_profile(t, d)
    # double BFS; argmax picks the smallest id among ties
    a = int(d[0].argmax())
    b = int(d[a].argmax())
    # parent pointers along BFS from a, neighbors visited in ascending order
    parent = [-1] * n
    dist = bfs_distances(t, a)
    order = np.argsort(dist, kind="stable")
    for u in order:
        u = int(u)
        for v in t.adj[u]:
            if dist[v] == dist[u] + 1 and parent[v] == -1:
                parent[v] = u
    pth = [b]
    while pth[-1] != a:
        pth.append(parent[pth[-1]])
    pth.reverse()
    if tuple(reversed(pth)) < tuple(pth):
        pth.reverse()
    dlen = len(pth) - 1
    assert dlen == ecc.diameter
    assert all(c in pth for c in ecc.center)

    on_path = {v: i for i, v in enumerate(pth)}
    membership = [-1] * n
    for v, i in on_path.items():
        membership[v] = i
    # hang every off-path vertex off its interior path root
    for i in range(1, dlen):
        root = pth[i]
        stack = [root]
        while stack:
            u = stack.pop()
            for v in t.adj[u]:
                if v in on_path or membership[v] != -1:
                    continue
                membership[v] = i
                stack.append(v)
    depths = []
    for i in range(1, dlen):
        members = [v for v in range(n) if membership[v] == i and v != pth[i]]
        depths.append(max((int(d[pth[i], v]) for v in members), default=0))
    ell = max(depths, default=0)
    return TreeDecoration(
        diametrical_path=tuple(pth),
        center=ecc.center,
        subtree_depths=tuple(depths),
        ell=ell,
        subtree_membership=tuple(membership),
    )


# ---------------------------------------------------------------------------
# closed-form difference quotients for the multicyclic counterexamples
#
# Both evaluate the exact rational value of F1/n - F2/m for the two
# parameterised families; a positive value means the tree/unicyclic
# inequality still holds, a negative value means it is violated.


def bicyclic_delta_formula(x: int) -> Fraction:
    """(-x^3/2 + 31x^2 + 173x + 55) / ((3x+6)(3x+7)) for the bicyclic family."""
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    num = Fraction(-(x**3), 2) + 31 * x**2 + 173 * x + 55
    den = (3 * x + 6) * (3 * x + 7)
    return num / den


def multicyclic_delta_formula(k: int, x: int) -> Fraction:
    """Difference quotient for the k-cycle family (k >= 3)."""
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    if x < 0:
        raise ValueError(f"x must be non-negative, got {x}")
    num = (
        (Fraction(-(k**2), 6) - Fraction(26 * k, 3)) * x**3
        + (8 * k**2 - 54 * k) * x**2
        + (Fraction(121 * k**2, 6) - Fraction(226 * k, 3)) * x
        + 12 * k**2
        - 30 * k
    )
    den = (k * x + 3 * k) * (k * x + 2 * k + 1)
    return num / den
