"""Core graph representation: construction, parsing, BFS/APSP, classification.

Graphs are undirected, simple, and use dense 0-based integer vertex ids.
Distance matrices are numpy integer arrays computed by one BFS per vertex.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import networkx as nx
import numpy as np

from .errors import ConnectivityError, ParseError, ValidationError


class GraphKind(Enum):
    TREE = "tree"
    UNICYCLIC = "unicyclic"
    MULTICYCLIC = "multicyclic"


@dataclass(frozen=True)
class GraphClass:
    kind: GraphKind
    cyclomatic: int


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def make_graph(n: int, edges, strict: bool = True) -> Graph:
    """Build a Graph from an iterable of vertex pairs.

    Rejects self-loops, duplicate edges, and out-of-range ids.  With
    strict=True (the default for analysis entry points) the graph must
    also be connected.
    """
    if n < 1:
        raise ValidationError(f"vertex count must be >= 1, got {n}")
    seen = set()
    norm = []
    for u, v in edges:
        u, v = int(u), int(v)
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"vertex id out of range in edge ({u}, {v}) with n={n}")
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise ValidationError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        norm.append((u, v))
    norm.sort()
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in norm:
        nbrs[u].append(v)
        nbrs[v].append(u)
    g = Graph(n=n, edges=tuple(norm), adj=tuple(tuple(sorted(a)) for a in nbrs))
    if strict and not is_connected(g):
        raise ConnectivityError(f"graph with n={n}, m={len(norm)} is not connected")
    return g


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = bytearray(g.n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in g.adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == g.n


def parse_edge_list(text: str, strict: bool = True) -> Graph:
    """Parse the line-oriented edge-list format.

    First non-comment line holds the vertex count n, each following line
    one "u v" pair.  '#' starts a comment, blank lines are ignored.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1:
                raise ParseError(f"line {lineno}: expected vertex count, got {raw!r}")
            try:
                n = int(parts[0])
            except ValueError:
                raise ParseError(f"line {lineno}: vertex count is not an integer: {raw!r}") from None
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two vertex ids, got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id: {raw!r}") from None
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: missing vertex count line")
    return make_graph(n, edges, strict=strict)


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_graph6(line: str | bytes, strict: bool = True) -> Graph:
    """Decode one graph6 line (standard 6-bit encoding)."""
    if isinstance(line, str):
        line = line.encode("ascii")
    try:
        h = nx.from_graph6_bytes(line.strip())
    except (nx.NetworkXError, ValueError) as exc:
        raise ParseError(f"invalid graph6 data: {exc}") from None
    return make_graph(h.number_of_nodes(), h.edges(), strict=strict)


def to_graph6(g: Graph) -> str:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    out = nx.to_graph6_bytes(h, header=False).decode("ascii").strip()
    return out


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Hop distances from source to every vertex (graph must be connected)."""
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range for n={g.n}")
    dist = np.full(g.n, -1, dtype=np.int64)
    dist[source] = 0
    q = deque([source])
    while q:
        u = q.popleft()
        du = dist[u]
        for v in g.adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                q.append(v)
    if (dist < 0).any():
        raise ConnectivityError("bfs_distances requires a connected graph")
    return dist


def all_pairs_distances(g: Graph) -> np.ndarray:
    """n x n matrix of hop distances; one BFS per vertex."""
    d = np.empty((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        d[u] = bfs_distances(g, u)
    return d


def classify(g: Graph) -> GraphClass:
    """Cyclomatic classification of a connected graph."""
    cyc = g.m - g.n + 1
    if cyc < 0:
        raise ConnectivityError("classify requires a connected graph")
    if cyc == 0:
        kind = GraphKind.TREE
    elif cyc == 1:
        kind = GraphKind.UNICYCLIC
    else:
        kind = GraphKind.MULTICYCLIC
    return GraphClass(kind=kind, cyclomatic=cyc)


@dataclass(frozen=True)
class Ecc2Profile:
    ecc: tuple[int, ...]
    radius: int
    diameter: int
    center: tuple[int, ...]


def eccentricity2_profile(g: Graph, d: np.ndarray | None = None) -> Ecc2Profile:
    """Ordinary eccentricities plus radius, diameter and center set."""
    if d is None:
        d = all_pairs_distances(g)
    ecc = d.max(axis=1)
    radius = int(ecc.min())
    diameter = int(ecc.max())
    center = tuple(int(u) for u in np.flatnonzero(ecc == radius))
    return Ecc2Profile(
        ecc=tuple(int(e) for e in ecc),
        radius=radius,
        diameter=diameter,
        center=center,
    )
