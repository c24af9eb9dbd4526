"""Finite simple undirected graphs with dense integer vertex ids.

Vertices are always 0..n-1.  For n <= 64 every graph also carries one
bit-vector adjacency row per vertex (bit j of ``bits[v]`` set iff j is a
neighbour of v); the exact solvers require those rows and therefore state
n <= 64 (or less) as a precondition.
"""

from __future__ import annotations

import json
from collections import deque
from typing import Iterable, Mapping, Sequence

from .errors import ParameterError

INF = float("inf")


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "neighbors", "bits", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]],
                 labels: Sequence[str] | None = None):
        if n < 0:
            raise ParameterError("vertex count must be nonnegative")
        seen = set()
        norm = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ParameterError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ParameterError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ParameterError(f"duplicate edge ({e[0]},{e[1]})")
            seen.add(e)
            norm.append(e)
        norm.sort()
        self.n = n
        self.edges = tuple(norm)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        self.neighbors = tuple(tuple(sorted(a)) for a in adj)
        if n <= 64:
            rows = [0] * n
            for u, v in norm:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            self.bits = tuple(rows)
        else:
            self.bits = None
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ParameterError("labels must have one entry per vertex")
        self.labels = labels

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.neighbors), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        if u > v:
            u, v = v, u
        return v in self.neighbors[u]

    def relabel(self, labels: Sequence[str]) -> "Graph":
        return Graph(self.n, self.edges, labels=labels)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph) and self.n == other.n
                and self.edges == other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of connected components, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return g.n <= 1 or len(connected_components(g)) == 1


def bfs_distances(g: Graph, source: int) -> list[float]:
    """Shortest-path distances from source; inf for unreachable vertices."""
    dist: list[float] = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def intrinsic_diameter(g: Graph) -> float:
    """Max shortest-path distance inside g; inf iff disconnected; 0 for n=1."""
    if g.n == 0:
        raise ParameterError("diameter of the empty graph is undefined")
    best = 0.0
    for v in range(g.n):
        d = max(bfs_distances(g, v))
        if d == INF:
            return INF
        best = max(best, d)
    return best


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on s, relabelled to 0..|s|-1.

    Original ids are recorded in the labels of the result (vertex i of the
    output came from host vertex int(labels[i])).
    """
    verts = sorted(set(s))
    for v in verts:
        if not (0 <= v < g.n):
            raise ParameterError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(verts), edges, labels=[str(v) for v in verts])


def subdivide(g: Graph, per_edge: Mapping[tuple[int, int], int]) -> Graph:
    """Replace each edge (u,v) by a path with per_edge[(u,v)]-1 new interior
    vertices (1 = keep the edge).  Original vertices keep their ids; interior
    vertices are appended and labelled "sub:u-v:k".
    """
    for e in g.edges:
        if e not in per_edge:
            raise ParameterError(f"per_edge missing entry for edge {e}")
        if per_edge[e] < 1:
            raise ParameterError(f"per_edge[{e}] must be >= 1")
    labels = list(g.labels) if g.labels is not None else [str(v) for v in range(g.n)]
    edges: list[tuple[int, int]] = []
    nxt = g.n
    for (u, v) in g.edges:
        parts = per_edge[(u, v)]
        prev = u
        for k in range(parts - 1):
            labels.append(f"sub:{u}-{v}:{k}")
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph(nxt, edges, labels=labels)


def subdivision_vertex_map(g: Graph, per_edge: Mapping[tuple[int, int], int]):
    """Interior-vertex provenance for subdivide(g, per_edge).

    Returns {new_vertex_id: (u, v)} for every interior vertex, keyed exactly
    as the ids assigned by subdivide.
    """
    prov = {}
    nxt = g.n
    for (u, v) in g.edges:
        for _ in range(per_edge[(u, v)] - 1):
            prov[nxt] = (u, v)
            nxt += 1
    return prov


# ---------------------------------------------------------------------------
# serialization

def to_json(g: Graph) -> str:
    obj: dict = {"n": g.n, "edges": [[u, v] for u, v in g.edges]}
    if g.labels is not None:
        obj["labels"] = list(g.labels)
    return json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n"


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid graph JSON: {exc}") from exc
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ParameterError('graph JSON must be an object with "n" and "edges"')
    edges = []
    for i, e in enumerate(obj["edges"]):
        if not (isinstance(e, list) and len(e) == 2):
            raise ParameterError(f"edge {i}: expected a 2-array")
        edges.append((int(e[0]), int(e[1])))
    return Graph(int(obj["n"]), edges, labels=obj.get("labels"))


def to_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def from_edgelist(text: str) -> Graph:
    lines = text.splitlines()
    if not lines:
        raise ParameterError("line 1: empty edge-list file")
    head = lines[0].split()
    if len(head) != 2:
        raise ParameterError('line 1: expected "n m"')
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParameterError(f"line 1: {exc}") from exc
    edges: list[tuple[int, int]] = []
    seen = set()
    lineno = 1
    for line in lines[1:]:
        lineno += 1
        if not line.strip():
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParameterError(f'line {lineno}: expected "u v"')
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParameterError(f"line {lineno}: {exc}") from exc
        if u == v:
            raise ParameterError(f"line {lineno}: self-loop at {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParameterError(f"line {lineno}: vertex out of range")
        e = (min(u, v), max(u, v))
        if e in seen:
            raise ParameterError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    if len(edges) != m:
        raise ParameterError(f"header says {m} edges, found {len(edges)}")
    return Graph(n, edges)
