"""Host-indexed bag decompositions: validation, exact p-width scoring,
constructive decompositions (trivial, grid-host, subdivision transfer,
elimination tree) and an exhaustive minimum-width search at tiny scale.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .backends._subsets import connected_subsets_bits
from .errors import CapacityError, ParameterError
from .graphs import Graph, from_json, subdivide, subdivision_vertex_map, to_json
from .orders import LayoutValue, LinearOrdering, PNorm, score
from .separation import EliminationCertificate, elimination_width

MAX_SEARCH_N = 6


@dataclass(frozen=True)
class GDecomposition:
    """Bags over the guest's vertices, indexed by host vertices."""

    host: Graph
    guest: Graph
    bags: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.bags) != self.host.n:
            raise ParameterError("one bag per host vertex required")
        for g, bag in enumerate(self.bags):
            for v in bag:
                if not (0 <= v < self.guest.n):
                    raise ParameterError(f"bag {g} contains foreign vertex {v}")

    def support(self, v: int) -> frozenset[int]:
        return frozenset(g for g, bag in enumerate(self.bags) if v in bag)


def validate(d: GDecomposition) -> list[str]:
    """Empty list iff d satisfies cover, edge cover and connected supports."""
    problems = []
    covered = set().union(*d.bags) if d.bags else set()
    for v in range(d.guest.n):
        if v not in covered:
            problems.append(f"cover: vertex {v} is in no bag")
    for u, v in d.guest.edges:
        if not any(u in bag and v in bag for bag in d.bags):
            problems.append(f"edge-cover: edge ({u},{v}) is in no bag")
    for v in range(d.guest.n):
        supp = d.support(v)
        if not supp:
            continue
        seen = {min(supp)}
        stack = [min(supp)]
        while stack:
            g = stack.pop()
            for h in d.host.neighbors[g]:
                if h in supp and h not in seen:
                    seen.add(h)
                    stack.append(h)
        if seen != supp:
            problems.append(f"connectivity: support of vertex {v} is disconnected")
    return problems


def width(d: GDecomposition, p: PNorm) -> LayoutValue:
    """Exact p-width of one decomposition (sum of |bag|^p, or max bag)."""
    problems = validate(d)
    if problems:
        raise ParameterError("invalid decomposition: " + "; ".join(problems))
    return LayoutValue(p, score([len(b) for b in d.bags], p))


def trivial_decomposition(guest: Graph, host: Graph, at: int = 0) -> GDecomposition:
    """One bag holding every guest vertex, the rest empty."""
    if not (0 <= at < host.n):
        raise ParameterError("bag index out of range")
    bags = [frozenset()] * host.n
    bags[at] = frozenset(range(guest.n))
    return GDecomposition(host, guest, tuple(bags))


def grid_decomposition(guest: Graph) -> GDecomposition:
    """Decomposition over the m x m grid, m = |V(guest)|.

    Vertex k occupies its diagonal cell (k,k); each edge (k,l) with k < l
    adds to vertex k's support the hook running right along row k to
    (k,l) and down column l to (l,l), so the edge is covered in the bag
    at (l,l).  Bags stay within 1 + max degree.
    """
    from .generate import grid_box

    m = guest.n
    if m == 0:
        raise ParameterError("grid decomposition needs a nonempty guest")
    host = grid_box((m, m))

    def cell(a: int, b: int) -> int:
        return a * m + b

    supports: list[set[int]] = [set() for _ in range(m)]
    for k in range(m):
        supports[k].add(cell(k, k))
    for k, l in guest.edges:
        for c in range(k, l + 1):
            supports[k].add(cell(k, c))
        for r in range(k, l + 1):
            supports[k].add(cell(r, l))
    bags = [frozenset(v for v in range(m) if g in supports[v]) for g in range(host.n)]
    return GDecomposition(host, guest, tuple(bags))


def subdivision_transfer(d: GDecomposition,
                         per_edge: Mapping[tuple[int, int], int]) -> GDecomposition:
    """Transfer d to the subdivided host: original host vertices keep their
    bags, each interior vertex on a split edge (g0,g1) gets bag(g0) & bag(g1)."""
    problems = validate(d)
    if problems:
        raise ParameterError("invalid decomposition: " + "; ".join(problems))
    new_host = subdivide(d.host, per_edge)
    origin = subdivision_vertex_map(d.host, per_edge)
    bags = list(d.bags)
    for v in range(d.host.n, new_host.n):
        g0, g1 = origin[v]
        bags.append(d.bags[g0] & d.bags[g1])
    return GDecomposition(new_host, d.guest, tuple(bags))


def decomposition_from_elimination(cert: EliminationCertificate,
                                   guest: Graph) -> GDecomposition:
    """Tree decomposition from an elimination order: bag of v is v plus its
    later neighbours in the fill graph at elimination time; v hangs below
    the earliest-eliminated vertex of its bag (roots chain to the next
    eliminated vertex so the host stays one tree)."""
    if cert.order.n != guest.n:
        raise ParameterError("certificate size does not match guest")
    if elimination_width(guest, cert.order) > cert.width:
        raise ParameterError("elimination order exceeds certified width")
    seq = cert.order.sequence()
    posn = {v: i for i, v in enumerate(seq)}
    adj = [set(nb) for nb in guest.neighbors]
    bags = [frozenset()] * guest.n
    later: dict[int, set[int]] = {}
    for v in seq:
        nbrs = set(adj[v])
        later[v] = nbrs
        bags[v] = frozenset({v} | nbrs)
        for u in nbrs:
            adj[u].discard(v)
        for u in nbrs:
            for w in nbrs:
                if u < w:
                    adj[u].add(w)
                    adj[w].add(u)
        adj[v] = set()
    edges = []
    for i, v in enumerate(seq):
        if later[v]:
            parent = min(later[v], key=lambda u: posn[u])
            edges.append((v, parent))
        elif i + 1 < guest.n:
            edges.append((v, seq[i + 1]))
    host = Graph(guest.n, edges, labels=[str(v) for v in range(guest.n)])
    d = GDecomposition(host, guest, tuple(bags))
    problems = validate(d)
    if problems:
        raise AssertionError("elimination decomposition invalid: " + "; ".join(problems))
    return d


def path_decomposition_from_ordering(g: Graph, f: LinearOrdering) -> GDecomposition:
    """Path decomposition read off a vertex ordering: bag i holds the
    vertex at position i plus every earlier vertex that still has a
    neighbour at position >= i.  Width equals the vs score of f."""
    from .generate import path

    if f.n != g.n:
        raise ParameterError("ordering size does not match graph")
    host = path(g.n) if g.n else Graph(0, [])
    seq = f.sequence()
    bags = []
    for i in range(1, g.n + 1):
        bag = {seq[i - 1]}
        for u in range(g.n):
            if f.positions[u] < i and any(f.positions[w] >= i for w in g.neighbors[u]):
                bag.add(u)
        bags.append(frozenset(bag))
    return GDecomposition(host, g, tuple(bags))


def min_width_search(guest: Graph, host: Graph, p: PNorm,
                     slim: int | None = None):
    """Exhaustive minimum-width search over all decompositions, by
    assigning each guest vertex a connected host support (tiny scale:
    both sides <= 6 vertices).

    Returns (LayoutValue, GDecomposition), or None when no slim-feasible
    decomposition exists.
    """
    if guest.n > MAX_SEARCH_N or host.n > MAX_SEARCH_N:
        raise CapacityError(f"min_width_search handles <= {MAX_SEARCH_N} vertices per side")
    if guest.n == 0 or host.n == 0:
        raise ParameterError("min_width_search needs nonempty guest and host")
    if slim is not None and slim < 1:
        raise ParameterError("slim bound must be >= 1")
    host_bits = list(host.bits)
    supports = sorted(connected_subsets_bits(host_bits, host.n),
                      key=lambda mask: (mask.bit_count(), mask))
    n = guest.n
    assigned = [0] * n
    counts = [0] * host.n
    best: list = [None, None]   # score, supports copy

    def bag_score() -> int:
        return score(counts, p)

    def rec(v: int, partial: int):
        if v == n:
            if best[0] is None or partial < best[0]:
                best[0] = partial
                best[1] = assigned.copy()
            return
        for mask in supports:
            ok = True
            for u in guest.neighbors[v]:
                if u < v and not (assigned[u] & mask):
                    ok = False
                    break
            if not ok:
                continue
            m = mask
            bad = False
            touched = []
            while m:
                b = m & -m
                gidx = b.bit_length() - 1
                m ^= b
                counts[gidx] += 1
                touched.append(gidx)
                if slim is not None and counts[gidx] > slim:
                    bad = True
                    break
            if not bad:
                assigned[v] = mask
                cur = bag_score()
                bound = cur if p.is_infinite else cur + (n - v - 1)
                if best[0] is None or bound < best[0]:
                    rec(v + 1, cur)
                assigned[v] = 0
            for gidx in touched:
                counts[gidx] -= 1
        return

    rec(0, 0)
    if best[0] is None:
        return None
    bags = []
    for gidx in range(host.n):
        bags.append(frozenset(v for v in range(n) if (best[1][v] >> gidx) & 1))
    d = GDecomposition(host, guest, tuple(bags))
    problems = validate(d)
    if problems:
        raise AssertionError("search produced invalid decomposition: " + "; ".join(problems))
    return LayoutValue(p, best[0]), d


# ---------------------------------------------------------------------------
# serialization

def decomposition_to_json(d: GDecomposition) -> str:
    obj = {
        "host": json.loads(to_json(d.host)),
        "guest": json.loads(to_json(d.guest)),
        "bags": [sorted(bag) for bag in d.bags],
    }
    return json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n"


def decomposition_from_json(text: str) -> GDecomposition:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid decomposition JSON: {exc}") from exc
    for key in ("host", "guest", "bags"):
        if key not in obj:
            raise ParameterError(f'decomposition JSON missing "{key}"')
    host = from_json(json.dumps(obj["host"]))
    guest = from_json(json.dumps(obj["guest"]))
    bags = tuple(frozenset(int(v) for v in bag) for bag in obj["bags"])
    return GDecomposition(host, guest, bags)
