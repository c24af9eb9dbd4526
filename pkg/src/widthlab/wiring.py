"""Coarse wirings: vertex-to-vertex, edge-to-walk maps into a host, with
load accounting, conversions to and from decompositions, and exhaustive
minimum-volume / minimal-coarseness search at tiny scale.

A walk through a host vertex counts once for that walk however often it
revisits; this makes load a membership count, matching the definition of
a coarse k-wiring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .decomposition import GDecomposition, validate
from .errors import CapacityError, ParameterError
from .graphs import Graph, from_json, induced_subgraph, to_json

MAX_SEARCH_N = 6


@dataclass(frozen=True)
class CoarseWiring:
    guest: Graph
    host: Graph
    vertex_map: tuple[int, ...]
    walks: tuple[tuple[int, ...], ...]      # aligned with guest.edges

    def __post_init__(self):
        if len(self.vertex_map) != self.guest.n:
            raise ParameterError("vertex_map must cover every guest vertex")
        if len(self.walks) != self.guest.m:
            raise ParameterError("one walk per guest edge required")


@dataclass(frozen=True)
class WiringLoad:
    fiber_max: int
    walk_max: int
    volume: int
    edge_load_max: int    # reported only; feasibility uses vertex loads

    @property
    def coarseness(self) -> int:
        return max(self.fiber_max, self.walk_max)


def validate_wiring(w: CoarseWiring) -> list[str]:
    problems = []
    for x in w.vertex_map:
        if not (0 <= x < w.host.n):
            problems.append(f"vertex_map image {x} out of range")
    for ei, (u, v) in enumerate(w.guest.edges):
        walk = w.walks[ei]
        if not walk:
            problems.append(f"walk {ei} is empty")
            continue
        if walk[0] != w.vertex_map[u] or walk[-1] != w.vertex_map[v]:
            problems.append(f"walk {ei} does not join the images of edge ({u},{v})")
        for a, b in zip(walk, walk[1:]):
            if a != b and not w.host.has_edge(a, b):
                problems.append(f"walk {ei} jumps from {a} to {b}")
    return problems


def load(w: CoarseWiring) -> WiringLoad:
    problems = validate_wiring(w)
    if problems:
        raise ParameterError("invalid wiring: " + "; ".join(problems))
    fibers: dict[int, int] = {}
    for y in w.vertex_map:
        fibers[y] = fibers.get(y, 0) + 1
    vload: dict[int, int] = {}
    eload: dict[tuple[int, int], int] = {}
    vol = set(w.vertex_map)
    for walk in w.walks:
        for y in set(walk):
            vload[y] = vload.get(y, 0) + 1
        vol.update(walk)
        for e in {(min(a, b), max(a, b)) for a, b in zip(walk, walk[1:]) if a != b}:
            eload[e] = eload.get(e, 0) + 1
    return WiringLoad(
        fiber_max=max(fibers.values(), default=0),
        walk_max=max(vload.values(), default=0),
        volume=len(vol),
        edge_load_max=max(eload.values(), default=0))


def identity_wiring(g: Graph) -> CoarseWiring:
    return CoarseWiring(g, g, tuple(range(g.n)), tuple((u, v) for u, v in g.edges))


def decomposition_from_wiring(w: CoarseWiring) -> GDecomposition:
    """Bags collect the guest vertices whose incident walks pass through a
    host vertex.  The image of the vertex itself is included, which is
    redundant for non-isolated vertices (every incident walk starts
    there) but keeps isolated vertices covered."""
    problems = validate_wiring(w)
    if problems:
        raise ParameterError("invalid wiring: " + "; ".join(problems))
    reach: list[set[int]] = [{w.vertex_map[x]} for x in range(w.guest.n)]
    for ei, (u, v) in enumerate(w.guest.edges):
        verts = set(w.walks[ei])
        reach[u].update(verts)
        reach[v].update(verts)
    bags = [frozenset(x for x in range(w.guest.n) if g in reach[x])
            for g in range(w.host.n)]
    d = GDecomposition(w.host, w.guest, tuple(bags))
    bad = validate(d)
    if bad:
        raise AssertionError("wiring decomposition invalid: " + "; ".join(bad))
    return d


def _least_path_within(host: Graph, allowed: frozenset[int], a: int, b: int) -> tuple[int, ...]:
    """Lex-least shortest a..b path inside the induced subgraph on allowed."""
    verts = sorted(allowed)
    sub = induced_subgraph(host, verts)
    idx = {v: i for i, v in enumerate(verts)}
    from .graphs import bfs_distances
    dist = bfs_distances(sub, idx[b])
    if dist[idx[a]] == float("inf"):
        raise ParameterError("support is not connected")
    seq = [a]
    cur = idx[a]
    while cur != idx[b]:
        cur = min(x for x in sub.neighbors[cur] if dist[x] == dist[cur] - 1)
        seq.append(verts[cur])
    return tuple(seq)


def wiring_from_decomposition(d: GDecomposition) -> CoarseWiring:
    """Wire the guest along a valid decomposition: each vertex maps to the
    least host vertex of its support; each edge walks inside the first
    support to a shared host vertex and on inside the second."""
    problems = validate(d)
    if problems:
        raise ParameterError("invalid decomposition: " + "; ".join(problems))
    supports = [d.support(x) for x in range(d.guest.n)]
    fmap = tuple(min(s) for s in supports)
    walks = []
    for u, v in d.guest.edges:
        z = min(supports[u] & supports[v])
        first = _least_path_within(d.host, supports[u], fmap[u], z)
        second = _least_path_within(d.host, supports[v], z, fmap[v])
        walks.append(first + second[1:])
    w = CoarseWiring(d.guest, d.host, fmap, tuple(walks))
    bad = validate_wiring(w)
    if bad:
        raise AssertionError("constructed wiring invalid: " + "; ".join(bad))
    return w


def _simple_paths(host: Graph, a: int, b: int) -> list[tuple[int, ...]]:
    """All simple a..b paths, sorted by (length, sequence)."""
    out = []
    stack = [(a, (a,), {a})]
    while stack:
        cur, path, seen = stack.pop()
        if cur == b:
            out.append(path)
            continue
        for w in reversed(host.neighbors[cur]):
            if w not in seen:
                stack.append((w, path + (w,), seen | {w}))
    out.sort(key=lambda p: (len(p), p))
    return out


def min_volume_wiring(guest: Graph, host: Graph, k: int,
                      feasible_only: bool = False):
    """Exact minimum volume of a coarse k-wiring, by branching over vertex
    maps (fiber-capped) and routing each edge over the host's simple
    paths with load-aware backtracking.  Minimal wirings never need a
    vertex revisited by a walk, so simple paths are exhaustive.

    Returns (volume, CoarseWiring) or None when no k-wiring exists.
    """
    if guest.n > MAX_SEARCH_N or host.n > MAX_SEARCH_N:
        raise CapacityError(f"min_volume_wiring handles <= {MAX_SEARCH_N} vertices per side")
    if guest.n == 0 or host.n == 0:
        raise ParameterError("min_volume_wiring needs nonempty guest and host")
    if k < 1:
        raise ParameterError("k must be >= 1")
    paths: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    for a in range(host.n):
        for b in range(host.n):
            paths[(a, b)] = _simple_paths(host, a, b)
    edges = guest.edges
    best: list = [None, None, None]    # volume, map, walks

    fmap = [0] * guest.n
    fibers = [0] * host.n

    def route(ei: int, vload: list[int], used: int, walks: list[tuple[int, ...]]):
        if ei == len(edges):
            vol = bin(used).count("1")
            if best[0] is None or vol < best[0]:
                best[0] = vol
                best[1] = fmap.copy()
                best[2] = walks.copy()
            return
        if best[0] is not None:
            if feasible_only or bin(used).count("1") >= best[0]:
                return
        u, v = edges[ei]
        for path in paths[(fmap[u], fmap[v])]:
            newload = vload.copy()
            ok = True
            for y in set(path):
                newload[y] += 1
                if newload[y] > k:
                    ok = False
                    break
            if not ok:
                continue
            newused = used
            for y in path:
                newused |= 1 << y
            if best[0] is not None and not feasible_only and bin(newused).count("1") >= best[0]:
                continue
            walks.append(path)
            route(ei + 1, newload, newused, walks)
            walks.pop()
            if best[0] is not None and feasible_only:
                return

    def assign(x: int):
        if best[0] is not None and feasible_only:
            return
        if x == guest.n:
            base = 0
            for y in fmap:
                base |= 1 << y
            if best[0] is not None and not feasible_only and bin(base).count("1") >= best[0]:
                return
            route(0, [0] * host.n, base, [])
            return
        for y in range(host.n):
            if fibers[y] < k:
                fibers[y] += 1
                fmap[x] = y
                assign(x + 1)
                fibers[y] -= 1

    assign(0)
    if best[0] is None:
        return None
    w = CoarseWiring(guest, host, tuple(best[1]), tuple(best[2]))
    ld = load(w)
    if ld.coarseness > k or ld.volume != best[0]:
        raise AssertionError("wiring search certificate failed re-validation")
    return best[0], w


def para(guest: Graph, host: Graph) -> int:
    """Minimal k such that a coarse k-wiring of guest into host exists.
    Mapping everything to one host vertex caps k at max(n, m, 1)."""
    cap = max(guest.n, guest.m, 1)
    for k in range(1, cap + 1):
        if min_volume_wiring(guest, host, k, feasible_only=True) is not None:
            return k
    raise AssertionError("all-to-one wiring bound violated")


# ---------------------------------------------------------------------------
# serialization

def wiring_to_json(w: CoarseWiring) -> str:
    obj = {
        "guest": json.loads(to_json(w.guest)),
        "host": json.loads(to_json(w.host)),
        "vertex_map": list(w.vertex_map),
        "walks": [list(walk) for walk in w.walks],
    }
    return json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n"


def wiring_from_json(text: str) -> CoarseWiring:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParameterError(f"invalid wiring JSON: {exc}") from exc
    for key in ("guest", "host", "vertex_map", "walks"):
        if key not in obj:
            raise ParameterError(f'wiring JSON missing "{key}"')
    guest = from_json(json.dumps(obj["guest"]))
    host = from_json(json.dumps(obj["host"]))
    return CoarseWiring(guest, host, tuple(int(x) for x in obj["vertex_map"]),
                        tuple(tuple(int(y) for y in walk) for walk in obj["walks"]))
