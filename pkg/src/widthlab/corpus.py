"""Seeded corpora and instance generators for the audit and the tests.

Everything random flows from one 64-bit seed through sha256-derived
stream seeds (see generate.derive_seed), so corpora are reproducible
across platforms and runs.
"""

from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, permutations

from .coarse import RegularMapCert
from .decomposition import GDecomposition
from .errors import ParameterError
from .generate import (FamilySpec, derive_seed, dl_ball, generate, grid_box,
                       tree_ball)
from .graphs import Graph, bfs_distances, connected_components, induced_subgraph
from .orders import LinearOrdering
from .wiring import CoarseWiring


def canonical_corpus() -> list[tuple[str, Graph]]:
    """Named instances of every generator family, desk scale."""
    specs = [
        ("path_5", FamilySpec("path", (5,))),
        ("path_8", FamilySpec("path", (8,))),
        ("cycle_5", FamilySpec("cycle", (5,))),
        ("cycle_8", FamilySpec("cycle", (8,))),
        ("star_7", FamilySpec("star", (7,))),
        ("star_9", FamilySpec("star", (9,))),
        ("complete_4", FamilySpec("complete", (4,))),
        ("complete_6", FamilySpec("complete", (6,))),
        ("bipartite_2_3", FamilySpec("complete_bipartite", (2, 3))),
        ("bipartite_3_3", FamilySpec("complete_bipartite", (3, 3))),
        ("binary_tree_3", FamilySpec("binary_tree", (3,))),
        ("tree_ball_3_2", FamilySpec("tree_ball", (3, 2))),
        ("grid_2_5", FamilySpec("grid_box", (2, 5))),
        ("grid_3_3", FamilySpec("grid_box", (3, 3))),
        ("grid_4_4", FamilySpec("grid_box", (4, 4))),
        ("hypercube_3", FamilySpec("hypercube", (3,))),
        ("dl_ball_2_2_1", FamilySpec("dl_ball", (2, 2, 1))),
        ("random_12_3", FamilySpec("random_bounded_degree", (12, 3), seed=7)),
    ]
    return [(name, generate(s)) for name, s in specs]


def rng_for(seed: int, purpose: str) -> random.Random:
    return random.Random(derive_seed(seed, purpose))


def random_graph(rng: random.Random, n_min: int, n_max: int) -> Graph:
    n = rng.randint(n_min, n_max)
    p = rng.uniform(0.15, 0.85)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def random_connected_graph(rng: random.Random, n_min: int, n_max: int) -> Graph:
    """Random graph patched to one component by joining components along
    rng-chosen representative pairs."""
    g = random_graph(rng, n_min, n_max)
    comps = connected_components(g)
    if len(comps) <= 1:
        return g
    edges = list(g.edges)
    reps = [rng.choice(sorted(c)) for c in comps]
    for a, b in zip(reps, reps[1:]):
        edges.append((min(a, b), max(a, b)))
    return Graph(g.n, edges)


def random_ordering(rng: random.Random, n: int) -> LinearOrdering:
    seq = list(range(n))
    rng.shuffle(seq)
    return LinearOrdering.from_sequence(seq)


def random_graphs(seed: int, count: int, n_min: int, n_max: int,
                  connected: bool = False) -> list[Graph]:
    rng = rng_for(seed, f"graphs:{count}:{n_min}:{n_max}:{connected}")
    make = random_connected_graph if connected else random_graph
    return [make(rng, n_min, n_max) for _ in range(count)]


# ---------------------------------------------------------------------------
# exhaustive small-graph enumeration

def all_graphs(n: int):
    """Every labelled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def connected_graphs(n: int):
    from .graphs import is_connected
    for g in all_graphs(n):
        if is_connected(g):
            yield g


def canonical_form(g: Graph) -> tuple:
    """Min edge set over all vertex permutations; usable up to n ~ 7."""
    best = None
    for perm in permutations(range(g.n)):
        edges = tuple(sorted((min(perm[u], perm[v]), max(perm[u], perm[v]))
                             for u, v in g.edges))
        if best is None or edges < best:
            best = edges
    return (g.n, best)


@lru_cache(maxsize=None)
def nonisomorphic_graphs(n: int, connected: bool = False) -> tuple[Graph, ...]:
    """One representative per isomorphism class (small n only)."""
    seen = {}
    source = connected_graphs(n) if connected else all_graphs(n)
    for g in source:
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    return tuple(seen[k] for k in sorted(seen))


def prufer_tree(seq: tuple[int, ...]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    avail = sorted(v for v in range(n) if degree[v] == 1)
    work = list(seq)
    for v in work:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((min(last), max(last)))
    return Graph(n, edges)


@lru_cache(maxsize=None)
def all_trees(n: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of trees on n vertices."""
    if n == 1:
        return (Graph(1, []),)
    if n == 2:
        return (Graph(2, [(0, 1)]),)
    seen = {}
    for seq in _product_range(n, n - 2):
        t = prufer_tree(seq)
        key = canonical_form(t)
        if key not in seen:
            seen[key] = t
    return tuple(seen[k] for k in sorted(seen))


def _product_range(base: int, length: int):
    if length == 0:
        yield ()
        return
    for rest in _product_range(base, length - 1):
        for v in range(base):
            yield rest + (v,)


# ---------------------------------------------------------------------------
# seeded coarse-map / decomposition / wiring instances

def random_regular_map(rng: random.Random, kappa: int,
                       target_n: int = 10, source_n: int = 10):
    """A valid kappa-regular map: random connected target, fiber-capped
    image assignment, and source edges drawn only between vertices whose
    images sit within distance kappa."""
    target = random_connected_graph(rng, max(2, target_n - 3), target_n)
    n = rng.randint(max(2, source_n - 4), source_n)
    fibers = {w: 0 for w in range(target.n)}
    mapping = []
    for _ in range(n):
        choices = [w for w in range(target.n) if fibers[w] < kappa]
        if not choices:
            break
        w = rng.choice(choices)
        fibers[w] += 1
        mapping.append(w)
    n = len(mapping)
    dists = [bfs_distances(target, w) for w in range(target.n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if dists[mapping[u]][mapping[v]] <= kappa and rng.random() < 0.45:
                edges.append((u, v))
    source = Graph(n, edges)
    return RegularMapCert(source, target, tuple(mapping), kappa)


def random_guest_vertices(rng: random.Random, g: Graph, size: int) -> tuple[int, ...]:
    """A random connected vertex set of the given size (or as large as the
    start component allows), grown from a random start."""
    start = rng.randrange(g.n)
    chosen = {start}
    frontier = set(g.neighbors[start])
    while frontier and len(chosen) < size:
        v = rng.choice(sorted(frontier))
        chosen.add(v)
        frontier.update(w for w in g.neighbors[v] if w not in chosen)
        frontier.discard(v)
        frontier -= chosen
    return tuple(sorted(chosen))


def random_decomposition(rng: random.Random, guest: Graph, host: Graph) -> GDecomposition:
    """Valid random decomposition: grow a random connected support per
    guest vertex, then extend supports along a host path wherever an edge
    constraint is unmet."""
    supports = []
    for _ in range(guest.n):
        size = rng.randint(1, max(1, host.n // 2))
        supports.append(set(random_guest_vertices(rng, host, size)))
    for u, v in guest.edges:
        if supports[u] & supports[v]:
            continue
        a = rng.choice(sorted(supports[u]))
        b = rng.choice(sorted(supports[v]))
        dist = bfs_distances(host, b)
        cur = a
        supports[u].add(cur)
        while cur != b:
            cur = min(w for w in host.neighbors[cur] if dist[w] == dist[cur] - 1)
            supports[u].add(cur)
    bags = [frozenset(x for x in range(guest.n) if g in supports[x])
            for g in range(host.n)]
    return GDecomposition(host, guest, tuple(bags))


def random_wiring(rng: random.Random, guest: Graph, host: Graph) -> CoarseWiring:
    """Valid random wiring: random vertex map, every edge routed along a
    shortest path with rng-permuted neighbour preference."""
    if host.n == 0:
        raise ParameterError("host must be nonempty")
    mapping = tuple(rng.randrange(host.n) for _ in range(guest.n))
    walks = []
    for u, v in guest.edges:
        a, b = mapping[u], mapping[v]
        dist = bfs_distances(host, b)
        if dist[a] == float("inf"):
            raise ParameterError("host must be connected for random wirings")
        walk = [a]
        cur = a
        while cur != b:
            opts = [w for w in host.neighbors[cur] if dist[w] == dist[cur] - 1]
            cur = rng.choice(sorted(opts))
            walk.append(cur)
        walks.append(tuple(walk))
    return CoarseWiring(guest, host, mapping, tuple(walks))
