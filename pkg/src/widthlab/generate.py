"""Generators for the canonical graph families used as hosts and corpora."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field

from .errors import ParameterError
from .graphs import Graph, bfs_distances

FAMILIES = (
    "path", "cycle", "star", "complete", "complete_bipartite",
    "binary_tree", "tree_ball", "grid_box", "hypercube", "dl_ball",
    "random_bounded_degree",
)

# accepted shorthand on the CLI
FAMILY_ALIASES = {"grid": "grid_box", "tree3": "tree_ball"}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]
    seed: int | None = None

    def __post_init__(self):
        fam = FAMILY_ALIASES.get(self.family, self.family)
        object.__setattr__(self, "family", fam)
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        if fam not in FAMILIES:
            raise ParameterError(f"unknown family {self.family!r}")
        if fam == "random_bounded_degree" and self.seed is None:
            raise ParameterError("random family requires a seed")


def derive_seed(seed: int, purpose: str) -> int:
    """Split one 64-bit master seed into independent named streams.

    The stream seed is the first 8 bytes of sha256("{seed}:{purpose}"),
    fed to random.Random (MT19937).  Fixed algorithm, platform independent.
    """
    h = hashlib.sha256(f"{seed}:{purpose}".encode()).digest()
    return int.from_bytes(h[:8], "big")


def path(n: int) -> Graph:
    if n < 1:
        raise ParameterError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ParameterError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """Star on n vertices: centre 0 joined to 1..n-1."""
    if n < 1:
        raise ParameterError("star needs n >= 1")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise ParameterError("complete needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise ParameterError("complete_bipartite needs both sides >= 1")
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def binary_tree(depth: int) -> Graph:
    """Complete binary tree with levels 0..depth (2^(depth+1)-1 vertices)."""
    if depth < 0:
        raise ParameterError("binary_tree needs depth >= 0")
    n = 2 ** (depth + 1) - 1
    edges = [((i - 1) // 2, i) for i in range(1, n)]
    return Graph(n, edges)


def tree_ball(degree: int, radius: int) -> Graph:
    """Ball of the infinite degree-regular tree: root 0 has `degree`
    children, every other internal vertex degree-1 children, out to depth
    radius.  Labels record the root path."""
    if degree < 2:
        raise ParameterError("tree_ball needs degree >= 2")
    if radius < 0:
        raise ParameterError("tree_ball needs radius >= 0")
    edges = []
    labels = ["r"]
    frontier = [0]
    nxt = 1
    for level in range(radius):
        new_frontier = []
        for v in frontier:
            kids = degree if level == 0 else degree - 1
            for c in range(kids):
                edges.append((v, nxt))
                labels.append(labels[v] + f".{c}")
                new_frontier.append(nxt)
                nxt += 1
        frontier = new_frontier
    return Graph(nxt, edges, labels=labels)


def grid_box(sides: tuple[int, ...]) -> Graph:
    """Box in the integer lattice: product of paths with the given sides."""
    if not sides or any(s < 1 for s in sides):
        raise ParameterError("grid_box needs at least one side, all >= 1")
    coords = [()]
    for s in sides:
        coords = [c + (i,) for c in coords for i in range(s)]
    index = {c: i for i, c in enumerate(coords)}
    edges = []
    for c in coords:
        for d in range(len(sides)):
            if c[d] + 1 < sides[d]:
                nb = c[:d] + (c[d] + 1,) + c[d + 1:]
                edges.append((index[c], index[nb]))
    labels = [",".join(map(str, c)) for c in coords]
    return Graph(len(coords), edges, labels=labels)


def hypercube(d: int) -> Graph:
    if d < 0:
        raise ParameterError("hypercube needs d >= 0")
    n = 1 << d
    edges = [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)]
    return Graph(n, edges, labels=[format(x, f"0{max(d,1)}b") for x in range(n)])


def _horocyclic_words(branching: int, radius: int) -> list[str]:
    """Vertices of the horocyclic (branching+1)-regular tree near the
    basepoint, written as words below the height -radius ancestor.

    A word w sits at height len(w) - radius; the basepoint is "0"*radius.
    Only words within tree distance radius of the basepoint are kept.
    """
    base = "0" * radius
    words = [""]
    out = []
    while words:
        w = words.pop()
        # tree distance to the basepoint: up to the common prefix, down again
        common = 0
        for a, b in zip(w, base):
            if a != b:
                break
            common += 1
        dist = (len(w) - common) + (radius - common)
        if dist <= radius:
            out.append(w)
        if len(w) < 2 * radius:
            for c in range(branching):
                words.append(w + str(c))
    return sorted(out)


def dl_ball(m: int, n: int, radius: int) -> Graph:
    """Ball of radius `radius` around the basepoint of the Diestel-Leader
    graph DL(m,n).

    Vertices of DL(m,n) are pairs (u,v) of vertices of the horocyclic
    (m+1)- and (n+1)-regular trees with height(u) + height(v) = 0; moving
    along an edge steps both coordinates across a tree edge, in opposite
    height directions.  Tree heights are truncated to [-radius, radius],
    which the metric inequality d_DL >= d_tree makes lossless for the ball.
    """
    if m < 2 or n < 2:
        raise ParameterError("dl_ball needs m, n >= 2")
    if radius < 0:
        raise ParameterError("dl_ball needs radius >= 0")
    left = _horocyclic_words(m, radius)
    right = _horocyclic_words(n, radius)
    # pair heights must cancel: len(w1) + len(w2) == 2*radius
    pairs = [(a, b) for a in left for b in right if len(a) + len(b) == 2 * radius]
    index = {p: i for i, p in enumerate(sorted(pairs))}

    def tree_adjacent(a: str, b: str) -> bool:
        if len(a) == len(b) + 1:
            a, b = b, a
        return len(b) == len(a) + 1 and b.startswith(a)

    edges = []
    for (a1, b1), i in index.items():
        for (a2, b2), j in index.items():
            if i < j and tree_adjacent(a1, a2) and tree_adjacent(b1, b2):
                edges.append((i, j))
    full = Graph(len(index), edges)
    base = ("0" * radius, "0" * radius)
    dist = bfs_distances(full, index[base])
    keep = sorted(v for v in range(full.n) if dist[v] <= radius)
    sub_index = {v: i for i, v in enumerate(keep)}
    rev = {i: p for p, i in index.items()}
    out_edges = [(sub_index[u], sub_index[v]) for u, v in full.edges
                 if u in sub_index and v in sub_index]
    labels = [f"{rev[v][0]}|{rev[v][1]}" for v in keep]
    return Graph(len(keep), out_edges, labels=labels)


def random_bounded_degree(n: int, max_degree: int, seed: int) -> Graph:
    """Seeded random graph with maximum degree <= max_degree: candidate
    edges are shuffled and inserted while both endpoints have room."""
    if n < 1 or max_degree < 0:
        raise ParameterError("random_bounded_degree needs n >= 1, max_degree >= 0")
    rng = random.Random(derive_seed(seed, f"random_bounded_degree:{n}:{max_degree}"))
    cand = [(i, j) for i in range(n) for j in range(i + 1, n)]
    rng.shuffle(cand)
    deg = [0] * n
    edges = []
    for u, v in cand:
        if deg[u] < max_degree and deg[v] < max_degree:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(n, edges)


def generate(spec: FamilySpec) -> Graph:
    """Build the graph for a family spec; deterministic for a fixed spec."""
    fam, p = spec.family, spec.params

    def want(k: int):
        if len(p) != k:
            raise ParameterError(f"{fam} takes {k} parameter(s), got {len(p)}")

    if fam == "path":
        want(1); return path(p[0])
    if fam == "cycle":
        want(1); return cycle(p[0])
    if fam == "star":
        want(1); return star(p[0])
    if fam == "complete":
        want(1); return complete(p[0])
    if fam == "complete_bipartite":
        want(2); return complete_bipartite(p[0], p[1])
    if fam == "binary_tree":
        want(1); return binary_tree(p[0])
    if fam == "tree_ball":
        want(2); return tree_ball(p[0], p[1])
    if fam == "grid_box":
        if not p:
            raise ParameterError("grid_box needs at least one side")
        return grid_box(p)
    if fam == "hypercube":
        want(1); return hypercube(p[0])
    if fam == "dl_ball":
        want(3); return dl_ball(p[0], p[1], p[2])
    if fam == "random_bounded_degree":
        want(2); return random_bounded_degree(p[0], p[1], spec.seed)
    raise ParameterError(f"unknown family {fam!r}")
