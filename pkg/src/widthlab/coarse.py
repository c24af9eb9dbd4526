"""Regular maps between bounded-degree graphs, the comparison-graph
construction, and the pullback/pushforward constructions with their
per-instance certified inequalities.

Geodesics are always the lexicographically least shortest path (by
vertex-id sequence), which makes every construction deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .decomposition import GDecomposition, validate
from .errors import ParameterError
from .graphs import Graph, bfs_distances, induced_subgraph
from .orders import LinearOrdering

INF = float("inf")


@dataclass(frozen=True)
class RegularMapCert:
    source: Graph
    target: Graph
    mapping: tuple[int, ...]
    kappa: int

    def __post_init__(self):
        if len(self.mapping) != self.source.n:
            raise ParameterError("mapping must cover every source vertex")
        if self.kappa < 1:
            raise ParameterError("kappa must be >= 1")
        for w in self.mapping:
            if not (0 <= w < self.target.n):
                raise ParameterError(f"image vertex {w} out of range")


def verify_regular(cert: RegularMapCert) -> list[str]:
    """Violations of kappa-regularity.  The Lipschitz condition is checked
    on adjacent pairs only; edge-wise kappa-Lipschitz implies the general
    bound in a path metric, and cross-component pairs impose nothing."""
    problems = []
    dist_cache: dict[int, list[float]] = {}
    for u, v in cert.source.edges:
        yu, yv = cert.mapping[u], cert.mapping[v]
        if yu not in dist_cache:
            dist_cache[yu] = bfs_distances(cert.target, yu)
        if dist_cache[yu][yv] > cert.kappa:
            problems.append(
                f"lipschitz: edge ({u},{v}) maps to distance {dist_cache[yu][yv]}")
    fibers: dict[int, int] = {}
    for w in cert.mapping:
        fibers[w] = fibers.get(w, 0) + 1
    for w, c in sorted(fibers.items()):
        if c > cert.kappa:
            problems.append(f"fiber: target vertex {w} has {c} preimages")
    return problems


class GeodesicChoice:
    """Lexicographically least shortest paths in a fixed target graph,
    computed on demand and cached per ordered pair."""

    def __init__(self, target: Graph):
        self.target = target
        self._dist: dict[int, list[float]] = {}
        self._paths: dict[tuple[int, int], tuple[int, ...]] = {}

    def dist(self, a: int, b: int) -> float:
        if b not in self._dist:
            self._dist[b] = bfs_distances(self.target, b)
        return self._dist[b][a]

    def path(self, a: int, b: int) -> tuple[int, ...]:
        """Least shortest path a..b; ParameterError if disconnected."""
        key = (a, b)
        if key in self._paths:
            return self._paths[key]
        if b not in self._dist:
            self._dist[b] = bfs_distances(self.target, b)
        dist = self._dist[b]
        if dist[a] == INF:
            raise ParameterError(f"target vertices {a},{b} are not connected")
        seq = [a]
        cur = a
        while cur != b:
            cur = min(w for w in self.target.neighbors[cur] if dist[w] == dist[cur] - 1)
            seq.append(cur)
        out = tuple(seq)
        self._paths[key] = out
        return out


@dataclass(frozen=True)
class ComparisonGraph:
    """The image of a guest subgraph fattened by chosen geodesics.

    graph: the subgraph of the target (relabelled; labels carry target
    ids).  walks: the chosen geodesic per guest edge, in target ids.
    covers: per target vertex, the guest edges whose geodesic passes
    through it.
    """

    graph: Graph
    guest: Graph
    guest_vertices: tuple[int, ...]
    image: tuple[int, ...]                      # target id of phi(x) per guest vertex
    local_of_target: dict[int, int]
    walks: tuple[tuple[int, ...], ...]
    covers: dict[int, tuple[tuple[int, int], ...]]

    def walk_load(self) -> int:
        return max((len(v) for v in self.covers.values()), default=0)


def comparison_graph(cert: RegularMapCert, guest_vertices: Iterable[int],
                     geodesics: GeodesicChoice | None = None) -> ComparisonGraph:
    """Build the comparison graph of the induced guest on guest_vertices:
    all image vertices plus, for every guest edge, the vertices and edges
    of the chosen geodesic between the endpoint images."""
    if geodesics is None:
        geodesics = GeodesicChoice(cert.target)
    if geodesics.target is not cert.target:
        raise ParameterError("geodesic table belongs to a different target")
    gverts = tuple(sorted(set(guest_vertices)))
    guest = induced_subgraph(cert.source, gverts)
    image = tuple(cert.mapping[gverts[i]] for i in range(guest.n))
    vset = set(image)
    eset: set[tuple[int, int]] = set()
    walks = []
    covers: dict[int, list[tuple[int, int]]] = {}
    for u, v in guest.edges:
        w = geodesics.path(image[u], image[v])
        if len(w) - 1 > cert.kappa:
            raise ParameterError("certificate is not kappa-regular on this guest")
        walks.append(w)
        vset.update(w)
        for y in set(w):
            covers.setdefault(y, []).append((u, v))
        for a, b in zip(w, w[1:]):
            eset.add((min(a, b), max(a, b)))
    tverts = sorted(vset)
    local = {y: i for i, y in enumerate(tverts)}
    graph = Graph(len(tverts), [(local[a], local[b]) for a, b in eset],
                  labels=[str(y) for y in tverts])
    return ComparisonGraph(
        graph=graph, guest=guest, guest_vertices=gverts, image=image,
        local_of_target=local, walks=tuple(walks),
        covers={y: tuple(es) for y, es in covers.items()})


def size_bounds_hold(comp: ComparisonGraph, cert: RegularMapCert) -> bool:
    """(1/kappa)|V(guest)| <= |V(comp)| <= (1 + (kappa-1)/2 * maxdeg)|V(guest)|."""
    nv = comp.guest.n
    ncomp = comp.graph.n
    k = cert.kappa
    if k * ncomp < nv:
        return False
    # integer form of (1 + (k-1)/2 * d) * nv
    return 2 * ncomp <= (2 + (k - 1) * comp.guest.max_degree()) * nv


def walk_load_bound(comp: ComparisonGraph, cert: RegularMapCert) -> int:
    return cert.kappa * comp.guest.max_degree() * (1 + cert.target.max_degree()) ** cert.kappa


@dataclass(frozen=True)
class PullbackOrderingReport:
    ordering: LinearOrdering
    bandwidth_claim_holds: bool
    cutwidth_claim_holds: bool
    collision_constant: int
    collision_bound: int
    additive_term: int


def pullback_ordering(g_order: LinearOrdering, comp: ComparisonGraph,
                      cert: RegularMapCert) -> PullbackOrderingReport:
    """Order the guest by the positions of the vertex images (ties by
    vertex id) and check the two transfer claims constructively:

    * every guest edge stretched beyond kappa^2 admits a comparison-graph
      edge ww' on its geodesic with stretch(f) <= kappa^2 |g(w)-g(w')|;
    * per gap k, F_k <= C g_{a_k} + kappa * maxdeg(source), where C is the
      measured max number of guest edges assigned to one comparison edge.
    """
    n = comp.guest.n
    if g_order.n != comp.graph.n:
        raise ParameterError("ordering does not match the comparison graph")
    gpos = [g_order.positions[comp.local_of_target[y]] for y in comp.image]
    seq = sorted(range(n), key=lambda v: (gpos[v], v))
    f = LinearOrdering.from_sequence(seq)
    k2 = cert.kappa * cert.kappa

    bw_ok = True
    for ei, (u, v) in enumerate(comp.guest.edges):
        stretch = abs(f.positions[u] - f.positions[v])
        if stretch <= k2:
            continue
        walk = comp.walks[ei]
        found = False
        for a, b in zip(walk, walk[1:]):
            ga = g_order.positions[comp.local_of_target[a]]
            gb = g_order.positions[comp.local_of_target[b]]
            if stretch <= k2 * abs(ga - gb):
                found = True
                break
        if not found:
            bw_ok = False

    # constructive cut assignment, gap by gap
    fseq = f.sequence()
    edge_index = {e: i for i, e in enumerate(comp.guest.edges)}
    assignments: dict[tuple[int, int, int], int] = {}
    fk = []
    gk = []
    extra = []
    for k in range(1, n):
        a_k = gpos[fseq[k - 1]]
        crossing = [(u, v) for u, v in comp.guest.edges
                    if min(f.positions[u], f.positions[v]) <= k < max(f.positions[u], f.positions[v])]
        fk.append(len(crossing))
        gcross = 0
        for a, b in comp.graph.edges:
            pa, pb = g_order.positions[a], g_order.positions[b]
            if min(pa, pb) <= a_k < max(pa, pb):
                gcross += 1
        gk.append(gcross)
        ex = 0
        for u, v in crossing:
            lo, hi = (u, v) if gpos[u] <= gpos[v] else (v, u)
            if gpos[lo] <= a_k < gpos[hi]:
                ei = edge_index[(min(u, v), max(u, v))]
                walk = comp.walks[ei]
                for a, b in zip(walk, walk[1:]):
                    ga = g_order.positions[comp.local_of_target[a]]
                    gb = g_order.positions[comp.local_of_target[b]]
                    if min(ga, gb) <= a_k < max(ga, gb):
                        key = (k, min(a, b), max(a, b))
                        assignments[key] = assignments.get(key, 0) + 1
                        break
                else:
                    ex += 1    # should not happen; counted as unassigned
            else:
                ex += 1        # an endpoint sits at position a_k
        extra.append(ex)
    coll = max(assignments.values(), default=0)
    coll = max(coll, 1)
    add = cert.kappa * cert.source.max_degree()
    cw_ok = all(fk[i] <= coll * gk[i] + add for i in range(len(fk)))
    return PullbackOrderingReport(
        ordering=f, bandwidth_claim_holds=bw_ok, cutwidth_claim_holds=cw_ok,
        collision_constant=coll, collision_bound=walk_load_bound(comp, cert),
        additive_term=add)


def _closure(comp: ComparisonGraph, x: int) -> set[int]:
    """phi-bar of guest vertex x: its image plus the geodesics of its
    incident guest edges (target ids)."""
    out = {comp.image[x]}
    for ei, (u, v) in enumerate(comp.guest.edges):
        if x in (u, v):
            out.update(comp.walks[ei])
    return out


@dataclass(frozen=True)
class PullbackDecompositionReport:
    decomposition: GDecomposition
    inflation_power_holds: bool     # kappa (1 + maxdeg)^(2 kappa) per bag
    inflation_literal_holds: bool   # kappa (1 + maxdeg^(2 kappa)) per bag


def pullback_decomposition(dprime: GDecomposition, comp: ComparisonGraph,
                           cert: RegularMapCert) -> PullbackDecompositionReport:
    """Pull a decomposition of the comparison graph back to the guest:
    x joins bag g whenever bag g meets phi-bar(x).  Both published bag
    inflation constants are evaluated per bag."""
    if dprime.guest != comp.graph:
        raise ParameterError("decomposition must decompose the comparison graph")
    problems = validate(dprime)
    if problems:
        raise ParameterError("invalid input decomposition: " + "; ".join(problems))
    closures = [_closure(comp, x) for x in range(comp.guest.n)]
    local_closures = [frozenset(comp.local_of_target[y] for y in c) for c in closures]
    bags = []
    for bag in dprime.bags:
        bags.append(frozenset(x for x in range(comp.guest.n)
                              if bag & local_closures[x]))
    d = GDecomposition(dprime.host, comp.guest, tuple(bags))
    problems = validate(d)
    if problems:
        raise AssertionError("pullback decomposition invalid: " + "; ".join(problems))
    dx = cert.source.max_degree()
    c_power = cert.kappa * (1 + dx) ** (2 * cert.kappa)
    c_literal = cert.kappa * (1 + dx ** (2 * cert.kappa))
    power_ok = True
    literal_ok = True
    for g in range(dprime.host.n):
        a, b = len(bags[g]), len(dprime.bags[g])
        if a > c_power * b:
            power_ok = False
        if a > c_literal * b:
            literal_ok = False
    return PullbackDecompositionReport(d, power_ok, literal_ok)


@dataclass(frozen=True)
class HostTransferReport:
    decomposition: GDecomposition
    overlap_constant: int
    linf_holds: bool
    lp_holds: dict[int, bool] = field(default_factory=dict)


def host_transfer_decomposition(d: GDecomposition, host_cert: RegularMapCert,
                                geodesics: GeodesicChoice | None = None) -> HostTransferReport:
    """Transfer a decomposition along a regular map of hosts: the support
    of each guest vertex becomes the comparison graph of its old support.
    The measured overlap constant C certifies max and l^p inflation."""
    problems = validate(d)
    if problems:
        raise ParameterError("invalid decomposition: " + "; ".join(problems))
    if host_cert.source != d.host:
        raise ParameterError("host map must start at the decomposition host")
    if geodesics is None:
        geodesics = GeodesicChoice(host_cert.target)
    new_supports: list[set[int]] = []
    for x in range(d.guest.n):
        supp = sorted(d.support(x))
        if not supp:
            new_supports.append(set())
            continue
        out = {host_cert.mapping[g] for g in supp}
        ss = set(supp)
        for g in supp:
            for h in d.host.neighbors[g]:
                if h in ss and g < h:
                    out.update(geodesics.path(host_cert.mapping[g], host_cert.mapping[h]))
        new_supports.append(out)
    bags = [frozenset(x for x in range(d.guest.n) if g2 in new_supports[x])
            for g2 in range(host_cert.target.n)]
    out_d = GDecomposition(host_cert.target, d.guest, tuple(bags))
    problems = validate(out_d)
    if problems:
        raise AssertionError("host transfer produced invalid decomposition: "
                             + "; ".join(problems))
    # measured overlap constant: phi-bar over the whole host
    bar: list[set[int]] = []
    for g in range(d.host.n):
        s = {host_cert.mapping[g]}
        for h in d.host.neighbors[g]:
            s.update(geodesics.path(host_cert.mapping[g], host_cert.mapping[h]))
        bar.append(s)
    contributors: dict[int, int] = {}
    for g in range(d.host.n):
        for g2 in bar[g]:
            contributors[g2] = contributors.get(g2, 0) + 1
    c1 = max(contributors.values(), default=1)
    c2 = max((len(s) for s in bar), default=1)
    c = max(c1, c2, 1)
    old_sizes = [len(b) for b in d.bags]
    new_sizes = [len(b) for b in out_d.bags]
    linf = max(new_sizes, default=0) <= c * max(old_sizes, default=0)
    lp = {}
    for p in (1, 2):
        lp[p] = sum(s ** p for s in new_sizes) <= c ** (p + 1) * sum(s ** p for s in old_sizes)
    return HostTransferReport(out_d, c, linf, lp)
