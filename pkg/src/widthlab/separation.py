"""Exact separation quantities: eps-cutsize, two-thirds separator,
Cheeger constant, treewidth and pathwidth, each with a certificate that
is re-checked independently before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .backends import get_kernels
from .errors import CapacityError, ParameterError
from .graphs import Graph, connected_components, induced_subgraph
from .layout import min_vertex_separation
from .orders import LinearOrdering, PNorm

MAX_CUTSIZE_N = 16          # guaranteed exhaustive capacity
MAX_SEPARATOR_N = 16
MAX_CHEEGER_N = 20
MAX_TREEWIDTH_N = 14
MAX_PATHWIDTH_N = 24

DEFAULT_BUDGET = 2_000_000  # subsets examined before giving up above n=16

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class CutsetCertificate:
    cutset: frozenset[int]
    epsilon: Fraction
    component_sizes: tuple[int, ...]


@dataclass(frozen=True)
class SeparatorTriple:
    a: frozenset[int]
    b: frozenset[int]
    s: frozenset[int]


@dataclass(frozen=True)
class EliminationCertificate:
    order: LinearOrdering
    width: int


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return frozenset(out)


def component_sizes_without(g: Graph, cutset: frozenset[int]) -> tuple[int, ...]:
    rest = [v for v in range(g.n) if v not in cutset]
    if not rest:
        return ()
    sub = induced_subgraph(g, rest)
    return tuple(sorted(len(c) for c in connected_components(sub)))


def check_cutset(g: Graph, cert: CutsetCertificate) -> bool:
    thr = (cert.epsilon.numerator * g.n) // cert.epsilon.denominator
    sizes = component_sizes_without(g, cert.cutset)
    return sizes == cert.component_sizes and all(c <= thr for c in sizes)


def cutsize(g: Graph, eps: Fraction = HALF,
            work_budget: int = DEFAULT_BUDGET) -> tuple[int, CutsetCertificate]:
    """Minimum |S| such that every component of g-S has <= floor(eps*n)
    vertices.  Exhaustive by increasing |S|; guaranteed for n <= 16, best
    effort within the work budget above that (capacity error beyond)."""
    eps = Fraction(eps)
    if not (0 < eps < 1):
        raise ParameterError("eps must lie strictly between 0 and 1")
    if g.n == 0:
        raise ParameterError("cutsize of the empty graph is undefined")
    if g.n > 63:
        raise CapacityError(f"cutsize needs n <= 63, got {g.n}")
    thr = (eps.numerator * g.n) // eps.denominator
    k = get_kernels()
    budget = work_budget if g.n > MAX_CUTSIZE_N else max(work_budget, 1 << (g.n + 1))
    val, mask, _examined = k.cutsize_search(np.asarray(g.bits, dtype=np.int64), g.n,
                                            thr, budget)
    if val < 0:
        raise CapacityError(
            f"cutsize work budget exhausted at n={g.n} (guaranteed only for n <= {MAX_CUTSIZE_N})")
    cutset = _mask_to_set(int(mask))
    cert = CutsetCertificate(cutset, eps, component_sizes_without(g, cutset))
    if len(cutset) != val or not check_cutset(g, cert):
        raise AssertionError("cutsize certificate failed re-validation")
    return int(val), cert


def check_separator(g: Graph, t: SeparatorTriple) -> bool:
    if t.a | t.b | t.s != frozenset(range(g.n)):
        return False
    if (t.a & t.b) or (t.a & t.s) or (t.b & t.s):
        return False
    cap = (2 * g.n) // 3
    if len(t.a) > cap or len(t.b) > cap:
        return False
    return not any((u in t.a and v in t.b) or (u in t.b and v in t.a)
                   for u, v in g.edges)


def two_thirds_separator(g: Graph) -> tuple[int, SeparatorTriple]:
    """Minimum |S| with V = A + B + S, |A|,|B| <= floor(2n/3), no A-B edge."""
    if g.n == 0:
        raise ParameterError("separator of the empty graph is undefined")
    if g.n > MAX_SEPARATOR_N:
        raise CapacityError(f"two-thirds separator handles n <= {MAX_SEPARATOR_N}, got {g.n}")
    k = get_kernels()
    val, mask = k.balanced_separator(np.asarray(g.bits, dtype=np.int64), g.n)
    s = _mask_to_set(int(mask))
    # split the remaining components into the two sides by subset sum
    rest = [v for v in range(g.n) if v not in s]
    comps = []
    if rest:
        sub = induced_subgraph(g, rest)
        back = {i: int(sub.labels[i]) for i in range(sub.n)}
        comps = [frozenset(back[v] for v in c) for c in connected_components(sub)]
    cap = (2 * g.n) // 3
    total = len(rest)
    need_lo = max(0, total - cap)
    choice = {0: []}
    for ci, comp in enumerate(comps):
        new = dict(choice)
        for ssum, picks in choice.items():
            t = ssum + len(comp)
            if t <= cap and t not in new:
                new[t] = picks + [ci]
        choice = new
    pick = next(picks for ssum, picks in sorted(choice.items())
                if need_lo <= ssum <= cap)
    a: frozenset[int] = frozenset().union(*(comps[i] for i in pick)) if pick else frozenset()
    b = frozenset(rest) - a
    triple = SeparatorTriple(a, b, s)
    if len(s) != val or not check_separator(g, triple):
        raise AssertionError("separator certificate failed re-validation")
    return int(val), triple


def cheeger(g: Graph, with_witness: bool = False):
    """Cheeger constant: min |boundary(A)|/|A| over nonempty A with
    2|A| <= n, boundary(A) = vertices at distance exactly 1 from A."""
    if g.n < 2:
        raise ParameterError("Cheeger constant needs n >= 2")
    if g.n > MAX_CHEEGER_N:
        raise CapacityError(f"Cheeger scan handles n <= {MAX_CHEEGER_N}, got {g.n}")
    k = get_kernels()
    num, den, mask = k.cheeger_scan(np.asarray(g.bits, dtype=np.int64), g.n)
    a = _mask_to_set(int(mask))
    boundary = {v for u in a for v in g.neighbors[u]} - a
    if Fraction(len(boundary), len(a)) != Fraction(int(num), int(den)):
        raise AssertionError("Cheeger witness failed re-validation")
    h = Fraction(int(num), int(den))
    return (h, a) if with_witness else h


def elimination_width(g: Graph, order: LinearOrdering) -> int:
    """Max back-degree when eliminating in order, connecting the remaining
    neighbours of each eliminated vertex."""
    adj = [set(nb) for nb in g.neighbors]
    width = 0
    for v in order.sequence():
        later = adj[v]
        width = max(width, len(later))
        for u in later:
            adj[u].discard(v)
        for u in later:
            for w in later:
                if u < w:
                    adj[u].add(w)
                    adj[w].add(u)
        adj[v] = set()
    return width


def treewidth(g: Graph) -> tuple[int, EliminationCertificate]:
    """Exact treewidth via the elimination-prefix DP (n <= 14)."""
    if g.n == 0:
        raise ParameterError("treewidth of the empty graph is undefined")
    if g.n > MAX_TREEWIDTH_N:
        raise CapacityError(f"treewidth DP handles n <= {MAX_TREEWIDTH_N}, got {g.n}")
    k = get_kernels()
    val, seq, _states = k.treewidth_dp(np.asarray(g.bits, dtype=np.int64), g.n)
    order = LinearOrdering.from_sequence([int(v) for v in seq])
    if elimination_width(g, order) != int(val):
        raise AssertionError("elimination certificate failed re-validation")
    return int(val), EliminationCertificate(order, int(val))


def pathwidth(g: Graph) -> tuple[int, LinearOrdering]:
    """Exact pathwidth as the vertex separation number (n <= 24); the
    returned ordering converts to an optimal path decomposition."""
    if g.n == 0:
        raise ParameterError("pathwidth of the empty graph is undefined")
    if g.n > MAX_PATHWIDTH_N:
        raise CapacityError(f"pathwidth handles n <= {MAX_PATHWIDTH_N}, got {g.n}")
    res = min_vertex_separation(g, PNorm.infinity())
    return res.value.value, res.witness
