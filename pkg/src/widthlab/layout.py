"""Exact p-cutwidth, p-bandwidth and p-vertex-separation with witnesses.

Cutwidth and vertex separation run a prefix-set dynamic program (the cost
at a position depends only on the prefix vertex set, which makes the DP
exact); bandwidth runs branch and bound over left-to-right placements; a
permutation brute force serves as the independent oracle.

Scores are exact integers (sum of p-th powers, or the max for the
infinity norm).  The int64 kernels are used whenever the worst-case score
fits; otherwise an equivalent big-integer python DP takes over, so large
p never silently overflows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .backends import get_kernels
from .errors import CapacityError, ParameterError
from .graphs import Graph
from .orders import LayoutValue, LinearOrdering, PNorm, band_vector, cut_vector, score, vs_vector

MAX_DP_N = 24
MAX_BNB_N = 12
MAX_BRUTE_N = 10

_INT64_SAFE = (1 << 62) - 1


@dataclass(frozen=True)
class SolveResult:
    value: LayoutValue
    witness: LinearOrdering
    method: str
    nodes_explored: int


def _adj_array(g: Graph) -> np.ndarray:
    return np.asarray(g.bits, dtype=np.int64)


def _fits_int64(bound_per_term: int, terms: int, p: int | None) -> bool:
    if p is None:
        return True
    return terms * (bound_per_term ** p) <= _INT64_SAFE


def _finish(g: Graph, norm: PNorm, seq, method: str, nodes: int,
            cost_kind: str, kernel_value: int | None) -> SolveResult:
    f = LinearOrdering.from_sequence([int(v) for v in seq])
    if cost_kind == "cw":
        vec = cut_vector(g, f)
    elif cost_kind == "bw":
        vec = band_vector(g, f)
    else:
        vec = vs_vector(g, f)
    value = score(vec, norm)
    if kernel_value is not None and value != kernel_value:
        raise AssertionError(
            f"witness re-evaluation mismatch: kernel={kernel_value} recomputed={value}")
    return SolveResult(LayoutValue(norm, value), f, method, nodes)


def _degenerate(g: Graph, norm: PNorm, method: str) -> SolveResult | None:
    if g.n == 0:
        raise ParameterError("empty graph has no orderings")
    if g.n == 1 or g.m == 0:
        return SolveResult(LayoutValue(norm, 0), LinearOrdering.identity(g.n), method, 0)
    return None


def _dp_bigint(g: Graph, norm: PNorm, cost_kind: str) -> SolveResult:
    """Big-integer prefix-set DP, exact for any finite p.  Slow path."""
    n, p = g.n, norm.p
    adj = list(g.bits)
    size = 1 << n
    cost = [0] * size
    if cost_kind == "cw":
        for mask in range(1, size):
            b = mask & -mask
            v = b.bit_length() - 1
            prev = mask ^ b
            cost[mask] = cost[prev] + adj[v].bit_count() - 2 * (adj[v] & prev).bit_count()
    else:
        full = size - 1
        for mask in range(1, size):
            c = 0
            m = mask
            while m:
                b = m & -m
                if adj[b.bit_length() - 1] & ~mask & full:
                    c += 1
                m ^= b
            cost[mask] = c
    dp = [0] * size
    for mask in range(1, size):
        best = None
        m = mask
        while m:
            b = m & -m
            m ^= b
            prev = mask ^ b
            c = dp[prev] + (cost[prev] ** p if cost_kind == "cw" else 0)
            if best is None or c < best:
                best = c
        dp[mask] = best if cost_kind == "cw" else best + cost[mask] ** p
    seq = []
    mask = size - 1
    for _ in range(n):
        for v in range(n):
            if not (mask >> v) & 1:
                continue
            prev = mask ^ (1 << v)
            if cost_kind == "cw":
                c = dp[prev] + cost[prev] ** p
            else:
                c = dp[prev] + cost[mask] ** p
            if c == dp[mask]:
                seq.append(v)
                mask = prev
                break
    seq.reverse()
    return _finish(g, norm, seq, "subset_dp", size, cost_kind, dp[size - 1])


def min_cutwidth(g: Graph, p: PNorm, method: str = "subset_dp") -> SolveResult:
    """Exact p-cutwidth.  subset_dp up to n=24; brute_force up to n=10."""
    if method == "brute_force":
        return brute_force_layout(g, "cw", p)
    if g.n > MAX_DP_N:
        raise CapacityError(f"cutwidth subset DP handles n <= {MAX_DP_N}, got {g.n}")
    deg = _degenerate(g, p, "subset_dp")
    if deg is not None:
        return deg
    if not _fits_int64(g.m, g.n, p.p):
        return _dp_bigint(g, p, "cw")
    k = get_kernels()
    val, seq, states = k.cutwidth_dp(_adj_array(g), g.n, 0 if p.is_infinite else p.p)
    return _finish(g, p, seq, "subset_dp", int(states), "cw", int(val))


def min_vertex_separation(g: Graph, p: PNorm) -> SolveResult:
    """Exact p-vertex-separation via the prefix-set DP (n <= 24)."""
    if g.n > MAX_DP_N:
        raise CapacityError(f"vertex-separation DP handles n <= {MAX_DP_N}, got {g.n}")
    deg = _degenerate(g, p, "subset_dp")
    if deg is not None:
        return deg
    if not _fits_int64(g.n, g.n, p.p):
        return _dp_bigint(g, p, "vs")
    k = get_kernels()
    val, seq, states = k.vertexsep_dp(_adj_array(g), g.n, 0 if p.is_infinite else p.p)
    return _finish(g, p, seq, "subset_dp", int(states), "vs", int(val))


def min_bandwidth(g: Graph, p: PNorm, method: str = "branch_and_bound") -> SolveResult:
    """Exact p-bandwidth via branch and bound (n <= 12)."""
    if method == "brute_force":
        return brute_force_layout(g, "bw", p)
    if g.n > MAX_BNB_N:
        raise CapacityError(f"bandwidth branch-and-bound handles n <= {MAX_BNB_N}, got {g.n}")
    deg = _degenerate(g, p, "branch_and_bound")
    if deg is not None:
        return deg
    if not _fits_int64(g.n - 1, g.m, p.p):
        raise CapacityError("p too large for the int64 bandwidth kernel at this size")
    k = get_kernels()
    val, seq, nodes = k.bandwidth_bnb(_adj_array(g), g.n, 0 if p.is_infinite else p.p)
    return _finish(g, p, seq, "branch_and_bound", int(nodes), "bw", int(val))


_COST_IDS = {"cw": 0, "bw": 1, "vs": 2}


def brute_force_layout(g: Graph, cost: str, p: PNorm) -> SolveResult:
    """Exhaustive minimum over all n! orderings (n <= 10); the oracle."""
    if cost not in _COST_IDS:
        raise ParameterError(f"unknown layout cost {cost!r}")
    if g.n > MAX_BRUTE_N:
        raise CapacityError(f"brute force handles n <= {MAX_BRUTE_N}, got {g.n}")
    deg = _degenerate(g, p, "brute_force")
    if deg is not None:
        return deg
    if not _fits_int64(max(g.m, g.n - 1), max(g.m, g.n), p.p):
        raise CapacityError("p too large for the int64 brute-force kernel at this size")
    k = get_kernels()
    val, seq, count = k.brute_force_scan(
        _adj_array(g), g.n, _COST_IDS[cost], 0 if p.is_infinite else p.p)
    return _finish(g, p, seq, "brute_force", int(count), cost, int(val))
