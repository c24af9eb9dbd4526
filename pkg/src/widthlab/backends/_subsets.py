"""Connected-vertex-set enumeration over python-int bitsets.

Shared by the public enumeration operation and the numpy fallback of the
profile scan.  Every connected set of size <= rmax whose minimum vertex
lies in [v0, v1) is produced exactly once: sets are grown from their
minimum vertex, and once a candidate has been branched on it becomes
forbidden for the later branches of the same node.
"""

from __future__ import annotations


def _bits_of(x: int):
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def connected_subsets_bits(adj: list[int], rmax: int, v0: int = 0,
                           v1: int | None = None):
    """Yield each connected subset as an int bitmask."""
    n = len(adj)
    if v1 is None:
        v1 = n
    if rmax < 1:
        return
    for start in range(v0, v1):
        s0 = 1 << start
        f0 = s0 - 1
        yield s0
        nu0 = adj[start]
        cand0 = [u for u in _bits_of(nu0 & ~s0 & ~f0)]
        stack = [(s0, f0, nu0, cand0, 0)]
        while stack:
            s, f, nu, cand, ptr = stack.pop()
            if ptr >= len(cand) or bin(s).count("1") + 1 > rmax:
                continue
            u = cand[ptr]
            if ptr > 0:
                f |= 1 << cand[ptr - 1]
            stack.append((s, f, nu, cand, ptr + 1))
            s2 = s | (1 << u)
            nu2 = nu | adj[u]
            yield s2
            cand2 = [w for w in _bits_of(nu2 & ~s2 & ~f)]
            stack.append((s2, f, nu2, cand2, 0))
