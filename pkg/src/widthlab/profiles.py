"""Invariant profiles over the connected subgraphs of a finite host ball,
the cogrowth function, and the divide-and-conquer ordering.

A profile row r is the best invariant value over induced subgraphs on at
most r vertices.  Connected enumeration is exact for the max-type
invariants (the value of a disconnected graph is the max over its
components) and for the half cutsize; for finite p the row additionally
carries a greedy disjoint-packing lower bound, since a finite-p optimum
may genuinely live on a disconnected subgraph.

Row computations over different minimum start vertices are independent;
chunks are folded with (value, lex-least witness), so the table does not
depend on scheduling or worker count.
"""

from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .backends import get_kernels
from .backends._subsets import connected_subsets_bits
from .errors import CapacityError, ParameterError
from .graphs import Graph, induced_subgraph, intrinsic_diameter, is_connected
from .orders import LinearOrdering, PNorm
from .separation import DEFAULT_BUDGET, cutsize

MAX_PROFILE_R = 14
HOST_WORD_LIMIT = 4          # hosts up to 256 vertices

_INV_IDS = {"sep": 0, "cw": 1, "bw": 2, "vs": 3, "tw": 4, "cogrowth": 5}


@dataclass(frozen=True)
class InvariantSpec:
    """Which invariant a profile tabulates.

    kind: sep | cw | bw | vs | tw | pw | cogrowth.  sep takes eps, the
    layout kinds take a PNorm; pw is vs at the infinity norm.
    """

    kind: str
    p: PNorm | None = None
    eps: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("sep", "cw", "bw", "vs", "pw", "tw", "cogrowth"):
            raise ParameterError(f"unknown invariant {self.kind!r}")
        if self.kind == "sep":
            eps = self.eps if self.eps is not None else Fraction(1, 2)
            if not (0 < eps < 1):
                raise ParameterError("eps must lie strictly between 0 and 1")
            object.__setattr__(self, "eps", Fraction(eps))
        if self.kind in ("cw", "bw", "vs") and self.p is None:
            object.__setattr__(self, "p", PNorm.infinity())

    @property
    def kernel_id(self) -> int:
        if self.kind == "pw":
            return _INV_IDS["vs"]
        return _INV_IDS[self.kind]

    @property
    def kernel_p(self) -> int:
        if self.kind in ("sep", "tw", "pw", "cogrowth") or self.p.is_infinite:
            return 0
        return self.p.p

    @property
    def finite_p(self) -> bool:
        return self.kind in ("cw", "bw", "vs") and not self.p.is_infinite

    def label(self) -> str:
        if self.kind == "sep":
            return f"sep[{self.eps}]"
        if self.kind in ("cw", "bw", "vs"):
            return f"{self.kind}[{self.p}]"
        return self.kind


@dataclass(frozen=True)
class ProfileRow:
    r: int
    value: int | None
    witness: tuple[int, ...] | None
    status: str                       # exact | connected_max | skipped
    packed_value: int | None = None   # finite-p disjoint-packing lower bound
    packed_witness: tuple[tuple[int, ...], ...] | None = None


@dataclass(frozen=True)
class ProfileTable:
    invariant: InvariantSpec
    host: Graph
    r_max: int
    rows: tuple[ProfileRow, ...]

    def value(self, r: int) -> int | None:
        return self.rows[r - 1].value


def enumerate_connected_subsets(host: Graph, r: int):
    """Every connected vertex set of size <= r, each exactly once, in the
    deterministic grow-from-minimum order."""
    if host.n == 0:
        return
    bits = _host_bits_py(host)
    for mask in connected_subsets_bits(bits, r):
        out = []
        m = mask
        while m:
            b = m & -m
            out.append(b.bit_length() - 1)
            m ^= b
        yield frozenset(out)


def _host_bits_py(host: Graph) -> list[int]:
    if host.bits is not None:
        return list(host.bits)
    rows = [0] * host.n
    for u, v in host.edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return rows


def _host_rows(host: Graph) -> tuple[np.ndarray, int]:
    words = (host.n + 63) // 64
    if words > HOST_WORD_LIMIT:
        raise CapacityError(f"profile hosts handle up to {HOST_WORD_LIMIT * 64} vertices")
    rows = np.zeros((host.n, words), dtype=np.uint64)
    for u, v in host.edges:
        rows[u, v >> 6] |= np.uint64(1) << np.uint64(v & 63)
        rows[v, u >> 6] |= np.uint64(1) << np.uint64(u & 63)
    return rows, words


def _wit_less(a: int, b: int) -> bool:
    if a == b:
        return False
    d = (a ^ b) & -(a ^ b)
    owner_a = bool(a & d)
    other = b if owner_a else a
    tail = other & ~(d | (d - 1))
    return bool(tail) if owner_a else not tail


def _scan(host: Graph, spec: InvariantSpec, r_max: int, jobs: int):
    """Per-exact-size best (value, witness mask), backend scan."""
    rows, words = _host_rows(host)
    k = get_kernels()
    thr_num, thr_den = (1, 2)
    if spec.kind == "sep":
        thr_num, thr_den = spec.eps.numerator, spec.eps.denominator

    def run(lo: int, hi: int):
        bv = np.full(r_max + 1, np.int64(-1), dtype=np.int64)
        bw = np.zeros((r_max + 1, words), dtype=np.uint64)
        k.profile_scan(rows, host.n, words, r_max, spec.kernel_id, spec.kernel_p,
                       thr_num, thr_den, lo, hi, bv, bw)
        return bv, bw

    jobs = max(1, jobs)
    chunk_edges = list(range(0, host.n + 1, max(1, (host.n + jobs - 1) // jobs)))
    if chunk_edges[-1] != host.n:
        chunk_edges.append(host.n)
    chunks = list(zip(chunk_edges, chunk_edges[1:]))
    if jobs == 1 or len(chunks) <= 1:
        results = [run(lo, hi) for lo, hi in chunks]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda c: run(*c), chunks))

    best_val = [-1] * (r_max + 1)
    best_wit = [0] * (r_max + 1)
    minimize = spec.kind == "cogrowth"
    for bv, bw in results:
        for s in range(1, r_max + 1):
            if bv[s] < 0:
                continue
            wit = 0
            for w in range(words):
                wit |= int(bw[s, w]) << (64 * w)
            v = int(bv[s])
            if best_val[s] < 0 or (v < best_val[s] if minimize else v > best_val[s]) \
                    or (v == best_val[s] and _wit_less(wit, best_wit[s])):
                best_val[s] = v
                best_wit[s] = wit
    return best_val, best_wit


def _mask_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def profile(host: Graph, spec: InvariantSpec, r_max: int, jobs: int = 1) -> ProfileTable:
    """Exact profile of the host ball for rows 1..r_max.

    Max-type invariants (sep with eps >= 1/2, infinity-norm layouts, tw,
    pw) are exact over all subgraphs; finite-p rows are exact over
    connected subgraphs and carry a greedy packing lower bound on top.
    """
    if r_max < 1:
        raise ParameterError("r_max must be >= 1")
    if r_max > MAX_PROFILE_R:
        raise CapacityError(f"profile rows handle r <= {MAX_PROFILE_R}")
    if spec.kind == "bw" and r_max > 12:
        raise CapacityError("bandwidth profile rows handle r <= 12")
    best_val, best_wit = _scan(host, spec, min(r_max, max(host.n, 1)), jobs)
    best_val += [-1] * (r_max + 1 - len(best_val))
    best_wit += [0] * (r_max + 1 - len(best_wit))

    connected_exact = spec.kind in ("sep", "tw", "pw", "cogrowth") or spec.p.is_infinite
    if spec.kind == "sep" and spec.eps < Fraction(1, 2):
        connected_exact = False

    rows = []
    if spec.kind == "cogrowth":
        for r in range(1, r_max + 1):
            if best_val[r] < 0:
                rows.append(ProfileRow(r, None, None, "skipped"))
            else:
                rows.append(ProfileRow(r, best_val[r], _mask_tuple(best_wit[r]), "exact"))
        return ProfileTable(spec, host, r_max, tuple(rows))

    run_val = None
    run_wit = 0
    for r in range(1, r_max + 1):
        if best_val[r] >= 0:
            v, w = best_val[r], best_wit[r]
            if run_val is None or v > run_val or (v == run_val and _wit_less(w, run_wit)):
                run_val, run_wit = v, w
        if run_val is None:
            rows.append(ProfileRow(r, None, None, "skipped"))
            continue
        status = "exact" if connected_exact else "connected_max"
        packed_value = None
        packed_witness = None
        if spec.finite_p:
            packed_value, packed_witness = _greedy_packing(best_val, best_wit, r)
        rows.append(ProfileRow(r, run_val, _mask_tuple(run_wit), status,
                               packed_value, packed_witness))
    return ProfileTable(spec, host, r_max, tuple(rows))


def _greedy_packing(best_val, best_wit, budget: int):
    """Finite-p lower bound from vertex-disjoint recorded witnesses; the
    p-th-power score of a disjoint union is the sum of the parts."""
    cands = [(best_val[s], s, best_wit[s]) for s in range(1, budget + 1)
             if best_val[s] > 0]
    cands.sort(key=lambda t: (-t[0], t[1]))
    used = 0
    left = budget
    total = 0
    parts = []
    for val, s, wit in cands:
        if s <= left and not (wit & used):
            used |= wit
            left -= s
            total += val
            parts.append(_mask_tuple(wit))
    if not parts:
        return None, None
    return total, tuple(parts)


def cogrowth(host: Graph, r: int, jobs: int = 1):
    """Least intrinsic diameter of a connected induced r-vertex subgraph
    (induced subgraphs minimise the diameter on a fixed vertex set).
    Returns (value, witness) or None when no such subgraph exists."""
    if not (1 <= r <= host.n):
        raise ParameterError(f"r must lie in 1..{host.n}")
    table = profile(host, InvariantSpec("cogrowth"), r, jobs)
    row = table.rows[r - 1]
    if row.value is None:
        return None
    witness = row.witness
    sub = induced_subgraph(host, witness)
    if not is_connected(sub) or intrinsic_diameter(sub) != row.value:
        raise AssertionError("cogrowth witness failed re-validation")
    return row.value, witness


# ---------------------------------------------------------------------------
# divide and conquer ordering

@dataclass(frozen=True)
class DncNode:
    vertices: tuple[int, ...]
    cutset: tuple[int, ...]
    children: tuple["DncNode", ...]
    bound: int                   # certified cutwidth bound for this subtree


def dnc_ordering(g: Graph, eps: Fraction = Fraction(1, 2),
                 work_budget: int = DEFAULT_BUDGET) -> tuple[LinearOrdering, DncNode]:
    """Order by recursive separation: solve an eps-cutsize instance,
    order each remaining component recursively, and append the cutset.
    The certified bound adds maxdeg * |cutset| along each root-leaf path
    of the recursion tree, so the produced ordering has cutwidth at most
    the root bound."""
    eps = Fraction(eps)
    if not (0 < eps < 1):
        raise ParameterError("eps must lie strictly between 0 and 1")
    if g.n == 0:
        raise ParameterError("cannot order the empty graph")
    delta = max(2, g.max_degree())

    def solve(vertices: tuple[int, ...]) -> tuple[list[int], DncNode]:
        if len(vertices) == 1:
            return list(vertices), DncNode(vertices, (), (), 0)
        sub = induced_subgraph(g, vertices)
        back = [int(sub.labels[i]) for i in range(sub.n)]
        _val, cert = cutsize(sub, eps, work_budget)
        cutset = sorted(back[i] for i in cert.cutset)
        rest = [v for v in vertices if v not in set(cutset)]
        order: list[int] = []
        children = []
        if rest:
            sub2 = induced_subgraph(g, rest)
            back2 = [int(sub2.labels[i]) for i in range(sub2.n)]
            from .graphs import connected_components
            for comp in connected_components(sub2):
                comp_verts = tuple(sorted(back2[i] for i in comp))
                comp_order, node = solve(comp_verts)
                order.extend(comp_order)
                children.append(node)
        order.extend(cutset)
        bound = max((c.bound for c in children), default=0) + delta * len(cutset)
        return order, DncNode(tuple(vertices), tuple(cutset), tuple(children), bound)

    seq, trace = solve(tuple(range(g.n)))
    positions = [0] * g.n
    for i, v in enumerate(seq):
        positions[v] = i + 1
    return LinearOrdering(tuple(positions)), trace


# ---------------------------------------------------------------------------
# CSV output

def table_to_csv(table: ProfileTable) -> str:
    """Columns: r, value, value_root, witness, status.  Finite-p packing
    bounds appear as extra rows with status packed_lower_bound."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["r", "value", "value_root", "witness", "status"])
    finite = table.invariant.finite_p
    p = table.invariant.p.p if finite else None
    for row in table.rows:
        if row.value is None:
            w.writerow([row.r, "", "", "", row.status])
            continue
        root = f"{row.value ** (1.0 / p):.6f}" if finite and row.value > 0 else ""
        w.writerow([row.r, row.value, root,
                    ";".join(map(str, row.witness)), row.status])
        if finite and row.packed_value is not None and row.packed_value > row.value:
            wit = "|".join(";".join(map(str, part)) for part in row.packed_witness)
            root2 = f"{row.packed_value ** (1.0 / p):.6f}"
            w.writerow([row.r, row.packed_value, root2, wit, "packed_lower_bound"])
    return buf.getvalue()
