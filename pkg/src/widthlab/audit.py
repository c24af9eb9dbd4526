"""Instance-level inequality audit.

Runs every certified inequality on a corpus of graphs plus seeded
construction instances and emits a machine-readable report: one record
per (subject, check) with status pass / fail / skip.  Checks are either
assertion class (a failure fails the build) or finding class (reported
only).  Capacity limits produce skips, never silent approximation.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import coarse, layout, profiles, separation, wiring
from .corpus import (canonical_corpus, random_connected_graph,
                     random_decomposition, random_graph, random_graphs,
                     random_guest_vertices, random_ordering,
                     random_regular_map, random_wiring, rng_for)
from .decomposition import (decomposition_from_elimination, grid_decomposition,
                            path_decomposition_from_ordering, subdivision_transfer,
                            validate, width)
from .errors import CapacityError
from .generate import grid_box, tree_ball
from .graphs import Graph
from .orders import PNorm, band_vector, cut_vector, vs_vector

P1 = PNorm(1)
P2 = PNorm(2)
P3 = PNorm(3)
PINF = PNorm.infinity()


@dataclass
class CheckRecord:
    check: str
    subject: str
    status: str            # pass | fail | skip
    check_class: str       # assert | finding
    details: str = ""


class _Recorder:
    def __init__(self):
        self.records: list[CheckRecord] = []

    def add(self, check, subject, ok, check_class="assert", details=""):
        self.records.append(CheckRecord(check, subject, "pass" if ok else "fail",
                                        check_class, details))

    def skip(self, check, subject, details=""):
        self.records.append(CheckRecord(check, subject, "skip", "assert", details))

    def guard(self, check, subject, fn, check_class="assert"):
        """Run fn() -> (ok, details); capacity errors record a skip."""
        try:
            ok, details = fn()
        except CapacityError as exc:
            self.skip(check, subject, str(exc))
            return
        self.add(check, subject, ok, check_class, details)


def _gap_vectors(g, f):
    """Edge cut and boundary-vertex counts per gap 1..n-1, aligned so both
    measure the split after the first i positions."""
    cuts = cut_vector(g, f)
    vs = vs_vector(g, f)
    return [cuts[i] for i in range(1, g.n)], [vs[i - 1] for i in range(1, g.n)]


def _audit_graph(rec: _Recorder, name: str, g: Graph, rng):
    n, m, delta = g.n, g.m, g.max_degree()
    if n < 1:
        return

    for t in range(3):
        f = random_ordering(rng, n)
        ok = sum(cut_vector(g, f)) == sum(band_vector(g, f))
        rec.add("l1_identity", f"{name}#f{t}", ok)
        cg, vg = _gap_vectors(g, f)
        two_sided = all(v <= c <= max(1, delta) * v for c, v in zip(cg, vg))
        rec.add("vs_cw_per_gap", f"{name}#f{t}", two_sided,
                details="per-gap vs <= cut <= maxdeg*vs")

    def l1_min():
        a = layout.min_cutwidth(g, P1).value.value
        b = layout.min_bandwidth(g, P1).value.value
        return a == b, f"sumcut={a} mla={b}"
    rec.guard("l1_min_equality", name, l1_min)

    def edge_lb():
        oks = []
        for p in (P1, P2):
            oks.append(layout.min_cutwidth(g, p).value.value >= m)
            oks.append(layout.min_bandwidth(g, p).value.value >= m)
        return all(oks), f"|E|={m}"
    rec.guard("edge_lower_bound", name, edge_lb)

    def sandwich():
        cw_inf = layout.min_cutwidth(g, PINF).value.value
        bw_inf = layout.min_bandwidth(g, PINF).value.value
        oks = []
        for p in (1, 2):
            cw_p = layout.min_cutwidth(g, PNorm(p)).value.value
            bw_p = layout.min_bandwidth(g, PNorm(p)).value.value
            oks.append(cw_inf ** p <= cw_p <= n * cw_inf ** p)
            oks.append(bw_inf ** p <= bw_p)
            oks.append(2 * bw_p <= delta * n * bw_inf ** p if m else bw_p == 0)
        return all(oks), ""
    rec.guard("norm_sandwich", name, sandwich)

    def chain():
        cut_half, _ = separation.cutsize(g, Fraction(1, 2))
        tw, _ = separation.treewidth(g)
        pw, _ = separation.pathwidth(g)
        cw = layout.min_cutwidth(g, PINF).value.value
        bw = layout.min_bandwidth(g, PINF).value.value
        oks = [cut_half <= tw, tw <= pw, pw <= cw, cw <= max(1, delta) * pw,
               cw <= (delta // 2) * bw + 1]
        return all(oks), f"cut={cut_half} tw={tw} pw={pw} cw={cw} bw={bw}"
    rec.guard("comparison_chain", name, chain)

    def cut23():
        c23, _ = separation.cutsize(g, Fraction(2, 3))
        oks = []
        for p in (1, 2, 3):
            cw_p = layout.min_cutwidth(g, PNorm(p)).value.value
            oks.append(cw_p >= (n // 3) * c23 ** p)
        return all(oks), f"cut23={c23}"
    rec.guard("lemma_cut23_lower", name, cut23)

    def eps_monotone():
        vals = [separation.cutsize(g, e)[0]
                for e in (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3))]
        return vals[0] >= vals[1] >= vals[2], f"cut(1/3,1/2,2/3)={vals}"
    rec.guard("cutsize_eps_monotone", name, eps_monotone)

    def oracle_match():
        if n > 8:
            raise CapacityError("oracle comparison limited to n <= 8")
        for p in (P1, P2, PINF):
            for cost, solver in (("cw", layout.min_cutwidth),
                                 ("bw", layout.min_bandwidth)):
                a = solver(g, p).value.value
                b = layout.brute_force_layout(g, cost, p).value.value
                if a != b:
                    return False, f"{cost} p={p}: {a} != {b}"
            a = layout.min_vertex_separation(g, p).value.value
            b = layout.brute_force_layout(g, "vs", p).value.value
            if a != b:
                return False, f"vs p={p}: {a} != {b}"
        return True, ""
    rec.guard("dp_vs_bruteforce", name, oracle_match)

    def monotone_edges():
        non_edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                     if not g.has_edge(u, v)]
        if not non_edges:
            return True, "complete"
        extra = rng.choice(non_edges)
        g2 = Graph(n, list(g.edges) + [extra])
        oks = []
        for p in (P1, PINF):
            oks.append(layout.min_cutwidth(g2, p).value.value
                       >= layout.min_cutwidth(g, p).value.value)
            oks.append(layout.min_bandwidth(g2, p).value.value
                       >= layout.min_bandwidth(g, p).value.value)
        return all(oks), f"added {extra}"
    rec.guard("edge_monotonicity", name, monotone_edges)

    def pw_cert():
        pw, order = separation.pathwidth(g)
        d = path_decomposition_from_ordering(g, order)
        problems = validate(d)
        w = width(d, PINF).value
        return not problems and w == pw + 1, f"pw={pw} bags<= {w}"
    rec.guard("pathwidth_certificate", name, pw_cert)

    def tw_cert():
        tw, cert = separation.treewidth(g)
        d = decomposition_from_elimination(cert, g)
        problems = validate(d)
        w = width(d, PINF).value
        return not problems and w == tw + 1, f"tw={tw}"
    rec.guard("treewidth_certificate", name, tw_cert)

    def sep23_vs_cut13():
        s, _ = separation.two_thirds_separator(g)
        c13, _ = separation.cutsize(g, Fraction(1, 3))
        return s <= c13, f"s={s} cut13={c13}"
    rec.guard("separator_le_cut13", name, sep23_vs_cut13)

    def bptw():
        s, _ = separation.two_thirds_separator(g)
        bw = layout.min_bandwidth(g, PINF).value.value
        if s == 0 or s >= n:
            raise CapacityError("bound undefined: s=0 or s=n")
        base = max(2, delta)
        denom = math.log(n / s, base)
        if denom <= 0:
            raise CapacityError("bound undefined: log term <= 0")
        return bw <= 6 * n / denom, f"bw={bw} bound={6 * n / denom:.3f}"
    rec.guard("bptw_bandwidth_bound", name, bptw, check_class="finding")

    def dnc():
        f, trace = profiles.dnc_ordering(g, Fraction(1, 2))
        achieved = max(cut_vector(g, f), default=0)
        return achieved <= trace.bound, f"cw(f)={achieved} bound={trace.bound}"
    rec.guard("dnc_recursion_bound", name, dnc)


def _audit_constructions(rec: _Recorder, seed: int, count: int):
    rng = rng_for(seed, "audit:maps")
    for i in range(count):
        kappa = 1 + (i % 3)
        cert = random_regular_map(rng, kappa, target_n=8, source_n=9)
        label = f"map{i}(k={kappa})"
        if cert.source.n == 0:
            rec.skip("comparison_bounds", label, "empty source")
            continue
        ok_reg = not coarse.verify_regular(cert)
        rec.add("regular_map_valid", label, ok_reg)
        gv = random_guest_vertices(rng, cert.source, rng.randint(2, cert.source.n))
        comp = coarse.comparison_graph(cert, gv)
        rec.add("comparison_size_bounds", label, coarse.size_bounds_hold(comp, cert))
        rec.add("comparison_walk_load", label,
                comp.walk_load() <= coarse.walk_load_bound(comp, cert),
                details=f"load={comp.walk_load()}")
        if comp.graph.n >= 1:
            g_order = random_ordering(rng, comp.graph.n)
            rep = coarse.pullback_ordering(g_order, comp, cert)
            rec.add("pullback_bandwidth_claim", label, rep.bandwidth_claim_holds)
            rec.add("pullback_cutwidth_claim", label, rep.cutwidth_claim_holds,
                    details=f"C={rep.collision_constant} add={rep.additive_term}")
            dprime = random_decomposition(rng, comp.graph,
                                          random_graph(rng, 3, 6))
            prep = coarse.pullback_decomposition(dprime, comp, cert)
            rec.add("pullback_decomposition_valid", label,
                    not validate(prep.decomposition))
            rec.add("pullback_inflation_power", label, prep.inflation_power_holds)
            rec.add("pullback_inflation_literal", label, prep.inflation_literal_holds,
                    check_class="finding")

    rng = rng_for(seed, "audit:decomps")
    for i in range(count):
        guest = random_graph(rng, 2, 7)
        label = f"decomp{i}"
        gd = grid_decomposition(guest)
        bound = guest.max_degree() + max(guest.max_degree(), 1)
        rec.add("grid_decomposition_valid", label, not validate(gd))
        rec.add("grid_decomposition_bound", label,
                width(gd, PINF).value <= bound,
                details=f"width={width(gd, PINF).value} bound={bound}")
        per_edge = {e: rng.randint(1, 3) for e in gd.host.edges}
        td = subdivision_transfer(gd, per_edge)
        rec.add("subdivision_transfer_valid", label, not validate(td))
        rec.add("subdivision_width_noninc", label,
                width(td, PINF).value <= width(gd, PINF).value)
        host = random_connected_graph(rng, 3, 6)
        d = random_decomposition(rng, guest, host)
        rec.add("random_decomposition_valid", label, not validate(d))
        rec.add("width_l1_lower", label,
                width(d, P1).value >= guest.n,
                details=f"l1={width(d, P1).value} n={guest.n}")
        hmap = _host_map_for(rng, host, 1 + (i % 2))
        if hmap is not None:
            rep = coarse.host_transfer_decomposition(d, hmap)
            rec.add("host_transfer_valid", label, not validate(rep.decomposition))
            rec.add("host_transfer_linf", label, rep.linf_holds,
                    details=f"C={rep.overlap_constant}")
            rec.add("host_transfer_lp", label, all(rep.lp_holds.values()))

    rng = rng_for(seed, "audit:wirings")
    for i in range(count):
        guest = random_connected_graph(rng, 2, 7)
        host = random_connected_graph(rng, 2, 7)
        label = f"wire{i}"
        w = random_wiring(rng, guest, host)
        ld = wiring.load(w)
        k = ld.coarseness
        d = wiring.decomposition_from_wiring(w)
        rec.add("wiring_decomposition_valid", label, not validate(d))
        rec.add("wiring_width_le_2k", label, width(d, PINF).value <= 2 * k,
                details=f"width={width(d, PINF).value} k={k}")
        rec.add("wiring_l1_le_2kV", label,
                width(d, P1).value <= 2 * k * ld.volume,
                details=f"l1={width(d, P1).value} 2kV={2 * k * ld.volume}")
        w2 = wiring.wiring_from_decomposition(d)
        ld2 = wiring.load(w2)
        kd = width(d, PINF).value
        delta = max(1, guest.max_degree())
        rec.add("decomposition_wiring_coarse", label, ld2.coarseness <= delta * kd,
                details=f"coarseness={ld2.coarseness} bound={delta * kd}")
        rec.add("decomposition_wiring_volume", label,
                ld2.volume <= (1 + delta) * width(d, P1).value,
                details=f"vol={ld2.volume}")


def _host_map_for(rng, host: Graph, kappa: int):
    """Regular map out of a specific host: collapse rng-chosen adjacent
    pairs up to the fiber budget."""
    target_edges = []
    groups = list(range(host.n))
    if kappa > 1 and host.n >= 2:
        verts = list(range(host.n))
        rng.shuffle(verts)
        merged = {}
        used = set()
        for v in verts:
            if v in used:
                continue
            nbrs = [u for u in host.neighbors[v] if u not in used]
            if nbrs and rng.random() < 0.5:
                u = rng.choice(sorted(nbrs))
                merged[u] = v
                used.add(u)
                used.add(v)
        groups = [merged.get(v, v) for v in range(host.n)]
    reps = sorted(set(groups))
    index = {r: i for i, r in enumerate(reps)}
    mapping = tuple(index[groups[v]] for v in range(host.n))
    for u, v in host.edges:
        a, b = mapping[u], mapping[v]
        if a != b:
            target_edges.append((min(a, b), max(a, b)))
    target = Graph(len(reps), sorted(set(target_edges)))
    cert = coarse.RegularMapCert(host, target, mapping, max(kappa, 2))
    if coarse.verify_regular(cert):
        return None
    return cert


def _audit_profiles(rec: _Recorder):
    hosts = [("tree_ball_3_4", tree_ball(3, 4)), ("grid_4_4", grid_box((4, 4)))]
    for hname, host in hosts:
        sep_t = profiles.profile(host, profiles.InvariantSpec("sep"), 8)
        tw_t = profiles.profile(host, profiles.InvariantSpec("tw"), 8)
        cw_inf = profiles.profile(host, profiles.InvariantSpec("cw"), 8)
        bw_t = profiles.profile(host, profiles.InvariantSpec("bw"), 8)
        cut23_t = profiles.profile(
            host, profiles.InvariantSpec("sep", eps=Fraction(2, 3)), 8)
        cog_t = profiles.profile(host, profiles.InvariantSpec("cogrowth"), 8)
        for name, t in (("sep", sep_t), ("tw", tw_t), ("cw", cw_inf), ("bw", bw_t)):
            vals = [r.value for r in t.rows if r.value is not None]
            rec.add("profile_monotone", f"{hname}:{name}",
                    all(a <= b for a, b in zip(vals, vals[1:])))
        for p in (1, 2):
            cw_p = profiles.profile(host, profiles.InvariantSpec("cw", PNorm(p)), 8)
            oks = []
            for r in range(2, 9):
                lhs = (r // 3) * cut23_t.value(r) ** p
                mid = cw_p.value(r)
                rhs = r * cw_inf.value(r) ** p
                oks.append(lhs <= mid <= rhs)
            rec.add("sep_bounds_cw_desk", f"{hname}:p={p}", all(oks))
        oks = []
        for r in range(2, 9):
            if cog_t.value(r) is None or cog_t.value(r) == 0:
                continue
            oks.append(bw_t.value(r) * cog_t.value(r) >= r - 1)
        rec.add("cogrowth_bandwidth_bound", hname, all(oks))


def run_audit(seed: int = 2024, max_n: int = 10, count: int = 25,
              include_profiles: bool = True) -> dict:
    """Full inequality audit; returns the report as a plain dict."""
    rec = _Recorder()
    corpus: list[tuple[str, Graph]] = list(canonical_corpus())
    corpus += [(f"rand{i}", g) for i, g in
               enumerate(random_graphs(seed, count, 2, max_n))]
    rng = rng_for(seed, "audit:orderings")
    for name, g in corpus:
        _audit_graph(rec, name, g, rng)
    _audit_constructions(rec, seed, max(5, count // 3))
    if include_profiles:
        _audit_profiles(rec)
    n_pass = sum(1 for r in rec.records if r.status == "pass")
    n_fail = sum(1 for r in rec.records if r.status == "fail")
    n_skip = sum(1 for r in rec.records if r.status == "skip")
    hard_fail = [asdict(r) for r in rec.records
                 if r.status == "fail" and r.check_class == "assert"]
    findings = [asdict(r) for r in rec.records
                if r.status == "fail" and r.check_class == "finding"]
    return {
        "seed": seed,
        "max_n": max_n,
        "count": count,
        "summary": {"pass": n_pass, "fail": n_fail, "skip": n_skip},
        "failures": hard_fail,
        "findings": findings,
        "checks": [asdict(r) for r in rec.records],
        "ok": not hard_fail,
    }
