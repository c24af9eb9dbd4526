"""Command-line front end.

Commands: gen, solve, profile, audit, construct.  Exit codes: 0 success,
2 input error, 3 capacity exceeded, 4 audit failure.  Every --out write
leaves a <out>.manifest.json next to it recording the command line,
input hashes, seed, version and wall clock; outputs themselves are
byte-stable for a fixed command, seed and inputs, whatever --jobs says.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import __version__
from .audit import run_audit
from .coarse import (GeodesicChoice, RegularMapCert, comparison_graph,
                     host_transfer_decomposition, pullback_decomposition,
                     pullback_ordering, size_bounds_hold, verify_regular,
                     walk_load_bound)
from .decomposition import (decomposition_from_json, decomposition_to_json,
                            grid_decomposition, subdivision_transfer, validate,
                            width)
from .errors import CapacityError, ParameterError
from .generate import FAMILY_ALIASES, FamilySpec, generate
from .graphs import Graph, from_edgelist, from_json, to_edgelist, to_json
from .layout import min_bandwidth, min_cutwidth, min_vertex_separation
from .orders import LinearOrdering, PNorm, cut_vector
from .profiles import InvariantSpec, dnc_ordering, profile, table_to_csv
from .separation import cheeger, cutsize, pathwidth, treewidth, two_thirds_separator
from .wiring import (decomposition_from_wiring, load, wiring_from_decomposition,
                     wiring_from_json, wiring_to_json)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_AUDIT = 4


def _sha256(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _emit(text: str, out: str | None, manifest: dict | None = None):
    if out is None:
        sys.stdout.write(text)
        return
    Path(out).write_text(text)
    if manifest is not None:
        Path(out + ".manifest.json").write_text(
            json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _manifest(args, inputs: list[str], seed, t0: float, stats: dict) -> dict:
    return {
        "command": sys.argv[1:],
        "inputs": {p: _sha256(p) for p in inputs},
        "seed": seed,
        "version": __version__,
        "wall_clock_s": round(time.monotonic() - t0, 6),
        "stats": stats,
    }


def _read_graph(path: str) -> Graph:
    text = Path(path).read_text()
    if path.endswith(".json"):
        return from_json(text)
    return from_edgelist(text)


def _parse_eps(text: str) -> Fraction:
    try:
        if "/" in text:
            a, b = text.split("/")
            return Fraction(int(a), int(b))
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"bad eps {text!r}") from exc


def _jobs_default() -> int:
    env = os.environ.get("WIDTHLAB_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ParameterError(f"bad WIDTHLAB_JOBS value {env!r}")
    return 1


def _read_map(path: str, source: Graph, target: Graph) -> RegularMapCert:
    obj = json.loads(Path(path).read_text())
    if "kappa" not in obj or "map" not in obj:
        raise ParameterError('map JSON must carry "kappa" and "map"')
    cert = RegularMapCert(source, target, tuple(int(x) for x in obj["map"]),
                          int(obj["kappa"]))
    problems = verify_regular(cert)
    if problems:
        raise ParameterError("map is not kappa-regular: " + "; ".join(problems))
    return cert


def _read_order(path: str) -> LinearOrdering:
    obj = json.loads(Path(path).read_text())
    if "positions" not in obj:
        raise ParameterError('ordering JSON must carry "positions"')
    return LinearOrdering(tuple(int(x) for x in obj["positions"]))


# ---------------------------------------------------------------------------
# commands

def cmd_gen(args) -> int:
    t0 = time.monotonic()
    spec = FamilySpec(args.family, tuple(args.params), seed=args.seed)
    g = generate(spec)
    text = to_edgelist(g) if args.format == "edgelist" else to_json(g)
    _emit(text, args.out, _manifest(args, [], args.seed, t0,
                                    {"n": g.n, "m": g.m}))
    return EXIT_OK


def cmd_solve(args) -> int:
    t0 = time.monotonic()
    g = _read_graph(args.input)
    inv = args.invariant
    result: dict = {"invariant": inv, "n": g.n, "m": g.m}
    if inv in ("cutwidth", "bandwidth", "vsep"):
        p = PNorm.parse(args.p)
        fn = {"cutwidth": min_cutwidth, "bandwidth": min_bandwidth,
              "vsep": min_vertex_separation}[inv]
        res = fn(g, p)
        result.update(p=str(p), value=res.value.value, root=res.value.root(),
                      method=res.method, nodes_explored=res.nodes_explored)
        if args.witness:
            result["witness_positions"] = list(res.witness.positions)
    elif inv == "cutsize":
        eps = _parse_eps(args.eps)
        val, cert = cutsize(g, eps)
        result.update(eps=str(eps), value=val,
                      component_sizes=list(cert.component_sizes))
        if args.witness:
            result["cutset"] = sorted(cert.cutset)
    elif inv == "separator23":
        val, triple = two_thirds_separator(g)
        result.update(value=val)
        if args.witness:
            result.update(a=sorted(triple.a), b=sorted(triple.b),
                          s=sorted(triple.s))
    elif inv == "cheeger":
        h = cheeger(g)
        result.update(value=str(h), numerator=h.numerator,
                      denominator=h.denominator)
    elif inv == "treewidth":
        val, cert = treewidth(g)
        result.update(value=val)
        if args.witness:
            result["elimination_positions"] = list(cert.order.positions)
    elif inv == "pathwidth":
        val, order = pathwidth(g)
        result.update(value=val)
        if args.witness:
            result["witness_positions"] = list(order.positions)
    else:
        raise ParameterError(f"unknown invariant {inv!r}")
    text = json.dumps(result, indent=2, sort_keys=True) + "\n"
    _emit(text, args.out, _manifest(args, [args.input], None, t0, {}))
    return EXIT_OK


def _profile_host(args) -> Graph:
    family = FAMILY_ALIASES.get(args.family, args.family)
    params = list(args.params)
    if args.family == "tree3":
        params = [3, args.radius]
    elif args.family == "grid2":
        family = "grid_box"
        side = 2 * args.radius + 1
        params = [side, side]
    elif family in ("tree_ball", "dl_ball") and args.radius is not None:
        params = params + [args.radius]
    return generate(FamilySpec(family, tuple(params), seed=args.seed))


def cmd_profile(args) -> int:
    t0 = time.monotonic()
    host = _profile_host(args)
    kind = args.invariant
    p = PNorm.parse(args.p) if args.p else None
    eps = _parse_eps(args.eps) if args.eps else None
    spec = InvariantSpec(kind, p=p, eps=eps)
    jobs = args.jobs if args.jobs else _jobs_default()
    table = profile(host, spec, args.rmax, jobs=jobs)
    text = table_to_csv(table)
    _emit(text, args.out, _manifest(args, [], args.seed, t0,
                                    {"host_n": host.n, "rows": args.rmax,
                                     "jobs": jobs}))
    return EXIT_OK


def cmd_audit(args) -> int:
    t0 = time.monotonic()
    report = run_audit(seed=args.seed, max_n=args.max_n, count=args.count,
                       include_profiles=not args.no_profiles)
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    _emit(text, args.out, _manifest(args, [], args.seed, t0, report["summary"]))
    return EXIT_OK if report["ok"] else EXIT_AUDIT


def cmd_construct(args) -> int:
    t0 = time.monotonic()
    kind = args.kind
    inputs: list[str] = []
    if kind == "grid-decomp":
        g = _read_graph(args.input)
        inputs.append(args.input)
        d = grid_decomposition(g)
        w = width(d, PNorm.infinity()).value
        bound = g.max_degree() + max(g.max_degree(), 1)
        obj = {"decomposition": json.loads(decomposition_to_json(d)),
               "width_inf": w, "width_bound": bound, "valid": not validate(d)}
    elif kind == "subdivide-transfer":
        d = decomposition_from_json(Path(args.decomp).read_text())
        inputs.append(args.decomp)
        per_edge = {e: args.subdivide for e in d.host.edges}
        d2 = subdivision_transfer(d, per_edge)
        obj = {"decomposition": json.loads(decomposition_to_json(d2)),
               "width_inf": width(d2, PNorm.infinity()).value,
               "width_inf_before": width(d, PNorm.infinity()).value,
               "valid": not validate(d2)}
    elif kind == "dnc-order":
        g = _read_graph(args.input)
        inputs.append(args.input)
        eps = _parse_eps(args.eps) if args.eps else Fraction(1, 2)
        f, trace = dnc_ordering(g, eps)
        obj = {"positions": list(f.positions), "certified_bound": trace.bound,
               "cutwidth_achieved": max(cut_vector(g, f), default=0)}
    elif kind == "wire-from-decomp":
        d = decomposition_from_json(Path(args.decomp).read_text())
        inputs.append(args.decomp)
        w = wiring_from_decomposition(d)
        ld = load(w)
        obj = {"wiring": json.loads(wiring_to_json(w)),
               "fiber_max": ld.fiber_max, "walk_max": ld.walk_max,
               "volume": ld.volume, "edge_load_max": ld.edge_load_max}
    elif kind == "decomp-from-wire":
        w = wiring_from_json(Path(args.wiring).read_text())
        inputs.append(args.wiring)
        ld = load(w)
        d = decomposition_from_wiring(w)
        obj = {"decomposition": json.loads(decomposition_to_json(d)),
               "width_inf": width(d, PNorm.infinity()).value,
               "coarseness": ld.coarseness,
               "width_le_2k": width(d, PNorm.infinity()).value <= 2 * ld.coarseness,
               "valid": not validate(d)}
    elif kind in ("gamma-phi", "pullback-order", "pullback-decomp"):
        source = _read_graph(args.source)
        target = _read_graph(args.target)
        cert = _read_map(args.map, source, target)
        inputs += [args.source, args.target, args.map]
        gv = (tuple(int(x) for x in args.guest_vertices.split(","))
              if args.guest_vertices else tuple(range(source.n)))
        comp = comparison_graph(cert, gv)
        if kind == "gamma-phi":
            obj = {"comparison": json.loads(to_json(comp.graph)),
                   "guest_vertices": list(comp.guest_vertices),
                   "image": list(comp.image),
                   "walks": [list(w) for w in comp.walks],
                   "size_bounds_hold": size_bounds_hold(comp, cert),
                   "walk_load": comp.walk_load(),
                   "walk_load_bound": walk_load_bound(comp, cert)}
        elif kind == "pullback-order":
            order = _read_order(args.order)
            inputs.append(args.order)
            rep = pullback_ordering(order, comp, cert)
            obj = {"positions": list(rep.ordering.positions),
                   "bandwidth_claim_holds": rep.bandwidth_claim_holds,
                   "cutwidth_claim_holds": rep.cutwidth_claim_holds,
                   "collision_constant": rep.collision_constant,
                   "collision_bound": rep.collision_bound,
                   "additive_term": rep.additive_term}
        else:
            dprime = decomposition_from_json(Path(args.decomp).read_text())
            inputs.append(args.decomp)
            rep = pullback_decomposition(dprime, comp, cert)
            obj = {"decomposition": json.loads(decomposition_to_json(rep.decomposition)),
                   "inflation_power_holds": rep.inflation_power_holds,
                   "inflation_literal_holds": rep.inflation_literal_holds,
                   "valid": not validate(rep.decomposition)}
    elif kind == "host-transfer":
        d = decomposition_from_json(Path(args.decomp).read_text())
        target = _read_graph(args.target)
        cert = _read_map(args.map, d.host, target)
        inputs += [args.decomp, args.target, args.map]
        rep = host_transfer_decomposition(d, cert)
        obj = {"decomposition": json.loads(decomposition_to_json(rep.decomposition)),
               "overlap_constant": rep.overlap_constant,
               "linf_holds": rep.linf_holds,
               "lp_holds": {str(k): v for k, v in rep.lp_holds.items()},
               "valid": not validate(rep.decomposition)}
    else:
        raise ParameterError(f"unknown construction {kind!r}")
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    _emit(text, args.out, _manifest(args, inputs, getattr(args, "seed", None), t0, {}))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="widthlab",
                                 description="exact graph width laboratory")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="generate a family instance")
    g.add_argument("--family", required=True)
    g.add_argument("--params", type=int, nargs="*", default=[])
    g.add_argument("--seed", type=int, default=None)
    g.add_argument("--format", choices=("json", "edgelist"), default="json")
    g.add_argument("--out", default=None)
    g.set_defaults(fn=cmd_gen)

    s = sub.add_parser("solve", help="solve one invariant exactly")
    s.add_argument("--invariant", required=True,
                   choices=("cutwidth", "bandwidth", "vsep", "cutsize",
                            "separator23", "cheeger", "treewidth", "pathwidth"))
    s.add_argument("--input", required=True)
    s.add_argument("--p", default="inf")
    s.add_argument("--eps", default="1/2")
    s.add_argument("--witness", action="store_true")
    s.add_argument("--out", default=None)
    s.set_defaults(fn=cmd_solve)

    p = sub.add_parser("profile", help="profile a host ball")
    p.add_argument("--family", required=True)
    p.add_argument("--params", type=int, nargs="*", default=[])
    p.add_argument("--radius", type=int, default=None)
    p.add_argument("--invariant", required=True,
                   choices=("sep", "cw", "bw", "vs", "pw", "tw", "cogrowth"))
    p.add_argument("--p", default=None)
    p.add_argument("--eps", default=None)
    p.add_argument("--rmax", type=int, required=True)
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=cmd_profile)

    a = sub.add_parser("audit", help="run the inequality audit")
    a.add_argument("--seed", type=int, default=2024)
    a.add_argument("--max-n", type=int, default=10)
    a.add_argument("--count", type=int, default=25)
    a.add_argument("--no-profiles", action="store_true")
    a.add_argument("--out", default=None)
    a.set_defaults(fn=cmd_audit)

    c = sub.add_parser("construct", help="run a certified construction")
    c.add_argument("kind", choices=("gamma-phi", "pullback-order",
                                    "pullback-decomp", "host-transfer",
                                    "grid-decomp", "subdivide-transfer",
                                    "wire-from-decomp", "decomp-from-wire",
                                    "dnc-order"))
    c.add_argument("--input", default=None)
    c.add_argument("--source", default=None)
    c.add_argument("--target", default=None)
    c.add_argument("--map", default=None)
    c.add_argument("--decomp", default=None)
    c.add_argument("--wiring", default=None)
    c.add_argument("--order", default=None)
    c.add_argument("--guest-vertices", default=None)
    c.add_argument("--subdivide", type=int, default=2)
    c.add_argument("--eps", default=None)
    c.add_argument("--out", default=None)
    c.set_defaults(fn=cmd_construct)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
