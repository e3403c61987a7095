"""Batch command-line front end.

Subcommands: make, critical, contains, extremal, density, sparse-flat,
bounds.  Geometries travel as JSON files in the documented schema; exact
rationals cross the boundary as "num/den" strings.  Exit codes: 0 success,
1 negative answer (contains / sparse-flat found nothing), 2 on any parse
or contract failure, reported as a machine-readable error object.

Searches in this implementation are single-threaded and deterministic;
--threads (default from QGEOM_THREADS) and --deterministic are accepted
for interface stability.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bounds as bounds_mod
from .embed import contains
from .errors import QgeomError
from .extremal import (
    Budget,
    density_rows_to_csv,
    density_table,
    ex_exact,
    find_sparse_flat,
)
from .field import field_make
from .geometry import (
    critical_exponent,
    geometry_from_json,
    geometry_to_json,
    make_ag,
    make_g,
    make_pg,
)


def _load_geometry(path):
    with open(path) as fh:
        return geometry_from_json(json.load(fh))


def _parse_eps(text):
    eps = Fraction(text)
    if eps <= 0:
        raise ValueError("eps must be a positive rational")
    return eps


def cmd_make(args):
    f = field_make(args.q)
    if args.family == "pg":
        H = make_pg(args.m, f)
    elif args.family == "ag":
        H = make_ag(args.m, f)
    else:
        if args.c is None:
            raise ValueError("family g needs -c")
        H = make_g(args.m, f, args.c)
    payload = json.dumps(geometry_to_json(H), indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def cmd_critical(args):
    H = _load_geometry(args.path)
    print(critical_exponent(H))
    return 0


def cmd_contains(args):
    host = _load_geometry(args.host)
    guest = _load_geometry(args.guest)
    w = contains(host, guest)
    if w is None:
        print("not-contained")
        return 1
    print(json.dumps({"map": [list(r) for r in w.map],
                      "point_map": list(w.point_map)}))
    return 0


def _budget_from_args(args):
    return Budget(node_cap=args.node_cap, time_cap=args.time_cap)


def cmd_extremal(args):
    H = _load_geometry(args.forbid)
    res = ex_exact(H, args.n, budget=_budget_from_args(args))
    print(json.dumps({
        "value": res.value,
        "status": res.status,
        "nodes": res.nodes,
        "witness": geometry_to_json(res.witness),
    }, indent=2))
    return 0


def cmd_density(args):
    H = _load_geometry(args.forbid)
    rows = density_table(H, range(args.n_min, args.n_max + 1),
                         budget=_budget_from_args(args))
    csv = density_rows_to_csv(rows)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv)
    else:
        sys.stdout.write(csv)
    return 0


def cmd_sparse_flat(args):
    G = _load_geometry(args.path)
    F = find_sparse_flat(G, args.m, args.c)
    if F is None:
        print("not-found")
        return 1
    print(json.dumps({"basis": [list(r) for r in F.basis], "rank": F.rank}))
    return 0


def cmd_bounds(args):
    eps = _parse_eps(args.eps)
    if args.q != 2:
        raise ValueError("bounds are only available in closed form for q = 2")
    if not args.m > args.c >= 1:
        raise ValueError("bounds need m > c >= 1")
    if args.mode == "closed-form":
        v = bounds_mod.r_main2_binary(args.m, args.c, eps)
        if v.kind == "exact":
            out = {"kind": "exact", "value": str(v.value)}
        else:
            out = {"kind": "tower-symbolic", "height": v.height,
                   "arg": str(v.arg)}
        print(json.dumps(out))
    else:
        rb = bounds_mod.r_main2_recursive(args.m, field_make(2), args.c, eps,
                                          bounds_mod.binary_base)
        trace = [{"c": lv.c, "m": lv.m,
                  "eps": "%d/%d" % (lv.eps.numerator, lv.eps.denominator),
                  "r": lv.r, "t": lv.t, "value": lv.value}
                 for lv in rb.trace]
        print(json.dumps({"kind": "exact", "value": str(rb.value.value),
                          "trace": trace}))
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="qgeom",
                                 description="exact finite-geometry toolkit")
    ap.add_argument("--deterministic", action="store_true",
                    help="force single-worker search (already the default)")
    ap.add_argument("--threads", type=int,
                    default=int(os.environ.get("QGEOM_THREADS", "1")),
                    help="worker count; this build always runs one worker")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("make", help="write a PG/AG/G geometry file")
    p.add_argument("family", choices=["pg", "ag", "g"])
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-c", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_make)

    p = sub.add_parser("critical", help="critical exponent of a geometry file")
    p.add_argument("path")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("contains", help="restriction containment with witness")
    p.add_argument("host")
    p.add_argument("guest")
    p.set_defaults(func=cmd_contains)

    p = sub.add_parser("extremal", help="exact ex_q(H; n) by branch-and-bound")
    p.add_argument("forbid")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--node-cap", type=int, default=10 ** 8)
    p.add_argument("--time-cap", type=float, default=None)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("density", help="density table CSV over a rank range")
    p.add_argument("forbid")
    p.add_argument("--n-min", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--node-cap", type=int, default=10 ** 8)
    p.add_argument("--time-cap", type=float, default=None)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("sparse-flat",
                       help="rank-m flat meeting the geometry in rank <= m-c")
    p.add_argument("path")
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.set_defaults(func=cmd_sparse_flat)

    p = sub.add_parser("bounds", help="tower / recursion bound values (q = 2)")
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-c", type=int, required=True)
    p.add_argument("--eps", required=True, help='exact rational, e.g. "1/4"')
    p.add_argument("--mode", choices=["closed-form", "recursive"],
                   default="closed-form")
    p.set_defaults(func=cmd_bounds)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if args.threads < 1:
            raise ValueError("--threads must be at least 1")
        return args.func(args)
    except SystemExit:
        raise
    except (QgeomError, ValueError, KeyError, OSError,
            json.JSONDecodeError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}),
              file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
