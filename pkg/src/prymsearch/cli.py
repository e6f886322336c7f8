"""Command line front end.

Subcommands: search (the full sweep), check-datum (one datum, full
diagnostic), chartable, orbits, verify-catalog.
"""
from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .chartable import character_table
from .conditions import classify
from .covers import format_datum, hurwitz_partition, parse_datum
from .groups import GroupId, load_catalog
from .hodge import format_decomposition, hodge_multiplicities, sigma_split
from .pipeline import (SearchConfig, bundled_catalog_path, run_search,
                       write_output)


def _add_search(sub) -> None:
    p = sub.add_parser("search", help="sweep a genus range and report")
    p.add_argument("--gtilde-min", type=int, required=True)
    p.add_argument("--gtilde-max", type=int, required=True)
    p.add_argument("--r", type=int, default=4)
    p.add_argument("--catalog", default=None)
    p.add_argument("--annotations", default=None)
    p.add_argument("--out", default=None)
    p.add_argument("--format", default="csv", choices=("csv", "md", "jsonl"))
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache", default=None)
    p.add_argument("--order-min", type=int, default=1)
    p.add_argument("--order-max", type=int, default=None)
    p.add_argument("--group", default=None, help="restrict to one id, e.g. G(8,3)")


def cmd_search(args) -> int:
    cfg = SearchConfig(
        gtilde_min=args.gtilde_min, gtilde_max=args.gtilde_max, r=args.r,
        catalog_path=args.catalog, out_path=args.out, out_format=args.format,
        cache_dir=args.cache, jobs=args.jobs,
        annotations_path=args.annotations,
        order_min=args.order_min, order_max=args.order_max,
        only_group=GroupId.parse(args.group) if args.group else None)
    rows, summary = run_search(cfg)
    text = write_output(rows, summary, cfg)
    if cfg.out_path:
        print("%d rows -> %s" % (len(rows), cfg.out_path))
    else:
        sys.stdout.write(text)
    cells = sorted(summary["A"], key=lambda c: (c[0], -c[1], c[2]))
    print("cell (gtilde,g,b): A-data / B-proved", file=sys.stderr)
    for cell in cells:
        print("  (%d,%d,%d): %d / %d"
              % (*cell, summary["A"][cell], summary["proved"].get(cell, 0)),
              file=sys.stderr)
    return 0


def cmd_check_datum(args) -> int:
    catalog = load_catalog(args.catalog or bundled_catalog_path())
    group, vector, sigma = parse_datum(args.datum, catalog)
    rep = classify(group, vector, sigma)
    h = hodge_multiplicities(group, vector)
    split = sigma_split(h, sigma)
    print("datum:    %s" % format_datum(group, vector, sigma))
    print("genera:   gtilde=%d g=%d b=%d p=%d"
          % (rep.gtilde, rep.g, rep.b, rep.p))
    print(format_decomposition(h, split))
    print("dims:     dim(S^2 V-)^G = %d, dim(S^2 V+)^G = %d"
          % (rep.dim_S2_Vminus, rep.dim_S2_Vplus))
    flags = ["A: %s" % _yn(rep.A), "B1: %s" % _yn(rep.B1),
             "B2: %s" % _yn(rep.B2), "b>=6: %s" % _yn(rep.b_ge6)]
    print("flags:    " + "  ".join(flags))
    if rep.witness is not None:
        sub = group.subgroup_as_group(rep.witness.elements)
        print("witness:  %s = {%s}"
              % (catalog.match_id(sub),
                 ",".join(str(x) for x in rep.witness.elements)))
    print("status:   %s" % rep.B_status)
    print("polarization: %s" % rep.polarization_type)
    return 0


def _yn(v: Optional[bool]) -> str:
    return "-" if v is None else ("yes" if v else "no")


def cmd_chartable(args) -> int:
    catalog = load_catalog(args.catalog or bundled_catalog_path())
    group = catalog.group(GroupId(args.order, args.index))
    ct = character_table(group)
    print("%s: %d classes, exponent %d" % (group.id, ct.k, ct.exponent))
    print("class reps:  " + "  ".join("%4d" % r for r in ct.reps))
    print("class sizes: " + "  ".join("%4d" % s for s in ct.sizes))
    for chi in range(ct.k):
        vals = "  ".join(str(ct.value(chi, c)) for c in range(ct.k))
        print("chi_%-2d (deg %d): %s" % (chi + 1, ct.degrees[chi], vals))
    return 0


def cmd_orbits(args) -> int:
    catalog = load_catalog(args.catalog or bundled_catalog_path())
    group = catalog.group(GroupId(args.order, args.index))
    signature = tuple(int(t) for t in args.signature.split(","))
    bad = [m for m in signature if m < 2 or group.n % m]
    if bad:
        print("error: signature entry %d does not divide the group order %d"
              % (bad[0], group.n), file=sys.stderr)
        return 1
    classes = hurwitz_partition(group, signature)
    if not classes:
        print("no data for %s with signature %s" % (group.id, list(signature)))
        return 0
    for datum, size in classes:
        print("%-40s class size %d"
              % (format_datum(group, datum.vector, datum.sigma), size))
    print("%d classes, %d pairs total"
          % (len(classes), sum(s for _, s in classes)))
    return 0


def cmd_verify_catalog(args) -> int:
    catalog = load_catalog(args.path)
    counts = catalog.counts()
    for n, c in counts.items():
        print("order %2d: %3d groups" % (n, c))
    print("%d groups in %d orders, all tables valid"
          % (sum(counts.values()), len(counts)))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    ap = argparse.ArgumentParser(prog="prymsearch", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    _add_search(sub)

    p = sub.add_parser("check-datum", help="diagnose one datum")
    p.add_argument("datum", help='e.g. \'G(4,1) [4,4,4,4] x=[1,1,1,1] sigma=2\'')
    p.add_argument("--catalog", default=None)

    p = sub.add_parser("chartable", help="print a character table")
    p.add_argument("order", type=int)
    p.add_argument("index", type=int)
    p.add_argument("--catalog", default=None)

    p = sub.add_parser("orbits", help="equivalence classes for one signature")
    p.add_argument("order", type=int)
    p.add_argument("index", type=int)
    p.add_argument("signature", help="comma separated, e.g. 2,2,4,4")
    p.add_argument("--catalog", default=None)

    p = sub.add_parser("verify-catalog", help="validate a catalog file")
    p.add_argument("path")

    args = ap.parse_args(argv)
    handlers = {
        "search": cmd_search,
        "check-datum": cmd_check_datum,
        "chartable": cmd_chartable,
        "orbits": cmd_orbits,
        "verify-catalog": cmd_verify_catalog,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, LookupError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
