#!/usr/bin/env python3
"""Compare computed maximal split subalgebras against the reference table.

For every catalog form this builds the full chain (restricted roots, TDS,
split subalgebra) and prints the computed dimension and reduced type next
to the table row.  The exceptional reference rows, which have no matrix
model here, are listed at the end.

Usage:
    python3 scripts/table1_report.py [--form su:p=1,q=2]
"""

import argparse
import sys
import time

from hkr import catalog
from hkr import roots as rt
from hkr import triples as tp


def report_row(fid):
    S = catalog.build(fid)
    t0 = time.monotonic()
    tds = tp.build_tds(S)
    sub = tp.maximal_split_subalgebra(S, tds)
    elapsed = time.monotonic() - t0
    row = catalog.lookup_table1(fid)
    agree = (sub.table_label == row.split_sub
             and sub.dim == catalog.algebra_label_dim(row.split_sub)
             and rt.type_equivalent(sub.reduced_type,
                                    catalog.reference_reduced_type(fid)))
    return {
        "form": S.name,
        "dim_g": S.dim,
        "split_sub": row.split_sub,
        "computed_dim": sub.dim,
        "computed_type": sub.reduced_type,
        "quasi_split": row.quasi_split,
        "agree": agree,
        "seconds": elapsed,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--form", help="single form instead of the whole catalog")
    args = ap.parse_args(argv)

    fids = ([catalog.parse_form(args.form)] if args.form
            else catalog.standard_forms())
    print("%-10s %6s  %-10s %6s %-6s %-5s %7s" % (
        "form", "dim g", "ghat", "dim", "type", "ok", "time"))
    bad = 0
    for fid in fids:
        r = report_row(fid)
        bad += not r["agree"]
        print("%-10s %6d  %-10s %6d %-6s %-5s %6.2fs" % (
            r["form"], r["dim_g"], r["split_sub"], r["computed_dim"],
            r["computed_type"], "ok" if r["agree"] else "MISMATCH",
            r["seconds"]))

    if not args.form:
        print()
        print("reference rows without a matrix model:")
        for label in catalog.exceptional_labels():
            row = catalog.lookup_table1(label)
            print("%-10s %6d  %-10s %6d %-6s" % (
                row.form, catalog.algebra_label_dim(row.form),
                row.split_sub, catalog.algebra_label_dim(row.split_sub),
                row.restricted_type))
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
