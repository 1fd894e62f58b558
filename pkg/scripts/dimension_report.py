#!/usr/bin/env python3
"""Tabulate base and expected moduli dimensions over a parameter grid.

Each row is one (form, genus, deg L) cell: the Hitchin base dimension, the
expected moduli dimension, and the openness breakdown.  Degree-zero cells
report only the base.

Usage:
    python3 scripts/dimension_report.py
    python3 scripts/dimension_report.py --genus 3 --degrees 4,5,12
    python3 scripts/dimension_report.py --form sp_r:n=2 --canonical
"""

import argparse
import sys

from hkr import catalog
from hkr import dimensions as dm


def contexts_for(args):
    if args.canonical:
        return [dm.CurveContext.canonical(args.genus)]
    out = []
    for tok in args.degrees.split(","):
        tok = tok.strip()
        if tok == "K":
            out.append(dm.CurveContext.canonical(args.genus))
        elif tok == "O":
            out.append(dm.CurveContext.trivial(args.genus))
        else:
            out.append(dm.CurveContext.of_degree(args.genus, int(tok)))
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--form", help="single form instead of the whole catalog")
    ap.add_argument("--genus", type=int, default=2)
    ap.add_argument("--degrees", default="K,3,8",
                    help="comma list of degrees, or K / O")
    ap.add_argument("--canonical", action="store_true",
                    help="shorthand for --degrees K")
    args = ap.parse_args(argv)

    fids = ([catalog.parse_form(args.form)] if args.form
            else catalog.standard_forms())
    contexts = contexts_for(args)

    print("%-10s %2s %4s | %5s %9s %6s %6s | %-22s" % (
        "form", "g", "d_L", "base", "expected", "split", "open",
        "openness terms"))
    for fid in fids:
        an = dm.analyze(catalog.build(fid))
        for ctx in contexts:
            rep = dm.dimension_report(an, ctx)
            if rep.expected_moduli_dim is None:
                print("%-10s %2d %4d | %5d %9s %6s %6s |" % (
                    rep.form, ctx.genus, ctx.d_L, rep.base_dim, "-",
                    rep.is_split, "-"))
                continue
            terms = "roots %d, b %d, z_h %d" % (
                rep.openness_terms["roots"], rep.openness_terms["b"],
                rep.openness_terms["z_h"])
            print("%-10s %2d %4d | %5d %9d %6s %6s | %-22s" % (
                rep.form, ctx.genus, ctx.d_L, rep.base_dim,
                rep.expected_moduli_dim, rep.is_split, rep.hkr_open, terms))
    return 0


if __name__ == "__main__":
    sys.exit(main())
