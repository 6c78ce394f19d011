#!/usr/bin/env python3
"""Probe the almost-maximal-regularity slice: reg = n-1 forces pd <= n?

Enumerates every isomorphism class on n non-isolated vertices, keeps the
classes with reg = n-1, and reports the pd values seen there.  At n = 7
this is the desk-scale end of the conjecture ladder (about 888 classes,
tens of minutes single-threaded).

Example:
    python scripts/probe_reg_slice.py --n 6
    python scripts/probe_reg_slice.py --n 7 --slow-ok
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from edgebetti.atlas import compute_atlas, default_jobs, probe_conjecture
from edgebetti.graph6 import graph6_encode


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=7, choices=(5, 6, 7))
    ap.add_argument("--field", default="q")
    ap.add_argument("--jobs", type=int, default=default_jobs())
    ap.add_argument("--slow-ok", action="store_true")
    args = ap.parse_args()

    if args.n >= 7 and not args.slow_ok:
        ap.error("n = 7 takes a while; pass --slow-ok")

    t0 = time.perf_counter()
    atlas = compute_atlas(args.n, args.field, jobs=args.jobs, progress=True)
    report = probe_conjecture(args.n, args.field, atlas=atlas)
    elapsed = time.perf_counter() - t0

    slice_records = [rec for rec in atlas.records if rec.reg == args.n - 1]
    by_pd: dict[int, int] = {}
    for rec in slice_records:
        by_pd[rec.pd] = by_pd.get(rec.pd, 0) + 1
    print(f"n={args.n}: {len(atlas.records)} classes in {elapsed:.1f}s")
    print(f"reg = {args.n - 1} slice: {len(slice_records)} classes")
    for pd in sorted(by_pd):
        print(f"  pd = {pd}: {by_pd[pd]} classes")
    extremes = [rec for rec in slice_records if rec.pd == max(by_pd)]
    print("extreme witnesses:", [graph6_encode(r.graph) for r in extremes[:5]])
    print("verdict:", "PASS" if report.passed else "FAIL", report.details)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
