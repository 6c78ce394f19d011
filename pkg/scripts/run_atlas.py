#!/usr/bin/env python3
"""Compute the empirical (proj dim, reg) atlas for one n and write a report.

Example:
    python scripts/run_atlas.py --n 6 --out atlas6.json
    python scripts/run_atlas.py --n 7 --slow-ok --jobs 4
"""

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from edgebetti.atlas import compute_atlas, default_jobs
from edgebetti.graph6 import graph6_encode
from edgebetti.reports import make_report, report_json


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, required=True)
    ap.add_argument("--field", default="q")
    ap.add_argument("--jobs", type=int, default=default_jobs())
    ap.add_argument("--slow-ok", action="store_true")
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    if args.n >= 7 and not args.slow_ok:
        ap.error("n = 7 takes a while; pass --slow-ok")

    t0 = time.perf_counter()
    atlas = compute_atlas(args.n, args.field, jobs=args.jobs, progress=True)
    elapsed = time.perf_counter() - t0

    print(f"n={args.n}: {len(atlas.records)} classes in {elapsed:.1f}s")
    print("pairs:", " ".join(f"({p},{r})" for p, r in sorted(atlas.all_graphs.pairs)))
    print("reg-top slice:", sorted(atlas.reg_top_slice))

    if args.out:
        doc = make_report(
            "atlas",
            {"n": args.n, "dedup": True},
            {
                "classes": len(atlas.records),
                "pairs": sorted(atlas.all_graphs.pairs),
                "connected_pairs": sorted(atlas.connected.pairs),
                "reg_top_slice": sorted(atlas.reg_top_slice),
                "witnesses": {
                    f"{p},{r}": graph6_encode(g)
                    for (p, r), g in sorted(atlas.all_graphs.witnesses.items())
                },
            },
            args.field,
            elapsed,
        )
        args.out.write_text(report_json(doc) + "\n", encoding="utf-8")
        print(f"wrote {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
