#!/usr/bin/env python3
"""Print the non-affine minimal infinite diagrams, by enumeration.

Sweeps the connected diagrams over labels {2,3,4,5,6,inf} up to rank 6 and
lists every class that is infinite with all proper parabolics finite but is
not affine, grouped by rank.  The 3-spherical crystallographic ones among
them are singled out at the end; nothing here is hard-coded, so the catalog
is re-derived on every run.
"""

import argparse
import sys

from coxtools import CoxeterSystem, INFINITY, EnumFilter, enumerate_minimal_infinite
from coxtools.cli import render_diagram


def payload_to_system(payload: dict) -> CoxeterSystem:
    edges = {
        (i, j): (INFINITY if m == "inf" else m) for i, j, m in payload["edges"]
    }
    return CoxeterSystem.from_edges(payload["rank"], edges)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-rank", type=int, default=6)
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()

    filt = EnumFilter(label_set=frozenset({2, 3, 4, 5, 6, INFINITY}))
    report = enumerate_minimal_infinite(filt, args.max_rank, jobs=args.jobs)

    non_affine = report.results["non_affine_classes"]
    print(f"non-affine minimal infinite classes up to rank {args.max_rank}: "
          f"{len(non_affine)}")
    for payload in non_affine:
        edges = " ".join(f"{i}-{j}:{m}" for i, j, m in payload["edges"])
        print(f"  rank {payload['rank']}: {edges}")

    figures = report.results["three_spherical_crystallographic_non_affine"]
    print(f"\n3-spherical and crystallographic among them: {len(figures)}")
    for payload in figures:
        print()
        print(render_diagram(payload_to_system(payload)), end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
