"""Verification campaigns: exhaustive machine checks over enumerated diagrams.

Each campaign walks every isomorphism class in a declared scope, evaluates a
claim instance by instance, and packs the outcome into a content-addressed
Report.  A campaign passes only if every instance does; failures carry the
offending diagrams so they can be replayed by hand.
"""

from __future__ import annotations

import time
from multiprocessing import Pool
from typing import Optional

from .core import CoxeterSystem, label_sort_key
from .classify import classify_irreducible, signature
from .enumeration import (
    EnumFilter,
    _generate_levels,
    enumerate_minimal_infinite,
    enumerate_quasi_minimal,
)
from .hyperbolic import check_affine_criterion
from .report import Report, system_payload

_MODE_CAPS = {"simply-laced": 7, "3-spherical-crystallographic": 6}


def _criterion_row(system: CoxeterSystem) -> dict:
    chk = check_affine_criterion(system)
    return {
        "system": system_payload(system),
        "in_hypothesis": chk.hypotheses_ok,
        "hyperbolic": chk.hyperbolic,
        "has_affine": chk.affine_parabolic is not None,
        "consistent": chk.consistent,
    }


def _map_rows(worker, systems, jobs: int) -> list[dict]:
    if jobs > 1 and len(systems) > 1:
        with Pool(processes=jobs) as pool:
            return pool.map(worker, systems, chunksize=8)
    return [worker(s) for s in systems]


def verify_affine_criterion(
    mode: str = "simply-laced", max_rank: Optional[int] = None, jobs: int = 1
) -> Report:
    """Check, class by class, that absence of an affine parabolic of rank >= 3
    coincides with hyperbolicity on the diagrams satisfying the hypotheses.

    mode "simply-laced" covers labels {2,3} through rank 7; mode
    "3-spherical-crystallographic" covers {2,3,4,6} with every 3-subset
    spherical, through rank 6.
    """
    if mode not in _MODE_CAPS:
        raise ValueError(f"unknown mode {mode!r}")
    cap = _MODE_CAPS[mode]
    if max_rank is None:
        max_rank = cap
    if max_rank > cap:
        raise ValueError(f"mode {mode!r} is capped at rank {cap}")
    if mode == "simply-laced":
        filt = EnumFilter(label_set=frozenset({2, 3}))
    else:
        filt = EnumFilter(label_set=frozenset({2, 3, 4, 6}), k_spherical=3)
    t0 = time.monotonic()
    levels = _generate_levels(max_rank, filt, jobs)

    per_rank: dict[str, dict[str, int]] = {}
    bad: list[dict] = []
    for k in sorted(levels):
        rows = _map_rows(_criterion_row, levels[k], jobs)
        per_rank[str(k)] = {
            "classes": len(rows),
            "in_hypothesis": sum(1 for r in rows if r["in_hypothesis"]),
            "hyperbolic": sum(1 for r in rows if r["hyperbolic"]),
            "inconsistent": sum(1 for r in rows if not r["consistent"]),
        }
        bad.extend(r for r in rows if not r["consistent"])

    claims = [
        {
            "claim": "hyperbolicity matches the affine-parabolic criterion on "
            "every in-hypothesis class",
            "passed": not bad,
            "details": {"inconsistent": bad},
        }
    ]
    return Report(
        campaign="affine-criterion",
        parameters={"mode": mode, "max_rank": max_rank, "filter": filt.payload()},
        results={"per_rank": per_rank, "claims": claims},
        duration_seconds=time.monotonic() - t0,
        jobs=jobs,
    )


def _agreement_row(system: CoxeterSystem) -> dict:
    tc = classify_irreducible(system)
    sig = signature(system)
    n = system.rank
    if tc.is_spherical:
        ok = sig.as_tuple == (n, 0, 0)
    elif tc.is_affine:
        ok = sig.as_tuple == (n - 1, 1, 0)
    else:
        ok = sig.n_minus >= 1
    return {
        "system": system_payload(system),
        "pattern": str(tc),
        "signature": list(sig.as_tuple),
        "agree": ok,
    }


def verify_engine_agreement(
    max_rank: int, label_set: frozenset = frozenset({2, 3}), jobs: int = 1
) -> Report:
    """Cross-check the shape tables against the Gram signature on every
    connected class up to max_rank: spherical must mean positive definite,
    affine positive semidefinite with a 1-dimensional kernel, indefinite a
    negative direction."""
    if max_rank > 8:
        raise ValueError("engine agreement is capped at rank 8")
    filt = EnumFilter(label_set=frozenset(label_set))
    t0 = time.monotonic()
    levels = _generate_levels(max_rank, filt, jobs)

    per_rank: dict[str, dict[str, int]] = {}
    bad: list[dict] = []
    for k in sorted(levels):
        rows = _map_rows(_agreement_row, levels[k], jobs)
        per_rank[str(k)] = {
            "classes": len(rows),
            "disagreements": sum(1 for r in rows if not r["agree"]),
        }
        bad.extend(r for r in rows if not r["agree"])

    claims = [
        {
            "claim": "pattern and signature engines agree on every class",
            "passed": not bad,
            "details": {"disagreements": bad},
        }
    ]
    return Report(
        campaign="engine-agreement",
        parameters={"max_rank": max_rank, "filter": filt.payload()},
        results={"per_rank": per_rank, "claims": claims},
        duration_seconds=time.monotonic() - t0,
        jobs=jobs,
    )


def verify_size_bounds(
    max_rank: int = 11,
    label_set: frozenset = frozenset({2, 3}),
    jobs: int = 1,
) -> Report:
    """Enumerate the quasi-minimal and minimal infinite classes and check the
    size bounds: quasi-minimal stops at rank 10, non-affine minimal infinite
    stops at rank 5 and always carries a label >= 4."""
    t0 = time.monotonic()
    quasi_filt = EnumFilter(
        label_set=frozenset(label_set),
        all_proper_parabolics_spherical_or_affine=True,
    )
    quasi = enumerate_quasi_minimal(quasi_filt, max_rank, jobs)
    mini_filt = EnumFilter(label_set=frozenset(label_set))
    mini = enumerate_minimal_infinite(mini_filt, min(max_rank, 8), jobs)

    claims = [
        {
            "claim": "no quasi-minimal class has rank above 10",
            "passed": quasi.results["max_rank_attained"] <= 10,
            "details": {"max_rank_attained": quasi.results["max_rank_attained"]},
        }
    ]
    claims.extend(mini.results["claims"])
    figure_count = mini.results["three_spherical_crystallographic_non_affine_count"]
    if frozenset({2, 3, 4, 6}) <= frozenset(label_set) and min(max_rank, 8) >= 5:
        claims.append(
            {
                "claim": "exactly three non-affine minimal infinite classes are "
                "3-spherical and crystallographic",
                "passed": figure_count == 3,
                "details": {"count": figure_count},
            }
        )
    results = {
        "quasi_minimal": quasi.canonical_dict(),
        "minimal_infinite": mini.canonical_dict(),
        "claims": claims,
    }
    return Report(
        campaign="size-bounds",
        parameters={
            "max_rank": max_rank,
            "label_set": [
                m if isinstance(m, int) else "inf"
                for m in sorted(label_set, key=label_sort_key)
            ],
        },
        results=results,
        duration_seconds=time.monotonic() - t0,
        jobs=jobs,
    )
