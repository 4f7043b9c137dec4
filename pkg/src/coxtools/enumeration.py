"""Isomorph-free generation of Coxeter diagrams by canonical augmentation.

Rank-k representatives are extended by one vertex with every admissible label
vector; children are deduplicated by canonical code and kept only when the
hereditary filters pass.  Every connected diagram has a non-cut vertex, and
all the supported filters survive deleting one, so filtering at every level
loses nothing.

The minimal-infinite and quasi-minimal searches ride the same driver with
sharper parent pools: a diagram all of whose proper subdiagrams are spherical
(resp. spherical-or-affine) loses a non-cut vertex to a diagram that is
itself spherical (resp. spherical-or-affine), so only the classical families
ever need extending and the search stays small even at rank 11.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, replace
from functools import partial
from itertools import combinations, product
from multiprocessing import Pool
from typing import Iterable, Optional

from .core import (
    INFINITY,
    CoxeterSystem,
    Label,
    components,
    is_connected,
    is_crystallographic,
    is_infinite_label,
    is_simply_laced,
    label_sort_key,
    restrict,
)
from .classify import (
    _spherical_levels,
    classify_irreducible,
    is_k_spherical,
    is_spherical,
)
from .report import Report, system_payload

RANK_CAP = 11

_CODE_INF = 0xFFFF


def _enc_label(m: Label) -> int:
    if is_infinite_label(m):
        return _CODE_INF
    if not 2 <= m < _CODE_INF:
        raise ValueError(f"label {m} cannot be encoded")
    return int(m)


def canonical_code(system: CoxeterSystem) -> bytes:
    """Isomorphism-invariant code: rank byte, then the lexicographically
    minimal column-incremental label encoding over all vertex orders.

    The minimization is branch and bound: at each position only vertices
    realizing the minimal next block are tried, mutually twin vertices
    (swappable by an automorphism) are tried once, and prefixes that exceed
    the best complete code are cut.
    """
    n = system.rank
    if n > RANK_CAP:
        raise ValueError(f"rank {n} exceeds the supported cap of {RANK_CAP}")
    if n <= 1:
        return bytes([n])
    enc = [
        [0 if i == j else _enc_label(m) for j, m in enumerate(row)]
        for i, row in enumerate(system.labels)
    ]

    twin_id = list(range(n))
    for v in range(n):
        for u in range(v):
            if twin_id[u] != u:
                continue
            if all(enc[u][w] == enc[v][w] for w in range(n) if w not in (u, v)):
                twin_id[v] = u
                break

    best: Optional[list[int]] = None
    cur: list[int] = []
    placed: list[int] = []
    remaining = set(range(n))

    def rec() -> None:
        nonlocal best
        if not remaining:
            if best is None or cur < best:
                best = cur.copy()
            return
        blocks = {v: [enc[u][v] for u in placed] for v in remaining}
        minblock = min(blocks.values())
        pos = len(cur)
        # prune only when the extended prefix is lexicographically beaten;
        # a prefix already strictly below best must never be cut
        if best is not None and cur + minblock > best[: pos + len(minblock)]:
            return
        cur.extend(minblock)
        seen_twins = set()
        for v in sorted(remaining):
            if blocks[v] != minblock or twin_id[v] in seen_twins:
                continue
            seen_twins.add(twin_id[v])
            placed.append(v)
            remaining.remove(v)
            rec()
            placed.pop()
            remaining.add(v)
        del cur[pos:]

    rec()
    assert best is not None
    return bytes([n]) + b"".join(x.to_bytes(2, "big") for x in best)


def system_from_code(code: bytes) -> CoxeterSystem:
    """Decode a canonical code back into the representative it encodes."""
    n = code[0]
    body = code[1:]
    if len(body) != n * (n - 1):
        raise ValueError("malformed code")
    vals = [int.from_bytes(body[i : i + 2], "big") for i in range(0, len(body), 2)]
    mat: list[list[Label]] = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    pos = 0
    for k in range(1, n):
        for i in range(k):
            m: Label = INFINITY if vals[pos] == _CODE_INF else vals[pos]
            mat[i][k] = m
            mat[k][i] = m
            pos += 1
    return CoxeterSystem.from_rows(mat)


# -- filters ---------------------------------------------------------------


_CRYSTALLOGRAPHIC_SET = frozenset({2, 3, 4, 6, INFINITY})


@dataclass(frozen=True)
class EnumFilter:
    """Hereditary constraints applied at every rank of the augmentation."""

    label_set: frozenset
    connected_only: bool = True
    simply_laced: bool = False
    crystallographic: bool = False
    k_spherical: Optional[int] = None
    all_proper_parabolics_spherical_or_affine: bool = False

    def __post_init__(self):
        ls = frozenset(self.label_set)
        if 2 not in ls:
            raise ValueError("the label set must contain 2")
        for m in ls:
            if not is_infinite_label(m) and (
                isinstance(m, bool) or not isinstance(m, int) or m < 2
            ):
                raise ValueError(f"bad label {m!r} in label set")
        object.__setattr__(self, "label_set", ls)
        if self.k_spherical is not None and self.k_spherical < 1:
            raise ValueError("k_spherical must be positive")

    def effective_labels(self) -> tuple[Label, ...]:
        ls = self.label_set
        if self.simply_laced:
            ls = ls & frozenset({2, 3})
        if self.crystallographic:
            ls = ls & _CRYSTALLOGRAPHIC_SET
        return tuple(sorted(ls, key=label_sort_key))

    def admits(self, system: CoxeterSystem) -> bool:
        allowed = set(self.effective_labels())
        n = system.rank
        for i in range(n):
            for j in range(i + 1, n):
                if system.labels[i][j] not in allowed:
                    return False
        if self.connected_only and not is_connected(system):
            return False
        if self.k_spherical is not None and not is_k_spherical(system, self.k_spherical):
            return False
        if self.all_proper_parabolics_spherical_or_affine and not _all_proper_ok(system):
            return False
        return True

    def payload(self) -> dict:
        return {
            "label_set": [
                m if isinstance(m, int) else "inf" for m in self.effective_labels()
            ],
            "connected_only": self.connected_only,
            "simply_laced": self.simply_laced,
            "crystallographic": self.crystallographic,
            "k_spherical": self.k_spherical,
            "all_proper_parabolics_spherical_or_affine": (
                self.all_proper_parabolics_spherical_or_affine
            ),
        }


def _sph_or_aff(system: CoxeterSystem) -> bool:
    return all(
        not classify_irreducible(restrict(system, comp)).is_indefinite
        for comp in components(system)
    )


def _all_proper_ok(system: CoxeterSystem) -> bool:
    # componentwise spherical-or-affine survives restriction, so checking the
    # vertex-deleted subdiagrams covers every proper subset
    n = system.rank
    verts = range(n)
    return all(
        _sph_or_aff(restrict(system, tuple(j for j in verts if j != v)))
        for v in verts
    )


def _is_minimal_infinite(system: CoxeterSystem) -> bool:
    if is_spherical(system):
        return False
    n = system.rank
    verts = range(n)
    return all(
        is_spherical(restrict(system, tuple(j for j in verts if j != v)))
        for v in verts
    )


# -- augmentation driver ------------------------------------------------------


def _extend(parent: CoxeterSystem, vec: tuple[Label, ...]) -> CoxeterSystem:
    n = parent.rank
    rows = [list(parent.labels[i]) + [vec[i]] for i in range(n)]
    rows.append(list(vec) + [1])
    return CoxeterSystem.from_rows(rows)


def _expand_parent(parent: CoxeterSystem, filt: EnumFilter, mode: str) -> list[bytes]:
    """All admissible one-vertex extensions of one parent, as canonical codes."""
    labels = filt.effective_labels()
    n = parent.rank
    out = set()
    for vec in product(labels, repeat=n):
        if filt.connected_only and all(m == 2 for m in vec):
            continue
        child = _extend(parent, vec)
        if mode == "minimal-infinite":
            keep = is_connected(child) and (
                is_spherical(child) or _is_minimal_infinite(child)
            )
        else:
            keep = filt.admits(child)
        if keep:
            out.add(canonical_code(child))
    return sorted(out)


def _extendable(system: CoxeterSystem, filt: EnumFilter, mode: str) -> bool:
    if mode == "minimal-infinite":
        return is_spherical(system)
    if filt.all_proper_parabolics_spherical_or_affine:
        # children of anything indefinite contain it as a proper subdiagram
        # and are rejected anyway, so those subtrees can be cut up front
        return _sph_or_aff(system)
    return True


def _generate_levels(
    max_rank: int, filt: EnumFilter, jobs: int = 1, mode: str = "filter"
) -> dict[int, list[CoxeterSystem]]:
    """Representatives per rank, in canonical-code order."""
    if max_rank > RANK_CAP:
        raise ValueError(f"rank {max_rank} exceeds the supported cap of {RANK_CAP}")
    levels: dict[int, list[CoxeterSystem]] = {}
    if max_rank < 1:
        return levels
    seed = CoxeterSystem.from_edges(1, {})
    keep_seed = is_spherical(seed) if mode == "minimal-infinite" else filt.admits(seed)
    levels[1] = [seed] if keep_seed else []
    for k in range(2, max_rank + 1):
        parents = [s for s in levels[k - 1] if _extendable(s, filt, mode)]
        work = partial(_expand_parent, filt=filt, mode=mode)
        if jobs > 1 and len(parents) > 1:
            with Pool(processes=jobs) as pool:
                chunks = pool.map(work, parents, chunksize=1)
        else:
            chunks = [work(p) for p in parents]
        codes = set()
        for chunk in chunks:
            codes.update(chunk)
        levels[k] = [system_from_code(c) for c in sorted(codes)]
    return levels


def enumerate_diagrams(
    rank: int, filt: EnumFilter, jobs: int = 1
) -> list[CoxeterSystem]:
    """One representative per isomorphism class of the given rank passing filt."""
    if rank == 0:
        empty = CoxeterSystem.empty()
        return [empty] if filt.admits(empty) else []
    return _generate_levels(rank, filt, jobs).get(rank, [])


def minimal_infinite_subsets(system: CoxeterSystem) -> list[tuple[int, ...]]:
    """All subsets inducing an infinite subgroup whose proper subsets are finite.

    Every infinite subset contains one of these, and they are pairwise
    incomparable; returned in (size, lex) order.
    """
    return _spherical_levels(system)[1]


# -- campaign-shaped enumerations ----------------------------------------------


def enumerate_minimal_infinite(
    filt: EnumFilter, max_rank: int, jobs: int = 1
) -> Report:
    """All connected minimal infinite classes up to max_rank, with the three
    structural claims about the non-affine ones evaluated within the label set.
    """
    if max_rank > 8:
        raise ValueError("minimal-infinite enumeration is capped at rank 8")
    t0 = time.monotonic()
    levels = _generate_levels(max_rank, filt, jobs, mode="minimal-infinite")
    targets: list[CoxeterSystem] = []
    for k in sorted(levels):
        targets.extend(
            s for s in levels[k] if _is_minimal_infinite(s) and filt.admits(s)
        )

    affine = [s for s in targets if classify_irreducible(s).is_affine]
    non_affine = [s for s in targets if not classify_irreducible(s).is_affine]
    three_sph_cryst = [
        s for s in non_affine if is_crystallographic(s) and is_k_spherical(s, 3)
    ]

    per_rank: dict[str, dict[str, int]] = {}
    for k in sorted(levels):
        pa = sum(1 for s in affine if s.rank == k)
        pn = sum(1 for s in non_affine if s.rank == k)
        per_rank[str(k)] = {"affine": pa, "non_affine": pn}

    claims = [
        {
            "claim": "every non-affine minimal infinite class has rank <= 5",
            "passed": all(s.rank <= 5 for s in non_affine),
            "details": {
                "violations": [system_payload(s) for s in non_affine if s.rank > 5]
            },
        },
        {
            "claim": "no non-affine minimal infinite class is simply laced",
            "passed": all(not is_simply_laced(s) for s in non_affine),
            "details": {
                "violations": [
                    system_payload(s) for s in non_affine if is_simply_laced(s)
                ]
            },
        },
    ]
    results = {
        "per_rank": per_rank,
        "affine_classes": [
            dict(system_payload(s), type=str(classify_irreducible(s))) for s in affine
        ],
        "non_affine_classes": [system_payload(s) for s in non_affine],
        "three_spherical_crystallographic_non_affine": [
            system_payload(s) for s in three_sph_cryst
        ],
        "three_spherical_crystallographic_non_affine_count": len(three_sph_cryst),
        "claims": claims,
    }
    return Report(
        campaign="minimal-infinite",
        parameters={"max_rank": max_rank, "filter": filt.payload()},
        results=results,
        duration_seconds=time.monotonic() - t0,
        jobs=jobs,
    )


def enumerate_quasi_minimal(filt: EnumFilter, max_rank: int, jobs: int = 1) -> Report:
    """All connected non-spherical non-affine classes whose proper subgroups
    are all spherical-or-affine, up to max_rank.
    """
    if not filt.all_proper_parabolics_spherical_or_affine:
        raise ValueError(
            "the filter must set all_proper_parabolics_spherical_or_affine"
        )
    if max_rank > RANK_CAP:
        raise ValueError(f"rank {max_rank} exceeds the supported cap of {RANK_CAP}")
    filt = replace(filt, connected_only=True)
    t0 = time.monotonic()
    levels = _generate_levels(max_rank, filt, jobs)
    per_rank: dict[str, int] = {}
    classes: list[CoxeterSystem] = []
    for k in sorted(levels):
        found = [s for s in levels[k] if classify_irreducible(s).is_indefinite]
        per_rank[str(k)] = len(found)
        classes.extend(found)
    results = {
        "per_rank": per_rank,
        "max_rank_attained": max((s.rank for s in classes), default=0),
        "classes": [system_payload(s) for s in classes],
        "claims": [],
    }
    return Report(
        campaign="quasi-minimal",
        parameters={"max_rank": max_rank, "filter": filt.payload()},
        results=results,
        duration_seconds=time.monotonic() - t0,
        jobs=jobs,
    )
