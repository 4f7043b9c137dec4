"""Spherical / affine / indefinite classification of Coxeter diagrams.

Two independent engines:

* a shape recognizer against the standard classification tables (paths,
  cycles, forks with prescribed label patterns), and
* the exact signature of the cosine Gram matrix, computed over Q(sqrt2, sqrt3)
  for crystallographic labels and by escalating interval arithmetic otherwise.

The recognizer is the primary engine; the signature is an oracle used to
cross-check it (a table transcription error cannot survive both).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Optional

import mpmath

from .core import (
    CoxeterSystem,
    components,
    is_connected,
    is_crystallographic,
    is_infinite_label,
    restrict,
)
from .quadratic import QuadNum, cos_pi_over, inertia_exact


@dataclass(frozen=True)
class TypeClass:
    """Classification of one irreducible diagram.

    kind is "spherical", "affine", or "indefinite"; name is the family name
    (e.g. "A3", "B/C4", "~E8") and None for indefinite.  Alternate names in
    circulation (B3/C3 for B/C3, ~B2 for ~C2, I2(6) for G2) are carried as
    aliases but do not participate in equality.
    """

    kind: str
    name: Optional[str] = None
    aliases: tuple[str, ...] = field(default=(), compare=False)

    @property
    def is_spherical(self) -> bool:
        return self.kind == "spherical"

    @property
    def is_affine(self) -> bool:
        return self.kind == "affine"

    @property
    def is_indefinite(self) -> bool:
        return self.kind == "indefinite"

    def __str__(self) -> str:
        return self.name if self.name is not None else "indefinite"


INDEFINITE = TypeClass("indefinite")


def _sph(name: str, *aliases: str) -> TypeClass:
    return TypeClass("spherical", name, aliases)


def _aff(name: str, *aliases: str) -> TypeClass:
    return TypeClass("affine", name, aliases)


@dataclass(frozen=True)
class Signature:
    """Eigenvalue sign counts (n_plus, n_zero, n_minus) of the cosine form."""

    n_plus: int
    n_zero: int
    n_minus: int

    @property
    def rank(self) -> int:
        return self.n_plus + self.n_zero + self.n_minus

    @property
    def as_tuple(self) -> tuple[int, int, int]:
        return (self.n_plus, self.n_zero, self.n_minus)


class UndecidedSignature(Exception):
    """Interval arithmetic could not separate an eigenvalue from zero."""


# -- Gram matrix and signature ------------------------------------------------


def gram_matrix(system: CoxeterSystem):
    """Cosine Gram matrix B(s,t) = -cos(pi/m(s,t)), B(s,s) = 1.

    Exact QuadNum entries for crystallographic systems; otherwise interval
    enclosures at the current mpmath.iv precision.
    """
    if is_crystallographic(system):
        return _gram_exact(system)
    return _gram_interval(system)


def _gram_exact(system: CoxeterSystem) -> list[list[QuadNum]]:
    n = system.rank
    one = QuadNum(1)
    return [
        [one if i == j else -cos_pi_over(system.labels[i][j]) for j in range(n)]
        for i in range(n)
    ]


def _gram_interval(system: CoxeterSystem):
    iv = mpmath.iv

    def entry(m):
        # keep exactly-representable entries exact so zeros stay zeros
        if m == 2:
            return iv.mpf(0)
        if m == 3:
            return iv.mpf(-0.5)
        if is_infinite_label(m):
            return iv.mpf(-1)
        return -iv.cos(iv.pi / m)

    n = system.rank
    return [
        [iv.mpf(1) if i == j else entry(system.labels[i][j]) for j in range(n)]
        for i in range(n)
    ]


def _iv_sign(x) -> Optional[int]:
    """Sign of an interval if it excludes zero, else None."""
    if x.a > 0:
        return 1
    if x.b < 0:
        return -1
    return None


def _inertia_interval_once(system: CoxeterSystem) -> Optional[tuple[int, int, int]]:
    """One elimination pass at the current precision; None when a sign stalls.

    An exactly singular matrix stalls at every precision (an interval can
    never certify zero), which is why the caller escalates and eventually
    raises UndecidedSignature.
    """
    m = _gram_interval(system)
    active = list(range(system.rank))
    plus = minus = 0
    while active:
        piv = next((i for i in active if _iv_sign(m[i][i]) is not None), None)
        if piv is None:
            # try to surface a pivot: row/col addition is a congruence, so if
            # it produces a diagonal entry of decided sign we may commit to it
            for ai, i in enumerate(active):
                for j in active[ai + 1 :]:
                    t = m[i][i] + 2 * m[i][j] + m[j][j]
                    if _iv_sign(t) is not None:
                        for k in active:
                            m[i][k] = m[i][k] + m[j][k]
                        for k in active:
                            m[k][i] = m[k][i] + m[k][j]
                        piv = i
                        break
                if piv is not None:
                    break
        if piv is None:
            return None
        s = _iv_sign(m[piv][piv])
        if s > 0:
            plus += 1
        else:
            minus += 1
        d = m[piv][piv]
        rest = [k for k in active if k != piv]
        col = {x: m[x][piv] for x in rest}
        for x in rest:
            f = col[x] / d
            for y in rest:
                m[x][y] = m[x][y] - f * col[y]
        active = rest
    return plus, 0, minus


def _signature_interval(system: CoxeterSystem) -> Signature:
    iv = mpmath.iv
    saved = iv.prec
    prec = 64
    try:
        while True:
            iv.prec = prec
            out = _inertia_interval_once(system)
            if out is not None:
                return Signature(*out)
            if prec >= 2048:
                raise UndecidedSignature(
                    f"sign of a pivot undecided at {prec} bits; "
                    "the matrix is likely singular"
                )
            prec *= 2
    finally:
        iv.prec = saved


def signature(system: CoxeterSystem) -> Signature:
    """Exact signature of the cosine form, summed over connected components."""
    plus = zero = minus = 0
    for comp in components(system):
        sub = restrict(system, comp)
        if is_crystallographic(sub):
            p, z, m = inertia_exact(_gram_exact(sub))
        else:
            p, z, m = _signature_interval(sub).as_tuple
        plus, zero, minus = plus + p, zero + z, minus + m
    return Signature(plus, zero, minus)


# -- shape recognizer ----------------------------------------------------------


def _classify_rank2(m) -> TypeClass:
    if is_infinite_label(m):
        return _aff("~A1", "I2(inf)")
    if m == 3:
        return _sph("A2", "I2(3)")
    if m == 4:
        return _sph("B/C2", "B2", "C2", "I2(4)")
    if m == 5:
        return _sph("I2(5)", "H2")
    if m == 6:
        return _sph("G2", "I2(6)")
    return _sph(f"I2({m})")


def _classify_path(seq: list) -> TypeClass:
    """Classify a path diagram by its edge-label sequence (length >= 2)."""
    rank = len(seq) + 1
    rev = seq[::-1]
    if all(m == 3 for m in seq):
        return _sph(f"A{rank}")
    if any(is_infinite_label(m) for m in seq):
        return INDEFINITE
    tail3 = [3] * (len(seq) - 1)
    if seq == tail3 + [4] or rev == tail3 + [4]:
        return _sph(f"B/C{rank}", f"B{rank}", f"C{rank}")
    if seq == [4] + [3] * (len(seq) - 2) + [4]:
        n = rank - 1
        return _aff(f"~C{n}", "~B2") if n == 2 else _aff(f"~C{n}")
    if seq == [3, 4, 3]:
        return _sph("F4")
    if seq == [3, 3, 4, 3] or rev == [3, 3, 4, 3]:
        return _aff("~F4")
    if seq == [5, 3] or rev == [5, 3]:
        return _sph("H3")
    if seq == [5, 3, 3] or rev == [5, 3, 3]:
        return _sph("H4")
    if seq == [3, 6] or rev == [3, 6]:
        return _aff("~G2")
    return INDEFINITE


def _classify_fork(arms: list[list]) -> TypeClass:
    """Classify a tree with one degree-3 vertex from its three arm label lists.

    Each arm lists the edge labels outward from the branch vertex.
    """
    rank = 1 + sum(len(a) for a in arms)
    arms = sorted(arms, key=len)
    lens = tuple(len(a) for a in arms)
    flat = [m for a in arms for m in a]
    if all(m == 3 for m in flat):
        if lens[:2] == (1, 1):
            return _sph(f"D{rank}")
        if lens == (1, 2, 2):
            return _sph("E6")
        if lens == (1, 2, 3):
            return _sph("E7")
        if lens == (1, 2, 4):
            return _sph("E8")
        if lens == (2, 2, 2):
            return _aff("~E6")
        if lens == (1, 3, 3):
            return _aff("~E7")
        if lens == (1, 2, 5):
            return _aff("~E8")
        return INDEFINITE
    # one 4 at the outer end of one arm, two bare leaves, everything else 3: ~B
    if lens[:2] == (1, 1) and [m for m in flat if m != 3] == [4]:
        four_arm = next(a for a in arms if 4 in a)
        others = [a for a in arms if a is not four_arm]
        if (
            four_arm[-1] == 4
            and all(m == 3 for m in four_arm[:-1])
            and all(o == [3] for o in others)
        ):
            return _aff(f"~B{rank - 1}")
    return INDEFINITE


def classify_irreducible(system: CoxeterSystem) -> TypeClass:
    """Classify a connected diagram against the spherical and affine tables.

    Anything matching no table entry is Indefinite; that catch-all is what the
    signature oracle certifies.
    """
    n = system.rank
    if n == 0 or not is_connected(system):
        raise ValueError("classify_irreducible needs a nonempty connected diagram")
    if n == 1:
        return _sph("A1")
    if n == 2:
        return _classify_rank2(system.labels[0][1])

    edges = system.edges()
    adj: list[list[int]] = [[] for _ in range(n)]
    for i, j, _ in edges:
        adj[i].append(j)
        adj[j].append(i)
    degrees = [len(a) for a in adj]

    if len(edges) >= n:
        # connected with >= n edges: a single all-3 cycle is ~A, all else is not
        if (
            len(edges) == n
            and all(d == 2 for d in degrees)
            and all(m == 3 for _, _, m in edges)
        ):
            return _aff(f"~A{n - 1}")
        return INDEFINITE

    # tree cases
    maxdeg = max(degrees)
    if maxdeg >= 4:
        if (
            maxdeg == 4
            and n == 5
            and sorted(degrees) == [1, 1, 1, 1, 4]
            and all(m == 3 for _, _, m in edges)
        ):
            return _aff("~D4")
        return INDEFINITE

    branch = [v for v in range(n) if degrees[v] == 3]

    if not branch:
        # a path: read the label sequence from one endpoint
        start = next(v for v in range(n) if degrees[v] == 1)
        seq = []
        prev, cur = -1, start
        while True:
            nxts = [w for w in adj[cur] if w != prev]
            if not nxts:
                break
            nxt = nxts[0]
            seq.append(system.labels[cur][nxt])
            prev, cur = cur, nxt
        return _classify_path(seq)

    if len(branch) == 1:
        b = branch[0]
        arms = []
        for first in adj[b]:
            labels = [system.labels[b][first]]
            prev, cur = b, first
            while True:
                nxts = [w for w in adj[cur] if w != prev]
                if not nxts:
                    break
                labels.append(system.labels[cur][nxts[0]])
                prev, cur = cur, nxts[0]
            arms.append(labels)
        return _classify_fork(arms)

    if len(branch) == 2:
        # only ~D has two branch vertices: all four leaves hang off them directly
        leaves = [v for v in range(n) if degrees[v] == 1]
        if (
            all(m == 3 for _, _, m in edges)
            and len(leaves) == 4
            and all(adj[v][0] in branch for v in leaves)
        ):
            return _aff(f"~D{n - 1}")
        return INDEFINITE

    return INDEFINITE


def classify(system: CoxeterSystem) -> list[tuple[tuple[int, ...], TypeClass]]:
    """Classification of every connected component, in component order."""
    return [
        (comp, classify_irreducible(restrict(system, comp)))
        for comp in components(system)
    ]


# -- derived predicates --------------------------------------------------------


def is_spherical(system: CoxeterSystem) -> bool:
    """True iff the group is finite (every component in the spherical tables)."""
    n = system.rank
    if n == 0:
        return True
    if n <= 3:
        # label-level shortcut; this is the hot path of every subset search
        bonds = [
            system.labels[i][j]
            for i in range(n)
            for j in range(i + 1, n)
            if system.labels[i][j] != 2
        ]
        if any(is_infinite_label(m) for m in bonds):
            return False
        if len(bonds) <= 1:
            return True
        if len(bonds) == 2:
            p, q = bonds
            return (p - 2) * (q - 2) < 4
        return False  # a triangle is never finite
    return all(t.is_spherical for _, t in classify(system))


def is_k_spherical(system: CoxeterSystem, k: int) -> bool:
    """True iff every generating subset of size <= k is spherical."""
    if k < 1:
        raise ValueError("k must be positive")
    n = system.rank
    size = min(k, n)
    return all(
        is_spherical(restrict(system, J)) for J in combinations(range(n), size)
    )


def has_affine_parabolic(
    system: CoxeterSystem, include_rank2_infty: bool = False
) -> Optional[tuple[int, ...]]:
    """Smallest subset (then lexicographic) inducing an irreducible affine diagram.

    Rank-2 affine means an infinite bond; that pair generates the infinite
    dihedral group, which contains no Z x Z, so it only counts as a witness
    when include_rank2_infty is set.
    """
    n = system.rank
    start = 2 if include_rank2_infty else 3
    for size in range(start, n + 1):
        for J in combinations(range(n), size):
            sub = restrict(system, J)
            if is_connected(sub) and classify_irreducible(sub).is_affine:
                return J
    return None


def _spherical_levels(system: CoxeterSystem) -> tuple[int, list[tuple[int, ...]]]:
    """Bottom-up spherical closure.

    Returns (max spherical rank, minimal infinite subsets in (size, lex)
    order).  A subset is examined only once all its facets proved spherical,
    so supersets of infinite subsets are never touched.
    """
    n = system.rank
    current: set[tuple[int, ...]] = {()}
    best = 0
    minimal: list[tuple[int, ...]] = []
    for size in range(1, n + 1):
        nxt: set[tuple[int, ...]] = set()
        for J in combinations(range(n), size):
            if any(J[:i] + J[i + 1 :] not in current for i in range(size)):
                continue
            if is_spherical(restrict(system, J)):
                nxt.add(J)
            else:
                minimal.append(J)
        if nxt:
            best = size
        if not nxt:
            break
        current = nxt
    return best, minimal


def max_spherical_rank(system: CoxeterSystem) -> int:
    """Largest size of a generating subset spanning a finite subgroup."""
    return _spherical_levels(system)[0]


# -- Kazhdan threshold ----------------------------------------------------------

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
    53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
)


def _is_prime(n: int) -> bool:
    """Miller-Rabin over all prime bases <= 100.

    Deterministic far beyond the thresholds reached here (the d=10 threshold
    is ~1.2e31; twelve bases already cover 3.3e24, and every extra base
    multiplies the first failure point).
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _iroot(n: int, k: int) -> int:
    """Floor of the k-th root by integer Newton iteration."""
    if k == 1 or n < 2:
        return n
    x = 1 << -(-n.bit_length() // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def _is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    for k in range(1, n.bit_length() + 1):
        r = _iroot(n, k)
        if r ** k == n:
            return _is_prime(r)
        if r < 2:
            break
    return False


@dataclass(frozen=True)
class ThresholdResult:
    d: int  # maximal rank of a spherical special subgroup
    bound: Fraction  # exact 1764^d / 25
    q: int  # smallest prime power >= bound


def kazhdan_threshold(system: CoxeterSystem) -> ThresholdResult:
    """Smallest prime power q with q >= 1764^d / 25, d = max spherical rank."""
    d = max_spherical_rank(system)
    if d == 0:
        raise ValueError("threshold needs at least one generator")
    bound = Fraction(1764) ** d / 25
    # 1764 is coprime to 5, so the bound is never an integer
    q = -(-bound.numerator // bound.denominator)
    while not _is_prime_power(q):
        q += 1
    return ThresholdResult(d, bound, q)
