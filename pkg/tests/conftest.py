import math
import os

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from coxtools import INFINITY, CoxeterSystem

settings.register_profile(
    "default",
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

RUN_SLOW = os.environ.get("COXTOOLS_SLOW") == "1"

slow = pytest.mark.skipif(
    not RUN_SLOW, reason="set COXTOOLS_SLOW=1 to run the long exhaustive checks"
)


def label_values(max_finite: int = 6, with_inf: bool = True):
    vals = st.integers(min_value=2, max_value=max_finite)
    if with_inf:
        return st.one_of(vals, st.just(INFINITY))
    return vals


@st.composite
def coxeter_systems(draw, min_rank=1, max_rank=6, max_finite=6, with_inf=True):
    n = draw(st.integers(min_value=min_rank, max_value=max_rank))
    mat = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = draw(label_values(max_finite, with_inf))
            mat[i][j] = mat[j][i] = m
    return CoxeterSystem.from_rows(mat)


def permuted(system: CoxeterSystem, perm) -> CoxeterSystem:
    n = system.rank
    mat = [[system.labels[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    return CoxeterSystem.from_rows(mat)


def edges_to_system(rank: int, triples) -> CoxeterSystem:
    edges = {}
    for i, j, m in triples:
        edges[(i, j)] = INFINITY if m == "inf" else m
    return CoxeterSystem.from_edges(rank, edges)


assert math.isinf(INFINITY)
