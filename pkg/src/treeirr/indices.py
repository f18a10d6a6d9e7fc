"""Degree-based irregularity and Zagreb-type indices.

Integer-valued indices are computed with exact integer arithmetic.  Only the
general Albertson index ``irr_p`` returns a float.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Sequence

from treeirr.degseq import DegreeSequence
from treeirr.graph_core import Graph


def albertson(g: Graph) -> int:
    """Albertson index: sum over edges of ``|d_u - d_v|``."""
    d = g.degrees
    return sum(abs(d[u] - d[v]) for u, v in g.edges)


def sigma(g: Graph) -> int:
    """Sigma index: sum over edges of ``(d_u - d_v)**2``."""
    d = g.degrees
    return sum((d[u] - d[v]) ** 2 for u, v in g.edges)


def general_albertson(g: Graph, p: float) -> float:
    """``(sum over edges |d_u - d_v|**p) ** (1/p)`` for ``p > 0``."""
    if not p > 0:
        raise ValueError(f"p must be positive, got {p}")
    d = g.degrees
    total = math.fsum(abs(d[u] - d[v]) ** p for u, v in g.edges)
    return total ** (1.0 / p)


def _degree_histogram(g: Graph) -> list[tuple[int, int]]:
    return sorted(Counter(g.degrees).items())


def total_albertson(g: Graph) -> int:
    """Total irregularity: ``|d_u - d_v|`` summed over all unordered vertex pairs.

    Evaluated from the degree histogram as ``sum_{i<j} n_i n_j (j - i)``.
    """
    hist = _degree_histogram(g)
    total = 0
    for a, (di, ni) in enumerate(hist):
        for dj, nj in hist[a + 1:]:
            total += ni * nj * (dj - di)
    return total


def total_albertson_sorted_formula(ds) -> int:
    """``2(n+1)m - 2 * sum_i i*d_i`` over the non-increasing order, 1-based ``i``."""
    seq = ds if isinstance(ds, DegreeSequence) else DegreeSequence(ds)
    total = seq.total
    if total % 2:
        raise ValueError("degree sum is odd")
    n, m = len(seq), total // 2
    return 2 * (n + 1) * m - 2 * sum(i * d for i, d in enumerate(seq, 1))


def sigma_t(g: Graph) -> Fraction:
    """Modified total sigma: half the sum over ordered pairs of ``(d_u - d_v)**2``.

    The ordered-pair sum equals ``2n*M1 - 2(2m)**2``.
    """
    n = g.n
    ordered = 2 * n * zagreb_m1(g) - 2 * (2 * g.m) ** 2
    return Fraction(ordered, 2)


def zagreb_m1(g: Graph) -> int:
    return sum(d * d for d in g.degrees)


def zagreb_m2(g: Graph) -> int:
    d = g.degrees
    return sum(d[u] * d[v] for u, v in g.edges)


def forgotten(g: Graph) -> int:
    """Forgotten index, vertex form ``sum d_v**3``."""
    return sum(d ** 3 for d in g.degrees)


def forgotten_edgewise(g: Graph) -> int:
    d = g.degrees
    return sum(d[u] ** 2 + d[v] ** 2 for u, v in g.edges)


def zagreb_m1_edgewise(g: Graph) -> int:
    d = g.degrees
    return sum(d[u] + d[v] for u, v in g.edges)


def imbalance_along_path(g: Graph, path: Sequence[int]) -> int:
    """Sum of ``|d(u_i) - d(u_{i+1})|`` along consecutive path vertices."""
    d = g.degrees
    total = 0
    for u, v in zip(path, path[1:]):
        if not g.has_edge(u, v):
            raise ValueError(f"vertices {u} and {v} are not adjacent")
        total += abs(d[u] - d[v])
    return total


def caterpillar_irr_formula(spine_degrees: Sequence[int]) -> int:
    """Closed form for irr of a caterpillar, evaluated as printed.

    ``(d_k-1)^2 + (d_1-1)^2 + sum_{internal}(d_i-1)(d_i-2) + sum |d_i - d_{i+1}|``
    """
    d = list(spine_degrees)
    if len(d) < 2:
        raise ValueError("spine must have at least two vertices")
    internal = sum((x - 1) * (x - 2) for x in d[1:-1])
    steps = sum(abs(x - y) for x, y in zip(d, d[1:]))
    return (d[-1] - 1) ** 2 + (d[0] - 1) ** 2 + internal + steps


def mainalb2_formula(ds) -> int:
    """Closed-form tree Albertson expression evaluated verbatim.

    With degrees ascending ``d_1 <= ... <= d_n``:
    ``d_1^2 + d_n^2 + sum_{2..n-1} d_i^2 + sum_{2..n-1} d_i + d_n - d_1 - 2n - 2``.
    """
    d = sorted(ds.values if isinstance(ds, DegreeSequence) else ds)
    n = len(d)
    if n < 2:
        raise ValueError("need at least two degrees")
    mid = d[1:-1]
    return d[0] ** 2 + d[-1] ** 2 + sum(x * x for x in mid) + sum(mid) + d[-1] - d[0] - 2 * n - 2


@dataclass(frozen=True)
class IndexBundle:
    irr: int
    sigma: int
    irr_t: int
    sigma_t: Fraction
    m1: int
    m2: int
    forgotten: int
    n: int
    m: int
    max_degree: int
    min_degree: int

    def to_json(self) -> dict:
        out = asdict(self)
        st = self.sigma_t
        out["sigma_t"] = st.numerator if st.denominator == 1 else str(st)
        return out


def compute_bundle(g: Graph) -> IndexBundle:
    """All indices of ``g`` from one pass over the edges and one over vertices."""
    d = g.degrees
    irr = sig = m2 = 0
    for u, v in g.edges:
        du, dv = d[u], d[v]
        diff = abs(du - dv)
        irr += diff
        sig += diff * diff
        m2 += du * dv
    m1 = f = 0
    for x in d:
        sq = x * x
        m1 += sq
        f += sq * x
    n, m = g.n, g.m
    return IndexBundle(
        irr=irr,
        sigma=sig,
        irr_t=total_albertson(g),
        sigma_t=Fraction(2 * n * m1 - 2 * (2 * m) ** 2, 2),
        m1=m1,
        m2=m2,
        forgotten=f,
        n=n,
        m=m,
        max_degree=g.max_degree,
        min_degree=g.min_degree,
    )


def index_value(g: Graph, name: str):
    """Look up a single index by its short name."""
    try:
        fn = INDEX_FUNCTIONS[name]
    except KeyError:
        raise ValueError(f"unknown index {name!r}; choose from {sorted(INDEX_FUNCTIONS)}") from None
    return fn(g)


INDEX_FUNCTIONS = {
    "irr": albertson,
    "sigma": sigma,
    "irr_t": total_albertson,
    "sigma_t": sigma_t,
    "m1": zagreb_m1,
    "m2": zagreb_m2,
    "forgotten": forgotten,
}
