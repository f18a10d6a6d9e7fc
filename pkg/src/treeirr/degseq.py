"""Degree sequences: graphicality, realization, majorization, Fibonacci degrees."""

from __future__ import annotations

from itertools import accumulate
from typing import Iterable, Iterator, Literal

from treeirr.graph_core import Graph, GraphError, Tree

Convention = Literal["paper", "standard"]
CONVENTIONS = ("paper", "standard")


class DegreeSequence:
    """Non-increasing tuple of non-negative integer degrees.

    Input order does not matter; values are sorted on construction.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(sorted((int(v) for v in values), reverse=True))
        if vals and vals[-1] < 0:
            raise ValueError(f"degrees must be non-negative, got {vals[-1]}")
        self._values = vals

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        """Parse ``"3,2,1,1,1"`` (order-insensitive)."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return cls(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"bad degree sequence {text!r}: {exc}") from None

    @property
    def values(self) -> tuple[int, ...]:
        return self._values

    @property
    def total(self) -> int:
        return sum(self._values)

    def prefix_sums(self) -> list[int]:
        return list(accumulate(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __getitem__(self, i):
        return self._values[i]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DegreeSequence):
            return self._values == other._values
        if isinstance(other, tuple):
            return self._values == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._values)

    def __repr__(self) -> str:
        return f"DegreeSequence({self._values})"

    def __str__(self) -> str:
        return ",".join(map(str, self._values))


def _as_seq(ds) -> DegreeSequence:
    return ds if isinstance(ds, DegreeSequence) else DegreeSequence(ds)


def is_graphical(ds) -> bool:
    """True iff some simple graph has this degree sequence.

    Repeatedly removes the largest entry ``d`` and decrements the next ``d``
    entries, re-sorting after each step.
    """
    vals = list(_as_seq(ds))
    if sum(vals) % 2:
        return False
    while vals and vals[0] > 0:
        d = vals.pop(0)
        if d > len(vals):
            return False
        for i in range(d):
            vals[i] -= 1
            if vals[i] < 0:
                return False
        vals.sort(reverse=True)
    return True


def realize_graph(ds) -> Graph:
    """Construct a simple graph whose degree sequence is ``ds``.

    Vertex ``i`` receives degree ``ds[i]``.  Raises ``ValueError`` when the
    sequence is not graphical.
    """
    seq = _as_seq(ds)
    if not is_graphical(seq):
        raise ValueError(f"degree sequence {seq.values} is not graphical")
    residual = [[d, v] for v, d in enumerate(seq)]
    edges = []
    while True:
        residual.sort(key=lambda p: (-p[0], p[1]))
        if not residual or residual[0][0] == 0:
            break
        d, u = residual[0]
        residual[0][0] = 0
        for k in range(1, d + 1):
            residual[k][0] -= 1
            edges.append((u, residual[k][1]))
    return Graph(len(seq), edges)


def is_tree_realizable(ds) -> bool:
    """True iff some tree has this degree sequence."""
    vals = _as_seq(ds).values
    n = len(vals)
    if n == 1:
        return vals == (0,)
    if n < 2:
        return False
    return vals[-1] >= 1 and sum(vals) == 2 * (n - 1)


def realize_tree(ds) -> Tree:
    """Greedy caterpillar realization.

    Entries ``>= 2`` become a spine path in sequence order (vertices
    ``0..k-1``); the remaining degree is filled with pendant leaves.
    """
    seq = _as_seq(ds)
    if not is_tree_realizable(seq):
        raise ValueError(f"degree sequence {seq.values} is not realizable by a tree")
    n = len(seq)
    if n <= 2:
        return Tree(n, [(0, 1)] if n == 2 else [])
    spine = [d for d in seq if d >= 2]
    k = len(spine)
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, d in enumerate(spine):
        spine_nbrs = (i > 0) + (i < k - 1)
        for _ in range(d - spine_nbrs):
            edges.append((i, nxt))
            nxt += 1
    if nxt != n:
        raise GraphError(f"caterpillar construction used {nxt} vertices, expected {n}")
    return Tree(n, edges)


def majorizes(a, b) -> bool:
    """True iff ``b`` is majorized by ``a``.

    Both are read in non-increasing order; every prefix sum of ``b`` must be
    at most that of ``a`` and the totals must agree.
    """
    a, b = _as_seq(a), _as_seq(b)
    if len(a) != len(b):
        raise ValueError(f"length mismatch: {len(a)} vs {len(b)}")
    pa, pb = a.prefix_sums(), b.prefix_sums()
    if pa and pa[-1] != pb[-1]:
        return False
    return all(y <= x for x, y in zip(pa, pb))


def fibonacci_numbers(k: int, convention: Convention) -> list[int]:
    """``[F_1, ..., F_k]`` under the chosen indexing.

    ``"paper"`` starts 1, 2, 3, 5, ...; ``"standard"`` starts 1, 1, 2, 3, ...
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown Fibonacci convention {convention!r}")
    a, b = (1, 2) if convention == "paper" else (1, 1)
    out = []
    for _ in range(k):
        out.append(a)
        a, b = b, a + b
    return out


def fibonacci_degrees(n: int, convention: Convention) -> DegreeSequence:
    """The degrees ``(F_3, ..., F_n)`` sorted non-increasing."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    return DegreeSequence(fibonacci_numbers(n, convention)[2:])
