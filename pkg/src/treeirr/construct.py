"""Named tree families and seeded random trees."""

from __future__ import annotations

import heapq
import random
from typing import Sequence

from treeirr.degseq import Convention, fibonacci_numbers
from treeirr.graph_core import Tree


def star(n: int) -> Tree:
    """``K_{1,n-1}`` with vertex 0 as the center."""
    if n < 2:
        raise ValueError(f"a star needs n >= 2, got {n}")
    return Tree(n, [(0, v) for v in range(1, n)])


def path(n: int) -> Tree:
    if n < 1:
        raise ValueError(f"a path needs n >= 1, got {n}")
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def caterpillar(spine_degrees: Sequence[int]) -> Tree:
    """Caterpillar whose spine vertex ``i`` (vertex id ``i``) has degree ``spine_degrees[i]``.

    Each spine vertex gets ``degree - (number of spine neighbours)`` pendant
    leaves, numbered after the spine.
    """
    d = [int(x) for x in spine_degrees]
    k = len(d)
    if k < 2:
        raise ValueError("spine must have at least two vertices")
    for i, x in enumerate(d):
        need = 1 if i in (0, k - 1) else 2
        if x < need:
            raise ValueError(f"spine vertex {i} cannot reach degree {x} (needs >= {need})")
    edges = [(i, i + 1) for i in range(k - 1)]
    nxt = k
    for i, x in enumerate(d):
        for _ in range(x - (1 if i in (0, k - 1) else 2)):
            edges.append((i, nxt))
            nxt += 1
    return Tree(nxt, edges)


def fibonacci_spine(n: int, convention: Convention) -> list[int]:
    """Spine degrees ``F_3, ..., F_n`` in index order."""
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    return fibonacci_numbers(n, convention)[2:]


def fibonacci_caterpillar(n: int, convention: Convention) -> Tree:
    """Caterpillar with spine degrees ``F_3, ..., F_n`` laid out in index order."""
    return caterpillar(fibonacci_spine(n, convention))


def tree_from_prufer(seq: Sequence[int], n: int | None = None) -> Tree:
    """Decode a Prüfer string over labels ``0..n-1`` (``n = len(seq) + 2`` by default)."""
    if n is None:
        n = len(seq) + 2
    if len(seq) != n - 2 and n >= 2:
        raise ValueError(f"Prüfer string for n={n} must have length {n - 2}")
    if n == 1:
        return Tree(1)
    degree = [1] * n
    for x in seq:
        if not 0 <= x < n:
            raise ValueError(f"label {x} outside [0, {n})")
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Tree(n, edges)


def random_tree(n: int, seed: int) -> Tree:
    """Uniform random labeled tree from a seeded random Prüfer string."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n <= 2:
        return Tree(n, [(0, 1)] if n == 2 else [])
    rng = random.Random(seed)
    return tree_from_prufer([rng.randrange(n) for _ in range(n - 2)], n)


def random_tree_bounded(n: int, max_degree: int, rng: random.Random) -> Tree:
    """Random recursive tree whose degrees never exceed ``max_degree``.

    Not uniform; used only as a starting point for local search.
    """
    if n >= 3 and max_degree < 2:
        raise ValueError(f"no tree on {n} vertices has maximum degree <= {max_degree}")
    if n == 2 and max_degree < 1:
        raise ValueError("K_2 needs max_degree >= 1")
    order = list(range(n))
    rng.shuffle(order)
    deg = [0] * n
    edges = []
    open_slots = [order[0]] if n > 1 else []
    for v in order[1:]:
        u = open_slots[rng.randrange(len(open_slots))]
        edges.append((u, v))
        deg[u] += 1
        deg[v] += 1
        if deg[u] >= max_degree:
            open_slots.remove(u)
        if deg[v] < max_degree:
            open_slots.append(v)
    return Tree(n, edges)
