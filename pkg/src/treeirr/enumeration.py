"""Free-tree enumeration, a labeled-tree counting oracle, and extremal search.

Free trees are produced as center-rooted canonical level sequences: every
rooted canonical sequence is visited by the Beyer-Hedetniemi successor rule
and only those rooted at a center (bicentral ties broken by the smaller half)
are emitted, so the stream contains each isomorphism class exactly once
without a dedupe set.  Streams come out in reverse lexicographic order of
their level sequences.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from treeirr.construct import random_tree, random_tree_bounded, tree_from_prufer
from treeirr.graph_core import Tree, canonical_code
from treeirr.indices import compute_bundle

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    njit = None

INDEX_NAMES = ("irr", "sigma", "irr_t", "sigma_t")
OBJECTIVES = ("min", "max")
DEFAULT_EXHAUSTIVE_LIMIT = 14
ORACLE_MAX_N = 9


@dataclass(frozen=True)
class TreeClassFilter:
    """Trees of order ``n``, optionally with ``Δ <= max_degree``."""

    n: int
    max_degree: int | None = None
    min_degree_ge: int | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.max_degree is not None and self.max_degree > max(self.n - 1, 0):
            raise ValueError(f"max_degree {self.max_degree} exceeds n - 1 = {self.n - 1}")

    def feasible(self) -> bool:
        n, cap = self.n, self.max_degree
        if cap is not None:
            if n >= 3 and cap < 2:
                return False
            if n == 2 and cap < 1:
                return False
        if self.min_degree_ge is not None:
            # every tree with n >= 2 has a leaf
            limit = 0 if n == 1 else 1
            if self.min_degree_ge > limit:
                return False
        return True

    def accepts(self, t: Tree) -> bool:
        if t.n != self.n:
            return False
        if self.max_degree is not None and t.max_degree > self.max_degree:
            return False
        if self.min_degree_ge is not None and t.min_degree < self.min_degree_ge:
            return False
        return True


# -- level sequences -------------------------------------------------------

def _next_rooted(levels: list[int]) -> list[int] | None:
    """Beyer-Hedetniemi successor (root at level 0), or None after the star."""
    p = len(levels) - 1
    while p > 0 and levels[p] <= 1:
        p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = levels[:]
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _is_center_rooted(levels: Sequence[int]) -> bool:
    n = len(levels)
    if n <= 2:
        return True
    split = n
    for i in range(2, n):
        if levels[i] == 1:
            split = i
            break
    left = [x - 1 for x in levels[1:split]]
    rest = [0] + list(levels[split:])
    lh, rh = max(left), max(rest)
    if rh < lh:
        return False
    if rh == lh:
        # bicentral: keep the rooting whose first branch is the smaller half
        if len(left) != len(rest):
            return len(left) < len(rest)
        return left <= rest
    return True


def tree_from_levels(levels: Sequence[int]) -> Tree:
    """Tree whose vertex ``i`` sits at depth ``levels[i]`` in preorder."""
    stack: list[int] = []
    edges = []
    for v, lev in enumerate(levels):
        del stack[lev:]
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Tree(len(levels), edges)


def free_tree_level_sequences(n: int) -> Iterator[tuple[int, ...]]:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    levels: list[int] | None = list(range(n))
    while levels is not None:
        if _is_center_rooted(levels):
            yield tuple(levels)
        levels = _next_rooted(levels)


def free_trees(flt: TreeClassFilter | int) -> Iterator[Tree]:
    """One tree per isomorphism class of order ``n`` passing the filter."""
    if isinstance(flt, int):
        flt = TreeClassFilter(flt)
    for levels in free_tree_level_sequences(flt.n):
        if flt.max_degree is not None:
            # cheap pre-check on the root before building the tree
            if levels.count(1) > flt.max_degree:
                continue
        t = tree_from_levels(levels)
        if flt.accepts(t):
            yield t


# -- labeled oracle --------------------------------------------------------

def _rooted_prufer_codes(n, out):
    """For every Prüfer string (in base-n counting order) store the AHU code of
    the decoded tree rooted at vertex ``n - 1``, packed as parenthesis bits."""
    m = n - 2
    width = 2 * n
    seq = np.zeros(max(m, 1), np.int64)
    deg = np.zeros(n, np.int64)
    kid_pad = np.zeros((n, n), np.int64)
    kid_len = np.zeros((n, n), np.int64)
    kcount = np.zeros(n, np.int64)
    total = out.shape[0]
    for idx in range(total):
        x = idx
        for j in range(m - 1, -1, -1):
            seq[j] = x % n
            x //= n
        for v in range(n):
            deg[v] = 1
            kcount[v] = 0
        for j in range(m):
            deg[seq[j]] += 1
        ptr = 0
        while deg[ptr] != 1:
            ptr += 1
        leaf = ptr
        for step in range(m + 2):
            if step < m:
                v, parent = leaf, seq[step]
            elif step == m:
                v, parent = leaf, n - 1
            else:
                v, parent = n - 1, -1
            # close v: sort its child codes, wrap them in one pair of parentheses
            c = kcount[v]
            for a in range(1, c):
                kp, kl = kid_pad[v, a], kid_len[v, a]
                b = a - 1
                while b >= 0 and kid_pad[v, b] > kp:
                    kid_pad[v, b + 1] = kid_pad[v, b]
                    kid_len[v, b + 1] = kid_len[v, b]
                    b -= 1
                kid_pad[v, b + 1] = kp
                kid_len[v, b + 1] = kl
            val = 1
            length = 1
            for a in range(c):
                kl = kid_len[v, a]
                val = (val << kl) | (kid_pad[v, a] >> (width - kl))
                length += kl
            val = (val << 1)
            length += 1
            if parent < 0:
                out[idx] = val
                break
            k = kcount[parent]
            kid_pad[parent, k] = val << (width - length)
            kid_len[parent, k] = length
            kcount[parent] = k + 1
            if step < m:
                deg[leaf] = 0
                deg[parent] -= 1
                if deg[parent] == 1 and parent < ptr:
                    leaf = parent
                else:
                    ptr += 1
                    while deg[ptr] != 1:
                        ptr += 1
                    leaf = ptr


_rooted_prufer_codes_fast = njit(cache=True)(_rooted_prufer_codes) if njit else _rooted_prufer_codes


@dataclass
class OracleResult:
    n: int
    labeled_count: int
    classes: int
    representatives: list[Tree] = field(repr=False)


def labeled_trees_oracle(n: int, accelerate: bool = True) -> OracleResult:
    """Count isomorphism classes by decoding all ``n**(n-2)`` Prüfer strings.

    Each labeled tree is first reduced to its rooted code at vertex ``n-1``
    (rooted isomorphism implies free isomorphism); one tree per distinct rooted
    code is then deduplicated with :func:`canonical_code`.
    """
    if not 2 <= n <= ORACLE_MAX_N:
        raise ValueError(f"oracle supports 2 <= n <= {ORACLE_MAX_N}, got {n}")
    total = n ** (n - 2)
    codes = np.zeros(total, np.int64)
    kernel = _rooted_prufer_codes_fast if accelerate else _rooted_prufer_codes
    kernel(n, codes)
    _, first = np.unique(codes, return_index=True)
    reps: dict[bytes, Tree] = {}
    for idx in sorted(int(i) for i in first):
        digits = []
        x = idx
        for _ in range(n - 2):
            digits.append(x % n)
            x //= n
        t = tree_from_prufer(digits[::-1], n)
        reps.setdefault(canonical_code(t), t)
    ordered = [reps[k] for k in sorted(reps)]
    return OracleResult(n=n, labeled_count=total, classes=len(ordered), representatives=ordered)


def labeled_trees_bruteforce(n: int) -> set[bytes]:
    """Canonical codes of every labeled tree, decoded one by one (small n only)."""
    return {canonical_code(tree_from_prufer(s, n)) for s in product(range(n), repeat=n - 2)}


# -- extremal search -------------------------------------------------------

@dataclass(frozen=True)
class ExtremalResult:
    witness: Tree
    value: int | Fraction
    objective: str
    index_name: str
    exhaustive: bool
    n_optimal: int | None = None


def _value_from_degrees(deg: Sequence[int], edges, index_name: str):
    if index_name == "irr":
        return sum(abs(deg[u] - deg[v]) for u, v in edges)
    if index_name == "sigma":
        return sum((deg[u] - deg[v]) ** 2 for u, v in edges)
    if index_name == "irr_t":
        s = sorted(deg)
        # sum over pairs i<j of (s_j - s_i) = sum_j s_j (2j - n + 1)
        n = len(s)
        return sum(x * (2 * j - n + 1) for j, x in enumerate(s))
    if index_name == "sigma_t":
        n, tot = len(deg), sum(deg)
        return Fraction(2 * n * sum(x * x for x in deg) - 2 * tot * tot, 2)
    raise ValueError(f"unknown index {index_name!r}; choose from {INDEX_NAMES}")


def _better(a, b, objective: str) -> bool:
    return a > b if objective == "max" else a < b


def _check_args(flt: TreeClassFilter, index_name: str, objective: str) -> None:
    if index_name not in INDEX_NAMES:
        raise ValueError(f"unknown index {index_name!r}; choose from {INDEX_NAMES}")
    if objective not in OBJECTIVES:
        raise ValueError(f"objective must be 'min' or 'max', got {objective!r}")
    if not flt.feasible():
        raise ValueError(f"no tree satisfies {flt}")


def extremal_exhaustive(flt: TreeClassFilter, index_name: str, objective: str) -> ExtremalResult:
    _check_args(flt, index_name, objective)
    best = best_tree = None
    count = 0
    for t in free_trees(flt):
        val = _value_from_degrees(t.degrees, t.edges, index_name)
        if best is None or _better(val, best, objective):
            best, best_tree, count = val, t, 1
        elif val == best:
            count += 1
    return ExtremalResult(best_tree, best, objective, index_name, True, count)


def hill_climb(
    flt: TreeClassFilter,
    index_name: str,
    objective: str,
    seed: int = 0,
    restarts: int = 32,
    moves: int | None = None,
) -> ExtremalResult:
    """Leaf-relocation local search with random restarts.

    A move detaches a leaf and re-attaches it to another vertex whose degree
    is below the cap; non-worsening moves are accepted.
    """
    _check_args(flt, index_name, objective)
    n, cap = flt.n, flt.max_degree
    if n <= 2:
        t = random_tree(n, seed)
        return ExtremalResult(t, _value_from_degrees(t.degrees, t.edges, index_name),
                              objective, index_name, False, None)
    moves = 10 * n * n if moves is None else moves
    best = best_edges = None
    for r in range(restarts):
        rng = random.Random(f"{seed}:{r}")
        start = random_tree_bounded(n, cap if cap is not None else n - 1, rng)
        nbrs = [set(start.neighbors(v)) for v in range(n)]
        deg = [len(s) for s in nbrs]
        edges = set(start.edges)
        cur = _value_from_degrees(deg, edges, index_name)
        for _ in range(moves):
            leaves = [v for v in range(n) if deg[v] == 1]
            leaf = leaves[rng.randrange(len(leaves))]
            (u,) = nbrs[leaf]
            w = rng.randrange(n)
            if w == leaf or w == u or (cap is not None and deg[w] >= cap):
                continue
            old_edge = (min(leaf, u), max(leaf, u))
            new_edge = (min(leaf, w), max(leaf, w))
            edges.discard(old_edge)
            edges.add(new_edge)
            deg[u] -= 1
            deg[w] += 1
            val = _value_from_degrees(deg, edges, index_name)
            if _better(cur, val, objective):
                edges.discard(new_edge)
                edges.add(old_edge)
                deg[u] += 1
                deg[w] -= 1
                continue
            nbrs[u].discard(leaf)
            nbrs[w].add(leaf)
            nbrs[leaf] = {w}
            cur = val
        if best is None or _better(cur, best, objective):
            best, best_edges = cur, sorted(edges)
    return ExtremalResult(Tree(n, best_edges), best, objective, index_name, False, None)


def extremal(
    flt: TreeClassFilter | int,
    index_name: str,
    objective: str,
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT,
    seed: int = 0,
    restarts: int = 32,
    moves: int | None = None,
) -> ExtremalResult:
    """Optimum of an index over a tree class.

    Exact by full enumeration when ``n <= exhaustive_limit``; otherwise the
    best tree found by :func:`hill_climb` (``exhaustive=False``).
    """
    if isinstance(flt, int):
        flt = TreeClassFilter(flt)
    if flt.n <= exhaustive_limit:
        return extremal_exhaustive(flt, index_name, objective)
    return hill_climb(flt, index_name, objective, seed=seed, restarts=restarts, moves=moves)


# -- class extrema by (n, Δ) -----------------------------------------------

TRACKED = ("irr", "sigma", "irr_t")


@dataclass
class CellExtrema:
    """Exhaustive index extrema over a tree class.

    The class is all trees of order ``n`` with maximum degree ``max_degree``,
    or all trees of order ``n`` when ``max_degree`` is None.
    """

    n: int
    max_degree: int | None
    count: int = 0
    lo: dict[str, int] = field(default_factory=dict)
    hi: dict[str, int] = field(default_factory=dict)
    witnesses: dict[str, Tree] = field(default_factory=dict, repr=False)
    optimum_counts: dict[str, int] = field(default_factory=dict)
    first: Tree | None = field(default=None, repr=False)

    def _offer(self, name: str, side: str, val: int, t: Tree) -> None:
        table, sign = (self.lo, -1) if side == "min" else (self.hi, 1)
        key = f"{name}_{side}"
        cur = table.get(name)
        if cur is None or sign * (val - cur) > 0:
            table[name] = val
            self.witnesses[key] = t
            self.optimum_counts[key] = 1
        elif val == cur:
            self.optimum_counts[key] += 1

    def add(self, t: Tree, values: dict[str, int]) -> None:
        if self.first is None:
            self.first = t
        self.count += 1
        for name in TRACKED:
            self._offer(name, "min", values[name], t)
            self._offer(name, "max", values[name], t)

    def value(self, key: str) -> int | None:
        """Extremum by name, e.g. ``"irr_min"`` or ``"sigma_max"``."""
        name, _, side = key.rpartition("_")
        return (self.lo if side == "min" else self.hi).get(name)

    @property
    def irr_min(self):
        return self.lo.get("irr")

    @property
    def irr_max(self):
        return self.hi.get("irr")

    @property
    def sigma_min(self):
        return self.lo.get("sigma")

    @property
    def sigma_max(self):
        return self.hi.get("sigma")


def _tracked_values(t: Tree) -> dict[str, int]:
    b = compute_bundle(t)
    return {"irr": b.irr, "sigma": b.sigma, "irr_t": b.irr_t}


def class_extrema(n: int, trees: Sequence[Tree] | None = None) -> dict[int, CellExtrema]:
    """Map ``Δ -> CellExtrema`` for every maximum degree realized at order ``n``."""
    cells: dict[int, CellExtrema] = {}
    for t in (free_trees(n) if trees is None else trees):
        cell = cells.get(t.max_degree)
        if cell is None:
            cell = cells[t.max_degree] = CellExtrema(n, t.max_degree)
        cell.add(t, _tracked_values(t))
    return dict(sorted(cells.items()))


def order_extrema(n: int, trees: Sequence[Tree] | None = None) -> CellExtrema:
    """Extrema over all trees of order ``n``."""
    cell = CellExtrema(n, None)
    for t in (free_trees(n) if trees is None else trees):
        cell.add(t, _tracked_values(t))
    return cell
