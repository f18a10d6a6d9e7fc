"""Registry of checkable bounds and identities, and the engine that evaluates them.

Every claim is a predicate over one kind of domain instance: a single tree,
a tree class (all trees of order ``n``, or the ``(n, Δ)`` cell), a pair of
trees, a parametrised family member, or a tuple of degree sequences.  A
verdict counts holds / fails / vacuous instances over the configured order
range and keeps the first counterexamples in deterministic stream order.
"""

from __future__ import annotations

import csv
import io
import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate, product
from typing import Any, Callable, Iterator

from treeirr import __version__
from treeirr.construct import caterpillar, fibonacci_caterpillar, star
from treeirr.degseq import DegreeSequence, fibonacci_numbers, majorizes, realize_tree
from treeirr.enumeration import (
    DEFAULT_EXHAUSTIVE_LIMIT,
    CellExtrema,
    class_extrema,
    free_trees,
    order_extrema,
)
from treeirr.graph_core import Tree, canonical_code, degree_sequence, parse_graph6, write_graph6
from treeirr.indices import (
    IndexBundle,
    albertson,
    caterpillar_irr_formula,
    compute_bundle,
    general_albertson,
    mainalb2_formula,
    sigma,
    sigma_t,
)

TOL = 1e-9
MAX_RECORDED = 10

HOLD, FAIL, VACUOUS = "hold", "fail", "vacuous"


# -- evaluation plumbing ---------------------------------------------------

@dataclass
class Outcome:
    status: str
    values: dict = field(default_factory=dict)
    free_vars: dict = field(default_factory=dict)
    witness: dict | None = None
    note: str | None = None
    tags: tuple[str, ...] = ()


@dataclass
class Instance:
    payload: Any
    witness: dict
    weight: int = 1
    free_vars: dict = field(default_factory=dict)


def _verdict(ok: bool, **values) -> Outcome:
    return Outcome(HOLD if ok else FAIL, values)


def _vacuous(note: str) -> Outcome:
    return Outcome(VACUOUS, note=note)


def _le(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return a <= b + TOL * max(1.0, abs(b))
    return a <= b


def _lt(a, b) -> bool:
    if isinstance(a, float) or isinstance(b, float):
        return a < b - TOL * max(1.0, abs(b))
    return a < b


def _g6(t: Tree) -> str:
    return write_graph6(t)


class EvaluationContext:
    """Lazily enumerated trees and exhaustive class extrema, cached per order."""

    def __init__(self, n_min: int, n_max: int, seed: int = 0):
        self.n_min, self.n_max, self.seed = n_min, n_max, seed
        self._trees: dict[int, list[Tree]] = {}
        self._cells: dict[int, dict[int, CellExtrema]] = {}
        self._orders: dict[int, CellExtrema] = {}
        self._bundles: dict[Tree, IndexBundle] = {}

    @property
    def orders(self) -> range:
        return range(self.n_min, self.n_max + 1)

    def trees(self, n: int) -> list[Tree]:
        if n not in self._trees:
            self._trees[n] = list(free_trees(n)) if n >= 1 else []
        return self._trees[n]

    def cells(self, n: int) -> dict[int, CellExtrema]:
        if n not in self._cells:
            self._cells[n] = class_extrema(n, self.trees(n))
        return self._cells[n]

    def cell(self, n: int, max_degree: int) -> CellExtrema | None:
        return self.cells(n).get(max_degree) if n >= 1 else None

    def cell_trees(self, n: int, max_degree: int) -> list[Tree]:
        return [t for t in self.trees(n) if t.max_degree == max_degree]

    def order(self, n: int) -> CellExtrema:
        if n not in self._orders:
            self._orders[n] = order_extrema(n, self.trees(n))
        return self._orders[n]

    def bundle(self, t: Tree) -> IndexBundle:
        b = self._bundles.get(t)
        if b is None:
            b = self._bundles[t] = compute_bundle(t)
        return b


@dataclass(frozen=True)
class Claim:
    id: str
    statement: str
    paper_ref: str
    quote: str
    domain: str
    strictness: str
    free_vars: dict
    instances: Callable[[EvaluationContext], Iterator[Instance]]
    check: Callable[[EvaluationContext, Any], Outcome]
    from_witness: Callable[[dict], Any]
    notes: tuple[str, ...] = ()
    reported: Callable[[EvaluationContext], dict] | None = None


# -- domains ---------------------------------------------------------------

def _tree_instances(ctx: EvaluationContext) -> Iterator[Instance]:
    for n in ctx.orders:
        for t in ctx.trees(n):
            yield Instance(t, {"witness_g6": _g6(t)})


def _order_instances(ctx: EvaluationContext) -> Iterator[Instance]:
    for n in ctx.orders:
        yield Instance(n, {"witness_g6": _g6(ctx.trees(n)[0])}, free_vars={"n": n})


def _cell_instances(ctx: EvaluationContext) -> Iterator[Instance]:
    for n in ctx.orders:
        for delta, cell in ctx.cells(n).items():
            yield Instance((n, delta), {"witness_g6": _g6(cell.first)},
                           free_vars={"n": n, "max_degree": delta})


def _pair_instances(ctx: EvaluationContext) -> Iterator[Instance]:
    # T2 has one vertex fewer and maximum degree one larger; the predicate only
    # reads the two (n, Δ) cells, so each T1 stands for all partners in its cell
    for n1 in ctx.orders:
        n2 = n1 - 1
        if n2 < 2:
            continue
        for t1 in ctx.trees(n1):
            c2 = ctx.cell(n2, t1.max_degree + 1)
            if c2 is None:
                continue
            yield Instance((t1, c2.first), {"witness_pair_g6": [_g6(t1), _g6(c2.first)]},
                           weight=c2.count)


def _tree_from_witness(w: dict) -> Tree:
    return Tree.from_graph(parse_graph6(w["witness_g6"]))


def _order_from_witness(w: dict) -> int:
    return _tree_from_witness(w).n


def _cell_from_witness(w: dict) -> tuple[int, int]:
    t = _tree_from_witness(w)
    return t.n, t.max_degree


def _pair_from_witness(w: dict) -> tuple[Tree, Tree]:
    a, b = w["witness_pair_g6"]
    return Tree.from_graph(parse_graph6(a)), Tree.from_graph(parse_graph6(b))


# -- helpers shared by several claims -------------------------------------

def _alphas(n: int, delta: int) -> list[float] | None:
    if delta * delta - 1 == 0:
        return None
    own = min(1.0, max(0.0, n / (delta * delta - 1)))
    return [0, 1, own]


def _pow2(alpha) -> int | float:
    return 2 ** alpha if isinstance(alpha, int) else 2.0 ** alpha


def _lambdas(t: Tree) -> list[int]:
    """Degrees >= 3 of every vertex except one maximum-degree vertex."""
    degs = list(t.degrees)
    v0 = degs.index(max(degs))
    return sorted({d for v, d in enumerate(degs) if v != v0 and d >= 3})


def _ceil_log2_minus_one(k: int) -> int:
    """``ceil(log2(k) - 1)`` for an integer ``k >= 1``."""
    return (k - 1).bit_length() - 1


def _fib(n: int, convention: str) -> Callable[[int], int]:
    seq = fibonacci_numbers(n, convention)
    return lambda i: seq[i - 1]


def fibonacci_irr_formula(n: int, convention: str) -> int:
    """Closed form claimed for irr of the Fibonacci caterpillar, evaluated as printed."""
    F = _fib(n, convention)
    return (sum(F(i) for i in range(3, n))
            + sum((F(i) - 2) * abs(F(i) - 1) for i in range(5, n))
            + abs(F(4) - 1) + (F(n) - 1) * abs(F(n) - 1) + 2)


def fibonacci_sigma_formula(n: int, convention: str) -> int:
    """Squared-difference analogue derived for sigma of the Fibonacci caterpillar."""
    F = _fib(n, convention)
    return (sum(F(i) ** 2 for i in range(3, n))
            + sum((F(i) - 2) * (F(i) - 1) ** 2 for i in range(5, n))
            + (F(4) - 1) ** 2 + (F(n) - 1) * (F(n) - 1) ** 2 + 2)


def _fib_realized(n: int, convention: str) -> Tree:
    spine = fibonacci_numbers(n, convention)[2:]
    leaves = sum(spine) - 2 * (len(spine) - 1)
    return realize_tree(DegreeSequence(spine + [1] * leaves))


def _family_fib_instances(ctx: EvaluationContext) -> Iterator[Instance]:
    for n in range(4, 11):
        for conv in ("paper", "standard"):
            t = fibonacci_caterpillar(n, conv)
            yield Instance((n, conv), {"witness_g6": _g6(t)},
                           free_vars={"n": n, "convention": conv})


def _fib_from_witness(w: dict, fv: dict) -> tuple[int, str]:
    return fv["n"], fv["convention"]


# -- per-tree checks -------------------------------------------------------

def _c1(ctx, t):
    b = ctx.bundle(t)
    right = Fraction(b.n * b.n * b.irr, 4)
    return _verdict(b.irr_t <= right, left=b.irr_t, right=right)


def _c2(ctx, t):
    b = ctx.bundle(t)
    right = (b.n - 2) * b.irr
    return _verdict(b.irr_t <= right, left=b.irr_t, right=right)


def _c3(ctx, t):
    b = ctx.bundle(t)
    if b.m == 0:
        return _vacuous("no edges")
    right = b.forgotten - 2 * b.m2
    regular = b.max_degree == b.min_degree
    tags = []
    for p, q in ((2.0, 2.0), (3.0, 1.5)):
        left = general_albertson(t, p) * general_albertson(t, q)
        if not _le(right, left):
            out = _verdict(False, left=left, right=right)
            out.free_vars = {"p": p, "q": q}
            return out
        if p != 2.0 and not regular and abs(left - right) <= TOL * max(1.0, abs(right)):
            tags.append("equality_at_p3_on_irregular_tree")
    out = _verdict(True, left=None, right=right)
    out.tags = tuple(tags)
    return out


def _c10(ctx, t):
    if t.n < 2:
        return _vacuous("single vertex")
    left = mainalb2_formula(degree_sequence(t))
    right = ctx.bundle(t).irr
    return _verdict(left == right, left=left, right=right)


def _alpha_bound_check(ctx, t, value_key: str, base: Callable[[IndexBundle], int]):
    b = ctx.bundle(t)
    alphas = _alphas(b.n, b.max_degree)
    if alphas is None:
        return _vacuous("alpha = n/(Δ²-1) undefined for Δ = 1")
    value = getattr(b, value_key)
    for alpha in alphas:
        rhs = base(b) * _pow2(alpha) + b.max_degree ** 2 - b.n * b.min_degree
        if not _le(value, rhs):
            out = _verdict(False, left=value, right=rhs)
            out.free_vars = {"alpha": alpha}
            return out
    return _verdict(True, left=value)


def _c17(ctx, t):
    return _alpha_bound_check(ctx, t, "irr", lambda b: (3 * b.n ** 2 - 10 * b.n) // 2)


def _c26(ctx, t):
    return _alpha_bound_check(ctx, t, "sigma", lambda b: (3 * b.n ** 4 - 2 * b.m * b.n) // b.max_degree)


def _radical_lower(ctx, t, value_key: str, numerator: Callable[[IndexBundle], int]):
    b = ctx.bundle(t)
    delta = b.max_degree
    if delta < 2:
        return _vacuous("Δ(Δ-1) = 0")
    radicand = Fraction(numerator(b), delta * (delta - 1))
    if radicand < 0:
        return _vacuous("negative radicand")
    value = getattr(b, value_key)
    return _verdict(value * value >= radicand, left=value, right=math.sqrt(radicand))


def _c18(ctx, t):
    return _radical_lower(ctx, t, "irr", lambda b: b.forgotten + 2 * b.m2 - b.n * b.max_degree)


def _c27(ctx, t):
    return _radical_lower(ctx, t, "sigma",
                          lambda b: 5 * b.forgotten + 4 * b.m2 - b.n * b.max_degree ** 2)


def _lambda_check(ctx, t, value_key: str, lower, upper):
    b = ctx.bundle(t)
    lams = _lambdas(t)
    if not lams:
        return _vacuous("no vertex other than v0 has degree >= 3")
    value = getattr(b, value_key)
    for lam in lams:
        lo, hi = lower(b, lam), upper(b, lam)
        if not lo <= value <= hi:
            out = _verdict(False, left=lo, middle=value, right=hi)
            out.free_vars = {"lambda": lam}
            return out
    return _verdict(True, middle=value)


def _c19(ctx, t):
    return _lambda_check(ctx, t, "irr", lambda b, lam: 2 ** lam,
                         lambda b, lam: (b.n - 1) * (b.n - 2) ** lam)


def _c28(ctx, t):
    return _lambda_check(ctx, t, "sigma", lambda b, lam: (3 * b.min_degree) ** lam,
                         lambda b, lam: (b.max_degree - 1) * (b.n - 2) ** lam)


def _c30(ctx, t):
    d = t.degrees
    n = t.n
    pairwise = sum((d[u] - d[v]) ** 2 for u in range(n) for v in range(u + 1, n))
    left = sigma_t(t)
    return _verdict(left == pairwise, left=left, right=pairwise)


def _c31(ctx, t):
    b = ctx.bundle(t)
    sq = b.irr * b.irr
    return _verdict(b.sigma <= sq <= b.m * b.sigma, left=b.sigma, middle=sq, right=b.m * b.sigma)


# -- per-sequence checks ---------------------------------------------------

def _c4_instances(ctx):
    for n in ctx.orders:
        seen = set()
        for t in ctx.trees(n):
            ds = degree_sequence(t).values
            if ds not in seen:
                seen.add(ds)
                yield Instance(ds, {"witness_sequences": [list(ds)]})


def _c4(ctx, ds):
    n = len(ds)
    for p in (2, 3):
        left = math.fsum(d ** p for d in ds) ** (1.0 / p)
        right = (n - 1) ** (1.0 - 1.0 / p) * math.fsum(d ** (1.0 / p) for d in ds)
        if not _le(left, right):
            out = _verdict(False, left=left, right=right)
            out.free_vars = {"p": p}
            return out
    return _verdict(True)


def nonincreasing_sequences(length: int, max_value: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, cap):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for v in range(cap, -1, -1):
            rec(prefix + [v], v)

    rec([], max_value)
    return out


def majorization_pairs(length: int = 4, max_value: int = 4) -> list[tuple[tuple, tuple]]:
    """All ``(D, B)`` with ``B`` majorized by ``D``, over non-increasing sequences."""
    seqs = nonincreasing_sequences(length, max_value)
    return [(d, b) for d in seqs for b in seqs if sum(d) == sum(b) and majorizes(d, b)]


def _random_majorized_pair(rng: random.Random, length: int = 4, max_value: int = 9):
    d = sorted((rng.randint(0, max_value) for _ in range(length)), reverse=True)
    b = d[:]
    for _ in range(rng.randint(0, 3 * length)):
        i, j = sorted(rng.sample(range(length), 2))
        if b[i] - b[j] >= 2:
            # a transfer from a larger to a smaller entry keeps B below D
            b[i] -= 1
            b[j] += 1
            b.sort(reverse=True)
    return tuple(d), tuple(b)


C29_RANDOM_PAIRS = 10_000


def _c29_instances(ctx):
    pairs = majorization_pairs()
    for (x, a), (y, b) in product(pairs, repeat=2):
        yield Instance((x, a, y, b), {"witness_sequences": [list(x), list(a), list(y), list(b)]})
    rng = random.Random(f"{ctx.seed}:C29")
    for _ in range(C29_RANDOM_PAIRS):
        x, a = _random_majorized_pair(rng)
        y, b = _random_majorized_pair(rng)
        yield Instance((x, a, y, b), {"witness_sequences": [list(x), list(a), list(y), list(b)]})


def _c29(ctx, payload):
    x, a, y, b = payload
    if not (majorizes(x, a) and majorizes(y, b)):
        return _vacuous("hypothesis B ⪯ D not met")
    small = tuple(sorted((p * q for p, q in zip(a, b)), reverse=True))
    big = tuple(sorted((p * q for p, q in zip(x, y)), reverse=True))
    out = _verdict(majorizes(big, small), left=list(small), right=list(big))
    if out.status == FAIL:
        tags = []
        if sum(small) != sum(big):
            tags.append("unequal_totals")
        if any(p > q for p, q in zip(accumulate(small), accumulate(big))):
            tags.append("prefix_violation")
        out.tags = tuple(tags)
    return out



# -- per-family checks -----------------------------------------------------

def _c7_instances(ctx):
    for k in range(2, 6):
        for spine in product(range(2, 6), repeat=k):
            yield Instance(spine, {"witness_g6": _g6(caterpillar(spine))},
                           free_vars={"spine": list(spine)})


def _c7(ctx, spine):
    left = caterpillar_irr_formula(spine)
    right = albertson(caterpillar(spine))
    return _verdict(left == right, left=left, right=right)


def _c11(ctx, params):
    n, conv = params
    left = fibonacci_irr_formula(n, conv)
    right = albertson(fibonacci_caterpillar(n, conv))
    out = _verdict(left == right, left=left, right=right)
    out.free_vars = {"realize_tree_irr": albertson(_fib_realized(n, conv))}
    return out


def _c20(ctx, params):
    n, conv = params
    left = fibonacci_sigma_formula(n, conv)
    right = sigma(fibonacci_caterpillar(n, conv))
    out = _verdict(left == right, left=left, right=right)
    out.free_vars = {"realize_tree_sigma": sigma(_fib_realized(n, conv)),
                     "statement_display_value": fibonacci_irr_formula(n, conv)}
    return out


REPORTED_FIB_IRR = 12319
REPORTED_FIB_TELESCOPE = 143


def _c11_reported(ctx) -> dict:
    rows = {}
    for conv in ("paper", "standard"):
        F = _fib(10, conv)
        direct = albertson(fibonacci_caterpillar(10, conv))
        formula = fibonacci_irr_formula(10, conv)
        rows[conv] = {
            "computed_direct": direct,
            "computed_formula": formula,
            "match_direct": direct == REPORTED_FIB_IRR,
            "match_formula": formula == REPORTED_FIB_IRR,
            "sum_F3_to_F9_plus_2": sum(F(i) for i in range(3, 10)) + 2,
            "sum_F3_to_F10_plus_2": sum(F(i) for i in range(3, 11)) + 2,
            "spine_imbalance": sum(abs(F(i) - F(i + 1)) for i in range(3, 10)),
        }
    return {
        "n": 10,
        "reported_value": REPORTED_FIB_IRR,
        "reported_telescoping_value": REPORTED_FIB_TELESCOPE,
        "computed_value": rows["paper"]["computed_direct"],
        "match": rows["paper"]["computed_direct"] == REPORTED_FIB_IRR,
        "conventions": rows,
    }


# -- per-order checks ------------------------------------------------------

def _c5(ctx, n):
    if n < 4:
        return _vacuous("stated for n >= 4")
    o = ctx.order(n)
    hi, lo = o.value("irr_t_max"), o.value("irr_t_min")
    if hi != (n - 1) * (n - 2):
        out = _verdict(False, left=hi, right=(n - 1) * (n - 2))
        out.witness = {"witness_g6": _g6(o.witnesses["irr_t_max"])}
        out.note = "maximum differs"
        return out
    if lo != 2 * (n - 2):
        out = _verdict(False, left=lo, right=2 * (n - 2))
        out.witness = {"witness_g6": _g6(o.witnesses["irr_t_min"])}
        out.note = "minimum differs"
        return out
    return _verdict(True, left=hi, right=lo)


def _c8(ctx, n):
    if n < 2:
        return _vacuous("no edges")
    o = ctx.order(n)
    best, count = o.irr_max, o.optimum_counts["irr_max"]
    w = o.witnesses["irr_max"]
    target = (n - 1) * (n - 2)
    is_star = canonical_code(w) == canonical_code(star(n))
    out = _verdict(best == target and count == 1 and is_star, left=best, right=target)
    out.free_vars = {"n_optimal": count}
    out.witness = {"witness_g6": _g6(w)}
    return out


def _c9(ctx, n):
    o = ctx.order(n)
    if n >= 3:
        out = _verdict(o.sigma_max == (n - 1) * (n - 2), left=o.sigma_max, right=(n - 1) * (n - 2))
        out.witness = {"witness_g6": _g6(o.witnesses["sigma_max"])}
        return out
    if n == 2:
        return _verdict(o.sigma_min == 0, left=o.sigma_min, right=0)
    return _vacuous("n = 1")


# -- per-cell checks -------------------------------------------------------

def _cell_setup(ctx, payload):
    n, delta = payload
    cell = ctx.cell(n, delta)
    if cell is None:
        raise LookupError(f"no tree of order {n} has maximum degree {delta}")
    return n, n - 1, delta, cell.first.min_degree, cell


def _sandwich(lo, mid, hi, strict_left: bool, cell: CellExtrema, index: str) -> Outcome:
    ok_left = _lt(lo, mid) if strict_left else _le(lo, mid)
    ok_right = _le(mid, hi)
    out = _verdict(ok_left and ok_right, left=lo, middle=mid, right=hi)
    if not ok_left:
        out.witness = {"witness_g6": _g6(cell.witnesses[f"{index}_min"])}
        out.note = "left inequality violated"
    elif not ok_right:
        out.witness = {"witness_g6": _g6(cell.witnesses[f"{index}_max"])}
        out.note = "right inequality violated"
    return out


def _c6(ctx, payload):
    n, m, delta, _, cell = _cell_setup(ctx, payload)
    t = cell.witnesses["sigma_max"]
    dmin = t.min_degree
    if delta <= dmin:
        return _vacuous("requires δ < Δ")
    s = cell.sigma_max
    r1 = Fraction(dmin, delta + 1) * (delta - dmin) ** 3 * n
    r2 = Fraction((delta - 1) ** 3 * n, delta + 1)
    w = {"witness_g6": _g6(t)}
    if not s > r1:
        out = _verdict(False, left=s, right=r1)
        out.note, out.witness = "first inequality violated", w
        return out
    if not s > r2:
        out = _verdict(False, left=s, right=r2)
        out.note, out.witness = "second inequality violated", w
        return out
    return _verdict(True, left=s, right=max(r1, r2))


def _c12(ctx, payload):
    n, m, delta, dmin, cell = _cell_setup(ctx, payload)
    mid = Fraction(2 * n * dmin * (2 * (n * m) ** 3 + 2 * m * delta ** 2),
                   8 * n ** 4 * delta + 8 * m ** 3 * dmin * delta + delta ** 2 * (delta - 1))
    return _sandwich(cell.irr_min, mid, cell.irr_max, True, cell, "irr")


def _two_displays(ctx, payload, index: str):
    n, m, delta, dmin, cell = _cell_setup(ctx, payload)
    if delta == 1:
        return _vacuous("6δ(Δ-1) = 0")
    low = cell.irr_min if index == "irr" else cell.sigma_min
    w = {"witness_g6": _g6(cell.witnesses[f"{index}_min"])}
    first = Fraction((delta - 2) ** 3, n * delta - dmin)
    if not low >= first:
        out = _verdict(False, left=low, right=first)
        out.note, out.witness = "first display (lower bound) violated", w
        return out
    second = (Fraction(dmin, delta + 1) * n * delta ** 2
              + Fraction(delta ** 2 * (delta - dmin), 6 * dmin * (delta - 1)))
    if not low <= second:
        out = _verdict(False, left=low, right=second)
        out.note, out.witness = "second display (upper bound) violated", w
        return out
    return _verdict(True, left=first, middle=low, right=second)


def _c13(ctx, payload):
    return _two_displays(ctx, payload, "irr")


def _c22(ctx, payload):
    return _two_displays(ctx, payload, "sigma")


def _c14(ctx, payload):
    n, m, delta, _, cell = _cell_setup(ctx, payload)
    bound = _ceil_log2_minus_one(n + 1) + 2 * delta - 1
    out = _verdict(cell.irr_min >= bound, left=cell.irr_min, right=bound)
    out.witness = {"witness_g6": _g6(cell.witnesses["irr_min"])}
    return out


def _c23(ctx, payload):
    n, m, delta, _, cell = _cell_setup(ctx, payload)
    bound = _ceil_log2_minus_one(n * n + 1) + 2 * delta - 1
    out = _verdict(cell.sigma_min >= bound, left=cell.sigma_min, right=bound)
    out.witness = {"witness_g6": _g6(cell.witnesses["sigma_min"])}
    return out


def _mutual(ctx, payload, index: str):
    n, m, delta, _, cell = _cell_setup(ctx, payload)
    if index == "irr":
        lo, hi = cell.irr_min, cell.irr_max
        r1, r2 = delta * (lo - n), delta * (hi - n)
    else:
        lo, hi = cell.sigma_min, cell.sigma_max
        r1, r2 = Fraction(delta * (n * m - lo), 4), Fraction(delta * (n * m - hi), 4)
    if not hi < r1:
        out = _verdict(False, left=hi, right=r1)
        out.note = "first inequality (on the maximum) violated"
        out.witness = {"witness_g6": _g6(cell.witnesses[f"{index}_max"])}
        return out
    if not lo < r2:
        out = _verdict(False, left=lo, right=r2)
        out.note = "second inequality (on the minimum) violated"
        out.witness = {"witness_g6": _g6(cell.witnesses[f"{index}_min"])}
        return out
    return _verdict(True, left=hi, right=r1)


def _c16(ctx, payload):
    return _mutual(ctx, payload, "irr")


def _c25(ctx, payload):
    return _mutual(ctx, payload, "sigma")


def sigma_log_binomial_middle(n: int, m: int, delta: int, dmin: int, m1: int) -> float | None:
    """Middle expression of the (n, Δ, M1) sigma sandwich; None where undefined."""
    binom = math.comb(m1, 2 * n) if 2 * n <= m1 else 0
    if binom <= 0:
        return None
    den = (delta ** 2 - 2) * (delta - 1) ** 2 + 2 * n * delta * math.sqrt(m * delta ** 2)
    if den <= 0:
        return None
    num = m * n * (delta ** 2 + 2 * delta) + 2 * m * dmin * delta
    return n * num / den * (n + 2) * math.log(binom)


def _c21(ctx, payload):
    n, m, delta, dmin, cell = _cell_setup(ctx, payload)
    defined = 0
    for t in ctx.cell_trees(n, delta):
        mid = sigma_log_binomial_middle(n, m, delta, dmin, ctx.bundle(t).m1)
        if mid is None:
            continue
        defined += 1
        ok_left, ok_right = _le(cell.sigma_min, mid), _le(mid, cell.sigma_max)
        if not (ok_left and ok_right):
            out = _verdict(False, left=cell.sigma_min, middle=mid, right=cell.sigma_max)
            out.witness = {"witness_g6": _g6(t)}
            out.free_vars = {"m1": ctx.bundle(t).m1}
            out.note = "left inequality violated" if not ok_left else "right inequality violated"
            return out
    if not defined:
        return _vacuous("log C(M1, 2n) undefined for every tree in the cell")
    return _verdict(True, left=cell.sigma_min, right=cell.sigma_max)


# -- per-pair checks -------------------------------------------------------

def _pair_setup(ctx, payload):
    t1, t2 = payload
    n1, n2, d1, d2 = t1.n, t2.n, t1.max_degree, t2.max_degree
    if n2 != n1 - 1 or d2 != d1 + 1:
        return None
    return n1, n2, n1 - 1, d1, d2, ctx.cell(n1, d1), ctx.cell(n2, d2)


def two_tree_irr_middle(n1: int, n2: int, m1: int, d1: int, d2: int) -> Fraction:
    return Fraction(5 * (n1 * d2 ** 3 + n2 * d1 ** 4 + m1 * d2 ** 2), d1 * (d1 + d2) ** 2)


def two_tree_sigma_middle(n1: int, n2: int, m1: int, d1: int, d2: int) -> Fraction:
    return Fraction(n1 * (d1 - 1) ** 2 * (n1 * d2 ** 3 + n2 * d1 ** 4 + m1 * d2 ** 2),
                    d1 * (d2 - 1) ** 2)


def _pair_check(ctx, payload, index: str):
    setup = _pair_setup(ctx, payload)
    if setup is None:
        return _vacuous("pair does not satisfy n2 = n1 - 1, Δ2 = Δ1 + 1")
    n1, n2, m1, d1, d2, c1, c2 = setup
    if index == "irr":
        lo, hi = c1.irr_min + c2.irr_min, c1.irr_max + c2.irr_max
        mid = two_tree_irr_middle(n1, n2, m1, d1, d2)
    else:
        lo, hi = c1.sigma_min + c2.sigma_min, c1.sigma_max + c2.sigma_max
        mid = two_tree_sigma_middle(n1, n2, m1, d1, d2)
    out = _verdict(lo <= mid <= hi, left=lo, middle=mid, right=hi)
    if out.status == FAIL:
        out.note = "left inequality violated" if not lo <= mid else "right inequality violated"
    return out


def _c15(ctx, payload):
    return _pair_check(ctx, payload, "irr")


def _c24(ctx, payload):
    return _pair_check(ctx, payload, "sigma")


def _c15_reported(ctx) -> dict:
    n1, m1, d1, n2, d2 = 38, 37, 12, 37, 13
    mid = two_tree_irr_middle(n1, n2, m1, d1, d2)
    return {
        "n1": n1, "m1": m1, "max_degree_1": d1, "n2": n2, "m2": 36, "max_degree_2": d2,
        "reported_irr_min": 562,
        "reported_irr_max": 612,
        "computed_middle": float(mid),
        "middle_within_reported": 562 <= mid <= 612,
    }


# -- registry --------------------------------------------------------------

_CELL_NOTE = ("class extrema are taken over all trees with the same order n and maximum degree Δ; "
              "the statement does not name the class, so this (n, Δ)-cell reading is an interpretation")
_PAIR_NOTE = ("extrema of the pair are sums of the two trees' (n, Δ)-cell extrema; the qualifiers on "
              "the two degree sequences are not used as filters")
_ALPHA_NOTE = "holds only if the bound holds for every α in {0, 1, clamp(n/(Δ²-1), 0, 1)}"
_LAMBDA_NOTE = ("λ ranges over degrees >= 3 of all vertices except one maximum-degree vertex v0; "
                "trees without such a vertex are vacuous")

_TREE = (_tree_instances, _tree_from_witness)
_ORDER = (_order_instances, _order_from_witness)
_CELL = (_cell_instances, _cell_from_witness)
_PAIR = (_pair_instances, _pair_from_witness)


def _claim(cid, statement, ref, quote, domain, strictness, kinds, check, free_vars=None,
           notes=(), reported=None) -> Claim:
    instances, from_witness = kinds
    return Claim(cid, statement, ref, quote, domain, strictness, free_vars or {},
                 instances, check, from_witness, tuple(notes), reported)


def _seq_from_witness(w: dict):
    seqs = [tuple(s) for s in w["witness_sequences"]]
    return seqs[0] if len(seqs) == 1 else tuple(seqs)


_REGISTRY: list[Claim] = [
    _claim("C1", "Total irregularity is at most n²/4 times the Albertson index.",
           "total irregularity bound, general graphs", "irr_T(G) <= (n^2/4) irr(G)",
           "per_tree", "non_strict", _TREE, _c1),
    _claim("C2", "For trees, total irregularity is at most (n-2) times the Albertson index.",
           "total irregularity bound, trees", "irr_T(T) <= (n-2) irr(T)",
           "per_tree", "non_strict", _TREE, _c2),
    _claim("C3", "irr_p · irr_q >= F - 2M2 whenever 1/p + 1/q = 1.",
           "theorem on the general Albertson index",
           "irr_p(G) irr_q(G) >= F - 2 M2, 1/p + 1/q = 1, equality iff p = 2 or G regular",
           "per_tree", "non_strict", _TREE, _c3,
           free_vars={"(p, q)": [[2, 2], [3, 1.5]]},
           notes=["the verdict tests the inequality; equality cases at p = 3 on irregular trees "
                  "are tallied as a tag because they contradict the 'only if' clause"]),
    _claim("C4", "Power-sum inequality for degree sequences with entries at most n-1.",
           "power-sum inequality for degree sequences",
           "(sum d_i^p)^(1/p) <= (n-1)^(1-1/p) sum d_i^(1/p), p >= 1",
           "per_sequence", "non_strict", (_c4_instances, _seq_from_witness), _c4,
           free_vars={"p": [2, 3]},
           notes=["domain: distinct degree sequences of all trees in the order range"]),
    _claim("C5", "Over trees of order n >= 4, max irr_t = (n-1)(n-2) and min irr_t = 2(n-2).",
           "theorem on total Albertson extrema of trees",
           "irr_t,max = (n-1)(n-2), irr_t,min = 2(n-2)",
           "per_class", "identity", _ORDER, _c5, notes=["class: all trees of order n"]),
    _claim("C6", "The σ-maximal tree of each (n, Δ) class exceeds both lower expressions.",
           "proposition on σ for maximally σ-irregular graphs",
           "sigma(G) > δ/(Δ+1) (Δ-δ)^3 n,  sigma(G) > (Δ-1)^3 n/(Δ+1)",
           "per_class", "strict", _CELL, _c6,
           notes=["evaluated on the σ-maximal tree of each (n, Δ) cell", _CELL_NOTE]),
    _claim("C7", "Closed-form caterpillar Albertson index equals the direct value.",
           "caterpillar formula",
           "irr = (d_k-1)^2 + (d_1-1)^2 + sum_{i=2}^{k-1}(d_i-1)(d_i-2) + sum |d_i - d_{i+1}|",
           "per_family", "identity",
           (_c7_instances, None), _c7, free_vars={"spine": "all lists, length 2..5, entries 2..5"},
           notes=["domain is fixed and independent of the order range"]),
    _claim("C8", "The star is the unique tree of order n maximising irr, with irr = (n-1)(n-2).",
           "lemma on the star", "irr(S_n) = (n-2)(n-1), S_n unique maximiser",
           "per_class", "identity", _ORDER, _c8, notes=["class: all trees of order n"]),
    _claim("C9", "σ_max over trees of order n >= 3 equals (n-1)(n-2); σ_min = 0 for n = 2.",
           "lemma on σ extrema of trees", "sigma_max(T) = (n-1)(n-2), n >= 3; sigma_min = 0, n = 2",
           "per_class", "identity", _ORDER, _c9, notes=["class: all trees of order n"]),
    _claim("C10", "Degree-sequence closed form for irr of a tree equals the direct value.",
           "theorem giving irr of a tree from its degree sequence",
           "irr(T) = d_1^2 + d_n^2 + sum_{2..n-1} d_i^2 + sum_{2..n-1} d_i + d_n - d_1 - 2n - 2, "
           "d_1 <= ... <= d_n",
           "per_tree", "identity", _TREE, _c10),
    _claim("C11", "Fibonacci-caterpillar closed form for irr equals the direct value.",
           "Fibonacci degree-sequence hypothesis (Albertson)",
           "irr(T) = sum_{3}^{n-1} F_i + sum_{5}^{n-1} (F_i-2)|F_i-1| + |F_4-1| + (F_n-1)|F_n-1| + 2",
           "per_family", "identity", (_family_fib_instances, None), _c11,
           free_vars={"n": "4..10", "convention": ["paper", "standard"]},
           notes=["the tree is the caterpillar with spine F_3..F_n in index order; "
                  "realize_tree of the same degrees is reported alongside"],
           reported=_c11_reported),
    _claim("C12", "irr_min < 2nδ(2(nm)^3 + 2mΔ^2)/(8n^4Δ + 8m^3δΔ + Δ^2(Δ-1)) <= irr_max.",
           "proposition bounding irr extrema by n, m, Δ, δ",
           "irr_min < 2nδ (2(nm)^3 + 2mΔ^2)/(8n^4 Δ + 8m^3 δΔ + Δ^2(Δ-1)) <= irr_max",
           "per_class", "mixed", _CELL, _c12, notes=[_CELL_NOTE]),
    _claim("C13", "irr_min >= (Δ-2)^3/(nΔ-δ) and irr_min <= δnΔ²/(Δ+1) + Δ²(Δ-δ)/(6δ(Δ-1)).",
           "proposition with two displays on irr_min",
           "irr_min >= (Δ-2)^3/(nΔ-δ);  irr_min <= δ/(Δ+1) nΔ^2 + Δ^2(Δ-δ)/(6δ(Δ-1))",
           "per_class", "non_strict", _CELL, _c13, notes=[_CELL_NOTE]),
    _claim("C14", "irr_min >= ceil(log2(n+1) - 1) + 2Δ - 1.",
           "proposition on irr_min via log2", "irr_min >= ceil(log2(n+1) - 1) + 2Δ(T) - 1",
           "per_class", "non_strict", _CELL, _c14, notes=[_CELL_NOTE]),
    _claim("C15", "Two-tree sandwich with factor 5 around the extremal irr sums.",
           "lemma on two trees (Albertson)",
           "irr_min <= 5 (n1 Δ2^3 + n2 Δ1^4 + m1 Δ2^2)/(Δ1 (Δ1+Δ2)^2) <= irr_max",
           "per_pair", "non_strict", _PAIR, _c15,
           free_vars={"pairing": "n2 = n1 - 1, m2 = m1 - 1, Δ2 = Δ1 + 1"},
           notes=[_PAIR_NOTE, _CELL_NOTE], reported=_c15_reported),
    _claim("C16", "irr_max < Δ(irr_min - n) and irr_min < Δ(irr_max - n).",
           "lemma relating irr_max and irr_min",
           "irr_max < Δ(T)(irr_min - n);  irr_min < Δ(T)(irr_max - n)",
           "per_class", "strict", _CELL, _c16,
           notes=["the statement attributes both extrema to one tree T; " + _CELL_NOTE]),
    _claim("C17", "irr <= floor((3n²-10n)/2)·2^α + Δ² - nδ for 0 <= α <= 1.",
           "lemma with scaling factor α (Albertson)",
           "irr(T) <= floor((3n^2 - 10n)/2) 2^α + Δ^2 - nδ, 0 <= α <= 1",
           "per_tree", "non_strict", _TREE, _c17,
           free_vars={"alpha": [0, 1, "clamp(n/(Δ^2-1), 0, 1)"]}, notes=[_ALPHA_NOTE]),
    _claim("C18", "irr >= sqrt((F + 2M2 - nΔ)/(Δ(Δ-1))).",
           "proposition relating irr, M2 and F",
           "irr(T) >= sqrt((F(T) + 2 M2(T) - nΔ)/(Δ(Δ-1)))",
           "per_tree", "non_strict", _TREE, _c18, notes=["vacuous when Δ < 2 or radicand < 0"]),
    _claim("C19", "2^λ <= irr <= (n-1)(n-2)^λ for every vertex v != v0 of degree λ >= 3.",
           "lemma on T in T_{n,Δ} (Albertson)",
           "2^λ <= irr(T) <= (n-1)(n-2)^λ, λ = deg(v_l) >= 3, v_l != v0",
           "per_tree", "non_strict", _TREE, _c19, free_vars={"lambda": "policy"},
           notes=[_LAMBDA_NOTE]),
    _claim("C20", "Fibonacci-caterpillar closed form for σ equals the direct value.",
           "Fibonacci degree-sequence hypothesis (Sigma)",
           "sigma(T) = sum_{3}^{n-1} F_i^2 + sum_{5}^{n-1} (F_i-2)(F_i-1)^2 + (F_4-1)^2 "
           "+ (F_n-1)(F_n-1)^2 + 2",
           "per_family", "identity", (_family_fib_instances, None), _c20,
           free_vars={"n": "4..10", "convention": ["paper", "standard"]},
           notes=["the displayed statement repeats the Albertson expression; the squared form "
                  "derived for σ is tested and the displayed value is reported per instance"]),
    _claim("C21", "σ_min <= n·(mn(Δ²+2Δ)+2mδΔ)/((Δ²-2)(Δ-1)² + 2nΔ·sqrt(mΔ²))·(n+2)·log C(M1, 2n) <= σ_max.",
           "proposition bounding σ extrema with M1",
           "sigma_min <= n (mn(Δ^2+2Δ) + 2mδΔ)/((Δ^2-2)(Δ-1)^2 + 2nΔ sqrt(mΔ^2)) (n+2) "
           "log C(M1(T), 2n) <= sigma_max",
           "per_class", "non_strict", _CELL, _c21,
           notes=["log is the natural logarithm",
                  "M1 is taken from each tree of the cell; the cell holds only if every tree does",
                  _CELL_NOTE]),
    _claim("C22", "σ_min >= (Δ-2)^3/(nΔ-δ) and σ_min <= δnΔ²/(Δ+1) + Δ²(Δ-δ)/(6δ(Δ-1)).",
           "proposition with two displays on σ_min",
           "sigma_min >= (Δ-2)^3/(nΔ-δ);  sigma_min <= δ/(Δ+1) nΔ^2 + Δ^2(Δ-δ)/(6δ(Δ-1))",
           "per_class", "non_strict", _CELL, _c22, notes=[_CELL_NOTE]),
    _claim("C23", "σ_min >= ceil(log2(n²+1) - 1) + 2Δ - 1.",
           "proposition on σ_min via log2", "sigma_min >= ceil(log2(n^2+1) - 1) + 2Δ(T) - 1",
           "per_class", "non_strict", _CELL, _c23, notes=[_CELL_NOTE]),
    _claim("C24", "Two-tree σ sandwich around the extremal σ sums.",
           "lemma on two trees (Sigma)",
           "sigma_min <= n1(Δ1-1)^2 (n1 Δ2^3 + n2 Δ1^4 + m1 Δ2^2)/(Δ1 (Δ2-1)^2) <= sigma_max",
           "per_pair", "non_strict", _PAIR, _c24,
           free_vars={"pairing": "n2 = n1 - 1, m2 = m1 - 1, Δ2 = Δ1 + 1"},
           notes=[_PAIR_NOTE, _CELL_NOTE]),
    _claim("C25", "σ_max < Δ(nm - σ_min)/4 and σ_min < Δ(nm - σ_max)/4.",
           "lemma relating σ_max and σ_min",
           "sigma_max < Δ(T)(nm - sigma_min)/4;  sigma_min < Δ(T)(nm - sigma_max)/4",
           "per_class", "strict", _CELL, _c25,
           notes=["the auxiliary parameter η is not part of the tested system", _CELL_NOTE]),
    _claim("C26", "σ <= floor((3n⁴-2mn)/Δ)·2^α + Δ² - nδ for 0 <= α <= 1.",
           "lemma with scaling factor α (Sigma)",
           "sigma(T) <= floor((3n^4 - 2mn)/Δ) 2^α + Δ^2 - nδ, 0 <= α <= 1",
           "per_tree", "non_strict", _TREE, _c26,
           free_vars={"alpha": [0, 1, "clamp(n/(Δ^2-1), 0, 1)"]}, notes=[_ALPHA_NOTE]),
    _claim("C27", "σ >= sqrt((5F + 4M2 - nΔ²)/(Δ(Δ-1))).",
           "proposition relating σ, M2 and F",
           "sigma(T) >= sqrt((5F(T) + 4M2(T) - nΔ^2)/(Δ(Δ-1)))",
           "per_tree", "non_strict", _TREE, _c27, notes=["vacuous when Δ < 2 or radicand < 0"]),
    _claim("C28", "(3δ)^λ <= σ <= (Δ-1)(n-2)^λ for every vertex v != v0 of degree λ >= 3.",
           "lemma on T in T_{n,Δ} (Sigma)",
           "(3δ)^λ <= sigma(T) <= (Δ-1)(n-2)^λ, λ = deg(v_l) >= 3, v_l != v0",
           "per_tree", "non_strict", _TREE, _c28, free_vars={"lambda": "policy"},
           notes=[_LAMBDA_NOTE]),
    _claim("C29", "Entrywise products of majorized sequences are majorized.",
           "majorization product lemma",
           "B1 ⪯ D1, B2 ⪯ D2  =>  (a_i b_i) ⪯ (x_i y_i)",
           "per_sequence", "non_strict", (_c29_instances, _seq_from_witness), _c29,
           free_vars={"exhaustive": "length 4, entries 0..4", "random": C29_RANDOM_PAIRS},
           notes=["majorization requires equal totals; products are compared after sorting "
                  "non-increasing",
                  "domain is independent of the order range; random pairs are seeded"]),
    _claim("C30", "σ_t equals the sum of (d_u - d_v)² over unordered vertex pairs.",
           "modified total sigma", "sigma_t(T) = 1/2 sum_{(u,v)} (d_u - d_v)^2",
           "per_tree", "identity", _TREE, _c30,
           notes=["σ_t is computed as n·M1 - (2m)², compared against a direct pairwise sum"]),
    _claim("C31", "sqrt(σ) <= irr <= sqrt(mσ).",
           "Cauchy-Schwarz sandwich for irr and σ", "sqrt(sigma) <= irr(G) <= sqrt(m sigma)",
           "per_tree", "non_strict", _TREE, _c31),
]

# family claims rebuild their witness from the recorded parameters
_FAMILY_FROM_WITNESS = {
    "C7": lambda w, fv: tuple(fv["spine"]),
    "C11": _fib_from_witness,
    "C20": _fib_from_witness,
}

_BY_ID = {c.id: c for c in _REGISTRY}


def registry() -> list[Claim]:
    return list(_REGISTRY)


def get_claim(cid: str) -> Claim:
    try:
        return _BY_ID[cid.upper()]
    except KeyError:
        raise KeyError(f"unknown claim {cid!r}") from None


# -- verdicts and reports --------------------------------------------------

def _jsonable(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else float(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, float):
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


@dataclass
class ClaimVerdict:
    id: str
    domain_size: int = 0
    holds: int = 0
    fails: int = 0
    vacuous: int = 0
    first_counterexample: dict | None = None
    counterexamples: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    reported: dict | None = None

    def to_json(self) -> dict:
        c = get_claim(self.id)
        out = {
            "id": self.id,
            "paper_ref": c.paper_ref,
            "quote": c.quote,
            "statement": c.statement,
            "domain": c.domain,
            "strictness": c.strictness,
            "free_var_policy": _jsonable(c.free_vars),
            "domain_size": self.domain_size,
            "holds": self.holds,
            "fails": self.fails,
            "vacuous": self.vacuous,
            "first_counterexample": self.first_counterexample,
            "counterexamples": self.counterexamples,
            "notes": self.notes,
        }
        if self.reported is not None:
            out["reported"] = self.reported
        return out


@dataclass(frozen=True)
class EvalConfig:
    n_min: int = 4
    n_max: int = 9
    seed: int = 0
    claims: tuple[str, ...] | None = None
    exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT

    def validate(self) -> None:
        if self.n_min < 2:
            raise ValueError(f"n_min must be >= 2, got {self.n_min}")
        if self.n_max < self.n_min:
            raise ValueError(f"n_max ({self.n_max}) < n_min ({self.n_min})")
        if self.n_max > self.exhaustive_limit:
            raise ValueError(f"n_max ({self.n_max}) exceeds the exhaustive limit "
                             f"({self.exhaustive_limit})")
        for cid in self.claims or ():
            get_claim(cid)

    def claim_ids(self) -> list[str]:
        return [c.upper() for c in self.claims] if self.claims else [c.id for c in _REGISTRY]


def evaluate_claim(claim: Claim | str, config: EvalConfig | None = None,
                   ctx: EvaluationContext | None = None) -> ClaimVerdict:
    """Run one claim over its whole domain."""
    if isinstance(claim, str):
        claim = get_claim(claim)
    config = config or EvalConfig()
    if ctx is None:
        config.validate()
        ctx = EvaluationContext(config.n_min, config.n_max, config.seed)
    v = ClaimVerdict(claim.id)
    tags: dict[str, int] = {}
    vacuous_notes: dict[str, int] = {}
    for inst in claim.instances(ctx):
        out = claim.check(ctx, inst.payload)
        v.domain_size += inst.weight
        if out.status == HOLD:
            v.holds += inst.weight
        elif out.status == VACUOUS:
            v.vacuous += inst.weight
            if out.note:
                vacuous_notes[out.note] = vacuous_notes.get(out.note, 0) + inst.weight
        else:
            v.fails += inst.weight
            if len(v.counterexamples) < MAX_RECORDED:
                record = dict(out.witness or inst.witness)
                record["values"] = _jsonable({k: val for k, val in out.values.items()
                                              if val is not None})
                record["free_vars"] = _jsonable({**inst.free_vars, **out.free_vars})
                if out.note:
                    record["note"] = out.note
                v.counterexamples.append(record)
        for tag in out.tags:
            tags[tag] = tags.get(tag, 0) + inst.weight
    v.first_counterexample = v.counterexamples[0] if v.counterexamples else None
    v.notes = list(claim.notes)
    v.notes += [f"vacuous ({why}): {k}" for why, k in sorted(vacuous_notes.items())]
    v.notes += [f"tag {t}: {k}" for t, k in sorted(tags.items())]
    if claim.reported is not None:
        v.reported = _jsonable(claim.reported(ctx))
    return v


def recheck_counterexample(claim: Claim | str, record: dict,
                           exhaustive_limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> Outcome:
    """Re-evaluate a recorded counterexample from its witness alone."""
    if isinstance(claim, str):
        claim = get_claim(claim)
    if claim.id in _FAMILY_FROM_WITNESS:
        payload = _FAMILY_FROM_WITNESS[claim.id](record, record.get("free_vars", {}))
    else:
        payload = claim.from_witness(record)
    ctx = EvaluationContext(1, exhaustive_limit, 0)
    return claim.check(ctx, payload)


@dataclass
class EvaluationReport:
    version: str
    n_min: int
    n_max: int
    seed: int
    verdicts: list[ClaimVerdict]
    wall_time_s: float = 0.0

    def body(self) -> dict:
        """Everything except the wall time; byte-stable for a fixed config."""
        return {
            "version": self.version,
            "n_min": self.n_min,
            "n_max": self.n_max,
            "seed": self.seed,
            "claims": [v.to_json() for v in self.verdicts],
        }

    def to_json(self) -> dict:
        out = self.body()
        out["wall_time_s"] = round(self.wall_time_s, 3)
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["id", "domain_size", "holds", "fails", "vacuous"])
        for v in self.verdicts:
            w.writerow([v.id, v.domain_size, v.holds, v.fails, v.vacuous])
        return buf.getvalue()


_worker_ctx: EvaluationContext | None = None
_worker_cfg: EvalConfig | None = None


def _init_worker(config: EvalConfig) -> None:
    global _worker_ctx, _worker_cfg
    _worker_cfg = config
    _worker_ctx = EvaluationContext(config.n_min, config.n_max, config.seed)


def _run_in_worker(cid: str) -> ClaimVerdict:
    return evaluate_claim(cid, _worker_cfg, _worker_ctx)


def evaluate_all(config: EvalConfig | None = None, workers: int = 1) -> EvaluationReport:
    """Evaluate the configured claims; verdict order follows the registry."""
    config = config or EvalConfig()
    config.validate()
    start = time.perf_counter()
    ids = config.claim_ids()
    if workers > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                 initargs=(config,)) as pool:
            verdicts = list(pool.map(_run_in_worker, ids))
    else:
        ctx = EvaluationContext(config.n_min, config.n_max, config.seed)
        verdicts = [evaluate_claim(cid, config, ctx) for cid in ids]
    return EvaluationReport(__version__, config.n_min, config.n_max, config.seed, verdicts,
                            time.perf_counter() - start)
