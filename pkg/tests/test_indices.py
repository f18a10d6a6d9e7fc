from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import trees
from treeirr.construct import caterpillar, path, star
from treeirr.degseq import DegreeSequence
from treeirr.graph_core import Graph
from treeirr.indices import (
    albertson,
    caterpillar_irr_formula,
    compute_bundle,
    forgotten,
    forgotten_edgewise,
    general_albertson,
    imbalance_along_path,
    index_value,
    mainalb2_formula,
    sigma,
    sigma_t,
    total_albertson,
    total_albertson_sorted_formula,
    zagreb_m1,
    zagreb_m1_edgewise,
    zagreb_m2,
)


def _pairwise(g, f):
    d = g.degrees
    return sum(f(d[u] - d[v]) for u in range(g.n) for v in range(u + 1, g.n))


def test_small_named_values():
    p4 = path(4)
    assert (albertson(p4), sigma(p4), total_albertson(p4)) == (2, 2, 4)
    s4 = star(4)
    assert (albertson(s4), sigma(s4)) == (6, 12)
    assert zagreb_m1(s4) == 12 and zagreb_m2(s4) == 9 and forgotten(s4) == 30
    k2 = Graph(2, [(0, 1)])
    assert albertson(k2) == 0 and sigma_t(k2) == 0


@pytest.mark.parametrize("n", range(3, 40))
def test_family_closed_forms(n):
    s, p = star(n), path(n)
    assert albertson(s) == (n - 1) * (n - 2)
    assert sigma(s) == (n - 1) * (n - 2) ** 2
    assert albertson(p) == sigma(p) == 2
    assert total_albertson(p) == 2 * (n - 2)


@settings(max_examples=300, deadline=None)
@given(trees())
def test_identities_on_random_trees(t):
    b = compute_bundle(t)
    assert b.irr == albertson(t) == general_albertson(t, 1)
    assert math.isclose(general_albertson(t, 2) ** 2, b.sigma, rel_tol=1e-9, abs_tol=1e-12)
    assert b.irr_t == _pairwise(t, abs) == total_albertson_sorted_formula(DegreeSequence(t.degrees))
    assert b.sigma_t == _pairwise(t, lambda x: x * x)
    assert b.forgotten == forgotten_edgewise(t)
    assert b.m1 == zagreb_m1_edgewise(t)
    assert b.m2 == zagreb_m2(t)
    assert b.sigma <= b.irr ** 2 <= b.m * b.sigma


def test_sigma_t_is_exact_fraction():
    assert isinstance(sigma_t(path(5)), Fraction)
    assert compute_bundle(path(5)).to_json()["sigma_t"] == 6


def test_general_albertson_requires_positive_p():
    with pytest.raises(ValueError):
        general_albertson(path(4), 0)


def test_sorted_formula_rejects_odd_sum():
    with pytest.raises(ValueError):
        total_albertson_sorted_formula([2, 1, 1, 1])


def test_caterpillar_formula_matches_direct_value():
    for spine in [(2, 2), (3, 2, 3), (5, 2, 4, 3), (2, 3, 2), (4, 4, 4, 4, 4)]:
        assert caterpillar_irr_formula(spine) == albertson(caterpillar(spine))


def test_mainalb2_formula_is_evaluated_verbatim():
    # d1^2 + dn^2 + sum mid d^2 + sum mid d + dn - d1 - 2n - 2
    assert mainalb2_formula([1, 1]) == 1 + 1 + 0 + 0 + 0 - 4 - 2
    assert mainalb2_formula([1, 2, 2, 1]) == 1 + 4 + 5 + 3 + 1 - 8 - 2
    with pytest.raises(ValueError):
        mainalb2_formula([1])


def test_imbalance_along_path():
    t = caterpillar((3, 2, 3))
    assert imbalance_along_path(t, [0, 1, 2]) == 2
    with pytest.raises(ValueError):
        imbalance_along_path(t, [0, 2])


def test_index_value_lookup():
    assert index_value(star(5), "sigma") == 36
    with pytest.raises(ValueError):
        index_value(star(5), "randic")
