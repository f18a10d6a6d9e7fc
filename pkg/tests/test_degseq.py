from __future__ import annotations

from itertools import product

import pytest

from treeirr.degseq import (
    DegreeSequence,
    fibonacci_degrees,
    fibonacci_numbers,
    is_graphical,
    is_tree_realizable,
    majorizes,
    realize_graph,
    realize_tree,
)


def _erdos_gallai(seq) -> bool:
    d = sorted(seq, reverse=True)
    if sum(d) % 2:
        return False
    n = len(d)
    for k in range(1, n + 1):
        lhs = sum(d[:k])
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if lhs > rhs:
            return False
    return True


def test_parse_sorts_and_validates():
    ds = DegreeSequence.parse("1,3,1,2,1")
    assert ds.values == (3, 2, 1, 1, 1)
    assert str(ds) == "3,2,1,1,1"
    assert ds == (3, 2, 1, 1, 1)
    with pytest.raises(ValueError):
        DegreeSequence.parse("3,a")
    with pytest.raises(ValueError):
        DegreeSequence([2, -1])


def test_graphicality_matches_erdos_gallai_exhaustively():
    for n in range(1, 7):
        for seq in product(range(n + 1), repeat=n):
            if list(seq) != sorted(seq, reverse=True):
                continue
            expected = _erdos_gallai(seq)
            assert is_graphical(seq) == expected, seq
            if expected:
                g = realize_graph(seq)
                assert g.degrees == seq


def test_realize_graph_rejects_nongraphical():
    with pytest.raises(ValueError):
        realize_graph([3, 3, 1, 1])
    with pytest.raises(ValueError):
        realize_graph([1])


def test_tree_realization():
    assert is_tree_realizable([3, 2, 1, 1, 1])
    assert not is_tree_realizable([2, 2, 2])
    assert not is_tree_realizable([2, 2, 0, 0])
    assert is_tree_realizable([0])
    for seq in ([3, 2, 1, 1, 1], [4, 4, 1, 1, 1, 1, 1, 1], [2, 2, 2, 1, 1], [1, 1]):
        t = realize_tree(seq)
        assert sorted(t.degrees, reverse=True) == sorted(seq, reverse=True)
    with pytest.raises(ValueError):
        realize_tree([2, 2, 2])


def test_majorization():
    assert majorizes([3, 1, 1, 1], [2, 2, 1, 1])
    assert not majorizes([2, 2, 1, 1], [3, 1, 1, 1])
    assert not majorizes([3, 1, 1, 1], [2, 2, 2, 1])  # unequal totals
    assert majorizes([1, 2, 3], [3, 2, 1])
    with pytest.raises(ValueError):
        majorizes([1, 1], [1, 1, 0])


def test_fibonacci_conventions():
    assert fibonacci_numbers(6, "paper") == [1, 2, 3, 5, 8, 13]
    assert fibonacci_numbers(6, "standard") == [1, 1, 2, 3, 5, 8]
    assert fibonacci_degrees(10, "paper").values == (89, 55, 34, 21, 13, 8, 5, 3)
    with pytest.raises(ValueError):
        fibonacci_numbers(3, "lucas")
    with pytest.raises(ValueError):
        fibonacci_degrees(3, "paper")
