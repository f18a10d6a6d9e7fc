from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import trees
from treeirr.construct import path, star
from treeirr.enumeration import free_trees
from treeirr.graph_core import (
    FormatError,
    Graph,
    GraphError,
    Tree,
    canonical_code,
    iter_graph6,
    make_tree,
    parse_edgelist,
    parse_graph6,
    write_edgelist,
    write_graph6,
)


def _reference_graph6(n: int, edges) -> str:
    """Straightforward graph6 encoder written from the format description."""
    adj = {(min(u, v), max(u, v)) for u, v in edges}
    bits = [1 if (i, j) in adj else 0 for j in range(n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    if n <= 62:
        head = [n]
    else:
        head = [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    body = [int("".join(map(str, bits[k:k + 6])), 2) for k in range(0, len(bits), 6)]
    return "".join(chr(63 + x) for x in head + body)


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


def test_tree_validation():
    with pytest.raises(GraphError):
        Tree(4, [(0, 1), (2, 3)])
    with pytest.raises(GraphError):
        Tree(3, [(0, 1), (1, 2), (0, 2)])
    t = make_tree(3, [(2, 1), (1, 0)])
    assert t.edges == ((0, 1), (1, 2))
    assert t.degrees == (1, 2, 1)


def test_centers():
    assert path(5).centers() == (2,)
    assert path(6).centers() == (2, 3)
    assert star(7).centers() == (0,)
    assert Tree(1).centers() == (0,)


@settings(max_examples=200, deadline=None)
@given(trees(), st.randoms(use_true_random=False))
def test_canonical_code_is_relabeling_invariant(t, rnd):
    perm = list(range(t.n))
    rnd.shuffle(perm)
    assert canonical_code(Tree.from_graph(t.relabel(perm))) == canonical_code(t)


def test_canonical_code_separates_nonisomorphic_trees():
    for n in range(1, 12):
        codes = [canonical_code(t) for t in free_trees(n)]
        assert len(codes) == len(set(codes))


def test_graph6_matches_known_small_graphs():
    assert write_graph6(path(4)) == "Ch"
    assert write_graph6(Graph(1)) == "@"
    assert write_graph6(Graph(2, [(0, 1)])) == "A_"


@pytest.mark.parametrize("n", [2, 5, 13, 62, 63, 100, 300])
def test_graph6_against_independent_encoders(n):
    rng = random.Random(n)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.2]
    g = Graph(n, edges)
    ours = write_graph6(g)
    assert ours == _reference_graph6(n, edges)
    ref = nx.Graph()
    ref.add_nodes_from(range(n))
    ref.add_edges_from(edges)
    assert ours == nx.to_graph6_bytes(ref, header=False).decode().strip()
    assert parse_graph6(ours) == g


def test_graph6_header_and_errors():
    assert parse_graph6(">>graph6<<Ch") == path(4)
    with pytest.raises(FormatError):
        parse_graph6("C h")
    with pytest.raises(FormatError):
        parse_graph6("Chh")
    with pytest.raises(FormatError):
        parse_graph6("Bx")  # nonzero padding bit
    with pytest.raises(FormatError):
        parse_graph6("")


def test_iter_graph6_skips_blank_lines():
    gs = list(iter_graph6(["Ch", "", "A_"]))
    assert [g.n for g in gs] == [4, 2]


def test_edgelist_roundtrip_and_comments():
    t = star(5)
    assert parse_edgelist(write_edgelist(t)) == t
    g = parse_edgelist("# a path\n0 1\n\n1 2  # tail\n")
    assert g.edges == ((0, 1), (1, 2))
    assert parse_edgelist("1 2\n2 3\n", one_based=True).edges == ((0, 1), (1, 2))


@pytest.mark.parametrize("text", ["0 1 2\n", "0 x\n", "0 0\n", "-1 2\n"])
def test_edgelist_errors(text):
    with pytest.raises(FormatError):
        parse_edgelist(text)
