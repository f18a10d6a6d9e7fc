"""Irregularity indices, tree enumeration and bound checking for trees."""

from treeirr.graph_core import (
    FormatError,
    Graph,
    GraphError,
    Tree,
    canonical_code,
    degree_sequence,
    make_tree,
    parse_edgelist,
    parse_graph6,
    write_edgelist,
    write_graph6,
)
from treeirr.degseq import DegreeSequence
from treeirr.indices import IndexBundle, compute_bundle

__version__ = "0.1.0"

__all__ = [
    "DegreeSequence",
    "FormatError",
    "Graph",
    "GraphError",
    "IndexBundle",
    "Tree",
    "canonical_code",
    "compute_bundle",
    "degree_sequence",
    "make_tree",
    "parse_edgelist",
    "parse_graph6",
    "write_edgelist",
    "write_graph6",
]
