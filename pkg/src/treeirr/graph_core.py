"""Graph and tree values, canonical forms, and the edge-list / graph6 formats.

Vertices are always the dense integers ``0..n-1``.  Both :class:`Graph` and
:class:`Tree` are immutable; degrees and adjacency are computed once at
construction.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

if TYPE_CHECKING:
    from treeirr.degseq import DegreeSequence

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Raised when a vertex/edge description is not a valid simple graph or tree."""


class FormatError(ValueError):
    """Raised for malformed graph6 or edge-list text."""


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_edges", "_degrees", "_adj")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise GraphError(f"vertex count must be >= 0, got {n}")
        seen = set()
        ordered = []
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphError(f"duplicate edge {key}")
            seen.add(key)
            ordered.append(key)
        ordered.sort()
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in ordered:
            adj[u].append(v)
            adj[v].append(u)
        self._n = n
        self._edges = tuple(ordered)
        self._adj = tuple(tuple(a) for a in adj)
        self._degrees = tuple(len(a) for a in adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as sorted ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degree of each vertex, indexed by vertex."""
        return self._degrees

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    @property
    def max_degree(self) -> int:
        return max(self._degrees, default=0)

    @property
    def min_degree(self) -> int:
        return min(self._degrees, default=0)

    def is_connected(self) -> bool:
        if self._n <= 1:
            return True
        seen = [False] * self._n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w in self._adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        return count == self._n

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return type(self)(self._n, [(perm[u], perm[v]) for u, v in self._edges])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self._n}, edges={list(self._edges)})"


class Tree(Graph):
    """A connected graph with exactly ``n - 1`` edges (``n >= 1``)."""

    __slots__ = ()

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        super().__init__(n, edges)
        if n < 1:
            raise GraphError("a tree needs at least one vertex")
        if self.m != n - 1:
            raise GraphError(f"a tree on {n} vertices has {n - 1} edges, got {self.m}")
        if not self.is_connected():
            raise GraphError("edges do not form a connected graph")

    @classmethod
    def from_graph(cls, g: Graph) -> "Tree":
        if isinstance(g, Tree):
            return g
        return cls(g.n, g.edges)

    def leaves(self) -> list[int]:
        return [v for v, d in enumerate(self.degrees) if d == 1]

    def centers(self) -> tuple[int, ...]:
        """The one or two central vertices, found by repeated leaf stripping."""
        n = self.n
        if n <= 2:
            return tuple(range(n))
        deg = list(self.degrees)
        layer = [v for v in range(n) if deg[v] == 1]
        remaining = n
        while remaining > 2:
            remaining -= len(layer)
            nxt = []
            for leaf in layer:
                for w in self.neighbors(leaf):
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
            layer = nxt
        return tuple(sorted(layer))


def make_tree(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate ``edges`` and return a :class:`Tree`.

    Raises :class:`GraphError` for loops, duplicate edges, out-of-range
    endpoints, disconnected input, or an edge count other than ``n - 1``.
    """
    return Tree(n, edges)


def degree_sequence(g: Graph) -> "DegreeSequence":
    """Degrees of ``g`` sorted non-increasing."""
    from treeirr.degseq import DegreeSequence

    return DegreeSequence(g.degrees)


# -- canonical form --------------------------------------------------------

def _rooted_code(t: Tree, root: int) -> str:
    parent = [-1] * t.n
    order = [root]
    parent[root] = root
    for u in order:
        for w in t.neighbors(u):
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    kids: list[list[str]] = [[] for _ in range(t.n)]
    code = ""
    for v in reversed(order):
        parts = kids[v]
        parts.sort()
        code = "(" + "".join(parts) + ")"
        if v != root:
            kids[parent[v]].append(code)
    return code


def canonical_code(t: Tree) -> bytes:
    """AHU encoding of ``t`` rooted at its center.

    Equal codes mean isomorphic trees.  A bicentral tree takes the smaller of
    its two center-rooted codes.
    """
    if not isinstance(t, Tree):
        t = Tree.from_graph(t)
    codes = [_rooted_code(t, c) for c in t.centers()]
    return min(codes).encode("ascii")


# -- edge lists ------------------------------------------------------------

def parse_edgelist(text: str, n: int | None = None, one_based: bool = False) -> Graph:
    """Parse ``u v`` lines into a :class:`Graph`.

    ``#`` starts a comment and blank lines are skipped.  The vertex count is
    ``max label + 1`` unless ``n`` is given.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise FormatError(f"line {lineno}: expected two vertex labels, got {len(tokens)} tokens")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise FormatError(f"line {lineno}: vertex labels must be integers: {line!r}") from None
        if one_based:
            u, v = u - 1, v - 1
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex label")
        pairs.append((u, v))
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=-1)
    try:
        return Graph(n, pairs)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def write_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges)


# -- graph6 ----------------------------------------------------------------

def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise GraphError(f"graph6 cannot encode n = {n}")


def write_graph6(g: Graph) -> str:
    """graph6 string for ``g`` (no header, no trailing newline)."""
    n = g.n
    bits = bytearray(n * (n - 1) // 2)
    for u, v in g.edges:
        # column-major upper triangle: pair (i, j), i < j, sits at j(j-1)/2 + i
        bits[v * (v - 1) // 2 + u] = 1
    out = [_encode_order(n)]
    for k in range(0, len(bits), 6):
        chunk = bits[k:k + 6]
        val = 0
        for b in chunk:
            val = (val << 1) | b
        val <<= 6 - len(chunk)
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string; a leading ``>>graph6<<`` header is tolerated."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise FormatError(f"invalid graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 2 and vals[1] == 63:
        if len(vals) < 8:
            raise FormatError("truncated graph6 order field")
        n = 0
        for x in vals[2:8]:
            n = (n << 6) | x
        pos = 8
    else:
        if len(vals) < 4:
            raise FormatError("truncated graph6 order field")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    nbits = n * (n - 1) // 2
    body = vals[pos:]
    if len(body) != (nbits + 5) // 6:
        raise FormatError(f"graph6 body has {len(body)} bytes, expected {(nbits + 5) // 6} for n={n}")
    edges = []
    k = 0
    j, i = 1, 0
    for x in body:
        for shift in range(5, -1, -1):
            bit = (x >> shift) & 1
            if k < nbits:
                if bit:
                    edges.append((i, j))
                i += 1
                if i == j:
                    j, i = j + 1, 0
            elif bit:
                raise FormatError("nonzero padding bits in graph6 string")
            k += 1
    return Graph(n, edges)


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in lines:
        if line.strip():
            yield parse_graph6(line)

