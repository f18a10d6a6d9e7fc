from __future__ import annotations

from hypothesis import strategies as st

from treeirr.construct import tree_from_prufer


@st.composite
def trees(draw, min_n: int = 2, max_n: int = 14):
    """Uniform-ish labeled trees via random Prüfer strings."""
    n = draw(st.integers(min_n, max_n))
    seq = draw(st.lists(st.integers(0, n - 1), min_size=n - 2, max_size=n - 2))
    return tree_from_prufer(seq, n)
