"""Shared strategies and fixtures.

Random words are drawn homogeneous by construction: a column sequence plus
one sign per column. Connectivity is enforced by rejection, which is cheap
at these sizes (n <= 4, m <= 8).
"""

import pytest
from hypothesis import assume, strategies as st

from homolink import BraidWord


@st.composite
def homogeneous_connected(draw, max_n=4, max_m=8, min_count=1):
    n = draw(st.integers(2, max_n))
    lo = (2 if min_count >= 2 else 1) * (n - 1)
    assume(lo <= max_m)
    m = draw(st.integers(lo, max_m))
    seq = draw(st.lists(st.integers(1, n - 1), min_size=m, max_size=m))
    counts = [seq.count(i) for i in range(1, n)]
    assume(all(c >= min_count for c in counts))
    signs = draw(st.tuples(*[st.sampled_from((-1, 1)) for _ in range(n - 1)]))
    return BraidWord(n, tuple(c * signs[c - 1] for c in seq))


@st.composite
def any_words(draw, max_n=4, max_m=8):
    n = draw(st.integers(1, max_n))
    if n == 1:
        return BraidWord(1, ())
    m = draw(st.integers(0, max_m))
    letters = draw(st.lists(
        st.integers(1, n - 1).flatmap(
            lambda i: st.sampled_from((i, -i))),
        min_size=m, max_size=m))
    return BraidWord(n, tuple(letters))


@pytest.fixture(scope="session")
def reference_entries():
    from homolink import load_reference_table
    return load_reference_table()
