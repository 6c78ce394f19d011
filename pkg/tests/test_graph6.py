import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgebetti.graph6 import Graph6Error, graph6_decode, graph6_encode
from edgebetti.graphs import complete, from_edges, path


@st.composite
def any_graphs(draw, max_n=9):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    mask = draw(st.integers(0, 2 ** len(pairs) - 1))
    return from_edges(n, [e for t, e in enumerate(pairs) if mask >> t & 1])


def test_known_encodings():
    assert graph6_encode(complete(4)) == "C~"
    assert graph6_encode(complete(3)) == "Bw"
    assert graph6_encode(path(4)) == "Ch"


def test_known_decodings():
    assert graph6_decode("C~") == complete(4)
    assert graph6_decode("Bw") == complete(3)
    assert set(graph6_decode("B_").edges()) == {(1, 2)}


@given(any_graphs())
@settings(max_examples=80, deadline=None)
def test_roundtrip(g):
    assert graph6_decode(graph6_encode(g)) == g


def test_roundtrip_on_enumerated_classes():
    from edgebetti.atlas import enumerate_graphs

    for n in (2, 3, 4, 5):
        for g in enumerate_graphs(n, dedup=True):
            assert graph6_decode(graph6_encode(g)) == g


@pytest.mark.slow
def test_roundtrip_on_enumerated_classes_large():
    from edgebetti.atlas import enumerate_graphs

    for n in (6, 7):
        for g in enumerate_graphs(n, dedup=True):
            assert graph6_decode(graph6_encode(g)) == g


def test_malformed_inputs():
    with pytest.raises(Graph6Error):
        graph6_decode("")
    with pytest.raises(Graph6Error):
        graph6_decode("B~")  # nonzero padding bits
    with pytest.raises(Graph6Error):
        graph6_decode("C~~")  # payload too long
    with pytest.raises(Graph6Error):
        graph6_decode("D~")  # payload too short
    with pytest.raises(Graph6Error):
        graph6_decode("B w")  # character below 63
    with pytest.raises(Graph6Error):
        graph6_decode("~??")  # multi-byte size header
    with pytest.raises(Graph6Error):
        graph6_decode(chr(63 + 40))  # n = 40 over the vertex ceiling
