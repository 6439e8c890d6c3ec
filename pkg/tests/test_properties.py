import itertools

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from rigidkit.catalog import butterfly
from rigidkit.constructions import k_sum
from rigidkit.covers import TwoThinCover, cover_independent, ie_count, validate_two_thin
from rigidkit.graph import Graph, build_graph
from rigidkit.oracle import Framework, generic_rank, independence, random_framework

SETTINGS = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    vs = [f"v{i}" for i in range(n)]
    pairs = list(itertools.combinations(vs, 2))
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return build_graph(vs, edges)


@SETTINGS
@given(graphs())
def test_rank_bounds(G):
    r = generic_rank(G).rank
    assert r <= G.m
    if G.n >= 3:
        assert r <= 3 * G.n - 6


@SETTINGS
@given(graphs(), st.data())
def test_rank_monotone(G, data):
    if G.m == 0:
        return
    e = data.draw(st.sampled_from(sorted(G.edges)))
    r = generic_rank(G).rank
    r0 = generic_rank(G.remove_edges([e])).rank
    assert r - 1 <= r0 <= r


@SETTINGS
@given(graphs())
def test_graph_roundtrip(G):
    assert Graph.from_dict(G.to_dict()) == G


@SETTINGS
@given(graphs(max_n=6), st.integers(0, 2 ** 32))
def test_framework_roundtrip(G, seed):
    fw = random_framework(G, seed=seed)
    back = Framework.from_dict({**fw.to_dict(), "graph": G.to_dict()})
    assert back.hash() == fw.hash()


@SETTINGS
@given(st.integers(1, 2), st.integers(2, 4), st.integers(2, 4), st.data())
def test_ie_bounds_rank_on_independent_covers(k, ea, eb, data):
    """Two clusters meeting in at most two vertices, with some edges dropped."""
    A = [f"s{i}" for i in range(k)] + [f"a{i}" for i in range(ea)]
    B = [f"s{i}" for i in range(k)] + [f"b{i}" for i in range(eb)]
    edges = sorted(set(itertools.combinations(A, 2)) | set(itertools.combinations(B, 2)))
    drop = data.draw(st.lists(st.sampled_from(edges), unique=True, max_size=3))
    G = build_graph(sorted(set(A) | set(B)), [e for e in edges if e not in drop])
    X = TwoThinCover.of([A, B])
    if validate_two_thin(G, X).ok and cover_independent(G, X):
        assert ie_count(G, X) >= generic_rank(G).rank


@SETTINGS
@given(st.integers(0, 2), st.data())
def test_k_sum_preserves_independence(k, data):
    G = butterfly()
    H = butterfly().relabel({v: "H" + v for v in "abcde"})
    if k == 0:
        ident = {}
    elif k == 1:
        ident = {"H" + data.draw(st.sampled_from("abcde")): data.draw(st.sampled_from("abcde"))}
    else:
        g = data.draw(st.sampled_from(sorted(G.edges)))
        h = data.draw(st.sampled_from(sorted(H.edges)))
        if data.draw(st.booleans()):
            g = g[::-1]
        ident = dict(zip(h, g))
    assert independence(k_sum(G, H, ident))[0]
