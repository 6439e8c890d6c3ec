import itertools

import pytest

from rigidkit.catalog import butterfly, ring_of_butterflies
from rigidkit.constructions import double_butterfly
from rigidkit.graph import (
    DanglingEndpointError,
    DuplicateEdgeError,
    DuplicateVertexError,
    Graph,
    LoopEdgeError,
    UnknownVertexError,
    build_graph,
    complete_graph,
    empty_graph,
    identify_vertices,
    induced_subgraph,
    k4_through,
    nonedges,
    pair,
    to_dot,
    union,
)


def test_triangle_and_k5():
    T = build_graph("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert (T.n, T.m) == (3, 3)
    K = complete_graph("abcde")
    assert (K.n, K.m) == (5, 10)


@pytest.mark.parametrize("verts,edges,err", [
    ("ab", [("a", "a")], LoopEdgeError),
    ("ab", [("a", "b"), ("b", "a")], DuplicateEdgeError),
    ("ab", [("a", "c")], DanglingEndpointError),
    (["a", "a"], [], DuplicateVertexError),
])
def test_build_errors(verts, edges, err):
    with pytest.raises(err):
        build_graph(verts, edges)


def test_induced_subgraph():
    K = complete_graph("abcde")
    assert induced_subgraph(K, "abcd").m == 6
    H = double_butterfly()
    C = induced_subgraph(H, ["a1'", "b1'", "u", "v"])
    # the 4-cycle a1 - u - b1 - v
    assert C.m == 4
    assert all(C.degree(x) == 2 for x in C.vertices)
    assert induced_subgraph(K, []).n == 0


def test_nonedges():
    assert nonedges(butterfly()) == {("a", "b"), ("c", "d")}
    assert nonedges(complete_graph("abcde")) == set()
    assert len(nonedges(empty_graph("xyz"))) == 3


def test_identify_vertices():
    T1 = complete_graph(["a", "b", "c"])
    T2 = complete_graph(["x", "y", "z"])
    G, rep = identify_vertices(union(T1, T2), [{"a", "x"}])
    assert (G.n, G.m) == (5, 6)
    assert rep["x"] == "a"
    with pytest.raises(LoopEdgeError):
        identify_vertices(T1, [{"a", "b"}])


def test_ring_links_share_two_vertices():
    R = ring_of_butterflies(7)
    cl = list(R.cover.clusters)
    sizes = sorted(len(x & y) for x, y in itertools.combinations(cl, 2))
    assert sizes.count(2) == 7 and set(sizes) <= {0, 2}


def test_k4_through():
    K = complete_graph("abcde")
    assert k4_through(K, "abc")
    assert not k4_through(butterfly(), "abc")
    R = ring_of_butterflies(7).graph
    a = "L1.a"
    for w in R.neighbors(a):
        assert not k4_through(R, [a, w])
    assert not any(k4_through(R, S) for S in itertools.combinations(R.vertices[:8], 4))
    with pytest.raises(UnknownVertexError):
        k4_through(K, ["zz"])


def test_json_roundtrip_and_canonical_order():
    G = build_graph(["v10", "v2", "v1"], [("v10", "v2"), ("v1", "v2")])
    assert G.vertices == ("v1", "v2", "v10")
    assert Graph.from_json(G.to_json()) == G
    assert G.to_json() == Graph.from_json(G.to_json()).to_json()


def test_pair_and_dot():
    assert pair("b", "a") == ("a", "b")
    dot = to_dot(butterfly(), dashed=[("a", "b")])
    assert '"a" -- "b" [style=dashed];' in dot
    assert dot.count("--") == 9
