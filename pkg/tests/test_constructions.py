import pytest

from rigidkit import catalog as cat
from rigidkit.constructions import (
    ConstructionError,
    SafeSplitError,
    SplitSpec,
    chain,
    double_butterfly,
    double_butterfly_sg,
    glue,
    henneberg1,
    henneberg2,
    henneberg2_ring,
    henneberg2_ring_hypotheses,
    hinge_union,
    k_sum,
    k_vertex_split,
    nonedge_split,
    ring,
    ring_data,
    safe_nonedge_split,
    safe_split_and_glue,
    split_and_glue,
)
from rigidkit.covers import TwoThinCover, cover_independent, pair_graph, shared_set, validate_two_thin
from rigidkit.graph import build_graph, complete_graph, induced_subgraph, nonedges, union
from rigidkit.oracle import independence, is_circuit, is_nucleation_free, implied_nonedge, nucleations


def test_henneberg1(r7):
    T = complete_graph("abc")
    assert henneberg1(T, "abc", label="d") == complete_graph("abcd").with_log(henneberg1(T, "abc", "d").log[-1])
    G = henneberg1(r7.graph, ["L1.a", "L3.e", "L5.e"])
    assert independence(G)[0] and is_nucleation_free(G)
    assert all(implied_nonedge(G, h) for h in r7.hinges)
    with pytest.raises(ConstructionError):
        henneberg1(T, ["a", "a", "b"])


def test_henneberg2():
    K5 = complete_graph("abcde")
    G = henneberg2(K5.remove_edges([("a", "e")]), "abcd", ("a", "b"), label="x")
    assert G.m == 9 - 1 + 4 and independence(G)[0]
    with pytest.raises(ConstructionError):
        henneberg2(complete_graph("abcd"), "abcd", ("a", "z"))


def test_ring_of_k4_to_butterflies():
    k4 = [complete_graph("abcd")] * 7
    R = henneberg2_ring(k4, [cat.BUTTERFLY_HINGES] * 7)
    data = ring_data(R)
    assert (R.n, R.m) == (21, 56)
    for cl, h_prev, h_cur in zip(data["clusters"], [data["hinges"][-1]] + data["hinges"][:-1], data["hinges"]):
        L = induced_subgraph(R, cl)
        assert L.m == 8 and nonedges(L) == {tuple(h_prev), tuple(h_cur)}
    with pytest.raises(ConstructionError):
        henneberg2_ring(k4[:6], [cat.BUTTERFLY_HINGES] * 6)


def test_k_sums():
    bow = k_sum(complete_graph("abc"), complete_graph("xyz"), {"x": "a"})
    assert (bow.n, bow.m) == (5, 6) and independence(bow)[0]
    R = cat.ring_of_butterflies(7)
    H = R.graph.relabel({v: "H" + v for v in R.graph.vertices})
    G = k_sum(R.graph, H, {"HL1.a": "L3.e", "HL1.c": "L3.c"})
    assert independence(G)[0] and is_nucleation_free(G)
    assert all(implied_nonedge(G, h) for h in R.hinges)
    # a 3-sum over a triangle inside a K4 creates a nucleation
    K5 = complete_graph("abcde")
    G3 = k_sum(K5.remove_edges([("a", "b")]), complete_graph("xyzw"), {"x": "c", "y": "d", "z": "e"})
    assert nucleations(G3)


def test_vertex_splits(r7):
    P = build_graph("abc", [("a", "b"), ("b", "c")])
    S = k_vertex_split(P, "b", ["a"], label="b2")
    assert S.m == P.m + 1 and S.has_edge("b2", "c") and not S.has_edge("b", "c")
    v = "L2.e"
    N = sorted(r7.graph.neighbors(v))
    G = k_vertex_split(r7.graph, v, N[:2], shared=N[:2])
    assert independence(G)[0] and is_nucleation_free(G)


def test_shared_graph_after_vertex_splits(r7):
    """The shared-set graph stays independent after a 1-split then a 2-split."""
    Sg = pair_graph(shared_set(r7.cover))
    Sg = build_graph(list(Sg.vertices), Sg.edges)
    a = r7.hinges[0][0]
    G1 = k_vertex_split(Sg, a, list(Sg.neighbors(a)), shared=list(Sg.neighbors(a))[:1])
    w = sorted(G1.vertices)[0]
    G2 = k_vertex_split(G1, w, list(G1.neighbors(w)), shared=list(G1.neighbors(w))[:2])
    assert independence(G2)[0]


def test_nonedge_split_examples():
    G = complete_graph("abcdef").remove_edges([("a", "b")])
    spec = SplitSpec("a", "b", {"c", "d"}, {"e", "f"}, {"c"}, {"d", "e", "f"})
    Gs = nonedge_split(G, spec)
    assert (Gs.n, Gs.m) == (8, G.m)
    t = nonedge_split(G, SplitSpec.trivial(G, "a", "b"))
    assert t.degree("a#2") == 0 and t.degree("b#2") == 0
    iso = build_graph("abc", [("b", "c")])
    e = nonedge_split(iso, SplitSpec("a", "c", (), (), {"b"}, ()))
    assert e.degree("a#1") == 0 and e.degree("a#2") == 0
    with pytest.raises(ConstructionError):
        nonedge_split(G, SplitSpec("a", "b", {"c"}, {"e"}, {"c"}, {"d"}))


def test_glue_and_double_butterfly():
    B1 = cat.butterfly().relabel({"a": "a1", "b": "b1", "c": "u", "d": "v", "e": "c"})
    B2 = cat.butterfly().relabel({"a": "a2", "b": "b2", "c": "u2", "d": "v2", "e": "c2"})
    D = glue(B1, B2, {"u2": "u", "v2": "v"})
    assert (D.n, D.m) == (8, 16)
    assert glue(complete_graph("ab"), complete_graph("xy"), {}) == union(complete_graph("ab"), complete_graph("xy")).with_log(
        glue(complete_graph("ab"), complete_graph("xy"), {}).log[-1])
    H = double_butterfly()
    assert (H.n, H.m) == (8, 16) and independence(H)[0]


def test_split_and_glue(r7):
    a, b = r7.hinges[0]
    spec = SplitSpec.trivial(r7.graph, a, b)
    with pytest.raises(ConstructionError):
        split_and_glue(r7.graph, spec, double_butterfly(), {"a1'": "L2.e"})
    G = double_butterfly_sg(r7.graph, spec)
    assert G.m == 72 and independence(G)[0] and is_nucleation_free(G)


def test_ring_and_chain_counts():
    R = ring([cat.butterfly()] * 7, [cat.BUTTERFLY_HINGES] * 7)
    assert (R.n, R.m) == (7 * 5 - 14, 56)
    R6 = ring([complete_graph("abcd")] * 6, [cat.BUTTERFLY_HINGES] * 6)
    assert (R6.n, R6.m) == (12, 30)
    C = chain([cat.butterfly()] * 3, [cat.BUTTERFLY_HINGES] * 3)
    assert C.n == 15 - 4 and C.m == 24 + 2 and is_circuit(C)
    with pytest.raises(ConstructionError):
        ring([cat.butterfly()] * 2, [cat.BUTTERFLY_HINGES] * 2)


def test_hinge_union(dbl_banana):
    b1 = cat.banana(others=("x1", "x2", "x3"))
    b2 = cat.banana(others=("y1", "y2", "y3"))
    D = hinge_union(b1, b2, ("a", "b"))
    assert is_circuit(D) and implied_nonedge(D, ("a", "b"))
    with pytest.raises(ConstructionError):
        hinge_union(complete_graph("abc"), complete_graph("abc"), ("a", "b"))


def test_safe_trivial_split_one_key_pair(r7):
    a, b = r7.hinges[0]
    ss = safe_nonedge_split(r7.graph, r7.cover, SplitSpec.trivial(r7.graph, a, b))
    assert ss.key_pairs == [(ss.names["a1"], ss.names["b1"])]
    assert validate_two_thin(ss.graph, ss.cover).ok and cover_independent(ss.graph, ss.cover)


def test_safe_pipeline_key_pairs():
    B = cat.safe_pipeline_base()
    ss = safe_nonedge_split(B.graph, B.cover, cat.safe_pipeline_split(B))
    n = ss.names
    assert sorted(ss.key_pairs) == sorted([(n["a1"], n["b1"]), (n["a2"], n["b1"])])
    assert len(B.cover) == 8


def _splits_trivial_instance():
    """Clusters around a and b linked through shared nonedges (a,w), (a,u), (b,s), (b,t)."""
    def k5_minus(vs, missing):
        return complete_graph(vs).remove_edges(missing)
    X1 = k5_minus(["a", "b", "w", "s", "x1"], [("a", "b"), ("a", "w"), ("b", "s")])
    X2 = k5_minus(["a", "b", "u", "t", "x2"], [("a", "b"), ("a", "u"), ("b", "t")])
    X3 = k5_minus(["a", "u", "w", "x3", "y3"], [("a", "u"), ("a", "w")])
    X4 = k5_minus(["b", "s", "t", "x4", "y4"], [("b", "s"), ("b", "t")])
    G = union(union(X1, X2), union(X3, X4))
    return G, TwoThinCover.of([X1.vertices, X2.vertices, X3.vertices, X4.vertices])


def test_every_safe_split_is_trivial():
    G, X = _splits_trivial_instance()
    assert validate_two_thin(G, X).ok and cover_independent(G, X)
    Na, Nb = sorted(G.neighbors("a")), sorted(G.neighbors("b"))
    accepted = 0
    for ma in range(2 ** len(Na)):
        A1 = {v for i, v in enumerate(Na) if ma >> i & 1}
        for mb in range(2 ** len(Nb)):
            B1 = {v for i, v in enumerate(Nb) if mb >> i & 1}
            spec = SplitSpec("a", "b", A1, set(Na) - A1, B1, set(Nb) - B1)
            try:
                safe_nonedge_split(G, X, spec)
            except SafeSplitError:
                continue
            accepted += 1
            assert A1 in (set(), set(Na)) and B1 in (set(), set(Nb))
    assert accepted == 4


def test_safe_split_and_glue_mismatch(r7):
    a, b = r7.hinges[0]
    D = cat.double_butterfly_entry()
    with pytest.raises(ConstructionError):
        safe_split_and_glue(r7.graph, r7.cover, SplitSpec.trivial(r7.graph, a, b), D.graph, D.cover,
                            D.annotations["gluing"], [(("a1", "b1"), ("a1'", "b1'"))])


def test_safe_sg_trivial_r7_implied(r7):
    """Trivial split, ear glued on its (a1', b1') key pair only through a one-pair ear."""
    a, b = r7.hinges[0]
    D = cat.safe_pipeline_ear()
    C1 = [c for c in D.cover.clusters if "alpha" in c][0]
    H = induced_subgraph(D.graph, C1)
    XH = TwoThinCover.of([C1])
    sg = safe_split_and_glue(r7.graph, r7.cover, SplitSpec.trivial(r7.graph, a, b), H, XH, ["alpha", "beta"],
                             [(("a1", "b1"), ("alpha", "beta"))])
    ind = independence(sg.graph)[0]
    if ind:
        n = sg.split.names
        assert implied_nonedge(sg.graph, (n["a1"], n["b1"]))


def test_henneberg2_ring_hypotheses():
    k4 = [complete_graph("abcd")] * 7
    hyp = henneberg2_ring_hypotheses(k4, [cat.BUTTERFLY_HINGES] * 7)
    assert hyp["strong_ok"] and all(hyp["advisory"]["deleted_edge_implied_after_move"])
    floppy = build_graph("abcdx", list(complete_graph("abcd").edges) + [("a", "x"), ("c", "x")])
    hyp = henneberg2_ring_hypotheses([floppy] * 7, [cat.BUTTERFLY_HINGES] * 7)
    assert not hyp["strong"]["links_rigid"] and not hyp["strong_ok"]
