import pytest

from rigidkit import catalog as cat
from rigidkit.constructions import SplitSpec
from rigidkit.covers import (
    InvalidCoverError,
    NotApplicableError,
    TwoThinCover,
    cover_independent,
    extend_cover_henneberg1,
    ie_count,
    ie_details,
    ie_prime,
    maximal_clusters,
    rank_sandwich,
    rank_sandwich_implied,
    shared_set,
    validate_safe_base,
    validate_safe_ear,
    validate_two_thin,
)
from rigidkit.constructions import henneberg1
from rigidkit.graph import UnknownVertexError, build_graph, complete_graph
from rigidkit.oracle import generic_rank


def test_ring_link_cover(r7):
    rep = validate_two_thin(r7.graph, r7.cover)
    assert rep.ok and all(rep.checks.values())
    assert shared_set(r7.cover) == set(r7.hinges)
    assert cover_independent(r7.graph, r7.cover)
    assert ie_count(r7.graph, r7.cover) == 56


def test_thin_and_coverage_failures():
    G = complete_graph("abcd")
    rep = validate_two_thin(G, TwoThinCover.of(["abcd", "ab"]))
    assert not rep.ok and not rep.checks["nested"]
    X = TwoThinCover.of(["abcd", "abce"])
    G2 = build_graph("abcde", [("a", "b"), ("d", "e")])
    r = validate_two_thin(G2, X)
    assert {v["condition"] for v in r.violations} >= {"thin", "coverage"}
    thin = next(v for v in r.violations if v["condition"] == "thin")
    assert thin["witness"] == ["a", "b", "c"]
    cov = next(v for v in r.violations if v["condition"] == "coverage")
    assert cov["witness"] == ["d", "e"]
    with pytest.raises(UnknownVertexError):
        validate_two_thin(G2, TwoThinCover.of(["az"]))


def test_shared_sets():
    assert shared_set(TwoThinCover.of(["abc", "def"])) == set()
    D = cat.double_butterfly_entry()
    assert shared_set(D.cover) == {("u", "v")}


def test_cover_independence_edge_cases():
    # shared pairs forming K5
    verts = "abcde"
    clusters = [[x, y, f"p{x}{y}"] for x, y in complete_graph(verts).sorted_edges()]
    X = TwoThinCover.of(clusters + [[x, y, f"q{x}{y}"] for x, y in complete_graph(verts).sorted_edges()])
    G = build_graph(X.vertices(), [])
    assert not cover_independent(G, X)
    assert cover_independent(complete_graph("abc"), TwoThinCover.of(["abc"]))


def test_ie_single_cluster_is_rank():
    G = cat.octahedron()
    assert ie_count(G, TwoThinCover.of([G.vertices])) == generic_rank(G).rank == 12


def test_modified_octahedral_ie():
    e = cat.modified_octahedral_ring(7)
    d = ie_details(e.graph, e.cover)
    assert d.value == 77 and d.exact and e.graph.m == 70


def test_ie_prime():
    D = cat.double_butterfly_entry()
    g = D.annotations["gluing"]
    assert ie_prime(D.graph, D.cover, g) == 17
    assert ie_prime(D.graph, D.cover, []) == ie_count(D.graph, D.cover)
    assert ie_prime(D.graph, D.cover, ["u", "v"]) == ie_count(D.graph, D.cover)


def test_rank_sandwich(r7):
    for h in r7.hinges:
        c = rank_sandwich(r7.graph, r7.cover, h)
        assert c.implied and c.deterministic
        assert rank_sandwich_implied(r7.graph, r7.cover, h)
    k4 = cat.ring_of_k4(7)
    with pytest.raises(NotApplicableError):
        rank_sandwich(k4.graph, k4.cover, k4.hinges[0])
    oc = cat.modified_octahedral_ring(7)
    assert not rank_sandwich(oc.graph, oc.cover, oc.hinges[0]).implied


def test_safe_base_and_ear(r7):
    for h in r7.hinges:
        assert validate_safe_base(r7.graph, r7.cover, h).valid
    D = cat.double_butterfly_entry()
    c = validate_safe_ear(D.graph, D.cover, D.annotations["gluing"])
    assert c.valid and c.rank == 16 and c.ie_prime == 17
    # gluing set whose pairs with the shared set form a dependent graph: all six ear vertices
    bad = validate_safe_ear(D.graph, D.cover, ["a1'", "a2'", "b1'", "b2'", "u", "c"])
    assert not bad.valid and bad.witness


def test_invalid_cover_rejected():
    G = complete_graph("abcd")
    with pytest.raises(InvalidCoverError):
        ie_count(G, TwoThinCover.of(["abc"]))


def test_maximal_clusters_and_h1_rule():
    X = maximal_clusters([["a", "b"], ["a", "b", "c"], ["c", "d"]])
    assert sorted(map(sorted, X.clusters)) == [["a", "b", "c"], ["c", "d"]]
    G = complete_graph("abcd")
    X = TwoThinCover.of(["abcd"])
    G2 = henneberg1(G, ["a", "b", "c"], label="x")
    assert validate_two_thin(G2, extend_cover_henneberg1(G2, X, "x")).ok


def test_cover_json_roundtrip(r7):
    assert TwoThinCover.from_dict(r7.cover.to_dict()) == r7.cover


def test_trivial_split_spec(r7):
    a, b = r7.hinges[0]
    s = SplitSpec.trivial(r7.graph, a, b)
    assert not s.A2 and not s.B2
