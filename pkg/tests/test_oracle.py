from fractions import Fraction as F
import itertools
import random

import pytest

from rigidkit import catalog as cat
from rigidkit.graph import build_graph, complete_graph, union
from rigidkit.oracle import (
    COFACTOR,
    GENERIC3D,
    Flex,
    Framework,
    MatroidModel,
    RankOracle,
    classify_triple,
    closure,
    cofactor_matrix,
    error_bound,
    exact_witness,
    flex_basis,
    flex_dim,
    generic_rank,
    implied_nonedge,
    independence,
    is_circuit,
    is_rigid,
    nucleations,
    nucleations_exhaustive,
    pair_rate,
    random_framework,
    resolve_seed,
    rigidity_matrix,
    stress_basis,
    stress_residuals,
    trivial_flexes,
)
from rigidkit.linalg import matrix_rank, nullspace


def test_single_edge_row():
    G = build_graph("uv", [("u", "v")])
    M = rigidity_matrix(Framework(G, 3, {"u": (0, 0, 0), "v": (1, 0, 0)}))
    assert M.to_rows() == [[-1, 0, 0, 1, 0, 0]]


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("model", [GENERIC3D, COFACTOR])
def test_complete_graph_ranks(n, model):
    K = complete_graph([f"x{i}" for i in range(n)])
    assert generic_rank(K, model).rank == 3 * n - 6


def test_cofactor_k5_k6():
    rng = random.Random(3)
    K5 = complete_graph("abcde")
    fw = Framework(K5, 2, {v: (F(rng.randint(-99, 99)), F(rng.randint(-99, 99))) for v in K5.vertices})
    M = cofactor_matrix(fw)
    assert matrix_rank(M) == 9 and len(nullspace(M, "left")) == 1
    K6 = complete_graph("abcdef")
    fw6 = Framework(K6, 2, {v: (F(rng.randint(-99, 99)), F(rng.randint(-99, 99))) for v in K6.vertices})
    assert matrix_rank(cofactor_matrix(fw6)) == 12
    with pytest.raises(ValueError):
        cofactor_matrix(Framework(K5, 2, {v: (0, 0) for v in K5.vertices}))


@pytest.mark.parametrize("m,want", [(5, 39), (6, 48), (7, 56)])
def test_ring_ranks(m, want):
    assert generic_rank(cat.ring_of_butterflies(m).graph).rank == want


def test_ring_independence_and_flex():
    R6, R7 = cat.ring_of_butterflies(6).graph, cat.ring_of_butterflies(7).graph
    ind, cert = independence(R6)
    assert ind and cert.exact and is_rigid(R6) and flex_dim(R6) == 0
    ind, cert = independence(R7)
    assert ind and cert.exact and flex_dim(R7) == 1


def test_double_banana_dependent(dbl_banana):
    ind, cert = independence(dbl_banana)
    assert not ind and cert.rank == 17 and dbl_banana.m == 18
    assert not cert.exact and cert.error_bound < 2**-40


def test_closure_examples(r7):
    K = complete_graph("abcde").remove_edges([("a", "b")])
    assert ("a", "b") in closure(K)
    assert closure(r7.graph) == set(r7.graph.edges) | set(r7.hinges)
    T = complete_graph("abc")
    assert closure(T) == set(T.edges)


def test_implied_nonedge(r7, dbl_banana):
    assert implied_nonedge(dbl_banana, ("a", "b"))
    assert all(implied_nonedge(r7.graph, h) for h in r7.hinges)
    two = union(complete_graph("abc"), complete_graph("xyz"))
    assert not implied_nonedge(two, ("a", "x"))


def test_circuits(dbl_banana):
    for model in (GENERIC3D, COFACTOR):
        assert is_circuit(complete_graph("abcde"), model)
    assert is_circuit(dbl_banana)
    pend = build_graph("abcdez", list(complete_graph("abcde").edges) + [("a", "z")])
    assert not is_circuit(pend)


def test_nucleations(r7, dbl_banana):
    assert nucleations(r7.graph) == []
    nb = nucleations(dbl_banana)
    assert sorted(map(sorted, nb)) == [["a", "b", "x1", "x2", "x3"], ["a", "b", "y1", "y2", "y3"]]
    assert nucleations(cat.ring_of_butterflies(6).graph, first_only=True)


@pytest.mark.parametrize("trial", range(6))
def test_nucleation_search_matches_exhaustive(trial):
    rng = random.Random(trial)
    n = rng.randint(6, 9)
    vs = [f"x{i}" for i in range(n)]
    edges = [e for e in itertools.combinations(vs, 2) if rng.random() < 0.6]
    G = build_graph(vs, edges)
    assert nucleations(G) == nucleations_exhaustive(G)
    assert nucleations(G, method="exhaustive") == nucleations_exhaustive(G)


def test_exact_witness_and_stresses():
    K = complete_graph("abcde")
    fw = random_framework(K, seed=1)
    B = stress_basis(fw)
    assert len(B) == 1 and all(B[0].values.values())
    assert all(not any(r) for r in stress_residuals(fw, B[0]).values())
    R = cat.ring_of_butterflies(7).graph
    w = exact_witness(R)
    assert w is not None and stress_basis(w) == []


def test_flexes_and_rates():
    T = complete_graph("abc")
    fw = Framework(T, 3, {"a": (0, 0, 0), "b": (1, 0, 0), "c": (0, 1, 0)})
    assert len(flex_basis(fw)) == 6
    for u in trivial_flexes(fw):
        assert pair_rate(fw, u, ("a", "b")) == 0
    zero = Flex(fw.hash(), {v: (0, 0, 0) for v in T.vertices})
    assert pair_rate(fw, zero, ("a", "c")) == 0


def test_four_bar_diagonals_opposite():
    # unit square in the plane, coned; the 1-dim nontrivial flex opens one diagonal and closes the other
    fw = cat.butterfly_framework("convex")
    nontrivial = None
    triv = trivial_flexes(fw)
    for u in flex_basis(fw):
        if pair_rate(fw, u, ("a", "b")) != 0:
            nontrivial = u
            break
    assert nontrivial is not None
    r1, r2 = pair_rate(fw, nontrivial, ("a", "b")), pair_rate(fw, nontrivial, ("c", "d"))
    assert r1 * r2 < 0
    assert all(pair_rate(fw, t, ("a", "b")) == 0 for t in triv)


def test_classify_triple_classes():
    for kind, want in cat.BUTTERFLY_EXPECTED.items():
        assert classify_triple(cat.butterfly_framework(kind), ("a", "b"), ("c", "d")) == want
    assert classify_triple(cat.rigid_framework(), ("a1", "b2"), ("c1", "c2")) == "degenerate"
    with pytest.raises(Exception):
        classify_triple(cat.rigid_framework(), ("a1", "b1"), ("c1", "c2"))


def test_pair_rate_rejects_foreign_flex():
    fw = cat.butterfly_framework("convex")
    other = cat.butterfly_framework("crossing")
    with pytest.raises(ValueError):
        pair_rate(fw, flex_basis(other)[0], ("a", "b"))


def test_seed_resolution(monkeypatch):
    monkeypatch.delenv("RIGID_SEED", raising=False)
    assert resolve_seed() == 20240601
    monkeypatch.setenv("RIGID_SEED", "7")
    assert resolve_seed() == 7 and resolve_seed(3) == 3


def test_determinism_and_certificates(r7):
    a = generic_rank(r7.graph, seed=11).to_json()
    b = generic_rank(r7.graph, seed=11).to_json()
    assert a == b
    assert error_bound(56, 2) < 2**-40
    c = RankOracle(r7.graph, seed=5).certificate()
    assert c.to_dict()["model"] == "generic3d" and not c.exact


def test_model_parse():
    assert MatroidModel.parse("generic3") is GENERIC3D
    with pytest.raises(ValueError):
        MatroidModel.parse("planar")
