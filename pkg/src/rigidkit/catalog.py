"""Named graphs and special-position frameworks.

Every builder is a pure function of its parameters (and seed, for
frameworks), so regenerating an entry is bit-identical.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Sequence

import networkx as nx

from .constructions import (
    SplitSpec,
    chain,
    double_butterfly,
    double_butterfly_sg,
    hinge_union,
    ring,
    ring_data,
)
from .covers import TwoThinCover, cover_independent, ie_details
from .graph import Graph, build_graph, complete_graph, identify_vertices, pair, union
from .oracle import (
    GENERIC3D,
    Framework,
    classify_triple,
    independence,
    resolve_seed,
    _rng,
)


class CatalogError(ValueError):
    pass


@dataclass
class CatalogEntry:
    name: str
    params: dict
    graph: Graph
    cover: TwoThinCover | None = None
    hinges: list = field(default_factory=list)
    annotations: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"name": self.name, "params": self.params, "graph": self.graph.to_dict(),
             "hinges": [list(h) for h in self.hinges], "annotations": self.annotations}
        if self.cover is not None:
            d["cover"] = self.cover.to_dict()
        return d


# ---------------------------------------------------------------------------
# small graphs

BUTTERFLY_HINGES = (("a", "b"), ("c", "d"))


def butterfly() -> Graph:
    """K5 on a..e minus the non-incident edges (a,b) and (c,d); a-c-b-d is the 4-cycle, e the apex."""
    return complete_graph("abcde").remove_edges(BUTTERFLY_HINGES)


def banana(x="a", y="b", others=("x1", "x2", "x3")) -> Graph:
    return complete_graph([x, y, *others]).remove_edges([(x, y)])


def double_banana() -> Graph:
    return union(banana(others=("x1", "x2", "x3")), banana(others=("y1", "y2", "y3")))


OCTAHEDRON_EDGES = [
    ("c1", "a1"), ("c1", "a2"), ("c1", "b1"), ("c1", "b2"),
    ("c2", "a1"), ("c2", "a2"), ("c2", "b1"), ("c2", "b2"),
    ("a1", "a2"), ("b1", "b2"), ("a1", "b1"), ("a2", "b2"),
]
OCTAHEDRON_DOUBLE_DASHED = (("a1", "b1"), ("a2", "b2"))
OCTAHEDRON_DASHED = (("c1", "c2"),)


def octahedron() -> Graph:
    return build_graph(["a1", "a2", "b1", "b2", "c1", "c2"], OCTAHEDRON_EDGES)


_ICOSA_ADJ = {
    1: (2, 3, 4, 5, 6), 2: (4, 5, 9, 10), 3: (4, 6, 8, 12), 4: (8, 9), 5: (6, 7, 10),
    6: (7, 12), 7: (10, 11, 12), 8: (9, 11, 12), 9: (10, 11), 10: (11,), 11: (12,),
}
ICOSAHEDRON_DOUBLE_DASHED = (("v1", "v2"), ("v3", "v4"), ("v5", "v6"))
ICOSAHEDRON_DASHED = (("v9", "v12"), ("v3", "v11"), ("v4", "v6"))


def icosahedron() -> Graph:
    edges = [(f"v{i}", f"v{j}") for i, js in _ICOSA_ADJ.items() for j in js]
    return build_graph([f"v{i}" for i in range(1, 13)], edges)


def icosahedral_link(deleted: Sequence[tuple[str, str]]) -> Graph:
    return icosahedron().remove_edges(deleted)


# ---------------------------------------------------------------------------
# rings


def _check_range(name, m, lo, hi=None):
    if not isinstance(m, int) or m < lo or (hi is not None and m > hi):
        rng = f"[{lo}, {hi}]" if hi is not None else f">= {lo}"
        raise CatalogError(f"{name}: m must be an integer in {rng}, got {m!r}")


def _ring_entry(name, params, links, hinges, annotations=None) -> CatalogEntry:
    R = ring(links, hinges)
    data = ring_data(R)
    return CatalogEntry(name, params, R, TwoThinCover.of(data["clusters"]),
                        [tuple(h) for h in data["hinges"]], annotations or {})


def ring_of_butterflies(m: int = 7) -> CatalogEntry:
    _check_range("ring_of_butterflies", m, 3)
    return _ring_entry("ring_of_butterflies", {"m": m}, [butterfly()] * m, [BUTTERFLY_HINGES] * m)


def ring_of_k4(m: int = 6) -> CatalogEntry:
    _check_range("ring_of_k4", m, 3)
    return _ring_entry("ring_of_k4", {"m": m}, [complete_graph("abcd")] * m, [BUTTERFLY_HINGES] * m)


def octahedral_ring(m: int = 7) -> CatalogEntry:
    """Ring of octahedra whose hinges are the (kept) double-dashed edges."""
    _check_range("octahedral_ring", m, 3)
    return _ring_entry("octahedral_ring", {"m": m}, [octahedron()] * m, [OCTAHEDRON_DOUBLE_DASHED] * m)


def modified_octahedral_ring(m: int = 7) -> CatalogEntry:
    _check_range("modified_octahedral_ring", m, 7, 10)
    link = octahedron().remove_edges(OCTAHEDRON_DOUBLE_DASHED)
    return _ring_entry("modified_octahedral_ring", {"m": m}, [link] * m, [OCTAHEDRON_DOUBLE_DASHED] * m)


MODIFIED_ICOSA_HINGES = (("v1", "v2"), ("v9", "v12"))


def modified_icosahedral_ring(m: int = 7) -> CatalogEntry:
    _check_range("modified_icosahedral_ring", m, 7, 10)
    link = icosahedral_link([("v1", "v2")])
    return _ring_entry("modified_icosahedral_ring", {"m": m}, [link] * m, [MODIFIED_ICOSA_HINGES] * m)


def _network(links: Mapping[str, Graph], joints: Sequence[Sequence[tuple[str, tuple[str, str]]]]):
    """Prefix each link's labels with ``<name>.`` and identify the listed hinge pairs."""
    big = Graph((), frozenset())
    for nm, L in links.items():
        big = union(big, L.relabel({v: f"{nm}.{v}" for v in L.vertices}))
    classes: list[set] = []
    for joint in joints:
        first = [f"{n}.{p[0]}" for n, p in joint]
        second = [f"{n}.{p[1]}" for n, p in joint]
        classes += [set(first), set(second)]
    # merge classes that overlap (a vertex may sit in several joints)
    merged: list[set] = []
    for c in classes:
        hit = [d for d in merged if d & c]
        for d in hit:
            merged.remove(d)
            c = c | d
        merged.append(c)
    G, rep = identify_vertices(big, merged)
    clusters = [sorted({rep[f"{nm}.{v}"] for v in L.vertices}) for nm, L in links.items()]
    hinges = [pair(rep[f"{joint[0][0]}.{joint[0][1][0]}"], rep[f"{joint[0][0]}.{joint[0][1][1]}"]) for joint in joints]
    return G, clusters, hinges


def two_icosahedral_sharing_rings(lower_hinges: Sequence[tuple[str, str]] = (("v1", "v2"), ("v3", "v4"))) -> CatalogEntry:
    """Two modified icosahedral 7-rings sharing the consecutive links T (top) and L (lower).

    L deletes ``lower_hinges`` (one per ring) and meets T on its (v9,v12);
    T deletes (v1,v2) toward L and meets the last link of each ring on its (v9,v12).
    """
    h_left, h_right = (tuple(h) for h in lower_hinges)
    if set(h_left) & set(h_right) or set(h_left + h_right) & {"v9", "v12"}:
        raise CatalogError("hinges on the lower shared link must be vertex-disjoint and avoid (v9,v12)")
    ico = icosahedron()
    for h in (h_left, h_right):
        if not ico.has_edge(*h):
            raise CatalogError(f"{h} is not an icosahedron edge")
    plain = icosahedral_link([("v1", "v2")])
    links = {"T": plain, "L": icosahedral_link([h_left, h_right])}
    for side in "lr":
        for i in range(1, 6):
            links[f"{side}{i}"] = plain
    V1, V9 = ("v1", "v2"), ("v9", "v12")
    joints = [[("T", V1), ("L", V9)]]
    for side, h in (("l", h_left), ("r", h_right)):
        joints.append([("L", h), (f"{side}1", V1)])
        for i in range(1, 5):
            joints.append([(f"{side}{i}", V9), (f"{side}{i + 1}", V1)])
    joints.append([("l5", V9), ("r5", V9), ("T", V9)])
    G, clusters, hinges = _network(links, joints)
    return CatalogEntry("two_icosahedral_sharing_rings", {"lower_hinges": [list(h_left), list(h_right)]}, G,
                        TwoThinCover.of(clusters), hinges,
                        {"links": list(links), "link_clusters": clusters,
                         "interpretation": "hinge assignment on shared links"})


G13_HINGES = (("v1", "v2"), ("v3", "v4"), ("v5", "v6"), ("v9", "v12"))
G24_HINGES = (("v1", "v2"), ("v9", "v12"), ("v3", "v11"), ("v4", "v6"))


def four_icosahedral_sharing_rings() -> CatalogEntry:
    """Four 8-link rings; ring i runs G_i, three butterflies, G_{i+1}, three butterflies.

    G_i uses its first two hinges in ring i-1 and its last two in ring i.
    """
    hs = {1: G13_HINGES, 2: G24_HINGES, 3: G13_HINGES, 4: G24_HINGES}
    for h in hs.values():
        if len({x for p in h for x in p}) != 8:
            raise CatalogError("no two hinges of a link may share a vertex")
    links = {}
    for i in range(1, 5):
        deleted = [h for h in hs[i] if icosahedron().has_edge(*h)]
        links[f"G{i}"] = icosahedral_link(deleted)
    for i in range(1, 5):
        for k in range(1, 7):
            links[f"B{i}{k}"] = butterfly()
    A, C = BUTTERFLY_HINGES
    joints = []
    for i in range(1, 5):
        j = i % 4 + 1
        out1, out2 = hs[i][2], hs[i][3]
        in1, in2 = hs[j][0], hs[j][1]
        path1 = [f"B{i}{k}" for k in (1, 2, 3)]
        path2 = [f"B{i}{k}" for k in (4, 5, 6)]
        joints.append([(f"G{i}", out1), (path1[0], A)])
        joints += [[(path1[k], C), (path1[k + 1], A)] for k in range(2)]
        joints.append([(path1[-1], C), (f"G{j}", in1)])
        joints.append([(f"G{j}", in2), (path2[0], A)])
        joints += [[(path2[k], C), (path2[k + 1], A)] for k in range(2)]
        joints.append([(path2[-1], C), (f"G{i}", out2)])
    G, clusters, hinges = _network(links, joints)
    verts = [x for h in hinges for x in h]
    if len(verts) != len(set(verts)):
        raise CatalogError("hinges share a vertex")
    return CatalogEntry("four_icosahedral_sharing_rings", {}, G, TwoThinCover.of(clusters), hinges,
                        {"links": list(links), "link_clusters": clusters,
                         "interpretation": "hinge-to-ring assignment of G1..G4"})


def double_ring_of_butterflies(m: int = 7) -> CatalogEntry:
    """Two rings of butterflies sharing (only) the endpoints of one hinge."""
    _check_range("double_ring_of_butterflies", m, 3)
    R1 = ring([butterfly()] * m, [BUTTERFLY_HINGES] * m, prefix="P")
    R2 = ring([butterfly()] * m, [BUTTERFLY_HINGES] * m, prefix="Q")
    h1 = ring_data(R1)["hinges"][-1]
    h2 = ring_data(R2)["hinges"][-1]
    R2 = R2.relabel({h2[0]: h1[0], h2[1]: h1[1]})
    G = hinge_union(R1, R2, tuple(h1))
    return CatalogEntry("double_ring_of_butterflies", {"m": m}, G, None, [tuple(h1)], {"shared_hinge": list(h1)})


def tight_double_ring(extra_edges: Sequence[tuple[str, str]], m: int = 7) -> CatalogEntry:
    """Two 7-rings sharing a hinge plus two user-supplied edges; tightness is validated."""
    base = double_ring_of_butterflies(m)
    extra = [pair(*e) for e in extra_edges]
    if len(extra) != 2:
        raise CatalogError("exactly two added edges are required")
    for e in extra:
        if not (base.graph.has_vertex(e[0]) and base.graph.has_vertex(e[1])) or base.graph.has_edge(*e):
            raise CatalogError(f"{e} is not a nonedge of the double ring")
    G = base.graph.add_edges(extra)
    return CatalogEntry("tight_double_ring", {"m": m, "extra_edges": [list(e) for e in extra]}, G, None,
                        base.hinges, {"tight": is_tight(G)})


def max_excess(G: Graph, forced: Sequence[str] = ()) -> int:
    """max |E(S)| - 3|S| over vertex sets S containing ``forced`` (a min-cut computation)."""
    D = nx.DiGraph()
    for i, e in enumerate(G.sorted_edges()):
        D.add_edge("s", ("e", i), capacity=1)
        D.add_edge(("e", i), ("v", e[0]))
        D.add_edge(("e", i), ("v", e[1]))
    for v in G.vertices:
        D.add_edge(("v", v), "t", capacity=3)
    for v in forced:
        D.add_edge("s", ("v", v))
    cut, _ = nx.minimum_cut(D, "s", "t")
    return G.m - cut


def is_tight(G: Graph) -> bool:
    """|E| = 3|V| - 6 and |E(S)| <= 3|S| - 6 for every S with |S| >= 3."""
    if G.m != 3 * G.n - 6:
        return False
    # a violating S has >= 3|S| - 5 edges, hence contains a path x - w - y
    adj = G.adjacency()
    seen = set()
    for w in G.vertices:
        for x, y in itertools.combinations(sorted(adj[w]), 2):
            T = frozenset((x, w, y))
            if T in seen:
                continue
            seen.add(T)
            if max_excess(G, sorted(T)) > -6:
                return False
    return True


def crapo_chain(m: int | None = None, model=GENERIC3D, seed: int | None = None, max_m: int = 8) -> CatalogEntry:
    """Chain of butterflies whose end pairs are edges.

    Without ``m`` the smallest circuit chain with m >= 3 links is returned
    (m = 2 is the double banana); the scan is recorded in the annotations.
    """
    from .oracle import is_circuit

    def build(k):
        return chain([butterfly()] * k, [BUTTERFLY_HINGES] * k)

    scan = []
    if m is None:
        for k in range(3, max_m + 1):
            C = build(k)
            circ = is_circuit(C, model, seed=seed)
            scan.append({"m": k, "circuit": circ})
            if circ:
                m = k
                break
        else:
            raise CatalogError("no circuit chain found in the scanned range")
    else:
        _check_range("crapo_chain", m, 2)
    C = build(m)
    data = ring_data(C)
    return CatalogEntry("crapo_chain", {"m": m}, C, TwoThinCover.of(data["clusters"]),
                        [tuple(h) for h in data["hinges"]], {"ends": data["ends"], "scan": scan})


def tay_chain(k: int = 2) -> CatalogEntry:
    """Chain C(G1, G2) with G1 a chain of k butterflies ending in the edge (p,q)
    and G2 its mirror image ending in (r,s); (a1,b1) is the middle hinge."""
    _check_range("tay_chain", k, 1)
    C = chain([butterfly()] * (2 * k), [BUTTERFLY_HINGES] * (2 * k))
    data = ring_data(C)
    (p, q), (r, s) = data["ends"]
    a1, b1 = data["hinges"][k - 1]
    return CatalogEntry("tay_chain", {"k": k}, C, TwoThinCover.of(data["clusters"]),
                        [tuple(h) for h in data["hinges"]],
                        {"p": p, "q": q, "r": r, "s": s, "a1": a1, "b1": b1})


def safe_pipeline_base() -> CatalogEntry:
    """R7 with a K4 1-summed at a hinge vertex a; the K4 is a cluster of its own."""
    R = ring_of_butterflies(7)
    a, b = R.hinges[-1]
    K = build_graph([a, "x", "y", "z"], itertools.combinations([a, "x", "y", "z"], 2))
    G = union(R.graph, K)
    cover = TwoThinCover.of(list(R.cover.clusters) + [K.vertices])
    return CatalogEntry("safe_pipeline_base", {}, G, cover, R.hinges, {"split": [a, b]})


def safe_pipeline_split(entry: CatalogEntry | None = None) -> SplitSpec:
    """a's edges in the last link and x go to a1, those in the first link and y, z to a2; b keeps all on b1."""
    entry = entry or safe_pipeline_base()
    G = entry.graph
    a, b = entry.annotations["split"]
    clusters = entry.cover.clusters
    last = next(c for c in clusters if a in c and b in c and any(v.startswith("L7.") for v in c))
    Na = G.neighbors(a)
    A1 = (Na & last) | {"x"}
    return SplitSpec(a, b, A1, Na - A1, G.neighbors(b), ())


def safe_pipeline_ear() -> CatalogEntry:
    """Two K5's minus (alpha,beta),(beta,u) and (gamma,beta),(beta,u), sharing beta and u."""
    C1 = complete_graph(["alpha", "beta", "u", "v", "c"]).remove_edges([("alpha", "beta"), ("beta", "u")])
    C2 = complete_graph(["gamma", "beta", "u", "w", "c'"]).remove_edges([("gamma", "beta"), ("beta", "u")])
    H = union(C1, C2)
    return CatalogEntry("safe_pipeline_ear", {}, H, TwoThinCover.of([C1.vertices, C2.vertices]), [],
                        {"gluing": ["alpha", "beta", "gamma"]})


def double_butterfly_entry() -> CatalogEntry:
    H = double_butterfly()
    cover = TwoThinCover.of([["a1'", "b1'", "u", "v", "c"], ["a2'", "b2'", "u", "v", "c'"]])
    return CatalogEntry("double_butterfly", {}, H, cover, [("u", "v")],
                        {"gluing": ["a1'", "a2'", "b1'", "b2'"]})


# ---------------------------------------------------------------------------
# registry

def _simple(name, fn, **ann):
    def build():
        return CatalogEntry(name, {}, fn(), None, [], dict(ann))
    return build


GRAPHS: dict[str, Callable[..., CatalogEntry]] = {
    "butterfly": lambda: CatalogEntry("butterfly", {}, butterfly(), None, list(BUTTERFLY_HINGES)),
    "double_butterfly": double_butterfly_entry,
    "double_banana": lambda: CatalogEntry("double_banana", {}, double_banana(), None, [("a", "b")]),
    "k5": _simple("k5", lambda: complete_graph("abcde")),
    "octahedron": lambda: CatalogEntry("octahedron", {}, octahedron(), None, list(OCTAHEDRON_DOUBLE_DASHED),
                                       {"dashed": [list(p) for p in OCTAHEDRON_DASHED]}),
    "icosahedron": lambda: CatalogEntry("icosahedron", {}, icosahedron(), None, list(ICOSAHEDRON_DOUBLE_DASHED),
                                        {"dashed": [list(p) for p in ICOSAHEDRON_DASHED]}),
    "icosahedral_link_one": lambda: CatalogEntry("icosahedral_link_one", {}, icosahedral_link([("v1", "v2")]),
                                                 None, list(G24_HINGES)),
    "icosahedral_link_three": lambda: CatalogEntry("icosahedral_link_three", {},
                                                   icosahedral_link(ICOSAHEDRON_DOUBLE_DASHED), None, list(G13_HINGES)),
    "ring_of_butterflies": ring_of_butterflies,
    "ring_of_k4": ring_of_k4,
    "octahedral_ring": octahedral_ring,
    "modified_octahedral_ring": modified_octahedral_ring,
    "modified_icosahedral_ring": modified_icosahedral_ring,
    "two_icosahedral_sharing_rings": two_icosahedral_sharing_rings,
    "four_icosahedral_sharing_rings": four_icosahedral_sharing_rings,
    "double_ring_of_butterflies": double_ring_of_butterflies,
    "crapo_chain": crapo_chain,
    "tay_chain": tay_chain,
    "safe_pipeline_base": safe_pipeline_base,
    "safe_pipeline_ear": safe_pipeline_ear,
}

SEED_GRAPHS = ("modified_octahedral_ring", "modified_icosahedral_ring",
               "two_icosahedral_sharing_rings", "four_icosahedral_sharing_rings")


def named_graph(name: str, **params) -> CatalogEntry:
    try:
        fn = GRAPHS[name]
    except KeyError:
        raise CatalogError(f"unknown catalog entry {name!r}") from None
    try:
        return fn(**params)
    except TypeError as exc:
        raise CatalogError(f"bad parameters for {name}: {exc}") from None


def seed_verdicts(entry: CatalogEntry, model=GENERIC3D, seed: int | None = None) -> dict:
    """Machine-checked safe-base data for a seed entry (nothing is assumed)."""
    G, X = entry.graph, entry.cover
    ind, cert = independence(G, model, seed=seed)
    ie = ie_details(G, X, model, seed=seed)
    r = G.m if ind else cert.rank
    return {"independent": bool(ind), "independence_exact": cert.exact, "edges": G.m, "rank": r,
            "cover_independent": cover_independent(G, X, model, seed), "ie": ie.value,
            "ie_exact": ie.exact, "rank_equals_ie": r == ie.value}


# ---------------------------------------------------------------------------
# frameworks

F = Fraction


def _q(*xs):
    return tuple(F(x) for x in xs)


def _rand_point(rng: random.Random, lo=-50, hi=50, den=7):
    return tuple(F(rng.randint(lo, hi), rng.randint(1, den)) for _ in range(3))


BUTTERFLY_PLANAR = {
    # 4-cycle a - c - b - d; hinges (a,b) and (c,d) are its diagonals
    "convex": {"a": (0, 0), "c": (1, 0), "b": (1, 1), "d": (0, 1)},
    "pseudo": {"a": (0, 0), "c": (4, 0), "b": (2, 3), "d": (2, 1)},
    "crossing": {"a": (0, 0), "c": (1, 1), "b": (1, 0), "d": (0, 1)},
}
BUTTERFLY_EXPECTED = {"convex": "negative", "pseudo": "positive", "crossing": "negative"}


def butterfly_framework(kind: str = "convex", seed: int | None = None, attempts: int = 20) -> Framework:
    """Coned planar 4-cycle; accepted only once classify_triple confirms the expected sign."""
    if kind not in BUTTERFLY_PLANAR:
        raise CatalogError(f"unknown butterfly framework {kind!r}")
    G = butterfly()
    seed = resolve_seed(seed)
    for t in range(attempts):
        rng = _rng(seed, "butterfly", kind, t)
        coords = {v: _q(x, y, 0) for v, (x, y) in BUTTERFLY_PLANAR[kind].items()}
        if t:
            # small rational perturbations of the planar points
            coords = {v: (p[0] + F(rng.randint(-3, 3), 64), p[1] + F(rng.randint(-3, 3), 64), p[2])
                      for v, p in coords.items()}
        coords["e"] = (F(rng.randint(-9, 9), 7), F(rng.randint(-9, 9), 7), F(rng.randint(1, 9), 3))
        fw = Framework(G, 3, coords)
        if classify_triple(fw, *BUTTERFLY_HINGES) == BUTTERFLY_EXPECTED[kind]:
            return fw
    raise CatalogError(f"no {kind} butterfly framework with the expected sign class was found")


def rigid_framework(seed: int | None = None) -> Framework:
    """Octahedron at seeded random rational points (generically rigid, isostatic)."""
    rng = _rng(resolve_seed(seed), "rigid")
    G = octahedron()
    return Framework(G, 3, {v: _rand_point(rng) for v in G.vertices})


class FrameworkError(ValueError):
    pass


def hinged_double_butterfly_framework(G: Graph, spec: SplitSpec, wiring: Mapping[str, str] | None = None,
                                      seed: int | None = None):
    """Double-butterfly split-and-glue together with its hinged framework.

    Base vertices other than a, b sit at seeded random rationals; q_a = (1,0,0),
    q_b = (1,1,0).  Returns (graph, framework, labels).
    """
    wiring = dict(wiring or {"a1": "a1'", "a2": "a2'", "b1": "b1'", "b2": "b2'"})
    Gp = double_butterfly_sg(G, spec, wiring)
    rec = Gp.log[-1]
    names = rec["fresh"]
    inv = {ear: role for role, ear in wiring.items()}
    # each butterfly needs one split vertex of a and one of b; both squares must agree
    sides = []
    for x, y in (("a1'", "b1'"), ("a2'", "b2'")):
        rx, ry = inv[x][0], inv[y][0]
        if {rx, ry} != {"a", "b"}:
            raise FrameworkError(f"ear pair ({x}, {y}) is glued to {inv[x]}, {inv[y]}; no square exists")
        sides.append(rx == "a")
    if sides[0] != sides[1]:
        raise FrameworkError("the two butterflies of the ear would need opposite squares")
    qa, qb = _q(1, 0, 0), _q(1, 1, 0)
    pu, pv = _q(0, 0, 0), _q(0, 1, 0)
    if not sides[0]:
        pu, pv = pv, pu
    rng = _rng(resolve_seed(seed), "hinged", G.to_json())
    coords = {}
    for v in G.vertices:
        if v not in (spec.a, spec.b):
            coords[v] = _rand_point(rng)
    coords[names["a1"]] = coords[names["a2"]] = qa
    coords[names["b1"]] = coords[names["b2"]] = qb
    coords[names["u"]], coords[names["v"]] = pu, pv
    coords[names["c"]] = _q(F(1, 2), F(1, 2), 1)
    coords[names["c'"]] = _q(F(1, 2), F(1, 2), -1)
    base = {v: p for v, p in coords.items() if G.has_vertex(v)}
    base[spec.a], base[spec.b] = qa, qb
    return Gp, Framework(Gp, 3, coords), {**names, "base_framework": Framework(G, 3, base)}


def tay_chain_framework(kind: str = "symmetric", z: Fraction | int = 2, k: int = 2, seed: int | None = None):
    """Special frameworks of the Tay chain.

    ``symmetric``: invariant under the half-turn (x,y,z) -> (-x,-y,z), with the
    middle hinge a1, b1 on the z-axis and a1 at height ``z``.
    ``collapsed``: every neighbor of p or q sits at one point v with p, q, v an
    isosceles right triangle; likewise for r, s and a point u.
    """
    entry = tay_chain(k)
    C, ann = entry.graph, entry.annotations
    rng = _rng(resolve_seed(seed), "tay", kind, k)
    if kind == "symmetric":
        sigma = _chain_reversal(entry)
        coords = {}
        for v in C.vertices:
            if v in coords:
                continue
            w = sigma[v]
            if w == v:
                coords[v] = _q(0, 0, z) if v == ann["a1"] else _q(0, 0, -4)
            else:
                p = _rand_point(rng)
                coords[v] = p
                coords[w] = (-p[0], -p[1], p[2])
        if coords[ann["a1"]] == coords[ann["b1"]]:
            raise FrameworkError("a1 and b1 coincide")
        return Framework(C, 3, coords), ann
    if kind == "collapsed":
        p, q, r, s = ann["p"], ann["q"], ann["r"], ann["s"]
        Npq = (C.neighbors(p) | C.neighbors(q)) - {p, q}
        Nrs = (C.neighbors(r) | C.neighbors(s)) - {r, s}
        if {ann["a1"], ann["b1"]} & Npq:
            raise FrameworkError("a1 or b1 is adjacent to p or q")
        coords = {v: _rand_point(rng) for v in C.vertices}
        coords[p], coords[q] = _q(0, 0, 0), _q(2, 0, 0)
        for x in Npq:
            coords[x] = _q(1, 1, 0)
        coords[r], coords[s] = _q(10, 0, 3), _q(12, 0, 3)
        for x in Nrs:
            coords[x] = _q(11, 1, 3)
        return Framework(C, 3, coords), ann
    raise CatalogError(f"unknown Tay framework {kind!r}")


def _chain_reversal(entry: CatalogEntry) -> dict:
    """The automorphism reversing a chain of butterflies (a<->c, b<->d within links)."""
    C = entry.graph
    clusters = [sorted(c) for c in entry.cover.clusters]
    m = len(clusters)
    tau = {"a": "c", "b": "d", "c": "a", "d": "b", "e": "e"}
    width = len(str(m))
    # reconstruct the identification used by chain(): link i labels are L<i>.x
    rep = {}
    for i in range(1, m + 1):
        for x in "abcde":
            rep[(i, x)] = f"L{str(i).zfill(width)}.{x}"
    for i in range(1, m):
        rep[(i + 1, "a")] = rep[(i, "c")]
        rep[(i + 1, "b")] = rep[(i, "d")]
    sigma = {}
    for i in range(1, m + 1):
        for x in "abcde":
            sigma[rep[(i, x)]] = rep[(m + 1 - i, tau[x])]
    assert set(sigma) == set(C.vertices)
    for u, v in C.edges:
        if not C.has_edge(sigma[u], sigma[v]):
            raise FrameworkError("chain reversal is not an automorphism")
    return sigma


FRAMEWORKS = {
    "butterfly_convex": lambda seed=None: butterfly_framework("convex", seed),
    "butterfly_pseudo": lambda seed=None: butterfly_framework("pseudo", seed),
    "butterfly_crossing": lambda seed=None: butterfly_framework("crossing", seed),
    "rigid_octahedron": lambda seed=None: rigid_framework(seed),
    "tay_symmetric": lambda seed=None, z=2: tay_chain_framework("symmetric", z, seed=seed)[0],
    "tay_collapsed": lambda seed=None: tay_chain_framework("collapsed", seed=seed)[0],
    "hinged_double_butterfly_r7": lambda seed=None: r7_hinged_framework(seed)[1],
}


def r7_trivial_split() -> tuple[CatalogEntry, SplitSpec]:
    R = ring_of_butterflies(7)
    a, b = R.hinges[-1]
    return R, SplitSpec.trivial(R.graph, a, b)


def r7_hinged_framework(seed: int | None = None):
    R, spec = r7_trivial_split()
    return hinged_double_butterfly_framework(R.graph, spec, seed=seed)


def named_framework(name: str, **params) -> Framework:
    try:
        fn = FRAMEWORKS[name]
    except KeyError:
        raise CatalogError(f"unknown framework {name!r}") from None
    return fn(**params)
