"""Inductive constructions: Henneberg moves, k-sums, vertex splits,
nonedge-splits, glues, split-and-glue, rings, chains and hinge unions.

Every operation returns a new graph whose ``log`` ends with a provenance
record ``{"op": ..., "args": ..., "fresh": ...}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .graph import (
    DuplicateVertexError,
    Graph,
    GraphError,
    LoopEdgeError,
    UnknownVertexError,
    build_graph,
    fresh_label,
    identify_vertices,
    induced_edges,
    pair,
    union,
)


class ConstructionError(GraphError):
    pass


def _record(op: str, args: dict, fresh: dict | None = None) -> dict:
    return {"op": op, "args": args, "fresh": fresh or {}}


def _check_vertices(G: Graph, vs) -> None:
    missing = [v for v in vs if not G.has_vertex(v)]
    if missing:
        raise UnknownVertexError(f"vertices not in graph: {missing}")


# ---------------------------------------------------------------------------
# Henneberg moves, k-sums, vertex splits


def henneberg1(G: Graph, W: Sequence[str], label: str | None = None) -> Graph:
    W = list(W)
    if len(W) != 3 or len(set(W)) != 3:
        raise ConstructionError("Henneberg-I needs 3 distinct base vertices")
    _check_vertices(G, W)
    x = label or fresh_label(G, "h")
    if G.has_vertex(x):
        raise DuplicateVertexError(x)
    H = build_graph(list(G.vertices) + [x], list(G.edges) + [(x, w) for w in W])
    return Graph(H.vertices, H.edges, G.log + (_record("henneberg1", {"base": sorted(W)}, {"new": x}),))


def henneberg2(G: Graph, W: Sequence[str], e: tuple[str, str], label: str | None = None) -> Graph:
    W = list(W)
    if len(W) != 4 or len(set(W)) != 4:
        raise ConstructionError("Henneberg-II needs 4 distinct base vertices")
    _check_vertices(G, W)
    e = pair(*e)
    if not (e[0] in W and e[1] in W and G.has_edge(*e)):
        raise ConstructionError(f"{e} is not an edge inside the base set")
    x = label or fresh_label(G, "h")
    if G.has_vertex(x):
        raise DuplicateVertexError(x)
    H = build_graph(list(G.vertices) + [x], list(G.edges - {e}) + [(x, w) for w in W])
    rec = _record("henneberg2", {"base": sorted(W), "deleted": list(e)}, {"new": x})
    return Graph(H.vertices, H.edges, G.log + (rec,))


def _is_clique(G: Graph, S) -> bool:
    return all(G.has_edge(u, v) for u, v in itertools.combinations(S, 2))


def k_sum(G: Graph, H: Graph, identification: Mapping[str, str]) -> Graph:
    """Glue H onto G along a k-clique; ``identification`` maps H labels to G labels.

    Labels of H outside the identification must not occur in G.
    """
    k = len(identification)
    if k > 4:
        raise ConstructionError("k-sums are defined for k <= 4")
    if len(set(identification.values())) != k:
        raise ConstructionError("identification is not injective")
    _check_vertices(H, identification.keys())
    _check_vertices(G, identification.values())
    if not _is_clique(H, identification.keys()) or not _is_clique(G, identification.values()):
        raise ConstructionError("k-sum base sets must induce complete graphs")
    clash = (set(H.vertices) - set(identification)) & set(G.vertices)
    if clash:
        raise DuplicateVertexError(f"labels shared outside the identification: {sorted(clash)}")
    Hr = H.relabel(dict(identification))
    out = union(G, Hr)
    rec = _record("k_sum", {"k": k, "identification": dict(sorted(identification.items()))})
    return Graph(out.vertices, out.edges, G.log + (rec,))


def k_vertex_split(G: Graph, v: str, kept: Sequence[str], shared: Sequence[str] = (), label: str | None = None) -> Graph:
    """v keeps ``kept``; a new vertex v' takes the other neighbors, ``shared`` (k of the
    kept ones) and the edge (v, v')."""
    _check_vertices(G, [v])
    N = G.neighbors(v)
    kept, shared = set(kept), set(shared)
    if not kept <= N:
        raise ConstructionError("kept neighbors must be neighbors of v")
    if not shared <= kept:
        raise ConstructionError("shared neighbors must be among the kept ones")
    if len(shared) > 2:
        raise ConstructionError("k-vertex-splits are defined for k <= 2")
    x = label or fresh_label(G, v)
    if G.has_vertex(x):
        raise DuplicateVertexError(x)
    moved = N - kept
    edges = {e for e in G.edges if not (v in e and (set(e) - {v}) <= moved)}
    edges |= {pair(x, w) for w in moved | shared}
    edges.add(pair(v, x))
    rec = _record("k_vertex_split", {"vertex": v, "kept": sorted(kept), "shared": sorted(shared), "k": len(shared)}, {"new": x})
    H = build_graph(list(G.vertices) + [x], edges)
    return Graph(H.vertices, H.edges, G.log + (rec,))


# ---------------------------------------------------------------------------
# nonedge-split, glue, split-and-glue


@dataclass(frozen=True)
class SplitSpec:
    """Split of the nonedge (a, b): a's neighbors go to a1 (A1) or a2 (A2), likewise for b."""

    a: str
    b: str
    A1: frozenset = field(default_factory=frozenset)
    A2: frozenset = field(default_factory=frozenset)
    B1: frozenset = field(default_factory=frozenset)
    B2: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        for name in ("A1", "A2", "B1", "B2"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @classmethod
    def trivial(cls, G: Graph, a: str, b: str) -> "SplitSpec":
        return cls(a, b, G.neighbors(a), (), G.neighbors(b), ())

    def validate(self, G: Graph) -> None:
        _check_vertices(G, [self.a, self.b])
        if self.a == self.b:
            raise LoopEdgeError("split pair has equal endpoints")
        if G.has_edge(self.a, self.b):
            raise ConstructionError(f"({self.a}, {self.b}) is an edge; only nonedges can be split")
        for x, P, Q in ((self.a, self.A1, self.A2), (self.b, self.B1, self.B2)):
            if P & Q:
                raise ConstructionError(f"neighborhood partition of {x} is not disjoint")
            if P | Q != G.neighbors(x):
                raise ConstructionError(f"neighborhood partition of {x} does not cover N({x})")

    def names(self, G: Graph) -> dict[str, str]:
        """Labels of the four split vertices: keys a1, a2, b1, b2."""
        taken = set(G.vertices)
        out = {}
        for role, base in (("a1", self.a), ("a2", self.a), ("b1", self.b), ("b2", self.b)):
            out[role] = fresh_label(taken, base)
            taken.add(out[role])
        return out

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "A1": sorted(self.A1), "A2": sorted(self.A2),
                "B1": sorted(self.B1), "B2": sorted(self.B2)}


def nonedge_split(G: Graph, spec: SplitSpec) -> Graph:
    spec.validate(G)
    nm = spec.names(G)
    a, b = spec.a, spec.b
    where = {}
    for part, role in ((spec.A1, "a1"), (spec.A2, "a2")):
        for w in part:
            where[(a, w)] = nm[role]
    for part, role in ((spec.B1, "b1"), (spec.B2, "b2")):
        for w in part:
            where[(b, w)] = nm[role]
    edges = set()
    for u, v in G.edges:
        if u in (a, b) or v in (a, b):
            # (a, b) is a nonedge, so at most one endpoint is split
            x, w = (u, v) if u in (a, b) else (v, u)
            edges.add(pair(where[(x, w)], w))
        else:
            edges.add((u, v))
    verts = [v for v in G.vertices if v not in (a, b)] + list(nm.values())
    H = build_graph(verts, edges)
    return Graph(H.vertices, H.edges, G.log + (_record("nonedge_split", spec.to_dict(), nm),))


def glue(G: Graph, H: Graph, identification: Mapping[str, str]) -> Graph:
    """Identify gluing vertices of H (keys) with gluing vertices of G (values)."""
    if len(set(identification.values())) != len(identification):
        raise ConstructionError("glue identification is not injective")
    _check_vertices(H, identification.keys())
    _check_vertices(G, identification.values())
    clash = (set(H.vertices) - set(identification)) & set(G.vertices)
    if clash:
        raise DuplicateVertexError(f"graphs share labels outside the identification: {sorted(clash)}")
    out = union(G, H.relabel(dict(identification)))
    rec = _record("glue", {"identification": dict(sorted(identification.items()))})
    return Graph(out.vertices, out.edges, G.log + (rec,))


def split_and_glue(G: Graph, spec: SplitSpec, H: Graph, identification: Mapping[str, str]) -> Graph:
    """``identification`` maps gluing vertices of H to roles a1/a2/b1/b2 or to split labels."""
    nm = spec.names(G)
    ident = {h: nm.get(t, t) for h, t in identification.items()}
    bad = set(ident.values()) - set(nm.values())
    if bad:
        raise ConstructionError(f"gluing vertices {sorted(bad)} were not created by the split")
    Gs = nonedge_split(G, spec)
    return glue(Gs, H, ident)


# ---------------------------------------------------------------------------
# double butterfly


EAR_GLUING = ("a1'", "a2'", "b1'", "b2'")


def double_butterfly(labels: Mapping[str, str] | None = None) -> Graph:
    """Two butterflies glued on the nonedge (u, v); gluing vertices a1', a2', b1', b2'."""
    L = {k: k for k in ("a1'", "a2'", "b1'", "b2'", "u", "v", "c", "c'")}
    if labels:
        L.update(labels)
    a1, a2, b1, b2, u, v, c, c2 = (L[k] for k in ("a1'", "a2'", "b1'", "b2'", "u", "v", "c", "c'"))
    edges = [(c, a1), (c, b1), (c, u), (c, v), (c2, a2), (c2, b2), (c2, u), (c2, v)]
    edges += [(x, y) for x in (a1, a2, b1, b2) for y in (u, v)]
    return build_graph([a1, a2, b1, b2, u, v, c, c2], edges)


def ear_labels(G: Graph, base: Graph | None = None) -> dict[str, str]:
    """Fresh labels for the inner ear vertices u, v, c, c' avoiding those of G."""
    taken = set(G.vertices) | (set(base.vertices) if base is not None else set())
    out = {}
    for k in ("u", "v", "c", "c'"):
        out[k] = k if k not in taken else fresh_label(taken, k)
        taken.add(out[k])
    return out


def double_butterfly_sg(G: Graph, spec: SplitSpec, wiring: Mapping[str, str] | None = None) -> Graph:
    """Split-and-glue with a double-butterfly ear.

    ``wiring`` maps the split roles a1, a2, b1, b2 to the ear's gluing vertices
    a1', a2', b1', b2' (identity wiring by default).
    """
    wiring = dict(wiring or {"a1": "a1'", "a2": "a2'", "b1": "b1'", "b2": "b2'"})
    if sorted(wiring) != ["a1", "a2", "b1", "b2"] or sorted(wiring.values()) != sorted(EAR_GLUING):
        raise ConstructionError("wiring must be a bijection from a1,a2,b1,b2 to the ear's gluing vertices")
    nm = spec.names(G)
    inner = ear_labels(G, None)
    inner = {k: v for k, v in inner.items() if v not in nm.values()}
    H = double_butterfly(inner)
    ident = {wiring[role]: nm[role] for role in ("a1", "a2", "b1", "b2")}
    out = split_and_glue(G, spec, H, ident)
    rec = _record("double_butterfly_sg", {"split": spec.to_dict(), "wiring": dict(sorted(wiring.items()))},
                  {**nm, **{k: inner[k] for k in ("u", "v", "c", "c'")}})
    return Graph(out.vertices, out.edges, out.log + (rec,))


# ---------------------------------------------------------------------------
# rings and chains


@dataclass(frozen=True)
class HingeSpec:
    """Ordered hinge pairs (a, b) and (c, d) of a link."""

    first: tuple[str, str]
    second: tuple[str, str]

    def __post_init__(self):
        if len({*self.first, *self.second}) != 4:
            raise ConstructionError("hinge vertices of a link must be distinct")

    def markers(self, link: Graph) -> tuple[str, str]:
        return tuple("edge" if link.has_edge(*h) else "nonedge" for h in (self.first, self.second))


def _prefixed(links: Sequence[Graph], prefix: str):
    out = []
    width = len(str(len(links)))
    for i, L in enumerate(links, start=1):
        tag = f"{prefix}{str(i).zfill(width)}."
        out.append((tag, L.relabel({v: tag + v for v in L.vertices})))
    return out


def _assemble(links, hinges, closed: bool, prefix: str, op: str, extra_edges=()):
    m = len(links)
    if len(hinges) != m:
        raise ConstructionError("one hinge spec per link is required")
    hinges = [h if isinstance(h, HingeSpec) else HingeSpec(tuple(h[0]), tuple(h[1])) for h in hinges]
    for L, h in zip(links, hinges):
        _check_vertices(L, [*h.first, *h.second])
    pre = _prefixed(links, prefix)
    big = Graph((), frozenset())
    for _, L in pre:
        big = union(big, L)
    tag = [t for t, _ in pre]
    classes = []
    joints = list(range(m - 1)) + ([m - 1] if closed else [])
    for i in joints:
        j = (i + 1) % m
        c, d = hinges[i].second
        a, b = hinges[j].first
        classes += [[tag[i] + c, tag[j] + a], [tag[i] + d, tag[j] + b]]
    big = big.add_edges(_end_edges(tag, hinges, extra_edges))
    out, rep = identify_vertices(big, classes)
    clusters = [sorted({rep[t + v] for v in L.vertices}) for t, L in zip(tag, links)]
    hinge_pairs = [list(pair(rep[tag[i] + hinges[i].second[0]], rep[tag[i] + hinges[i].second[1]])) for i in joints]
    rec = _record(op, {"m": m, "markers": [list(h.markers(L)) for h, L in zip(hinges, links)]},
                  {"clusters": clusters, "hinges": hinge_pairs,
                   "ends": [list(pair(rep[tag[0] + hinges[0].first[0]], rep[tag[0] + hinges[0].first[1]])),
                            list(pair(rep[tag[-1] + hinges[-1].second[0]], rep[tag[-1] + hinges[-1].second[1]]))]})
    return Graph(out.vertices, out.edges, (rec,))


def _end_edges(tag, hinges, which):
    out = []
    if "first" in which:
        a, b = hinges[0].first
        out.append((tag[0] + a, tag[0] + b))
    if "last" in which:
        c, d = hinges[-1].second
        out.append((tag[-1] + c, tag[-1] + d))
    return out


def ring(links: Sequence[Graph], hinges: Sequence, prefix: str = "L") -> Graph:
    """Identify (a1,b1) with (c_m,d_m) and (c_i,d_i) with (a_{i+1},b_{i+1}).

    Link i's labels are prefixed ``L<i>.``; merged vertices keep the least label.
    The provenance record carries the link clusters and the hinge pairs.
    """
    if len(links) < 3:
        raise ConstructionError("a ring needs at least 3 links")
    return _assemble(links, hinges, True, prefix, "ring")


def chain(links: Sequence[Graph], hinges: Sequence, end_edges: bool = True, prefix: str = "L") -> Graph:
    """Open chain; with ``end_edges`` the end pairs (p,q) = (a1,b1) and (r,s) = (c_m,d_m) become edges."""
    if len(links) < 2:
        raise ConstructionError("a chain needs at least 2 links")
    return _assemble(links, hinges, False, prefix, "chain", ("first", "last") if end_edges else ())


def ring_data(G: Graph) -> dict:
    """Clusters and hinges recorded by the most recent ring/chain construction in G's log."""
    for rec in reversed(G.log):
        if rec["op"] in ("ring", "chain", "henneberg2_ring"):
            return rec["fresh"]
    raise ConstructionError("graph carries no ring provenance")


def henneberg2_ring(links: Sequence[Graph], hinges: Sequence, prefix: str = "L") -> Graph:
    """Per-link Henneberg-II on the hinge vertices, deleting each link's second hinge edge."""
    m = len(links)
    if m < 7:
        raise ConstructionError("the Henneberg-II ring construction needs m >= 7")
    hs = [h if isinstance(h, HingeSpec) else HingeSpec(tuple(h[0]), tuple(h[1])) for h in hinges]
    for L, h in zip(links, hs):
        if "nonedge" in h.markers(L):
            raise ConstructionError("every hinge must be an edge of its link")
    R = ring(links, hs, prefix)
    data = ring_data(R)
    G = R
    apexes = []
    for i, cl in enumerate(data["clusters"]):
        prev = data["hinges"][i - 1]
        cur = data["hinges"][i]
        W = sorted(set(prev) | set(cur))
        x = f"{prefix}{str(i + 1).zfill(len(str(m)))}.apex"
        G = henneberg2(G, W, tuple(cur), label=x)
        apexes.append(x)
    clusters = [sorted(set(cl) | {x}) for cl, x in zip(data["clusters"], apexes)]
    rec = _record("henneberg2_ring", {"m": m}, {"clusters": clusters, "hinges": data["hinges"], "apexes": apexes})
    return Graph(G.vertices, G.edges, G.log + (rec,))


def henneberg2_ring_hypotheses(links: Sequence[Graph], hinges: Sequence, model=None, seed: int | None = None) -> dict:
    """Oracle verdicts on the hypotheses of the Henneberg-II ring construction.

    ``strong`` holds the hypotheses actually relied on: the ring is independent,
    every link is rigid and every link minus its hinge edges is nucleation-free.
    ``advisory`` holds the weaker seed condition (after the per-link
    Henneberg-II move the deleted hinge edge is implied); it is reported only.
    """
    from .oracle import GENERIC3D, implied_nonedge, independence, is_nucleation_free, is_rigid

    model = model or GENERIC3D
    hs = [h if isinstance(h, HingeSpec) else HingeSpec(tuple(h[0]), tuple(h[1])) for h in hinges]
    R = ring(links, hs)
    rigid, nf, weak = [], [], []
    for L, h in zip(links, hs):
        rigid.append(is_rigid(L, model, seed=seed))
        nf.append(is_nucleation_free(L.remove_edges([h.first, h.second]), model, seed=seed))
        W = sorted({*h.first, *h.second})
        Lp = henneberg2(L, W, h.second, label=fresh_label(L, "apex"))
        weak.append(implied_nonedge(Lp, h.second, model, seed=seed))
    strong = {"ring_independent": bool(independence(R, model, seed=seed)[0]),
              "links_rigid": all(rigid), "links_minus_hinges_nucleation_free": all(nf)}
    return {"strong": strong, "strong_ok": all(strong.values()),
            "advisory": {"deleted_edge_implied_after_move": weak}}


def hinge_union(G1: Graph, G2: Graph, f: tuple[str, str]) -> Graph:
    u, v = f
    for G in (G1, G2):
        _check_vertices(G, [u, v])
        if G.has_edge(u, v):
            raise ConstructionError(f"{pair(u, v)} is an edge of an input graph")
    if G1.edges & G2.edges:
        raise ConstructionError("input graphs share edges")
    out = union(G1, G2)
    shared = sorted(set(G1.vertices) & set(G2.vertices))
    rec = _record("hinge_union", {"f": list(pair(u, v)), "shared_vertices": shared})
    return Graph(out.vertices, out.edges, G1.log + G2.log + (rec,))


def prefix_labels(G: Graph, prefix: str, keep: Sequence[str] = ()) -> Graph:
    keep = set(keep)
    return G.relabel({v: prefix + v for v in G.vertices if v not in keep})


# ---------------------------------------------------------------------------
# safe nonedge-splits and safe split-and-glue


class SafeSplitError(ConstructionError):
    pass


@dataclass
class SafeSplit:
    graph: Graph
    cover: "object"
    key_pairs: list
    names: dict
    primed: list

    @property
    def gluing(self) -> list[str]:
        return sorted({x for p in self.key_pairs for x in p})


def _primed_cluster(Gs: Graph, Xi: frozenset, spec: SplitSpec, nm: dict) -> frozenset:
    if spec.a not in Xi and spec.b not in Xi:
        return Xi
    W = set()
    for x, roles in ((spec.a, ("a1", "a2")), (spec.b, ("b1", "b2"))):
        if x in Xi:
            W |= {nm[r] for r in roles if Gs.neighbors(nm[r]) & Xi}
    return frozenset((Xi - {spec.a, spec.b}) | W)


def safe_nonedge_split(G: Graph, X, spec: SplitSpec) -> SafeSplit:
    """Nonedge-split checked against the safety conditions, with its split cover X^s."""
    from .covers import TwoThinCover, require_valid, shared_set, validate_two_thin, key_gluing_pairs

    require_valid(G, X)
    a, b = spec.a, spec.b
    S = shared_set(X)
    if pair(a, b) not in S or G.has_edge(a, b):
        raise SafeSplitError(f"{pair(a, b)} is not a shared nonedge of the cover")
    Gs = nonedge_split(G, spec)
    nm = spec.names(G)
    A, B = {nm["a1"], nm["a2"]}, {nm["b1"], nm["b2"]}
    primed = [_primed_cluster(Gs, Xi, spec, nm) for Xi in X.clusters]
    shared_nonedges = {e for e in S if not G.has_edge(*e)}
    for Xi, Xp in zip(X.clusters, primed):
        if any(e[0] in Xi and e[1] in Xi for e in shared_nonedges) and (A <= Xp or B <= Xp):
            raise SafeSplitError(f"condition (i) fails on cluster {sorted(Xi)}")
    for (Xi, Pi), (Xj, Pj) in itertools.combinations(zip(X.clusters, primed), 2):
        inter = Xi & Xj
        for x, other, T in ((a, b, A), (b, a, B)):
            if len(inter) == 2 and x in inter:
                (w,) = inter - {x}
                if w != other and pair(x, w) in shared_nonedges and (Pi & T) != (Pj & T):
                    raise SafeSplitError(f"condition (ii) fails on clusters {sorted(Xi)} and {sorted(Xj)}")
    retained = [Xp for Xp in primed if not (A <= Xp or B <= Xp) and len(Xp) >= 2]
    clusters = list(dict.fromkeys(retained))
    for Xp in primed:
        if A <= Xp or B <= Xp:
            for e in sorted(induced_edges(Gs, Xp)):
                if not any(e[0] in c and e[1] in c for c in clusters):
                    clusters.append(frozenset(e))
    Xs = TwoThinCover.of(clusters)
    rep = validate_two_thin(Gs, Xs)
    if not rep.ok:
        raise SafeSplitError(f"split cover is not 2-thin: {rep.violations[0]}")
    keys = sorted(key_gluing_pairs(Xs, nm.values()))
    if not keys:
        raise SafeSplitError("split cover has no key gluing pair")
    return SafeSplit(Gs, Xs, keys, nm, [sorted(p) for p in primed])


@dataclass
class SafeGlue:
    graph: Graph
    cover: "object"
    split: SafeSplit
    ear_map: dict
    ear_cover: "object"
    identified_pairs: list


def safe_split_and_glue(G: Graph, X, spec: SplitSpec, H: Graph, XH, gluing_H: Sequence[str],
                        pairing: Sequence[tuple[tuple[str, str], tuple[str, str]]] | None = None) -> SafeGlue:
    """Safe split of (G, X), then glue H so that key pairs of G^s meet key pairs of H.

    ``pairing`` lists ((x, y) in G^s, (x', y') in H) with x' glued to x and y' to y;
    split roles a1/a2/b1/b2 may be used for G^s vertices.  The induced cover is the
    family of maximal clusters of X^s and the relabeled X^H.
    """
    from .covers import key_gluing_pairs, maximal_clusters, require_valid, validate_two_thin

    require_valid(H, XH)
    ss = safe_nonedge_split(G, X, spec)
    nm = ss.names
    keys_G = {pair(*p) for p in ss.key_pairs}
    keys_H = key_gluing_pairs(XH, gluing_H)
    if pairing is None:
        raise ConstructionError("a pairing of key gluing pairs is required")
    pairing = [(tuple(nm.get(x, x) for x in pg), tuple(ph)) for pg, ph in pairing]
    if len(keys_G) != len(keys_H) or len(pairing) != len(keys_G):
        raise ConstructionError(f"key pair counts differ: split has {len(keys_G)}, ear has {len(keys_H)}")
    if {pair(*pg) for pg, _ in pairing} != keys_G or {pair(*ph) for _, ph in pairing} != keys_H:
        raise ConstructionError("pairing must be a bijection between the key gluing pairs")
    ident: dict[str, str] = {}
    for (x, y), (x2, y2) in pairing:
        for h, g in ((x2, x), (y2, y)):
            if ident.get(h, g) != g:
                raise ConstructionError(f"pairing sends {h} to two vertices")
            ident[h] = g
    if len(set(ident.values())) != len(ident):
        raise ConstructionError("pairing identification is not injective")
    if set(ident) - set(gluing_H):
        raise ConstructionError("pairing uses non-gluing vertices of the ear")
    taken = set(ss.graph.vertices)
    rename = dict(ident)
    for v in H.vertices:
        if v not in rename:
            new = v if v not in taken else fresh_label(taken, v)
            taken.add(new)
            rename[v] = new
    Hr = H.relabel(rename)
    out = union(ss.graph, Hr)
    XHr = XH.relabel(rename)
    Xp = maximal_clusters(list(ss.cover.clusters) + list(XHr.clusters))
    rep = validate_two_thin(out, Xp)
    if not rep.ok:
        raise ConstructionError(f"induced cover fails validation: {rep.violations[0]}")
    rec = _record("safe_split_and_glue", {"split": spec.to_dict(), "pairing": [[list(a), list(b)] for a, b in pairing]},
                  {**nm, "ear": dict(sorted(rename.items()))})
    g = Graph(out.vertices, out.edges, G.log + (rec,))
    return SafeGlue(g, Xp, ss, rename, XHr, [sorted(pg) for pg, _ in pairing])
