"""Labeled simple graphs.

Graphs are immutable.  Construction operations never mutate their input;
they return a new :class:`Graph` whose ``log`` carries the provenance
records of every operation that produced it.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Base class for graph validation errors."""


class DuplicateVertexError(GraphError):
    pass


class LoopEdgeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class DanglingEndpointError(GraphError):
    pass


class UnknownVertexError(GraphError):
    pass


def pair(u: str, v: str) -> tuple[str, str]:
    """Canonical unordered pair (endpoints sorted)."""
    if u == v:
        raise LoopEdgeError(f"pair with equal endpoints: {u!r}")
    return (u, v) if u < v else (v, u)


def _natural_key(label: str):
    # "L10.a" sorts after "L9.a"; keeps ring links contiguous in column order.
    parts = []
    for chunk in _split_digits(label):
        parts.append((0, int(chunk), "") if chunk.isdigit() else (1, 0, chunk))
    return parts


def _split_digits(s: str):
    out, cur, isdig = [], "", None
    for ch in s:
        d = ch.isdigit()
        if cur and d != isdig:
            out.append(cur)
            cur = ""
        cur += ch
        isdig = d
    if cur:
        out.append(cur)
    return out


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    log: tuple = field(default=(), compare=False, repr=False)

    # -- basic queries -------------------------------------------------
    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_vertex(self, v: str) -> bool:
        return v in self._vset

    def has_edge(self, u: str, v: str) -> bool:
        return u != v and pair(u, v) in self.edges

    @property
    def _vset(self) -> frozenset[str]:
        vs = self.__dict__.get("_vs")
        if vs is None:
            vs = frozenset(self.vertices)
            object.__setattr__(self, "_vs", vs)
        return vs

    def neighbors(self, v: str) -> set[str]:
        adj = self.adjacency()
        if v not in adj:
            raise UnknownVertexError(v)
        return set(adj[v])

    def adjacency(self) -> dict[str, frozenset[str]]:
        adj = self.__dict__.get("_adj")
        if adj is None:
            tmp: dict[str, set[str]] = {v: set() for v in self.vertices}
            for u, v in self.edges:
                tmp[u].add(v)
                tmp[v].add(u)
            adj = {v: frozenset(s) for v, s in tmp.items()}
            object.__setattr__(self, "_adj", adj)
        return adj

    def degree(self, v: str) -> int:
        return len(self.adjacency()[v])

    def sorted_edges(self) -> list[tuple[str, str]]:
        return sorted(self.edges)

    def with_log(self, record: dict) -> "Graph":
        return Graph(self.vertices, self.edges, self.log + (record,))

    def __repr__(self) -> str:
        return f"Graph(|V|={self.n}, |E|={self.m})"

    # -- derived graphs --------------------------------------------------
    def add_edges(self, pairs: Iterable[tuple[str, str]]) -> "Graph":
        """G ∪ F: add the pairs whose endpoints are both in V(G); existing edges are kept once."""
        new = set(self.edges)
        for u, v in pairs:
            if u in self._vset and v in self._vset:
                new.add(pair(u, v))
        return Graph(self.vertices, frozenset(new), self.log)

    def remove_edges(self, pairs: Iterable[tuple[str, str]]) -> "Graph":
        drop = {pair(u, v) for u, v in pairs}
        return Graph(self.vertices, self.edges - drop, self.log)

    def relabel(self, mapping: Mapping[str, str]) -> "Graph":
        """Injective relabeling; labels absent from ``mapping`` are kept."""
        f = lambda v: mapping.get(v, v)
        verts = [f(v) for v in self.vertices]
        if len(set(verts)) != len(verts):
            raise DuplicateVertexError("relabeling is not injective")
        return Graph(
            _canonical_vertices(verts),
            frozenset(pair(f(u), f(v)) for u, v in self.edges),
            self.log,
        )

    # -- serialization ------------------------------------------------------
    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.sorted_edges()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Mapping) -> "Graph":
        return build_graph(data["vertices"], [tuple(e) for e in data["edges"]])

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))


def _canonical_vertices(labels: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(labels, key=_natural_key))


def build_graph(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> Graph:
    verts = [str(v) for v in vertices]
    seen: set[str] = set()
    for v in verts:
        if v in seen:
            raise DuplicateVertexError(f"duplicate vertex label {v!r}")
        seen.add(v)
    es: set[tuple[str, str]] = set()
    for e in edges:
        u, v = e
        if u == v:
            raise LoopEdgeError(f"loop edge at {u!r}")
        if u not in seen or v not in seen:
            raise DanglingEndpointError(f"edge ({u!r}, {v!r}) has an endpoint outside the vertex set")
        p = pair(u, v)
        if p in es:
            raise DuplicateEdgeError(f"duplicate edge {p}")
        es.add(p)
    return Graph(_canonical_vertices(verts), frozenset(es))


def complete_graph(labels: Iterable[str]) -> Graph:
    labels = list(labels)
    return build_graph(labels, itertools.combinations(labels, 2))


def empty_graph(labels: Iterable[str] = ()) -> Graph:
    return build_graph(labels, [])


def induced_subgraph(G: Graph, S: Iterable[str]) -> Graph:
    S = set(S)
    missing = S - set(G.vertices)
    if missing:
        raise UnknownVertexError(f"vertices not in graph: {sorted(missing)}")
    return Graph(
        _canonical_vertices(S),
        frozenset(e for e in G.edges if e[0] in S and e[1] in S),
    )


def induced_edges(G: Graph, S: Iterable[str]) -> set[tuple[str, str]]:
    S = set(S)
    return {e for e in G.edges if e[0] in S and e[1] in S}


def nonedges(G: Graph) -> set[tuple[str, str]]:
    return {
        pair(u, v)
        for u, v in itertools.combinations(G.vertices, 2)
        if pair(u, v) not in G.edges
    }


def union(G: Graph, H: Graph) -> Graph:
    """Union of two graphs on possibly overlapping label sets; shared edges kept once."""
    verts = set(G.vertices) | set(H.vertices)
    return Graph(_canonical_vertices(verts), G.edges | H.edges)


def disjoint_union(G: Graph, H: Graph) -> Graph:
    common = set(G.vertices) & set(H.vertices)
    if common:
        raise DuplicateVertexError(f"graphs share labels {sorted(common)}")
    return union(G, H)


def identify_vertices(G: Graph, classes: Iterable[Iterable[str]]) -> tuple[Graph, dict[str, str]]:
    """Merge each class into one vertex labeled by its least label.

    ``classes`` may omit singleton classes.  Returns the quotient graph and
    the map old label -> new label.  Parallel edges collapse; an edge inside
    a class raises :class:`LoopEdgeError`.
    """
    rep: dict[str, str] = {v: v for v in G.vertices}
    covered: set[str] = set()
    for cls in classes:
        cls = list(cls)
        if not cls:
            continue
        for v in cls:
            if v not in rep:
                raise UnknownVertexError(v)
            if v in covered:
                raise GraphError(f"vertex {v!r} appears in two classes")
            covered.add(v)
        least = min(cls)
        for v in cls:
            rep[v] = least
    es = set()
    for u, v in G.edges:
        ru, rv = rep[u], rep[v]
        if ru == rv:
            raise LoopEdgeError(f"identification collapses edge ({u!r}, {v!r})")
        es.add(pair(ru, rv))
    return Graph(_canonical_vertices(set(rep.values())), frozenset(es), G.log), rep


def k4_through(G: Graph, S: Iterable[str]) -> bool:
    """True iff some 4-vertex set containing ``S`` induces K4."""
    S = set(S)
    if len(S) > 4:
        raise GraphError("k4_through takes at most 4 vertices")
    missing = S - set(G.vertices)
    if missing:
        raise UnknownVertexError(f"vertices not in graph: {sorted(missing)}")
    adj = G.adjacency()
    if any(v not in adj[u] for u, v in itertools.combinations(S, 2)):
        return False
    cand = set(G.vertices) - S
    for u in S:
        cand &= adj[u]
    for extra in itertools.combinations(sorted(cand), 4 - len(S)):
        if all(v in adj[u] for u, v in itertools.combinations(extra, 2)):
            return True
    return False


def fresh_label(taken: Iterable[str] | Graph, base: str) -> str:
    """``<base>#<k>`` with the smallest k >= 1 not already taken."""
    taken = set(taken.vertices) if isinstance(taken, Graph) else set(taken)
    k = 1
    while f"{base}#{k}" in taken:
        k += 1
    return f"{base}#{k}"


def to_dot(G: Graph, dashed: Iterable[tuple[str, str]] = (), name: str = "G") -> str:
    """DOT text; ``dashed`` pairs (hinges, implied nonedges) are drawn dashed."""
    lines = [f"graph {json.dumps(name)} {{"]
    for v in G.vertices:
        lines.append(f"  {json.dumps(v)};")
    for u, v in G.sorted_edges():
        lines.append(f"  {json.dumps(u)} -- {json.dumps(v)};")
    for u, v in sorted({pair(*p) for p in dashed}):
        lines.append(f"  {json.dumps(u)} -- {json.dumps(v)} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
