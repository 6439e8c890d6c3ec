"""Matroid-level queries for the generic 3D rigidity matroid and the cofactor matroid.

Generic ranks are computed at uniformly random points of GF(p)^d.  The rank
at a random point never exceeds the generic rank, and by Schwartz-Zippel it
falls short with probability at most |E|/p per trial.  Independence
verdicts are additionally backed, where possible, by an exact-rational
witness framework whose rigidity matrix has full row rank.
"""

from __future__ import annotations

import enum
import hashlib
import itertools
import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import networkx as nx

from .graph import Graph, GraphError, UnknownVertexError, induced_edges, nonedges, pair
from .linalg import PRIME, DenseMatrix, EchelonModP, nullspace, rank_mod_p, rank_rational

DEFAULT_SEED = 20240601
WITNESS_RANGE = 2**16


class MatroidModel(str, enum.Enum):
    GENERIC3D = "generic3d"
    COFACTOR = "cofactor"

    @classmethod
    def parse(cls, value) -> "MatroidModel":
        if isinstance(value, cls):
            return value
        aliases = {"generic3": cls.GENERIC3D, "generic3d": cls.GENERIC3D, "cofactor": cls.COFACTOR}
        try:
            return aliases[str(value)]
        except KeyError:
            raise ValueError(f"unknown matroid model {value!r}") from None

    @property
    def dim(self) -> int:
        return 3 if self is MatroidModel.GENERIC3D else 2


GENERIC3D = MatroidModel.GENERIC3D
COFACTOR = MatroidModel.COFACTOR


def resolve_seed(seed: int | None = None) -> int:
    if seed is not None:
        return int(seed)
    env = os.environ.get("RIGID_SEED")
    return int(env) if env else DEFAULT_SEED


def graph_hash(G: Graph) -> str:
    return hashlib.sha256(G.to_json().encode()).hexdigest()[:16]


def _rng(seed: int, *task) -> random.Random:
    # str seeds hash through sha512: stable across runs and platforms
    return random.Random(":".join(str(x) for x in (seed,) + task))


# ---------------------------------------------------------------------------
# frameworks


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x)
    return Fraction(x)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Framework:
    graph: Graph
    dim: int
    coords: Mapping[str, tuple[Fraction, ...]]

    def __post_init__(self):
        if self.dim not in (2, 3):
            raise ValueError("dim must be 2 or 3")
        coords = {v: tuple(_frac(x) for x in p) for v, p in self.coords.items()}
        if set(coords) != set(self.graph.vertices):
            raise ValueError("framework coordinates must cover exactly the graph's vertices")
        if any(len(p) != self.dim for p in coords.values()):
            raise ValueError(f"every point must have {self.dim} coordinates")
        object.__setattr__(self, "coords", coords)

    def point(self, v: str) -> tuple[Fraction, ...]:
        return self.coords[v]

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "coords": {v: [_frac_str(x) for x in self.coords[v]] for v in self.graph.vertices},
        }

    def to_json(self, with_graph: bool = True) -> str:
        d = self.to_dict()
        if with_graph:
            d["graph"] = self.graph.to_dict()
        return json.dumps(d, sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping, graph: Graph | None = None) -> "Framework":
        if graph is None:
            graph = Graph.from_dict(data["graph"])
        return cls(graph, int(data["dim"]), {v: tuple(Fraction(x) for x in p) for v, p in data["coords"].items()})

    def hash(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()[:16]


def random_framework(G: Graph, dim: int = 3, seed: int | None = None, bound: int = WITNESS_RANGE, task="fw") -> Framework:
    rng = _rng(resolve_seed(seed), task)
    return Framework(G, dim, {v: tuple(Fraction(rng.randint(-bound, bound)) for _ in range(dim)) for v in G.vertices})


# ---------------------------------------------------------------------------
# matrices


def _edge_entries(model: MatroidModel, pu, pv, mod: int | None):
    d = [x - y for x, y in zip(pu, pv)]
    if model is GENERIC3D:
        vals = d
    else:
        dx, dy = d
        vals = [dx * dx, dx * dy, dy * dy]
    if mod is not None:
        vals = [x % mod for x in vals]
    return vals


def _matrix_rows(G: Graph, model: MatroidModel, coords, edges=None, mod: int | None = None):
    col = {v: 3 * i for i, v in enumerate(G.vertices)}
    ncols = 3 * G.n
    rows = []
    zero = 0 if mod is not None else Fraction(0)
    for u, v in (sorted(G.edges) if edges is None else edges):
        vals = _edge_entries(model, coords[u], coords[v], mod)
        r = [zero] * ncols
        for k in range(3):
            r[col[u] + k] = vals[k]
            r[col[v] + k] = (-vals[k]) % mod if mod is not None else -vals[k]
        rows.append(r)
    return rows, ncols


def rigidity_matrix(fw: Framework) -> DenseMatrix:
    """One row per edge (sorted), three columns per vertex (graph order)."""
    if fw.dim != 3:
        raise ValueError("rigidity_matrix needs a 3-dimensional framework")
    rows, ncols = _matrix_rows(fw.graph, GENERIC3D, fw.coords)
    return DenseMatrix.from_rows(rows, ncols)


def cofactor_matrix(fw: Framework) -> DenseMatrix:
    """Planar C^1_2-cofactor matrix: (dx^2, dx*dy, dy^2) at u, its negative at v."""
    if fw.dim != 2:
        raise ValueError("cofactor_matrix needs a 2-dimensional framework")
    for u, v in fw.graph.edges:
        if fw.coords[u] == fw.coords[v]:
            raise ValueError(f"edge ({u}, {v}) has coincident endpoints")
    rows, ncols = _matrix_rows(fw.graph, COFACTOR, fw.coords)
    return DenseMatrix.from_rows(rows, ncols)


def model_matrix(fw: Framework, model: MatroidModel) -> DenseMatrix:
    return rigidity_matrix(fw) if MatroidModel.parse(model) is GENERIC3D else cofactor_matrix(fw)


# ---------------------------------------------------------------------------
# certificates


@dataclass(frozen=True)
class RankCertificate:
    graph_hash: str
    model: MatroidModel
    rank: int
    evidence: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.evidence.get("kind") == "exact-witness"

    @property
    def error_bound(self) -> float:
        return 0.0 if self.exact else self.evidence.get("error_bound", 1.0)

    def to_dict(self) -> dict:
        return {"graph_hash": self.graph_hash, "model": self.model.value, "rank": self.rank, "evidence": self.evidence}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def error_bound(num_edges: int, trials: int, p: int = PRIME) -> float:
    return (max(num_edges, 1) / p) ** trials


# ---------------------------------------------------------------------------
# randomized oracle


class RankOracle:
    """Rank queries on subgraphs of ``G`` at a fixed random point of GF(p).

    Among ``trials`` sampled points the one of maximal rank for ``G`` is kept;
    every query is answered at that point, so answers are mutually consistent.
    """

    def __init__(self, G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None, task: str = "oracle"):
        if trials < 1:
            raise ValueError("trials must be >= 1")
        self.G = G
        self.model = MatroidModel.parse(model)
        self.trials = trials
        self.seed = resolve_seed(seed)
        self.p = PRIME
        self.col = {v: 3 * i for i, v in enumerate(G.vertices)}
        best = None
        for t in range(trials):
            rng = _rng(self.seed, task, graph_hash(G), self.model.value, t)
            coords = {v: tuple(rng.randrange(self.p) for _ in range(self.model.dim)) for v in G.vertices}
            ech = EchelonModP(self._rows(G.sorted_edges(), coords), 3 * G.n, self.p)
            if best is None or ech.rank > best[1].rank:
                best = (coords, ech)
        self.coords, self.echelon = best

    def _row_entries(self, u, v, coords=None) -> dict[int, int]:
        coords = self.coords if coords is None else coords
        vals = _edge_entries(self.model, coords[u], coords[v], self.p)
        out = {}
        for k in range(3):
            if vals[k]:
                out[self.col[u] + k] = vals[k]
                out[self.col[v] + k] = (-vals[k]) % self.p
        return out

    def _rows(self, edges, coords=None):
        n = 3 * self.G.n
        rows = []
        for u, v in edges:
            r = [0] * n
            for j, x in self._row_entries(u, v, coords).items():
                r[j] = x
            rows.append(r)
        return rows

    @property
    def rank(self) -> int:
        return self.echelon.rank

    def in_closure(self, u: str, v: str) -> bool:
        if self.G.has_edge(u, v):
            return True
        return self.echelon.contains_sparse(self._row_entries(*pair(u, v)))

    def rank_of_edges(self, edges: Iterable[tuple[str, str]]) -> int:
        edges = [pair(*e) for e in edges]
        verts = sorted({x for e in edges for x in e}, key=self.col.get)
        local = {v: 3 * i for i, v in enumerate(verts)}
        rows = []
        for u, v in edges:
            r = [0] * (3 * len(verts))
            vals = _edge_entries(self.model, self.coords[u], self.coords[v], self.p)
            for k in range(3):
                r[local[u] + k] = vals[k]
                r[local[v] + k] = (-vals[k]) % self.p
            rows.append(r)
        return rank_mod_p(rows, 3 * len(verts), self.p)

    def rank_induced(self, S: Iterable[str]) -> int:
        return self.rank_of_edges(sorted(induced_edges(self.G, S)))

    def certificate(self, rank: int | None = None, num_edges: int | None = None) -> RankCertificate:
        m = self.G.m if num_edges is None else num_edges
        return RankCertificate(
            graph_hash(self.G),
            self.model,
            self.rank if rank is None else rank,
            {
                "kind": "randomized",
                "prime": self.p,
                "seed": self.seed,
                "trials": self.trials,
                "error_bound": error_bound(m, self.trials, self.p),
            },
        )


def generic_rank(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> RankCertificate:
    """Max rank over ``trials`` random points of GF(p); never above the generic rank."""
    oracle = RankOracle(G, model, trials, seed)
    return oracle.certificate()


# ---------------------------------------------------------------------------
# exact witnesses


def exact_witness(G: Graph, model=GENERIC3D, seed: int | None = None, attempts: int = 3) -> Framework | None:
    """A rational framework whose model matrix has full row rank, if one is found."""
    model = MatroidModel.parse(model)
    seed = resolve_seed(seed)
    for attempt in range(attempts):
        fw = random_framework(G, model.dim, seed, task=("witness", graph_hash(G), model.value, attempt))
        if model is COFACTOR and any(fw.coords[u] == fw.coords[v] for u, v in G.edges):
            continue
        rows, ncols = _matrix_rows(G, model, fw.coords)
        if rank_rational(rows, ncols) == G.m:
            return fw
    return None


def witness_certificate(fw: Framework, model=GENERIC3D) -> RankCertificate:
    """Deterministic independence certificate; raises if the witness is not full row rank."""
    model = MatroidModel.parse(model)
    rows, ncols = _matrix_rows(fw.graph, model, fw.coords)
    r = rank_rational(rows, ncols)
    if r != fw.graph.m:
        raise ValueError(f"witness has rank {r} < |E| = {fw.graph.m}")
    return RankCertificate(
        graph_hash(fw.graph), model, r,
        {"kind": "exact-witness", "framework": fw.to_dict()},
    )


def independence(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None, exact: bool = True):
    """(independent?, certificate).  An exact witness is tried first."""
    model = MatroidModel.parse(model)
    if G.m == 0:
        return True, RankCertificate(graph_hash(G), model, 0, {"kind": "exact-witness", "framework": None})
    if exact:
        fw = exact_witness(G, model, seed)
        if fw is not None:
            return True, witness_certificate(fw, model)
    cert = generic_rank(G, model, trials, seed)
    return cert.rank == G.m, cert


def is_independent(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None, exact: bool = False) -> bool:
    return independence(G, model, trials, seed, exact)[0]


def rank(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> int:
    return generic_rank(G, model, trials, seed).rank


def is_rigid(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> bool:
    if G.n <= 2:
        return True
    return rank(G, model, trials, seed) == 3 * G.n - 6


def rigidity(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> bool:
    if G.n < 3:
        raise GraphError("rigidity needs at least 3 vertices")
    return is_rigid(G, model, trials, seed)


def flex_dim(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> int:
    if G.n < 3:
        raise GraphError("flex_dim needs at least 3 vertices")
    return 3 * G.n - 6 - rank(G, model, trials, seed)


def closure(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> set[tuple[str, str]]:
    """All pairs f with rank(G + f) = rank(G); contains E(G)."""
    oracle = RankOracle(G, model, trials, seed)
    return set(G.edges) | {f for f in nonedges(G) if oracle.in_closure(*f)}


def implied_nonedges(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> set[tuple[str, str]]:
    return closure(G, model, trials, seed) - set(G.edges)


def implied_nonedge(G: Graph, f: tuple[str, str], model=GENERIC3D, trials: int = 2, seed: int | None = None) -> bool:
    u, v = f
    if not (G.has_vertex(u) and G.has_vertex(v)):
        raise UnknownVertexError(f"pair {f} has an endpoint outside the graph")
    if G.has_edge(u, v):
        raise GraphError(f"{pair(u, v)} is an edge, not a nonedge")
    return RankOracle(G, model, trials, seed).in_closure(u, v)


def is_circuit(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> bool:
    if G.m == 0:
        raise GraphError("is_circuit needs at least one edge")
    oracle = RankOracle(G, model, trials, seed)
    if oracle.rank != G.m - 1:
        return False
    edges = G.sorted_edges()
    return all(oracle.rank_of_edges(edges[:i] + edges[i + 1:]) == G.m - 1 for i in range(G.m))


# ---------------------------------------------------------------------------
# nucleations

MAX_CLIQUE_SEARCH = 22


class SearchLimitError(RuntimeError):
    pass


def _bitmask_setup(G: Graph, C: Sequence[str]):
    idx = {v: i for i, v in enumerate(C)}
    adj = [0] * len(C)
    for u, v in G.edges:
        if u in idx and v in idx:
            adj[idx[u]] |= 1 << idx[v]
            adj[idx[v]] |= 1 << idx[u]
    return adj


def _rigid_subsets(G: Graph, C: Sequence[str], oracle: RankOracle, minimal: bool, found: list[frozenset], first_only: bool):
    """Enumerate subsets of C (size >= 5) with rigid induced subgraph, in order of size."""
    C = list(C)
    k = len(C)
    adj = _bitmask_setup(G, C)
    found_masks = [sum(1 << C.index(v) for v in S) for S in found if S <= set(C)]
    out = []
    for size in range(5, k + 1):
        need = 3 * size - 6
        for combo in itertools.combinations(range(k), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if minimal and any(fm & mask == fm for fm in found_masks):
                continue
            degs = [bin(adj[i] & mask).count("1") for i in combo]
            if min(degs) < 3 or sum(degs) // 2 < need:
                continue
            S = [C[i] for i in combo]
            if oracle.rank_induced(S) == need:
                fs = frozenset(S)
                out.append(fs)
                found_masks.append(mask)
                if first_only:
                    return out
    return out


def nucleations(G: Graph, model=GENERIC3D, minimal: bool = True, trials: int = 2, seed: int | None = None,
                first_only: bool = False, method: str = "clique") -> list[frozenset[str]]:
    """Vertex sets S, |S| >= 5, with G[S] rigid (inclusion-minimal ones by default).

    ``method="clique"`` restricts the search to cliques of the closure graph;
    ``method="exhaustive"`` scans every vertex subset (small graphs only).
    """
    if G.n < 5:
        return []
    oracle = RankOracle(G, model, trials, seed, task="nucleations")
    if first_only and oracle.rank == 3 * G.n - 6:
        return [frozenset(G.vertices)]
    if method == "exhaustive":
        if G.n > 16:
            raise SearchLimitError("exhaustive nucleation search is limited to 16 vertices")
        cliques = [list(G.vertices)]
    elif method == "clique":
        cl = nx.Graph()
        cl.add_nodes_from(G.vertices)
        cl.add_edges_from(G.edges)
        cl.add_edges_from(f for f in nonedges(G) if oracle.in_closure(*f))
        cliques = sorted((sorted(c, key=oracle.col.get) for c in nx.find_cliques(cl) if len(c) >= 5),
                         key=lambda c: (len(c), c))
    else:
        raise ValueError(f"unknown method {method!r}")
    found: list[frozenset] = []
    for C in cliques:
        if len(C) > MAX_CLIQUE_SEARCH:
            if oracle.rank_induced(C) == 3 * len(C) - 6 and first_only:
                return [frozenset(C)]
            raise SearchLimitError(f"closure clique of size {len(C)} is too large for subset search")
        new = _rigid_subsets(G, C, oracle, minimal, found, first_only)
        for S in new:
            if S not in found:
                found.append(S)
        if first_only and found:
            return found[:1]
    if minimal:
        found = [S for S in found if not any(T < S for T in found)]
    return sorted(found, key=lambda S: (len(S), sorted(S)))


def is_nucleation_free(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> bool:
    return not nucleations(G, model, trials=trials, seed=seed, first_only=True)


def nucleations_exhaustive(G: Graph, model=GENERIC3D, trials: int = 2, seed: int | None = None) -> list[frozenset[str]]:
    """Reference oracle: test every subset of size >= 5, then keep the minimal rigid ones."""
    oracle = RankOracle(G, model, trials, seed, task="nucleations")
    rigid = []
    for size in range(5, G.n + 1):
        for S in itertools.combinations(G.vertices, size):
            if oracle.rank_induced(S) == 3 * size - 6:
                rigid.append(frozenset(S))
    minimal = [S for S in rigid if not any(T < S for T in rigid)]
    return sorted(minimal, key=lambda S: (len(S), sorted(S)))


# ---------------------------------------------------------------------------
# stresses and flexes


@dataclass(frozen=True)
class Stress:
    framework_hash: str
    values: Mapping[tuple[str, str], Fraction]

    def __getitem__(self, e):
        return self.values.get(pair(*e), Fraction(0))


@dataclass(frozen=True)
class Flex:
    framework_hash: str
    values: Mapping[str, tuple[Fraction, ...]]

    def __getitem__(self, v):
        return self.values[v]

    def scaled(self, c) -> "Flex":
        return Flex(self.framework_hash, {v: tuple(c * x for x in u) for v, u in self.values.items()})

    def plus(self, other: "Flex") -> "Flex":
        return Flex(self.framework_hash, {v: tuple(x + y for x, y in zip(u, other.values[v])) for v, u in self.values.items()})


def stress_basis(fw: Framework) -> list[Stress]:
    M = rigidity_matrix(fw)
    edges = fw.graph.sorted_edges()
    h = fw.hash()
    return [Stress(h, dict(zip(edges, vec))) for vec in nullspace(M, "left")]


def flex_basis(fw: Framework) -> list[Flex]:
    M = rigidity_matrix(fw)
    verts = fw.graph.vertices
    h = fw.hash()
    out = []
    for vec in nullspace(M, "right"):
        out.append(Flex(h, {v: tuple(vec[3 * i:3 * i + 3]) for i, v in enumerate(verts)}))
    return out


def stress_residuals(fw: Framework, stress: Stress) -> dict[str, tuple[Fraction, ...]]:
    """Per-vertex sum of s_uv (p_u - p_v); all zero for a self-stress."""
    res = {v: [Fraction(0)] * fw.dim for v in fw.graph.vertices}
    for (u, v), s in stress.values.items():
        if not s:
            continue
        pu, pv = fw.coords[u], fw.coords[v]
        for k in range(fw.dim):
            res[u][k] += s * (pu[k] - pv[k])
            res[v][k] += s * (pv[k] - pu[k])
    return {v: tuple(r) for v, r in res.items()}


def is_self_stress(fw: Framework, stress: Stress) -> bool:
    return all(not any(r) for r in stress_residuals(fw, stress).values())


def trivial_flexes(fw: Framework) -> list[Flex]:
    """Translations and infinitesimal rotations of a 3D framework."""
    h = fw.hash()
    one, zero = Fraction(1), Fraction(0)
    out = []
    for k in range(3):
        t = [zero] * 3
        t[k] = one
        out.append(Flex(h, {v: tuple(t) for v in fw.graph.vertices}))
    for axis in range(3):
        w = [zero] * 3
        w[axis] = one
        vals = {}
        for v, (x, y, z) in fw.coords.items():
            # w x p
            vals[v] = (w[1] * z - w[2] * y, w[2] * x - w[0] * z, w[0] * y - w[1] * x)
        out.append(Flex(h, vals))
    return out


def pair_rate(fw: Framework, flex: Flex, f: tuple[str, str]) -> Fraction:
    """(u_i - u_j) . (p_i - p_j): positive expands the pair, negative contracts it."""
    if flex.framework_hash != fw.hash() or set(flex.values) != set(fw.graph.vertices):
        raise ValueError("flex does not belong to this framework")
    i, j = f
    if not (fw.graph.has_vertex(i) and fw.graph.has_vertex(j)):
        raise UnknownVertexError(f"pair {f} has an endpoint outside the graph")
    ui, uj = flex.values[i], flex.values[j]
    pi, pj = fw.coords[i], fw.coords[j]
    return sum(((a - b) * (c - d) for a, b, c, d in zip(ui, uj, pi, pj)), Fraction(0))


POSITIVE, NEGATIVE, MIXED, DEGENERATE = "positive", "negative", "mixed", "degenerate"


def classify_triple(fw: Framework, f1: tuple[str, str], f2: tuple[str, str]) -> str:
    """Compare the rate functionals of two nonedges over the whole flex space."""
    for f in (f1, f2):
        if fw.graph.has_edge(*f):
            raise GraphError(f"{pair(*f)} is an edge; triples are defined on nonedges")
    basis = flex_basis(fw)
    l1 = [pair_rate(fw, u, f1) for u in basis]
    l2 = [pair_rate(fw, u, f2) for u in basis]
    if not any(l1) and not any(l2):
        return DEGENERATE
    if not any(l1) or not any(l2):
        return MIXED
    k = next(i for i, x in enumerate(l1) if x)
    lam = l2[k] / l1[k]
    if any(b != lam * a for a, b in zip(l1, l2)):
        return MIXED
    return POSITIVE if lam > 0 else NEGATIVE
