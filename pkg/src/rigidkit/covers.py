"""2-thin covers and the inclusion-exclusion rank counts IE and IE'.

For an independent 2-thin cover X of G, rank(G) <= IE(G, X).  If G is
independent and IE(G, X) = |E(G)| then every pair of the shared set S(X)
lies in the closure of G (the rank sandwich).

Cluster ranks are certified exactly whenever an exact-rational lower bound
meets the trivial upper bound min(|E|, 3n - 6); otherwise the randomized
oracle is used and the count is flagged as probabilistic.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Graph, GraphError, UnknownVertexError, build_graph, pair
from .oracle import (
    GENERIC3D,
    MatroidModel,
    RankOracle,
    _matrix_rows,
    independence,
    random_framework,
)
from .linalg import rank_rational


class InvalidCoverError(GraphError):
    pass


class NotApplicableError(GraphError):
    """A cover identity is applied outside its hypotheses."""


@dataclass(frozen=True)
class TwoThinCover:
    clusters: tuple[frozenset, ...]

    def __post_init__(self):
        cl = sorted((frozenset(c) for c in self.clusters), key=lambda c: (sorted(c), len(c)))
        object.__setattr__(self, "clusters", tuple(cl))

    @classmethod
    def of(cls, clusters: Iterable[Iterable[str]]) -> "TwoThinCover":
        return cls(tuple(frozenset(c) for c in clusters))

    def __len__(self):
        return len(self.clusters)

    def __iter__(self):
        return iter(self.clusters)

    def vertices(self) -> set[str]:
        return set().union(*self.clusters) if self.clusters else set()

    def relabel(self, mapping: Mapping[str, str]) -> "TwoThinCover":
        return TwoThinCover.of({mapping.get(v, v) for v in c} for c in self.clusters)

    def d(self, e) -> int:
        u, v = e
        return sum(1 for c in self.clusters if u in c and v in c)

    def to_dict(self) -> dict:
        return {"clusters": [sorted(c) for c in self.clusters]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data) -> "TwoThinCover":
        return cls.of(data["clusters"])


def maximal_clusters(clusters: Iterable[Iterable[str]]) -> TwoThinCover:
    cl = {frozenset(c) for c in clusters}
    return TwoThinCover.of(c for c in cl if not any(c < d for d in cl))


@dataclass
class CoverReport:
    ok: bool
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {"ok": self.ok, "checks": self.checks, "violations": self.violations}


def validate_two_thin(G: Graph, X: TwoThinCover) -> CoverReport:
    unknown = X.vertices() - set(G.vertices)
    if unknown:
        raise UnknownVertexError(f"cover uses vertices outside the graph: {sorted(unknown)}")
    viol = []
    for c in X.clusters:
        if len(c) < 2:
            viol.append({"condition": "size", "witness": sorted(c)})
    for A, B in itertools.combinations(X.clusters, 2):
        inter = A & B
        if len(inter) > 2:
            viol.append({"condition": "thin", "witness": sorted(inter)})
        if A <= B or B <= A:
            viol.append({"condition": "nested", "witness": [sorted(A), sorted(B)]})
    for e in G.sorted_edges():
        if X.d(e) == 0:
            viol.append({"condition": "coverage", "witness": list(e)})
    checks = {k: not any(v["condition"] == k for v in viol) for k in ("size", "thin", "nested", "coverage")}
    return CoverReport(not viol, checks, viol)


def require_valid(G: Graph, X: TwoThinCover) -> None:
    rep = validate_two_thin(G, X)
    if not rep.ok:
        raise InvalidCoverError(f"invalid 2-thin cover: {rep.violations[0]}")


def shared_set(X: TwoThinCover, G: Graph | None = None) -> set[tuple[str, str]]:
    """All pairs {u, v} arising as an intersection X_i & X_j."""
    if G is not None:
        require_valid(G, X)
    out = set()
    for A, B in itertools.combinations(X.clusters, 2):
        inter = A & B
        if len(inter) > 2:
            raise InvalidCoverError(f"clusters share {sorted(inter)}")
        if len(inter) == 2:
            out.add(pair(*inter))
    return out


def pair_graph(pairs: Iterable[tuple[str, str]]) -> Graph:
    pairs = {pair(*p) for p in pairs}
    return build_graph(sorted({x for p in pairs for x in p}), sorted(pairs))


def cover_independent(G: Graph, X: TwoThinCover, model=GENERIC3D, seed: int | None = None) -> bool:
    S = shared_set(X, G)
    return independence(pair_graph(S), model, seed=seed)[0]


# ---------------------------------------------------------------------------
# certified ranks of small graphs


def certified_rank(G: Graph, model=GENERIC3D, seed: int | None = None, trials: int = 2) -> tuple[int, bool]:
    """(rank, exact?).  Exact when the rank at a rational point meets min(|E|, 3n - 6)."""
    model = MatroidModel.parse(model)
    if G.m == 0:
        return 0, True
    hi = G.m if G.n < 3 else min(G.m, 3 * G.n - 6)
    fw = random_framework(G, model.dim, seed, task=("certified-rank", G.to_json(), model.value))
    rows, ncols = _matrix_rows(G, model, fw.coords)
    lo = rank_rational(rows, ncols)
    if lo == hi:
        return lo, True
    return RankOracle(G, model, trials, seed, task="certified-rank").rank, False


@dataclass
class IECount:
    value: int
    cluster_ranks: list
    shared: list
    extra: list
    corrections: int
    exact: bool

    def to_dict(self) -> dict:
        return {"value": self.value, "cluster_ranks": self.cluster_ranks, "shared": self.shared,
                "extra": self.extra, "corrections": self.corrections, "exact": self.exact}


def ie_details(G: Graph, X: TwoThinCover, model=GENERIC3D, extra: Iterable[tuple[str, str]] = (),
               seed: int | None = None) -> IECount:
    require_valid(G, X)
    S = shared_set(X)
    extra = {pair(*p) for p in extra} - S
    Sx = S | extra
    aug = G.add_edges(Sx)
    ranks, exact = [], True
    for c in X.clusters:
        sub = build_graph(sorted(c), sorted(e for e in aug.edges if e[0] in c and e[1] in c))
        r, ex = certified_rank(sub, model, seed)
        ranks.append(r)
        exact &= ex
    corr = sum(X.d(e) - 1 for e in Sx)
    return IECount(sum(ranks) - corr, ranks, sorted(map(list, S)), sorted(map(list, extra)), corr, exact)


def ie_count(G: Graph, X: TwoThinCover, model=GENERIC3D, seed: int | None = None) -> int:
    return ie_details(G, X, model, seed=seed).value


def key_gluing_pairs(X: TwoThinCover, gluing: Iterable[str]) -> set[tuple[str, str]]:
    gluing = set(gluing)
    out = set()
    for c in X.clusters:
        inside = sorted(c & gluing)
        out |= {pair(u, v) for u, v in itertools.combinations(inside, 2)}
    return out


def ie_prime(G: Graph, X: TwoThinCover, gluing: Iterable[str], model=GENERIC3D, seed: int | None = None) -> int:
    gluing = list(gluing)
    unknown = set(gluing) - set(G.vertices)
    if unknown:
        raise UnknownVertexError(f"gluing vertices not in graph: {sorted(unknown)}")
    return ie_details(G, X, model, key_gluing_pairs(X, gluing), seed).value


# ---------------------------------------------------------------------------
# rank sandwich


@dataclass
class SandwichCertificate:
    pair: tuple
    implied: bool
    num_edges: int
    ie: int
    independent_exact: bool
    ie_exact: bool
    cover_independent: bool

    @property
    def deterministic(self) -> bool:
        return self.independent_exact and self.ie_exact

    def to_dict(self) -> dict:
        return {"pair": list(self.pair), "implied": self.implied, "num_edges": self.num_edges, "ie": self.ie,
                "deterministic": self.deterministic, "cover_independent": self.cover_independent}


def rank_sandwich(G: Graph, X: TwoThinCover, f: tuple[str, str], model=GENERIC3D, seed: int | None = None) -> SandwichCertificate:
    """rank(G + f) <= IE(G, X) = |E| = rank(G) for f in S(X)."""
    require_valid(G, X)
    f = pair(*f)
    S = shared_set(X)
    if G.has_edge(*f):
        raise NotApplicableError(f"{f} is an edge")
    if f not in S:
        raise NotApplicableError(f"{f} is not in the shared set of the cover")
    if not cover_independent(G, X, model, seed):
        raise NotApplicableError("cover is not independent")
    ind, cert = independence(G, model, seed=seed)
    ie = ie_details(G, X, model, seed=seed)
    return SandwichCertificate(f, bool(ind and ie.value == G.m), G.m, ie.value, cert.exact, ie.exact, True)


def rank_sandwich_implied(G: Graph, X: TwoThinCover, f: tuple[str, str], model=GENERIC3D, seed: int | None = None) -> bool:
    return rank_sandwich(G, X, f, model, seed).implied


# ---------------------------------------------------------------------------
# safe base graphs and safe ears


@dataclass
class SafeBaseCertificate:
    graph: Graph
    cover: TwoThinCover
    split: tuple
    independent: bool
    cover_independent: bool
    rank_equals_ie: bool
    safe_split_exists: bool
    rank: int
    ie: int
    witness: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return self.independent and self.cover_independent and self.rank_equals_ie and self.safe_split_exists

    def to_dict(self) -> dict:
        return {"split": list(self.split), "independent": self.independent, "cover_independent": self.cover_independent,
                "rank_equals_ie": self.rank_equals_ie, "safe_split_exists": self.safe_split_exists,
                "rank": self.rank, "ie": self.ie, "valid": self.valid, "witness": self.witness,
                "cover": self.cover.to_dict()}


def validate_safe_base(G: Graph, X: TwoThinCover, ab: tuple[str, str], model=GENERIC3D, spec=None,
                       seed: int | None = None) -> SafeBaseCertificate:
    from .constructions import SplitSpec, safe_nonedge_split, SafeSplitError

    require_valid(G, X)
    a, b = ab
    ind, cert = independence(G, model, seed=seed)
    r = G.m if ind else cert.rank
    cind = cover_independent(G, X, model, seed)
    ie = ie_count(G, X, model, seed)
    witness = {}
    ok_split = False
    if pair(a, b) in shared_set(X) and not G.has_edge(a, b):
        try:
            safe_nonedge_split(G, X, spec or SplitSpec.trivial(G, a, b))
            ok_split = True
        except SafeSplitError as exc:
            witness["split"] = str(exc)
    else:
        witness["split"] = f"{pair(a, b)} is not a shared nonedge"
    return SafeBaseCertificate(G, X, pair(a, b), bool(ind), cind, r == ie, ok_split, r, ie, witness)


@dataclass
class SafeEarCertificate:
    graph: Graph
    cover: TwoThinCover
    gluing: tuple
    key_pairs: list
    cover_independent: bool
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    rank: int
    ie_prime: int
    witness: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return self.cover_independent and self.cond_i and self.cond_ii and self.cond_iii

    def to_dict(self) -> dict:
        return {"gluing": list(self.gluing), "key_pairs": [list(p) for p in self.key_pairs],
                "cover_independent": self.cover_independent, "cond_i": self.cond_i, "cond_ii": self.cond_ii,
                "cond_iii": self.cond_iii, "rank": self.rank, "ie_prime": self.ie_prime, "valid": self.valid,
                "witness": self.witness, "cover": self.cover.to_dict()}


def validate_safe_ear(H: Graph, XH: TwoThinCover, gluing: Sequence[str], model=GENERIC3D,
                      seed: int | None = None) -> SafeEarCertificate:
    require_valid(H, XH)
    gluing = tuple(sorted(gluing))
    unknown = set(gluing) - set(H.vertices)
    if unknown:
        raise UnknownVertexError(f"gluing vertices not in graph: {sorted(unknown)}")
    witness = {}
    crowded = [sorted(c & set(gluing)) for c in XH.clusters if len(c & set(gluing)) > 2]
    if crowded:
        witness["cond_i"] = crowded[0]
    F = {pair(u, v) for u, v in itertools.combinations(gluing, 2)}
    SF = shared_set(XH) | F
    c2 = independence(pair_graph(SF), model, seed=seed)[0] if SF else True
    if not c2:
        witness["cond_ii"] = sorted(map(list, SF))
    r = RankOracle(H, model, seed=seed).rank
    keys = key_gluing_pairs(XH, gluing)
    iep = ie_details(H, XH, model, keys, seed).value
    if r != iep - 1:
        witness["cond_iii"] = {"rank": r, "ie_prime": iep}
    return SafeEarCertificate(H, XH, gluing, sorted(keys), cover_independent(H, XH, model, seed),
                              not crowded, bool(c2), r == iep - 1, r, iep, witness)


# ---------------------------------------------------------------------------
# cover rules for the starter constructions


def extend_cover_henneberg1(G_new: Graph, X: TwoThinCover, u: str) -> TwoThinCover:
    """Add u to the first cluster holding all its neighbors, else add each {u, x}."""
    N = G_new.neighbors(u)
    for c in X.clusters:
        if N <= c:
            return TwoThinCover.of([c | {u} if d == c else d for d in X.clusters])
    return TwoThinCover.of(list(X.clusters) + [{u, x} for x in sorted(N)])


def extend_cover_k_sum(X: TwoThinCover, H_edges: Iterable[tuple[str, str]], base: Iterable[str]) -> TwoThinCover:
    """Add {u, v} for every edge of the summed graph that is not in its base complete graph."""
    base = set(base)
    extra = [set(e) for e in H_edges if not (e[0] in base and e[1] in base)]
    return TwoThinCover.of(list(X.clusters) + extra)
