"""Command-line workbench.

Exit codes: 0 all verdicts pass, 1 a check failed, 2 usage or validation error.
Graph arguments are JSON files (a bare graph, or a catalog entry with a
``graph`` key), ``-`` for stdin, or ``catalog:<name>[:key=value,...]``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog as cat
from . import constructions as cons
from .covers import (
    TwoThinCover,
    cover_independent,
    ie_details,
    key_gluing_pairs,
    rank_sandwich,
    validate_safe_base,
    validate_safe_ear,
    validate_two_thin,
)
from .graph import Graph, GraphError, pair, to_dot
from .oracle import (
    Framework,
    MatroidModel,
    RankOracle,
    SearchLimitError,
    classify_triple,
    flex_basis,
    generic_rank,
    independence,
    is_circuit,
    nucleations,
    resolve_seed,
    stress_basis,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _default(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    if isinstance(x, tuple):
        return list(x)
    if isinstance(x, MatroidModel):
        return x.value
    raise TypeError(f"not serializable: {type(x).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, default=_default) + "\n"


def _emit(obj, out: str | None):
    text = dumps(obj)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# input loading


def _parse_params(spec: str) -> dict:
    params = {}
    for item in filter(None, spec.split(",")):
        k, _, v = item.partition("=")
        try:
            params[k] = json.loads(v)
        except json.JSONDecodeError:
            params[k] = v
    return params


def _load_json(src: str):
    try:
        text = sys.stdin.read() if src == "-" else Path(src).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {src}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{src} is not valid JSON: {exc.msg}") from None


def load_entry(src: str) -> cat.CatalogEntry | Graph:
    if src.startswith("catalog:"):
        _, name, *rest = src.split(":", 2)
        return cat.named_graph(name, **(_parse_params(rest[0]) if rest else {}))
    data = _load_json(src)
    if not isinstance(data, dict):
        raise UsageError(f"{src}: expected a JSON object")
    if "graph" in data and "vertices" not in data:
        G = Graph.from_dict(data["graph"])
        cover = TwoThinCover.from_dict(data["cover"]) if data.get("cover") else None
        return cat.CatalogEntry(data.get("name", src), data.get("params", {}), G, cover,
                                [tuple(h) for h in data.get("hinges", [])], data.get("annotations", {}))
    if "vertices" not in data or "edges" not in data:
        raise UsageError(f"{src}: a graph needs 'vertices' and 'edges'")
    return Graph.from_dict(data)


def load_graph(src: str) -> Graph:
    e = load_entry(src)
    return e.graph if isinstance(e, cat.CatalogEntry) else e


def load_cover(src: str, entry=None) -> TwoThinCover:
    if src == "entry":
        if not isinstance(entry, cat.CatalogEntry) or entry.cover is None:
            raise UsageError("the graph argument carries no cover")
        return entry.cover
    data = _load_json(src)
    if isinstance(data, dict) and "cover" in data and "clusters" not in data:
        data = data["cover"]
    if isinstance(data, list):
        data = {"clusters": data}
    return TwoThinCover.from_dict(data)


def load_framework(src: str, seed: int | None = None) -> Framework:
    if src.startswith("catalog:"):
        _, name, *rest = src.split(":", 2)
        params = _parse_params(rest[0]) if rest else {}
        params.setdefault("seed", seed)
        return cat.named_framework(name, **params)
    data = _load_json(src)
    if "graph" not in data:
        raise UsageError(f"{src}: a framework file needs an embedded 'graph'")
    return Framework.from_dict(data)


def _split_spec(data) -> cons.SplitSpec:
    try:
        return cons.SplitSpec(data["a"], data["b"], data.get("A1", ()), data.get("A2", ()),
                              data.get("B1", ()), data.get("B2", ()))
    except (KeyError, TypeError):
        raise UsageError("a split spec needs 'a', 'b' and the partitions A1, A2, B1, B2") from None


# ---------------------------------------------------------------------------
# commands


def cmd_catalog(args) -> int:
    if args.action == "list":
        _emit({"graphs": sorted(cat.GRAPHS), "frameworks": sorted(cat.FRAMEWORKS)}, args.out)
        return EXIT_OK
    if not args.name:
        raise UsageError("catalog gen needs a name")
    params = _parse_params(args.params or "")
    if args.m is not None:
        params["m"] = args.m
    if args.name in cat.FRAMEWORKS:
        fw = cat.named_framework(args.name, seed=resolve_seed(args.seed), **params)
        _emit({**fw.to_dict(), "graph": fw.graph.to_dict(), "name": args.name, "seed": resolve_seed(args.seed)},
              args.out)
    else:
        _emit(cat.named_graph(args.name, **params).to_dict(), args.out)
    return EXIT_OK


def cmd_rank(args) -> int:
    G = load_graph(args.graph)
    cert = generic_rank(G, args.model, args.trials, resolve_seed(args.seed))
    _emit({**cert.to_dict(), "edges": G.m, "vertices": G.n, "seed": resolve_seed(args.seed),
           "error_bound": cert.error_bound}, args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    G = load_graph(args.graph)
    seed = resolve_seed(args.seed)
    out = {"property": args.property, "seed": seed, "model": MatroidModel.parse(args.model).value}
    if args.property == "independent":
        ok, cert = independence(G, args.model, args.trials, seed)
        out["certificate"] = cert.to_dict()
    elif args.property == "rigid":
        cert = generic_rank(G, args.model, args.trials, seed)
        ok = G.n <= 2 or cert.rank == 3 * G.n - 6
        out["certificate"] = cert.to_dict()
    elif args.property == "circuit":
        ok = is_circuit(G, args.model, args.trials, seed)
    else:
        found = nucleations(G, args.model, trials=args.trials, seed=seed, first_only=True)
        ok = not found
        out["nucleations"] = [sorted(c) for c in found]
    out["verdict"] = bool(ok)
    _emit(out, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_closure(args) -> int:
    G = load_graph(args.graph)
    oracle = RankOracle(G, args.model, args.trials, resolve_seed(args.seed))
    implied = [p for p in _all_pairs(G) if not G.has_edge(*p) and oracle.in_closure(*p)]
    _emit({"rank": oracle.rank, "edges": G.sorted_edges(), "implied_nonedges": implied,
           "certificate": oracle.certificate().to_dict()}, args.out)
    return EXIT_OK


def _all_pairs(G: Graph):
    vs = G.vertices
    return [pair(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]


def cmd_implied(args) -> int:
    G = load_graph(args.graph)
    oracle = RankOracle(G, args.model, args.trials, resolve_seed(args.seed))
    if args.pair:
        u, v = args.pair
        if not (G.has_vertex(u) and G.has_vertex(v)):
            raise UsageError(f"pair ({u}, {v}) has an endpoint outside the graph")
        if G.has_edge(u, v):
            raise UsageError(f"({u}, {v}) is an edge")
        ok = oracle.in_closure(u, v)
        _emit({"pair": pair(u, v), "implied": ok, "certificate": oracle.certificate().to_dict()}, args.out)
        return EXIT_OK if ok else EXIT_FAIL
    implied = [p for p in _all_pairs(G) if not G.has_edge(*p) and oracle.in_closure(*p)]
    _emit({"implied_nonedges": implied, "certificate": oracle.certificate().to_dict()}, args.out)
    return EXIT_OK


def cmd_cover(args) -> int:
    entry = load_entry(args.graph)
    G = entry.graph if isinstance(entry, cat.CatalogEntry) else entry
    X = load_cover(args.cover, entry)
    seed = resolve_seed(args.seed)
    a = args.action
    if a == "validate":
        rep = validate_two_thin(G, X)
        out, ok = {**rep.to_dict(), "cover_independent": rep.ok and cover_independent(G, X, args.model, seed)}, rep.ok
    elif a == "ie":
        out, ok = ie_details(G, X, args.model, seed=seed).to_dict(), True
    elif a == "ieprime":
        if not args.gluing:
            raise UsageError("ieprime needs --gluing")
        d = ie_details(G, X, args.model, key_gluing_pairs(X, args.gluing), seed)
        out, ok = d.to_dict(), True
    elif a == "sandwich":
        if not args.pair:
            raise UsageError("sandwich needs --pair")
        c = rank_sandwich(G, X, tuple(args.pair), args.model, seed)
        out, ok = c.to_dict(), c.implied
    elif a == "safe-base":
        if not args.pair:
            raise UsageError("safe-base needs --pair")
        spec = _split_spec(_load_json(args.split)) if args.split else None
        c = validate_safe_base(G, X, tuple(args.pair), args.model, spec, seed)
        out, ok = c.to_dict(), c.valid
    else:
        if not args.gluing:
            raise UsageError("safe-ear needs --gluing")
        c = validate_safe_ear(G, X, args.gluing, args.model, seed)
        out, ok = c.to_dict(), c.valid
    out["seed"] = seed
    _emit(out, args.out)
    return EXIT_OK if ok else EXIT_FAIL


# construction scripts: {"inputs": {name: source}, "steps": [{"op", "args", "as"}], "output": name}

def _op_table():
    def graph_arg(env, x):
        if isinstance(x, str) and x in env:
            return env[x]
        if isinstance(x, str):
            return load_graph(x)
        raise UsageError(f"unknown graph reference {x!r}")

    def cover_arg(env, x):
        if isinstance(x, str) and x in env:
            v = env[x]
            return v if isinstance(v, TwoThinCover) else TwoThinCover.from_dict(v)
        if isinstance(x, str):
            return load_cover(x)
        return TwoThinCover.from_dict({"clusters": x} if isinstance(x, list) else x)

    ops = {
        "henneberg1": lambda env, a: cons.henneberg1(graph_arg(env, a["G"]), a["W"], a.get("label")),
        "henneberg2": lambda env, a: cons.henneberg2(graph_arg(env, a["G"]), a["W"], tuple(a["edge"]), a.get("label")),
        "k_sum": lambda env, a: cons.k_sum(graph_arg(env, a["G"]), graph_arg(env, a["H"]), a["identification"]),
        "k_vertex_split": lambda env, a: cons.k_vertex_split(graph_arg(env, a["G"]), a["vertex"], a["kept"],
                                                             a.get("shared", ()), a.get("label")),
        "nonedge_split": lambda env, a: cons.nonedge_split(graph_arg(env, a["G"]), _split_spec(a["split"])),
        "glue": lambda env, a: cons.glue(graph_arg(env, a["G"]), graph_arg(env, a["H"]), a["identification"]),
        "split_and_glue": lambda env, a: cons.split_and_glue(graph_arg(env, a["G"]), _split_spec(a["split"]),
                                                             graph_arg(env, a["H"]), a["identification"]),
        "double_butterfly_sg": lambda env, a: cons.double_butterfly_sg(graph_arg(env, a["G"]), _split_spec(a["split"]),
                                                                       a.get("wiring")),
        "ring": lambda env, a: cons.ring([graph_arg(env, g) for g in a["links"]], a["hinges"], a.get("prefix", "L")),
        "chain": lambda env, a: cons.chain([graph_arg(env, g) for g in a["links"]], a["hinges"],
                                           a.get("end_edges", True), a.get("prefix", "L")),
        "henneberg2_ring": lambda env, a: cons.henneberg2_ring([graph_arg(env, g) for g in a["links"]], a["hinges"]),
        "safe_split_and_glue": lambda env, a: cons.safe_split_and_glue(
            graph_arg(env, a["G"]), cover_arg(env, a["X"]), _split_spec(a["split"]), graph_arg(env, a["H"]),
            cover_arg(env, a["XH"]), a["gluing"], [(tuple(p), tuple(q)) for p, q in a["pairing"]]),
    }
    return ops


def run_script(script: dict) -> dict:
    if not isinstance(script, dict) or "steps" not in script:
        raise UsageError("a construction script needs 'steps'")
    env: dict = {}
    for name, src in script.get("inputs", {}).items():
        if isinstance(src, dict) and "catalog" in src:
            e = cat.named_graph(src["catalog"], **src.get("params", {}))
            env[name] = e.graph
            if e.cover is not None:
                env[f"{name}.cover"] = e.cover
        elif isinstance(src, dict) and "vertices" in src:
            env[name] = Graph.from_dict(src)
        elif isinstance(src, dict) and "clusters" in src:
            env[name] = TwoThinCover.from_dict(src)
        else:
            env[name] = load_graph(src)
    ops = _op_table()
    last = None
    for i, step in enumerate(script["steps"]):
        op = step.get("op")
        if op not in ops:
            raise UsageError(f"step {i}: unknown op {op!r}")
        try:
            res = ops[op](env, step.get("args", {}))
        except KeyError as exc:
            raise UsageError(f"step {i} ({op}): missing argument {exc}") from None
        if isinstance(res, cons.SafeGlue):
            env[f"{step.get('as', f'step{i}')}.cover"] = res.cover
            res = res.graph
        last = step.get("as", f"step{i}")
        env[last] = res
    final = env[script.get("output", last)]
    out = {"graph": final.to_dict(), "log": list(final.log)}
    cov = env.get(f"{script.get('output', last)}.cover")
    if cov is not None:
        out["cover"] = cov.to_dict()
    return out


def cmd_construct(args) -> int:
    _emit(run_script(_load_json(args.script)), args.out)
    return EXIT_OK


def cmd_framework(args) -> int:
    fw = load_framework(args.framework, args.seed)
    h = fw.hash()
    if args.action == "stress":
        B = stress_basis(fw)
        out = {"framework_hash": h, "dimension": len(B),
               "basis": [{f"{u}|{v}": x for (u, v), x in sorted(s.values.items())} for s in B]}
    elif args.action == "flex":
        B = flex_basis(fw)
        out = {"framework_hash": h, "dimension": len(B), "nontrivial_dimension": len(B) - 6,
               "basis": [{v: list(p) for v, p in sorted(f.values.items())} for f in B]}
    else:
        if not args.pairs or len(args.pairs) != 4:
            raise UsageError("triple needs --pairs u1 v1 u2 v2")
        f1, f2 = tuple(args.pairs[:2]), tuple(args.pairs[2:])
        out = {"framework_hash": h, "pairs": [f1, f2], "class": classify_triple(fw, f1, f2)}
    _emit(out, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_suite

    rep = run_suite(args.filter, resolve_seed(args.seed))
    text = rep.to_json(timing=not args.no_timing) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    for c in sorted(rep.checks, key=lambda c: c.name):
        print(f"{c.verdict.upper():4} {c.name} ({c.seconds:.1f}s)", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_export(args) -> int:
    entry = load_entry(args.graph)
    G = entry.graph if isinstance(entry, cat.CatalogEntry) else entry
    dashed = list(entry.hinges) if isinstance(entry, cat.CatalogEntry) else []
    if args.implied:
        oracle = RankOracle(G, args.model, 2, resolve_seed(args.seed))
        dashed += [p for p in _all_pairs(G) if not G.has_edge(*p) and oracle.in_closure(*p)]
    dashed = [p for p in dashed if not G.has_edge(*p)]
    text = to_dot(G, dashed, args.name)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigidkit", description="Rigidity matroid workbench")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, model=True):
        sp.add_argument("--seed", type=int, default=None, help="root seed (else $RIGID_SEED, else the default)")
        sp.add_argument("-o", "--out", default=None, help="write output here instead of stdout")
        if model:
            sp.add_argument("--model", default="generic3d", type=MatroidModel.parse,
                            help="generic3d (alias generic3) or cofactor")
            sp.add_argument("--trials", type=int, default=2)

    sp = sub.add_parser("catalog", help="list or generate catalog entries")
    sp.add_argument("action", choices=["list", "gen"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--m", type=int, default=None)
    sp.add_argument("--params", default=None, help="extra parameters as key=value,...")
    common(sp, model=False)
    sp.set_defaults(func=cmd_catalog)

    sp = sub.add_parser("rank", help="randomized generic rank with certificate")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=cmd_rank)

    sp = sub.add_parser("check", help="test a matroid property")
    sp.add_argument("property", choices=["independent", "rigid", "circuit", "nucleation-free"])
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("closure", help="closure of the edge set")
    sp.add_argument("graph")
    common(sp)
    sp.set_defaults(func=cmd_closure)

    sp = sub.add_parser("implied", help="implied nonedges")
    sp.add_argument("graph")
    sp.add_argument("--pair", nargs=2, metavar=("U", "V"))
    common(sp)
    sp.set_defaults(func=cmd_implied)

    sp = sub.add_parser("cover", help="2-thin cover calculus")
    sp.add_argument("action", choices=["validate", "ie", "ieprime", "sandwich", "safe-base", "safe-ear"])
    sp.add_argument("graph")
    sp.add_argument("cover", help="cover JSON, or 'entry' to use the cover stored with the graph")
    sp.add_argument("--pair", nargs=2, metavar=("U", "V"))
    sp.add_argument("--gluing", nargs="+")
    sp.add_argument("--split", help="split spec JSON for safe-base")
    common(sp)
    sp.set_defaults(func=cmd_cover)

    sp = sub.add_parser("construct", help="run a construction script")
    sp.add_argument("script")
    common(sp, model=False)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("framework", help="stresses, flexes and flex-sign triples")
    sp.add_argument("action", choices=["stress", "flex", "triple"])
    sp.add_argument("framework")
    sp.add_argument("--pairs", nargs=4, metavar=("U1", "V1", "U2", "V2"))
    common(sp, model=False)
    sp.set_defaults(func=cmd_framework)

    sp = sub.add_parser("verify", help="run the acceptance suite")
    sp.add_argument("--filter", default=None)
    sp.add_argument("--no-timing", action="store_true", help="omit wall times (byte-stable output)")
    common(sp, model=False)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("export", help="export a graph")
    sp.add_argument("format", choices=["dot"])
    sp.add_argument("graph")
    sp.add_argument("--implied", action="store_true", help="also draw implied nonedges dashed")
    sp.add_argument("--name", default="G")
    common(sp)
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphError, ValueError, KeyError, SearchLimitError) as exc:
        sys.stdout.write(dumps({"error": {"type": type(exc).__name__, "message": str(exc)}}))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
