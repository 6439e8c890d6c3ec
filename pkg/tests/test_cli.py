import json

import pytest

from rigidkit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def out_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_catalog_list_and_gen(capsys):
    code, d = out_json(capsys, "catalog", "list")
    assert code == 0 and "ring_of_butterflies" in d["graphs"] and "rigid_octahedron" in d["frameworks"]
    code, d = out_json(capsys, "catalog", "gen", "ring_of_butterflies", "--m", "7")
    assert code == 0 and len(d["graph"]["edges"]) == 56 and len(d["hinges"]) == 7


def test_gen_out_of_range(capsys):
    code, d = out_json(capsys, "catalog", "gen", "ring_of_butterflies", "--m", "2")
    assert code == 2 and d["error"]["type"] == "CatalogError"


def test_check_exit_codes(capsys):
    assert run(capsys, "check", "independent", "catalog:double_banana")[0] == 1
    assert run(capsys, "check", "circuit", "catalog:double_banana")[0] == 0
    assert run(capsys, "check", "nucleation-free", "catalog:ring_of_butterflies:m=7")[0] == 0
    assert run(capsys, "check", "rigid", "catalog:octahedron")[0] == 0
    assert run(capsys, "check", "rigid", "catalog:butterfly")[0] == 1


def test_implied(capsys):
    code, d = out_json(capsys, "implied", "catalog:ring_of_butterflies:m=7", "--pair", "L1.a", "L1.b")
    assert code == 0 and d["implied"]
    code, d = out_json(capsys, "implied", "catalog:butterfly", "--pair", "a", "b")
    assert code == 1 and not d["implied"]
    code, d = out_json(capsys, "implied", "catalog:butterfly", "--pair", "a", "zz")
    assert code == 2


def test_rank(capsys):
    code, d = out_json(capsys, "rank", "catalog:k5")
    assert code == 0 and d["rank"] == 9


def test_cover_commands(capsys):
    g = "catalog:ring_of_butterflies:m=7"
    assert run(capsys, "cover", "validate", g, "entry")[0] == 0
    code, d = out_json(capsys, "cover", "ie", g, "entry")
    assert code == 0 and d["value"] == 56 and d["exact"]
    assert run(capsys, "cover", "sandwich", g, "entry", "--pair", "L1.a", "L1.b")[0] == 0


def test_errors(capsys, tmp_path):
    code, d = out_json(capsys, "rank", str(tmp_path / "missing.json"))
    assert code == 2 and "error" in d
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "rank", str(bad))[0] == 2
    loop = tmp_path / "loop.json"
    loop.write_text(json.dumps({"vertices": ["a"], "edges": [["a", "a"]]}))
    code, d = out_json(capsys, "rank", str(loop))
    assert code == 2 and d["error"]["type"] == "LoopEdgeError"
    assert run(capsys, "no-such-command")[0] == 2


def test_construct(capsys, tmp_path):
    script = {
        "inputs": {"T": {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"], ["a", "c"]]}},
        "steps": [{"op": "henneberg1", "args": {"G": "T", "W": ["a", "b", "c"], "label": "d"}, "as": "K4"}],
    }
    p = tmp_path / "s.json"
    p.write_text(json.dumps(script))
    code, d = out_json(capsys, "construct", str(p))
    assert code == 0 and len(d["graph"]["edges"]) == 6 and d["log"]
    p.write_text(json.dumps({"steps": [{"op": "bogus"}]}))
    assert run(capsys, "construct", str(p))[0] == 2


def test_framework(capsys):
    code, d = out_json(capsys, "framework", "flex", "catalog:rigid_octahedron")
    assert code == 0 and d["nontrivial_dimension"] == 0
    code, d = out_json(capsys, "framework", "stress", "catalog:butterfly_convex")
    assert code == 0 and d["dimension"] == 0


def test_export_dot(capsys):
    code, out = run(capsys, "export", "dot", "catalog:butterfly", "--name", "B")
    assert code == 0 and out.lstrip().startswith('graph "B" {') and '"a" -- "b" [style=dashed]' in out


@pytest.mark.parametrize("argv", [
    ("catalog", "gen", "tay_symmetric"),
    ("implied", "catalog:double_banana"),
    ("framework", "flex", "catalog:butterfly_pseudo"),
])
def test_same_seed_same_bytes(capsys, argv):
    a = run(capsys, *argv, "--seed", "7")
    b = run(capsys, *argv, "--seed", "7")
    assert a == b


def test_out_file(capsys, tmp_path):
    p = tmp_path / "o.json"
    assert run(capsys, "catalog", "gen", "k5", "-o", str(p))[0] == 0
    assert len(json.loads(p.read_text())["graph"]["edges"]) == 10


def test_verify_report_is_stable(capsys):
    a = run(capsys, "verify", "--filter", "c10", "--no-timing", "--seed", "3")
    b = run(capsys, "verify", "--filter", "c10", "--no-timing", "--seed", "3")
    assert a == b and a[0] == 0
    d = json.loads(a[1])
    assert d["seed"] == 3 and [c["verdict"] for c in d["checks"]] == ["pass"]
