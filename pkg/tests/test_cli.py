import json

import pytest

from toricgraphs import build_grd, parse_graph, serialize_graph
from toricgraphs.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_json_round_trips(capsys):
    code, out, _ = invoke(capsys, "gen", "--grd", "3", "5", "--json")
    assert code == 0
    assert parse_graph(out) == build_grd(3, 5)


def test_gen_human_output(capsys):
    code, out, _ = invoke(capsys, "gen", "--k2d", "2")
    assert code == 0
    assert "4 vertices" in out and "4 edges" in out


def test_gen_domain_error_exit_code(capsys):
    code, _, err = invoke(capsys, "gen", "--grd", "2", "4")
    assert code == 1
    assert "r >= 3" in err


def test_usage_error_exit_code(capsys):
    code, _, err = invoke(capsys, "frobnicate")
    assert code == 1
    assert "usage" in err.lower()
    code, _, err = invoke(capsys, "gen")
    assert code == 1


def test_walks_json(capsys):
    code, out, _ = invoke(capsys, "walks", "--k2d", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 3
    assert doc["truncated"] is False
    assert sorted(len(w) for w in doc["walks"]) == [4, 4, 4]


def test_walks_truncation_flag(capsys):
    code, out, _ = invoke(capsys, "walks", "--k2d", "3", "--max-len", "4", "--json")
    assert code == 0
    assert json.loads(out)["truncated"] is True


def test_walks_budget_exhaustion_exit_code(capsys):
    code, _, err = invoke(capsys, "walks", "--grd", "3", "4", "--budget", "5")
    assert code == 3
    assert "budget" in err.lower()


def test_gb_text_g32(capsys):
    code, out, _ = invoke(capsys, "gb", "--grd", "3", "2")
    assert code == 0
    assert out.splitlines() == [
        "a2*b1 - a1*b2",
        "a2*e2*e4 - b2*e1*e3",
        "a1*e2*e4 - b1*e1*e3",
    ]


def test_initial_json_g35(capsys):
    code, out, _ = invoke(capsys, "initial", "--grd", "3", "5", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["generators"] == [
        "a5*b4", "a5*b3", "a4*b3", "a5*b2", "a4*b2", "a3*b2",
        "a5*b1", "a4*b1", "a3*b1", "a2*b1",
        "a5*e2*e4", "a4*e2*e4", "a3*e2*e4", "a2*e2*e4", "a1*e2*e4",
    ]


def test_betti_oracle_json_g32(capsys):
    code, out, _ = invoke(capsys, "betti", "--grd", "3", "2", "--method", "oracle", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["betti"] == [
        {"beta": 1, "i": 0, "j": 2},
        {"beta": 2, "i": 0, "j": 3},
        {"beta": 2, "i": 1, "j": 4},
    ]


def test_betti_methods_agree(capsys):
    tables = []
    for method in ("formula", "quotients", "oracle"):
        code, out, _ = invoke(capsys, "betti", "--grd", "3", "3", "--method", method, "--json")
        assert code == 0
        tables.append(json.loads(out)["betti"])
    assert tables[0] == tables[1] == tables[2]


def test_betti_grid_output(capsys):
    code, out, _ = invoke(capsys, "betti", "--grd", "3", "2", "--method", "formula")
    assert code == 0
    assert "2:" in out and "3:" in out


def test_betti_formula_needs_family(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text(serialize_graph(build_grd(3, 2)))
    code, _, err = invoke(capsys, "betti", "--graph", str(f), "--method", "formula")
    assert code == 1
    assert "family" in err


def test_betti_from_graph_file_oracle(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text(serialize_graph(build_grd(3, 2)))
    code, out, _ = invoke(capsys, "betti", "--graph", str(f), "--method", "oracle", "--json")
    assert code == 0
    assert json.loads(out)["betti"] == [
        {"beta": 1, "i": 0, "j": 2},
        {"beta": 2, "i": 0, "j": 3},
        {"beta": 2, "i": 1, "j": 4},
    ]


def test_hilbert_formula_with_expansion(capsys):
    code, out, _ = invoke(capsys, "hilbert", "--grd", "3", "2", "--max-deg", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["numerator"] == [1, 2, 2]
    assert doc["denominator_power"] == 6
    assert doc["expansion"] == [1, 8, 35]
    assert doc["h_vector"] == [1, 2, 2]
    assert doc["unimodal"] is True


def test_hilbert_enumerate(capsys):
    code, out, _ = invoke(capsys, "hilbert", "--grd", "3", "2", "--method", "enumerate",
                          "--max-deg", "2", "--json")
    assert code == 0
    assert json.loads(out)["dimensions"] == [1, 8, 35]


def test_hilbert_betti_method_matches_formula(capsys):
    _, out1, _ = invoke(capsys, "hilbert", "--grd", "4", "3", "--method", "formula", "--json")
    _, out2, _ = invoke(capsys, "hilbert", "--grd", "4", "3", "--method", "betti", "--json")
    d1, d2 = json.loads(out1), json.loads(out2)
    assert d1["numerator"] == d2["numerator"]
    assert d1["denominator_power"] == d2["denominator_power"]


def test_hilbert_k2d_formula(capsys):
    code, out, _ = invoke(capsys, "hilbert", "--k2d", "3", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["numerator"] == [1, 2]
    assert doc["denominator_power"] == 4


def test_bounds(capsys):
    code, out, _ = invoke(capsys, "bounds", "--components", "(3,2),(4,3)", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["reg_lower_bound"] == 6
    assert doc["pdim_lower_bound"] == 4


def test_bounds_parse_error(capsys):
    code, _, err = invoke(capsys, "bounds", "--components", "nonsense")
    assert code == 1
    assert "components" in err


def test_order_flag_changes_initial_ideal(capsys):
    _, out_default, _ = invoke(capsys, "initial", "--k2d", "2", "--json")
    _, out_flipped, _ = invoke(
        capsys, "initial", "--k2d", "2", "--order", "b1,b2,a1,a2", "--json"
    )
    assert json.loads(out_default)["generators"] == ["a2*b1"]
    assert json.loads(out_flipped)["generators"] == ["a1*b2"]


def test_order_flag_rejects_bad_priority(capsys):
    code, _, err = invoke(capsys, "gb", "--k2d", "2", "--order", "a1,a1,b1,b2")
    assert code == 1
    assert "permutation" in err


def test_verify_passes_g35(capsys):
    code, out, _ = invoke(capsys, "verify", "--grd", "3", "5")
    assert code == 0
    assert "overall: pass" in out
    for name in ("primitive-walks", "groebner-basis", "initial-ideal",
                 "linear-quotients", "betti-linear-quotients", "betti-taylor-oracle",
                 "toric-generator-degrees", "linear-strand-bipartite",
                 "strand-transfer", "hilbert-from-betti", "hilbert-enumeration",
                 "homological-summary", "h-vector"):
        assert name in out


def test_verify_json_schema(capsys):
    code, out, _ = invoke(capsys, "verify", "--grd", "3", "2", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "pass"
    assert all(c["status"] == "pass" for c in doc["checks"])
    assert {"name", "status", "expected", "actual"} == set(doc["checks"][0])


def test_verify_k2d(capsys):
    code, out, _ = invoke(capsys, "verify", "--k2d", "4", "--json")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_rejects_graph_file(capsys, tmp_path):
    f = tmp_path / "g.json"
    f.write_text(serialize_graph(build_grd(3, 2)))
    code, _, err = invoke(capsys, "verify", "--graph", str(f))
    assert code == 1


def test_json_outputs_byte_identical(capsys):
    for argv in (
        ["betti", "--grd", "3", "2", "--method", "oracle", "--json"],
        ["verify", "--grd", "3", "2", "--json"],
        ["walks", "--grd", "3", "3", "--json"],
        ["hilbert", "--k2d", "4", "--method", "betti", "--json"],
    ):
        _, out1, _ = invoke(capsys, *argv)
        _, out2, _ = invoke(capsys, *argv)
        assert out1 == out2


def test_missing_graph_file(capsys):
    code, _, err = invoke(capsys, "gb", "--graph", "/nonexistent/g.json")
    assert code == 1
    assert "cannot read" in err
