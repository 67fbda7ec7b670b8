import json
import subprocess
import sys
from fractions import Fraction

import pytest

RUN = [sys.executable, "-m", "schubtan"]


def run_cli(*args, input_text=None):
    return subprocess.run(
        RUN + list(args), capture_output=True, text=True, input=input_text
    )


def test_bounds_json_d4():
    p = run_cli("bounds", "--series", "D", "--rank", "4", "--mu", "3,3,3,0",
                "--lam", "1,1,1,0")
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    assert doc["schema_version"] == "1"
    assert doc["instance"]["mu"] == ["3", "3", "3", "0"]
    rows = {tuple(r["root"]): r for r in doc["results"]["roots"]}
    neg_a3 = rows[("0", "0", "-1", "1")]
    assert neg_a3["curve_bound"] == 2 and neg_a3["pair_bound"] == 2
    assert doc["results"]["relations_ok"] is True


def test_bounds_zero_instance():
    p = run_cli("bounds", "--series", "A", "--rank", "1", "--mu", "0,0", "--lam", "0,0")
    doc = json.loads(p.stdout)
    assert all(r["curve_bound"] == 0 and r["pair_bound"] == 0 for r in doc["results"]["roots"])


def test_bounds_refuses_lambda_not_below_mu():
    p = run_cli("bounds", "--series", "A", "--rank", "1", "--mu", "1,1", "--lam", "2,0")
    assert p.returncode == 2
    assert "not below" in p.stderr


def test_bad_input_exits_2():
    assert run_cli("bounds", "--series", "A", "--rank", "1", "--mu", "x,y",
                   "--lam", "0,0").returncode == 2
    assert run_cli("bounds", "--series", "B", "--rank", "1", "--mu", "1",
                   "--lam", "0").returncode == 2
    assert run_cli("bounds", "--series", "A", "--rank", "1", "--mu", "1,0,0",
                   "--lam", "0,0").returncode == 2
    assert run_cli("bounds", "--series", "A", "--rank", "1", "--mu", "1,0").returncode == 2


def test_phi_quadric_cone():
    p = run_cli("phi", "--series", "A", "--rank", "1", "--mu", "2,0", "--lam", "1,1")
    doc = json.loads(p.stdout)
    res = doc["results"]
    assert len(res["curve"]) == 2
    assert res["curve"] == res["fm_bound"]
    assert res["cartan_profile"] == [1]
    assert res["tangent_dimension"] == 3
    assert res["curve_subset_of_fm"] is True


def test_phi_minuscule_top_dimension_is_two_rho_pairing():
    p = run_cli("phi", "--series", "B", "--rank", "3", "--mu", "1,0,0", "--lam", "1,0,0")
    doc = json.loads(p.stdout)
    assert doc["results"]["tangent_dimension"] == 5  # <mu, 2rho> = <e1, (5,3,1)>


def test_cartan_counterexample_exits_1():
    p = run_cli("cartan", "--series", "D", "--rank", "4", "--mu", "3,3,3,0",
                "--lam", "1,1,1,0")
    assert p.returncode == 1
    doc = json.loads(p.stdout)
    assert not doc["results"]["cartan_equality"]
    gaps = {(w["cartan_bound"], w["min_support_curve_bound"]) for w in doc["witnesses"]}
    assert (3, 2) in gaps


def test_cartan_certified_instance():
    p = run_cli("cartan", "--series", "B", "--rank", "3", "--mu", "2,0,0",
                "--lam", "0,0,0")
    assert p.returncode == 0
    doc = json.loads(p.stdout)
    assert doc["results"]["cartan_equality"] is True
    assert doc["results"]["cartan_profile"] == [1, 1, 1]


def test_classify_selector_and_wrong_set():
    p = run_cli("classify", "--series", "D", "--rank", "4", "--mu", "2,0,0,0")
    assert p.returncode == 0
    doc = json.loads(p.stdout)
    assert doc["results"]["kind"] == "d_real" and doc["results"]["r"] == 2
    assert doc["results"]["selector_property"] is True

    p = run_cli("classify", "--series", "D", "--rank", "4", "--mu", "2,0,0,0",
                "--search", "1", "--box-margin", "1")
    assert p.returncode == 1
    doc = json.loads(p.stdout)
    assert doc["results"]["selector_property"] is False
    assert doc["witnesses"]


def test_classify_not_abelian():
    p = run_cli("classify", "--series", "D", "--rank", "4", "--mu", "2,1,0,0")
    assert p.returncode == 0
    doc = json.loads(p.stdout)
    assert doc["results"]["kind"] == "not_abelian"


def test_verify_certified_sweep():
    p = run_cli("verify", "--series", "C", "--rank", "2", "--mu", "1,1")
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    assert doc["results"]["summary"]["unexpected"] == 0
    assert doc["results"]["summary"]["total"] == len(doc["results"]["instances"])


def test_verify_dh_gap_expectation_flag():
    args = ["verify", "--series", "D", "--rank", "4", "--mu", "3,3,3,0"]
    assert run_cli(*args).returncode == 1
    p = run_cli(*args, "--expect-dh-gap")
    assert p.returncode == 0
    doc = json.loads(p.stdout)
    assert doc["results"]["summary"]["expected_gaps"] == 1
    gap = [e for e in doc["results"]["instances"] if e["status"] == "not_certified"]
    assert [e["lambda"] for e in gap] == [["1", "1", "1", "0"]]


def test_verify_single_lambda_and_oracle():
    p = run_cli("verify", "--series", "B", "--rank", "2", "--mu", "2,0",
                "--lam", "1,1", "--oracle")
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    (entry,) = doc["results"]["instances"]
    assert entry["oracle_agreement"] is True


def test_verify_minuscule_sweep_is_single_instance():
    p = run_cli("verify", "--series", "B", "--rank", "3", "--mu", "1,0,0")
    doc = json.loads(p.stdout)
    assert doc["results"]["summary"] == {
        "total": 1, "certified": 1, "expected_gaps": 0, "unexpected": 0,
    }


def test_verify_rejects_non_abelian_mu():
    p = run_cli("verify", "--series", "D", "--rank", "4", "--mu", "2,1,0,0")
    assert p.returncode == 2
    assert "abelian" in p.stderr


def test_spec_file_input(tmp_path):
    spec = tmp_path / "spec.json"
    spec.write_text(json.dumps({
        "series": "D", "rank": 4,
        "mu": ["3", "3", "3", "0"], "lambda": ["1", "1", "1", "0"],
        "characteristic": 0, "search_set": [1, 3, 4],
    }))
    p = run_cli("bounds", "--spec", str(spec))
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    assert doc["instance"]["lambda"] == ["1", "1", "1", "0"]
    assert len(doc["instance"]["search"]) == 3


def test_modp_command(tmp_path):
    f = tmp_path / "modp.json"
    f.write_text(json.dumps({
        "series": "C", "rank": 2, "f": 1,
        "embeddings": [
            {"phi": 0, "mu": ["1/2", "1/2"]},
            {"phi": 0, "mu": ["1/2", "1/2"]},
        ],
    }))
    p = run_cli("modp", str(f))
    assert p.returncode == 0, p.stderr
    doc = json.loads(p.stdout)
    (factor,) = doc["results"]["factors"]
    assert factor["mu"] == ["1", "1"]
    assert doc["results"]["spans_everywhere"] is True

    f.write_text(json.dumps({"series": "C", "rank": 2}))
    assert run_cli("modp", str(f)).returncode == 2
    f.write_text("not json")
    assert run_cli("modp", str(f)).returncode == 2


def test_tsv_outputs():
    p = run_cli("bounds", "--series", "A", "--rank", "1", "--mu", "2,0",
                "--lam", "1,1", "--format", "tsv")
    lines = p.stdout.splitlines()
    assert lines[0] == "root\tcurve_bound\tpair_bound"
    assert "1,-1\t1\t1" in lines
    p = run_cli("verify", "--series", "C", "--rank", "2", "--mu", "1,1",
                "--format", "tsv")
    assert p.stdout.splitlines()[0] == "lambda\tstatus\texpected"


def _walk_rationals(node):
    if isinstance(node, str):
        yield node
    elif isinstance(node, list):
        for x in node:
            yield from _walk_rationals(x)
    elif isinstance(node, dict):
        for x in node.values():
            yield from _walk_rationals(x)


def test_report_rationals_round_trip():
    p = run_cli("bounds", "--series", "D", "--rank", "4", "--mu", "3,3,3,0",
                "--lam", "3,3,2,1")
    doc = json.loads(p.stdout)
    for s in _walk_rationals(doc["results"]):
        if s.lstrip("-").replace("/", "").isdigit():
            f = Fraction(s)
            assert f.denominator in (1, 2)
            text = str(f.numerator) if f.denominator == 1 else f"{f.numerator}/2"
            assert text == s


def test_repeated_runs_are_byte_identical():
    args = ["verify", "--series", "D", "--rank", "4", "--mu", "2,2,2,0",
            "--expect-dh-gap"]
    out1 = run_cli(*args).stdout
    out2 = run_cli(*args).stdout
    assert out1 == out2
