import json

from supervir.cli import main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_unitary_passes(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main([
        "check", "--family", "ns", "--variant", "unitary", "--kappa", "1/2",
        "--eta", "0", "--window", "2", "--cutoff", "3", "--output", str(out),
    ])
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["command"] == "check"
    assert doc["version"]
    assert all(c["status"] == "PASS" for c in doc["checks"])
    names = {c["check"] for c in doc["checks"]}
    assert {"relations", "central_charge", "lowest_weight", "oracle_compare"} <= names


def test_check_bs_records_control(tmp_path):
    out = tmp_path / "report.json"
    code = main([
        "check", "--family", "ns", "--variant", "bs", "--kappa", "1/2",
        "--controls", "strict", "--output", str(out),
    ])
    assert code == 0
    doc = json.loads(out.read_text())
    controls = [c for c in doc["checks"] if c["expected_failure_control"]]
    assert controls, "the symmetry control must be present"
    for c in controls:
        assert c["status"] == "PASS"  # the control PASSES because symmetry FAILS
        assert any(e["residual"] != "0" for e in c["entries"])


def test_malformed_rational_is_usage_error(capsys):
    code, _, err = run(["check", "--family", "ns", "--kappa", "1/0"], capsys)
    assert code == 2
    assert "denominator" in err


def test_negative_cutoff_is_usage_error(capsys):
    code, _, err = run(["bounds", "--cutoff", "-1"], capsys)
    assert code == 2


def test_tables_series(capsys):
    code, out, _ = run(["tables", "--series", "vir", "--p-max", "5"], capsys)
    assert code == 0
    doc = json.loads(out)
    rows = {r["p"]: r["c"] for r in doc["series"]["rows"]}
    assert rows == {3: "1/2", 4: "7/10", 5: "4/5"}
    assert all(r["matches_closed_form"] for r in doc["series"]["rows"])


def test_tables_walgebra(capsys):
    code, out, _ = run(["tables", "--walgebra", "spo_2_3"], capsys)
    assert code == 0
    doc = json.loads(out)
    w = doc["walgebra"]
    assert w["dual_coxeter"] == "1/2"
    assert w["superdimension"] == 0
    assert w["unitary_range"] == "k in (1/4)*Z_<=-3"
    assert w["c(-3/4)"] == "1"


def test_tables_identity(capsys):
    for name in ("sl2", "spo(2|1)", "spo(2|2)", "spo(2|3)", "D(2,1;a)"):
        code, out, _ = run(["tables", "--identity", name], capsys)
        assert code == 0
        doc = json.loads(out)
        assert all(r["status"] == "VERIFIED" for r in doc["identities"])


def test_bounds_identity(capsys):
    code, out, _ = run(
        ["bounds", "--family", "ns", "--kappa", "0", "--role", "G", "--n", "3/2", "--cutoff", "4"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["checks"][0]["entries"][0]["residual"] == "0"


def test_bounds_norm(capsys):
    code, out, _ = run(["bounds", "--op", "fermion", "--n", "1/2", "--cutoff", "4"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["norm_estimate"]["value"] - 1.0) <= 1e-9


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    argv = ["check", "--family", "ns", "--variant", "bs", "--kappa", "1/3", "--cutoff", "2",
            "--window", "1"]
    assert main(argv + ["--output", str(a)]) == 0
    assert main(argv + ["--output", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_reports_deterministic_across_processes(tmp_path):
    """Fresh interpreters with different hash seeds produce identical bytes."""
    import subprocess
    import sys

    outs = []
    for seed in ("0", "424242"):
        out = tmp_path / f"p{seed}.json"
        env = {"PYTHONHASHSEED": seed, "PATH": "/usr/bin:/bin"}
        code = subprocess.run(
            [sys.executable, "-m", "supervir.cli", "check", "--family", "n2", "--variant", "bs",
             "--kappa", "1/2", "--window", "1", "--cutoff", "2", "--output", str(out)],
            env=env, capture_output=True, text=True,
        )
        assert code.returncode == 0, code.stderr
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]
