import json

import pytest

from bijfact.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_wtable_json(capsys):
    status, out, _ = run(capsys, "wtable", "--type", "L=1,1;M=2")
    doc = json.loads(out)
    assert status == 0
    assert doc["counts"] == {"2": 2, "3": 4}
    assert doc["config"]["type"] == "L=1,1;M=2"


def test_wtable_csv(capsys):
    status, out, _ = run(capsys, "wtable", "--type", "L=2,2;M=-", "--format", "csv")
    lines = out.splitlines()
    assert status == 0 and lines[0].startswith("# {")
    assert lines[1] == "type,k,count"
    assert lines[2:] == ["\"L=2,2;M=-\",2,2", "\"L=2,2;M=-\",3,3", "\"L=2,2;M=-\",4,1"]


def test_track(capsys):
    status, out, _ = run(capsys, "track", "--d", "(1 2)(3 4)", "--e", "1,2")
    doc = json.loads(out)
    assert status == 0
    assert doc["theta"] == 1 and doc["histogram"] == {"1": 4, "0": 2}
    assert doc["hypothesis"] is True and doc["reduction_type"] == "L=1,1;M=2"


def test_track_text(capsys):
    status, out, _ = run(capsys, "track", "--d", "(1 2)(3 4)", "--e", "1,3", "--format", "text")
    assert status == 0 and "theta = 2" in out


def test_verify_thm31(capsys):
    status, out, _ = run(capsys, "verify-thm31", "--n-max", "6")
    doc = json.loads(out)
    assert status == 0 and doc["ok"] and doc["violations"] == []
    assert "L=1,1;M=2" in doc["witnesses"]
    assert all(r["ratio"].count("/") == 1 for r in doc["ratios"])


def test_scan_conjecture(capsys):
    status, out, _ = run(capsys, "scan-conjecture", "--n-max", "5")
    doc = json.loads(out)
    assert status == 0 and doc["overall_min"]["ratio"] == "1/2"


def test_verify_reduction_single_and_sweep(capsys):
    status, out, _ = run(capsys, "verify-reduction", "--d", "(1 2)(3 4)", "--e", "1,3")
    doc = json.loads(out)
    assert status == 0 and doc["mismatches"] == 0
    assert doc["instances"][0]["w_counts"] == {"2": 2, "3": 3, "4": 1}
    status, out, _ = run(capsys, "verify-reduction", "--n-max", "5", "--format", "text")
    assert status == 0 and out.rstrip().endswith("0 with findings")


def test_phi_demo_default(capsys):
    status, out, _ = run(capsys, "phi-demo")
    doc = json.loads(out)
    assert status == 0 and doc["max_fiber"] == 2 and doc["mismatches"] == 0
    assert sorted(f["array"] for f in doc["fibers"]) == ["1 3 2 4 / 4 5 3 6", "1 4 2 3 / 3 5 4 6"]
    status, out, _ = run(capsys, "phi-demo", "--type", "L=2,1;M=2", "--format", "csv")
    assert status == 0 and out.splitlines()[1] == "array,image,case,m,triple"


@pytest.mark.parametrize("argv", [
    ["wtable", "--type", "nonsense"],
    ["verify-thm31", "--n-max", "9"],
    ["scan-conjecture", "--n-max", "12"],
    ["track", "--d", "(1 2", "--e", "1,2"],
    ["track", "--d", "(1 2)", "--e", "1"],
    ["verify-reduction"],
    ["phi-demo", "--d", "5->1; (2 3 4)"],
    ["frobnicate"],
    ["wtable", "--type", "L=1,1;M=2", "--workers", "0"],
])
def test_usage_errors(capsys, argv):
    status, _, _ = run(capsys, *argv)
    assert status == 1


def test_force_lifts_limit(capsys, monkeypatch):
    from bijfact import cli
    from bijfact.enumeration import Theorem31Report

    seen = []
    monkeypatch.setattr(cli, "verify_theorem31", lambda *a: seen.append(a) or Theorem31Report([]))
    status, out, _ = run(capsys, "verify-thm31", "--n-max", "9", "--force")
    assert status == 0 and seen[0][0] == 9
    assert json.loads(out)["config"]["force"] is True


def test_findings_exit_code(capsys, monkeypatch):
    from bijfact import cli
    from bijfact.enumeration import Theorem31Entry, Theorem31Report
    from bijfact.core import ComponentType

    bad = Theorem31Report([Theorem31Entry(ComponentType((1, 1), (2,)), 5, 2, 6)])
    monkeypatch.setattr(cli, "verify_theorem31", lambda *a: bad)
    status, out, _ = run(capsys, "verify-thm31", "--n-max", "4")
    assert status == 2 and json.loads(out)["violations"] == ["L=1,1;M=2"]


def test_worker_count_does_not_change_report(capsys):
    _, one, _ = run(capsys, "verify-thm31", "--n-max", "6", "--workers", "1")
    _, two, _ = run(capsys, "verify-thm31", "--n-max", "6", "--workers", "2")
    assert one == two
    _, one, _ = run(capsys, "wtable", "--type", "L=2,1;M=2,1", "--workers", "1")
    _, two, _ = run(capsys, "wtable", "--type", "L=2,1;M=2,1", "--workers", "3")
    assert one == two


def test_output_file(tmp_path, capsys):
    path = tmp_path / "w.json"
    status, out, _ = run(capsys, "wtable", "--type", "L=1,1;M=2", "-o", str(path))
    assert status == 0 and out == ""
    assert json.loads(path.read_text())["total"] == 6
