import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from mldegree.cli import main

FIXTURES = Path(str(resources.files("mldegree") / "fixtures"))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_generic_series(capsys):
    code, data = run_json(capsys, "generic", "-d", "2", "-b", "2,2,2,2", "--series", "4")
    assert code == 0
    assert data["series"] == [1, 6, 25, 88, 280] and data["ml_degree"] == 25


def test_generic_text(capsys):
    code, out, _ = run(capsys, "generic", "-d", "3", "-b", "1,1,1,1,1")
    assert code == 0 and "4" in out


def test_toric_explain(capsys):
    code, data = run_json(capsys, "toric", str(FIXTURES / "three_polygons.json"), "--explain")
    assert code == 0 and data["ml_degree"] == 14
    assert [t["value"] for t in data["terms"]] == ["1", "3/2", "1/2", "15", "-1", "-4", "1"]


def test_toric_text_lists_rays_and_support(capsys):
    code, out, _ = run(capsys, "toric", str(FIXTURES / "three_polygons.json"), "--explain")
    assert code == 0
    assert "x1=(1, 0)" in out and "support I: {x3" in out


def test_toric_fastpath_crosscheck(capsys):
    code, data = run_json(capsys, "toric", str(FIXTURES / "square_translated.json"), "--crosscheck")
    assert code == 0 and data["crosscheck"]["agree"]


def test_fastpath_origin_edge_exit_code(capsys):
    code, _, err = run(capsys, "toric", str(FIXTURES / "three_polygons.json"), "--fastpath")
    assert code == 3 and "origin" in err


def test_arrangement_brute(capsys):
    code, data = run_json(capsys, "arrangement", str(FIXTURES / "lines4_generic.json"), "--brute")
    assert code == 0
    assert data["bounded_regions"] == 3 and data["regions"] == 11 and data["brute_force"]["agree"]


def test_arrangement_concurrent(capsys):
    code, data = run_json(capsys, "arrangement", str(FIXTURES / "lines3_concurrent.json"))
    assert code == 0 and data["bounded_regions"] == 0


def test_oracle_crosscheck(capsys):
    code, data = run_json(capsys, "oracle", str(FIXTURES / "ce_generic.json"), "--crosscheck")
    assert code == 0 and data["complex_count"] == 9 and data["real_count"] == 7


def test_oracle_deterministic(capsys):
    path = str(FIXTURES / "nested_ellipses.json")
    _, a = run_json(capsys, "oracle", path, "--seed", "5")
    _, b = run_json(capsys, "oracle", path, "--seed", "5")
    assert a == b and a["complex_count"] == 5


def test_viro(capsys):
    code, data = run_json(capsys, "viro", "-b", "2,2")
    assert code == 0 and data["viro_bound"] == 5


@pytest.mark.parametrize("argv", [
    ["generic", "-d", "2", "-b", "x"],
    ["generic", "-d", "2"],
    ["generic", "-d", "2", "-b", "2", "--precision", "8"],
    ["toric", "/nonexistent.json"],
    ["bogus"],
])
def test_input_errors_exit_2(capsys, argv):
    assert main(argv) == 2


def test_malformed_model(tmp_path, capsys):
    p = tmp_path / "bad.json"
    p.write_text('{"polytopes": 3}')
    assert main(["toric", str(p)]) == 2


def test_smoothness_violation_exit_3(tmp_path, capsys):
    p = tmp_path / "sing.json"
    p.write_text(json.dumps({"d": 2, "mode": "toric", "polytopes": [{"vertices": [[0, 0], [2, 1], [1, 2]]}] * 2}))
    assert main(["toric", str(p)]) == 3


def test_tol_formats(capsys):
    assert main(["oracle", str(FIXTURES / "independence.json"), "--tol", "2^-60"]) == 0
    assert main(["oracle", str(FIXTURES / "independence.json"), "--tol", "1/1000000"]) == 0
    assert main(["oracle", str(FIXTURES / "independence.json"), "--tol", "0"]) == 2


def test_all_golden(capsys):
    code, out, _ = run(capsys, "--all-golden")
    assert code == 0 and "FAIL" not in out


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "mldegree.cli", "generic", "-d", "2", "-b", "1,1,1,1", "--json"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["ml_degree"] == 3
