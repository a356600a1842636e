import json
import subprocess
import sys

import pytest

from ringprops.harness.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, data):
        p = tmp_path / name
        p.write_text(data if isinstance(data, str) else json.dumps(data))
        return str(p)
    return {
        "z4": write("z4.json", {"kind": "z_module", "orders": [4]}),
        "z6": write("z6.json", {"kind": "z_module", "orders": [6]}),
        "m2": write("m2.json", {"kind": "matrix", "base": {"kind": "cyclic", "n": 2}, "k": 2}),
        "bad": write("bad.json", "{not json"),
        "badkind": write("badkind.json", {"kind": "torus"}),
        "small": write("small.json", [{"kind": "cyclic", "n": 4}, {"kind": "z_module",
                                                                   "orders": [2, 2]}]),
        "spec": write("spec.json", {"z_cyclic_max": 4, "z_pair_max": 2, "regular_cyclic_max": 4,
                                    "named_rings": [], "quotients": False, "free_ring_max": 2}),
    }


def test_check_failure_exit_1(files, capsys):
    assert main(["check", files["z4"], "--property", "centrally_endo_aip"]) == 1
    out = capsys.readouterr().out
    assert "FAILS" in out and "witness" in out


def test_check_holds_exit_0(files, capsys):
    assert main(["check", files["z6"], "--property", "centrally_endo_aip"]) == 0
    assert main(["check", files["m2"], "--property", "centrally_aip"]) == 0


def test_check_json(files, capsys):
    assert main(["check", files["m2"], "--property", "abelian", "--json"]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["property"] == "abelian" and data["holds"] is False
    assert main(["--json", "check", files["m2"], "--property", "endo_aip"]) == 0
    assert json.loads(capsys.readouterr().out)["holds"] is True


def test_check_module_property_on_ring_uses_regular_module(files):
    assert main(["check", files["m2"], "--property", "centrally_endo_aip"]) == 0


def test_errors(files, capsys):
    assert main(["describe", files["bad"]]) == 2
    assert main(["describe", files["badkind"]]) == 2
    assert main(["describe", files["bad"] + ".missing"]) == 2
    assert main(["check", files["z4"], "--property", "nonsense"]) == 2
    assert main(["check", files["z4"], "--property", "centrally_aip"]) == 2
    assert main(["describe", files["m2"], "--cap", "8"]) == 3
    assert main(["suite", "--theorems", "NOPE", "--corpus", files["small"]]) == 2
    assert "error" in capsys.readouterr().err


def test_describe(files, capsys):
    assert main(["describe", files["m2"], "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["type"] == "ring" and d["order"] == 16 and d["two_sided_ideals"] == 2
    assert main(["describe", files["z6"], "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["uniform_dimension"] == 2 and d["fully_invariant_submodules"] == 4


def test_suite_on_small_corpora(files, capsys, tmp_path):
    out = tmp_path / "report.json"
    assert main(["suite", "--corpus", files["small"], "--output", str(out)]) == 0
    report = json.loads(out.read_text())
    assert len(report["theorems"]) == 17
    capsys.readouterr()
    assert main(["suite", "--corpus", files["spec"], "--theorems", "HIER,ifp-eq", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [t["id"] for t in data["theorems"]] == ["HIER", "IFP-EQ"]


def test_separate(files, capsys):
    assert main(["separate", "abelian", "endo_aip", "--json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["structure"] == "Z(4)" and d["replayed"] is True
    assert main(["separate", "centrally_endo_aip", "rickart"]) == 0
    assert "no finite witness" in capsys.readouterr().out
    assert main(["separate", "ring:abelian", "bogus"]) == 2


def test_python_dash_m_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "ringprops", "check", files["z4"],
                           "--property", "endo_aip"], capture_output=True, text=True)
    assert proc.returncode == 1 and "FAILS" in proc.stdout
    proc = subprocess.run([sys.executable, "-m", "ringprops", "describe", files["bad"]],
                          capture_output=True, text=True)
    assert proc.returncode == 2 and "error" in proc.stderr
