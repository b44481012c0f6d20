import json
import shutil
import subprocess

import pytest

from unitcover import constructions as C
from unitcover.cli import main, parse_group


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_parse_group(tmp_path):
    assert parse_group("dihedral:4").order == 8
    assert parse_group("abelian:2,2").order == 4
    f = tmp_path / "g.json"
    C.save_group(C.quaternion8(), f)
    assert parse_group(str(f)).order == 8


def test_multiplier_command(capsys):
    code, out = run(capsys, "multiplier", "abelian:2,4,4", "--homology")
    doc = json.loads(out)
    assert code == 0 and doc["multiplier"] == [2, 2, 4] and doc["homology"] == [2, 2, 4]


def test_zu_exp_command(capsys):
    code, out = run(capsys, "zu-exp", "abelian:2,2")
    assert json.loads(out)["exp_Gamma_u"] == 4


def test_cover_command(capsys, tmp_path):
    out_file = tmp_path / "cover.json"
    code, out = run(capsys, "cover", "--mu", "0", "abelian:2,2", "--out", str(out_file))
    doc = json.loads(out)
    assert code == 0 and doc["order"] == 8 and doc["plp"]
    spec = json.loads(out_file.read_text())
    assert C.group_from_spec(spec).order == 8


def test_omega_product_command(capsys, tmp_path):
    f = tmp_path / "coc.json"
    f.write_text(json.dumps([{"modulus": 2, "values": [[0, 0], [0, 1]]}]))
    code, out = run(capsys, "omega-product", "cyclic:2", "--cocycles", str(f))
    assert code == 0 and json.loads(out)["order"] == 4


def test_verify_command(capsys, tmp_path):
    code, out = run(capsys, "verify", "--suite", "prop-f", "--cache-dir", str(tmp_path))
    doc = json.loads(out)
    assert code == 0 and doc["pass"] and doc["suite"] == "prop-f"
    code, out = run(capsys, "verify", "--suite", "thm-main", "--max-order", "8", "--no-cache", "--summary")
    assert code == 0 and json.loads(out)["failed"] == 0


def test_report_and_corpus(capsys, tmp_path):
    code, out = run(capsys, "report", "--bounds", "--max-order", "8", "--no-cache")
    assert code == 0 and json.loads(out)["pass"]
    code, out = run(capsys, "corpus", "--max-order", "8", "--emit", str(tmp_path / "c"))
    doc = json.loads(out)
    assert code == 0 and doc["count"] == len(list((tmp_path / "c").glob("0*.json")))


def test_bad_group_exit_code(capsys):
    assert main(["multiplier", "nosuchgroup"]) == 2


@pytest.mark.skipif(shutil.which("unitcover") is None, reason="console script not installed")
def test_console_script():
    r = subprocess.run(["unitcover", "multiplier", "abelian:3,3"], capture_output=True, text=True, timeout=120)
    assert r.returncode == 0 and json.loads(r.stdout)["multiplier"] == [3]
