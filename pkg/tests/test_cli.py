import json
import subprocess
import sys
from pathlib import Path

import pytest

from paper_table import QH_WORDS
from qhalg.cli import canonical_json, main
from qhalg.qh import SigmaOrder

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_human_output(capsys):
    code, out, _ = run(capsys, "check", "@paper", "--perm", "1,2,3,4")
    assert code == 0
    assert "quasi-hereditary" in out and "not" not in out.splitlines()[0]


def test_check_non_qh_still_exits_zero(capsys):
    code, out, _ = run(capsys, "check", "@paper", "--word", "3", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["verdict"] is False
    assert data["command"][:2] == ["qhalg", "check"]
    assert "timing" in data


def test_perm_and_word_must_agree(capsys):
    code, _, err = run(capsys, "check", "@paper", "--perm", "2,1,3,4", "--word", "2")
    assert code == 2 and "disagree" in err
    code, _, _ = run(capsys, "check", "@paper", "--perm", "2,1,3,4", "--word", "1")
    assert code == 0


def test_word_shorthand(capsys):
    code, out, _ = run(capsys, "standard", "@paper", "--word", "321", "--json")
    assert code == 0
    data = json.loads(out)["result"]
    assert data["perm"] == [4, 1, 2, 3]
    assert data["standard"]["1"] == [1, 1, 2, 1]


def test_bad_input_exits_two(capsys, tmp_path):
    assert run(capsys, "check", str(tmp_path / "missing.qha"), "--perm", "1")[0] == 2
    bad = tmp_path / "bad.qha"
    bad.write_text("vertices 2\narrow x 1 3\n")
    code, _, err = run(capsys, "check", str(bad), "--perm", "1,2")
    assert code == 2 and "bad.qha:2:11" in err
    assert run(capsys, "check", "@paper", "--perm", "1,2,3")[0] == 2
    assert run(capsys, "check", "@paper")[0] == 2
    assert run(capsys, "nonsense", "@paper")[0] == 2


def test_connect_non_qh_exits_one(capsys):
    code, _, err = run(capsys, "connect", "@paper", "--from", "1,2,3,4", "--to-word", "3")
    assert code == 1 and "not quasi-hereditary" in err


def test_connect_json(capsys):
    code, out, _ = run(capsys, "connect", "@paper", "--from", "1,2,3,4", "--to", "3,2,1,4", "--json")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["word"] == [1, 2, 1] and res["certified"] and res["method"] == "corollary"


def test_biquiver_and_graph_dot(capsys):
    code, out, _ = run(capsys, "biquiver", "@paper", "--perm", "1,2,3,4", "--dot")
    assert code == 0 and out.startswith("digraph")
    code, out, _ = run(capsys, "twist-graph", "@paper", "--dot")
    assert code == 0 and out.startswith("graph") and out.count(" -- ") == 21


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "@paper", "--json")
    res = json.loads(out)["result"]
    assert code == 0 and res["ok"] and res["pairs"] == 240 and res["bfs_fallbacks"] == 0


def test_prime_override(capsys):
    code, out, _ = run(capsys, "enumerate", "@paper", "--prime", "32003", "--json")
    data = json.loads(out)
    assert code == 0 and data["algebra"]["field"] != "QQ" and data["result"]["count"] == 16


def test_enumerate_matches_golden(capsys):
    code, out, _ = run(capsys, "enumerate", "@paper", "--json")
    assert code == 0
    got = canonical_json(json.loads(out))
    assert got == (GOLDEN / "enumerate_paper.json").read_text()
    perms = json.loads(got)["result"]["permutations"]
    assert sorted(perms) == sorted(list(SigmaOrder.from_word(w, 4).perm) for w in QH_WORDS)


@pytest.mark.slow
def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "qhalg.cli", "check", "@paper", "--perm", "1,2,3,4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("sigma = 1,2,3,4: quasi-hereditary")
