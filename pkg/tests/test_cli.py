import io
import json
import subprocess
import sys

import pytest

from distcrit.cli import main


def run(argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_dnum_k3():
    code, out, _ = run(["dnum", "Bw"])
    assert code == 0
    (rec,) = records(out)
    assert rec["graph6"] == "Bw" and rec["D"] == 3 and len(rec["witness"]) == 3


def test_count_k4_from_stdin():
    code, out, _ = run(["count", "--k", "4"], stdin="C~\n")
    assert code == 0
    assert records(out)[0]["DGk"] == 1


def test_aut_c4():
    code, out, _ = run(["aut", "C]"])
    rec = records(out)[0]
    assert code == 0 and rec["group_order"] == 8 and rec["orbits"] == [[0, 1, 2, 3]]


def test_critical_with_audit():
    code, out, _ = run(["critical", "C]", "Ch"])
    c4, p4 = records(out)
    assert c4["critical"] and c4["D"] == 3 and c4["audit"]["delta-plus-one"] == "pass"
    assert not p4["critical"] and p4["audit"] is None


def test_gen_plain_graph6():
    code, out, _ = run(["gen", "--n", "4"])
    assert code == 0 and len(out.split()) == 11
    code, out, _ = run(["gen", "--n", "5", "--trees"])
    assert len(out.split()) == 3


def test_json_and_tsv_carry_same_data():
    _, js, _ = run(["dnum", "Bw", "C]", "Ch"])
    _, tsv, _ = run(["--format", "tsv", "dnum", "Bw", "C]", "Ch"])
    lines = tsv.splitlines()
    header = lines[0].split("\t")
    rows = []
    for line in lines[1:]:
        cells = line.split("\t")
        rows.append({k: (c if k in ("graph6", "method") else json.loads(c)) for k, c in zip(header, cells)})
    assert rows == records(js)


def test_search_and_verify():
    code, out, _ = run(["search", "--max-n", "5", "--d", "3"])
    assert code == 0 and len(records(out)) == 5
    code, out, _ = run(["verify", "--suite", "three-critical", "--max-n", "7"])
    rec = records(out)[0]
    assert code == 0 and rec["passed"] and len(rec["found"]) == 5


def test_search_from_stdin():
    code, out, _ = run(["search", "--stdin", "--max-n", "8"], stdin="C]\nCh\nDUW\n")
    assert code == 0
    assert [r["graph6"] for r in records(out)] == ["C]", "DUW"]


def test_decode_error_exit_3():
    code, _, err = run(["dnum", "~"])
    assert code == 3 and "argument 1" in err
    code, _, err = run(["dnum"], stdin="Bw\nBx?\n")
    assert code == 3 and "line 2" in err


@pytest.mark.parametrize("argv", [["bogus"], ["count", "Bw"], ["verify", "--suite", "nope", "--max-n", "3"]])
def test_usage_errors_exit_2(argv):
    assert run(argv)[0] == 2


def test_over_budget_exit_2():
    assert run(["gen", "--n", "11"])[0] == 2
    assert run(["critical", "--budget", "3", "C~"])[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "distcrit", "dnum", "Bw"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["D"] == 3
