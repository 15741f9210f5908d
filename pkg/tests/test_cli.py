from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from ulc import unique
from ulc.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv)
    return code, [json.loads(line) for line in text.splitlines()]


def test_uklc_figure1():
    code, (doc,) = run_json("uklc", "--k", "3", "--graph", "figure1")
    assert code == 0
    assert doc["schema"] == "ulc/1" and doc["found"] and doc["decided"]
    assert set(doc["assignment"]) == {str(v) for v in range(7)}


def test_m_number_k2():
    code, (doc,) = run_json("m-number", "--graph6", "A_")
    assert code == 0 and doc["m"] == 2


def test_recognize_figure2():
    code, (doc,) = run_json("recognize", "--family", "3-list-critical", "--graph", "figure2")
    assert code == 0 and doc["is_critical"] and doc["family"] == "two_even_cycles_path"


def test_graph_inputs_are_interchangeable(tmp_path):
    edges = tmp_path / "g.json"
    edges.write_text(json.dumps({"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]}))
    _, (a,) = run_json("m-number", "--graph", "C5")
    _, (b,) = run_json("m-number", "--edges", str(edges))
    _, (c,) = run_json("m-number", "--graph6", "Dhc")
    assert a["m"] == b["m"] == c["m"] == 2


def test_decode_encode_generate():
    _, (doc,) = run_json("decode", "A_")
    assert doc["n"] == 2 and doc["edges"] == [[0, 1]]
    _, (doc,) = run_json("encode", "--graph", "K2")
    assert doc["graph6"] == "A_"
    _, (doc,) = run_json("generate", "theta", "2", "2", "2")
    assert doc["n"] == 5 and len(doc["edges"]) == 6


def test_uflc_and_choosable(tmp_path):
    f = tmp_path / "f.json"
    f.write_text(json.dumps({"0": 1, "1": 2}))
    code, (doc,) = run_json("uflc", "--graph6", "A_", "--f", str(f))
    assert code == 0 and doc["found"]
    code, (doc,) = run_json("choosable", "--graph", "K3", "--k", "2")
    assert code == 0 and not doc["choosable"] and doc["witness"] == {str(v): [1, 2] for v in range(3)}
    code, (doc,) = run_json("chi-list", "--graph", "C5", "--exhaustive")
    assert doc["chi_list"] == 3


def test_construct_kinds(tmp_path):
    _, (doc,) = run_json("construct", "--kind", "lemma1", "--k", "3", "--graph", "figure1")
    assert len({c for lst in doc["assignment"].values() for c in lst}) == 4
    _, (doc,) = run_json("construct", "--kind", "equality", "--graph", "P3", "--order", "0,1,2")
    assert sum(doc["f"].values()) == 5
    lists = tmp_path / "l.json"
    lists.write_text(json.dumps({"0": [1], "1": [2]}))
    _, (doc,) = run_json("construct", "--kind", "gstar", "--graph", "K2", "--lists", str(lists), "--t", "2")
    assert doc["n"] == 4 and len(doc["edges"]) == 4
    _, (doc,) = run_json("construct", "--kind", "duplicate", "--graph", "P3", "--vertex", "1")
    assert len(doc["edges"]) == 4


def test_construct_precondition_is_usage_error():
    code, _ = run("construct", "--kind", "lemma1", "--k", "2", "--graph", "K3")
    assert code == 1


def test_exit_codes(capsys):
    assert run("frobnicate")[0] == 1
    assert run("uklc", "--graph", "C5")[0] == 1
    assert run("m-number", "--graph6", "A")[0] == 1
    assert run("m-number", "--graph", "C5", "--budget", "0")[0] == 1
    code, (doc,) = run_json("uklc", "--k", "3", "--graph", "figure1", "--budget", "5")
    assert code == 2 and doc["decided"] is False
    unique.clear_memo()  # a memoized m-number is answered without search
    code, (doc,) = run_json("m-number", "--graph", "figure1", "--budget", "5")
    assert code == 2 and doc["decided"] is False
    assert "usage" in capsys.readouterr().err


def test_table_output():
    code, text = run("m-number", "--graph", "C5", "--output", "table")
    rows = dict(line.split(None, 1) for line in text.splitlines())
    assert code == 0 and rows["m"] == "2" and rows["decided"] == "true"


def test_verify_stream_and_summary():
    code, docs = run_json("verify", "--graph", "figure1", "--claim", "bound", "--claim", "logbnd")
    assert code == 0
    assert docs[0]["claim_id"] == "bound" and docs[0]["holds"]
    assert "skipped" in docs[1]
    assert docs[-1] == {"schema": "ulc/1", "summary": True, "checked": 1, "skipped": 1, "violations": 0}


def test_threads_do_not_change_output(tmp_path):
    corpus = tmp_path / "c.g6"
    corpus.write_text("Dhc\nC~\nEFz_\nBw\n")
    args = ["verify", "--corpus", str(corpus), "--claim", "bound", "--claim", "kcolor"]
    one = run(*args, "--threads", "1")
    two = run(*args, "--threads", "2")
    assert one == two and one[0] == 0


def test_scan_with_figure(tmp_path):
    png = tmp_path / "scan.png"
    corpus = tmp_path / "p.g6"
    corpus.write_text('F{dw? {"planar":true,"name":"figure1"}\nEhuw {"planar":true,"name":"C6"}\n')
    code, docs = run_json("scan", "--corpus", str(corpus), "--figure", str(png))
    assert code == 0 and docs[-1]["violations"] == 0
    assert png.read_bytes()[:8] == b"\x89PNG\r\n\x1a\n"


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "ulc.cli", "m-number", "--graph6", "A_"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["m"] == 2
