import io
import json
import subprocess
import sys

import pytest

from cayleysym import cli
from cayleysym.cayley import doyle_graph
from cayleysym.graph_core import from_edges, from_graph6, to_graph6


def run(args, stdin=""):
    proc = subprocess.run([sys.executable, "-m", "cayleysym", *args], input=stdin,
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def corrupted_doyle_line():
    g = doyle_graph()
    edges = g.edges()
    u, v = edges[0]
    w = next(w for w in range(g.n) if w != u and not g.has_edge(u, w))
    # Move one edge endpoint: degrees change, so the graph is no longer regular.
    mutated = from_edges(g.n, edges[1:] + [(u, w)])
    return to_graph6(mutated).decode() + "\n"


def test_doyle_formats():
    code, out, _ = run(["doyle"])
    assert code == 0 and out.count("\n") == 1 and out[0] == "Z"
    assert from_graph6(out.strip()) == doyle_graph()
    code, out, _ = run(["doyle", "--format", "edgelist"])
    assert len(out.splitlines()) == 54
    code, out, _ = run(["doyle", "--format", "dot"])
    assert out.startswith("graph G {")
    assert sum(1 for line in out.splitlines() if "[label=" in line) == 27


def test_output_deterministic():
    assert run(["doyle", "--format", "dot"]) == run(["doyle", "--format", "dot"])


def test_analyze_lines():
    code, out, _ = run(["analyze", "--json"], stdin="Bw\n")
    assert code == 0 and json.loads(out)["classification"] == "arc-transitive"
    code, out, err = run(["analyze", "-"], stdin="Bw\n\nA_\n")
    assert code == 0 and out.startswith("line 1:") and "line 3:" in out


def test_analyze_parse_error_names_line():
    code, out, err = run(["analyze"], stdin="Bw\nB\n")
    assert code == 2
    assert "line 2" in err
    assert "classification=arc-transitive" in out


def test_doyle_analyze_pipeline():
    _, g6, _ = run(["doyle"])
    code, out, _ = run(["analyze", "--json"], stdin=g6)
    assert code == 0 and json.loads(out)["classification"] == "half-transitive"


def test_verify_doyle():
    code, out, _ = run(["verify-doyle"])
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()[:-1]] == ["PASS"] * 5
    code, out, _ = run(["verify-doyle", "--json"])
    payload = json.loads(out)
    assert payload["ok"] and payload["report"]["aut_order"] == 54
    assert payload["report"]["classification"] == "half-transitive"
    assert payload["conditions"]["cond3"] is True


def test_verify_doyle_detects_corruption():
    code, out, _ = run(["verify-doyle", "-"], stdin=corrupted_doyle_line())
    assert code == 1
    assert "FAIL" in out and "verification failed at" in out


def test_verify_doyle_parse_error():
    code, _, err = run(["verify-doyle", "-"], stdin="!!\n")
    assert code == 2 and "line 1" in err


def test_ball_command():
    code, out, err = run(["ball", "--center", "0", "--radius", "2", "--format", "edgelist"])
    assert code == 0
    assert len(err.splitlines()) == 17
    code, out, err = run(["ball", "--radius", "0", "--format", "graph6"])
    assert out == "@\n" and len(err.splitlines()) == 1
    code, out, _ = run(["ball", "--radius", "99"])
    assert from_graph6(out.strip()) == doyle_graph()
    code, _, err = run(["ball", "--center", "27"])
    assert code == 2
    code, out, _ = run(["ball", "--format", "dot"])
    assert out.count("[label=") == 17


def test_ball_reads_input():
    code, out, err = run(["ball", "-", "--center", "1", "--radius", "1"], stdin="Bw\n")
    assert code == 0 and from_graph6(out.strip()).n == 3


def test_usage_error_exit_code():
    assert run(["nonsense"])[0] == 2
    assert run(["doyle", "--format", "png"])[0] == 2


def test_main_in_process(capsys):
    assert cli.main(["doyle", "--format", "edgelist"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 54
