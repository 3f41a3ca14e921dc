import json
import subprocess
import sys

import pytest

from icosaut.cli import main
from icosaut.graph6 import decode


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_build(capsys, tmp_path):
    out_file = tmp_path / "ico.json"
    code, out, _ = run(capsys, "build", "icosahedron", "--json", str(out_file))
    assert code == 0 and "V=12 E=30 F=20" in out
    data = json.loads(out_file.read_text())
    assert len(data["vertices"]) == 12 and len(data["faces"]) == 20


@pytest.mark.parametrize("kind,n,m", [("pi", 16, 30), ("xi", 16, 33), ("gamma", 32, 60), ("skeleton", 12, 30)])
def test_graph_g6(capsys, kind, n, m):
    code, out, _ = run(capsys, "graph", kind, "--solid", "icosahedron", "--format", "g6")
    G = decode(out.strip())
    assert code == 0 and (G.n, G.m) == (n, m)


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export", "xi", "--format", "dot", "--hub", "3")
    assert code == 0 and out.count(" -- ") == 33


def test_graph_usage_errors(capsys):
    assert run(capsys, "graph", "xi", "--solid", "dodecahedron")[0] == 2
    assert run(capsys, "graph", "xi", "--hub", "40")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["graph", "nonsense"])
    assert exc.value.code == 2


def test_aut(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", "pi")
    f = tmp_path / "pi.g6"
    f.write_text(out)
    code, out, _ = run(capsys, "aut", str(f))
    assert code == 0 and out.splitlines()[0] == "order 60, A5"
    f.write_text("B\n")
    assert run(capsys, "aut", str(f))[0] == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "all", "--json")
    reports = json.loads(out)
    assert code == 0 and [r["status"] for r in reports] == ["verified"] * 3


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--group", "S3", "--max-n", "5")
    assert code == 0 and out.startswith("mu(D3) = 3")
    code, out, _ = run(capsys, "search", "--group", "C3", "--max-n", "5", "--json")
    assert json.loads(out)["result"] == {"not_found_up_to": 5}
    assert run(capsys, "search", "--group", "PSL27", "--max-n", "5")[0] == 2


def test_pipeline_through_stdin():
    g6 = subprocess.run([sys.executable, "-m", "icosaut", "graph", "pi", "--format", "g6"],
                        capture_output=True, check=True).stdout
    res = subprocess.run([sys.executable, "-m", "icosaut", "aut", "-"], input=g6, capture_output=True, check=True)
    assert res.stdout.decode().splitlines()[0] == "order 60, A5"
