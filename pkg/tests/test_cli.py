from __future__ import annotations

import json
import subprocess
import sys

import pytest

from convcode import io
from convcode.cli import EXIT_BUDGET, EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, AnalysisReport, main
from convcode.config import Budgets
from convcode.errors import ParseError
from convcode.gf import GF
from convcode.polyalg import PolyMatrix


def data(name: str) -> str:
    return str(io.example_path(name))


def write(tmp_path, name, obj) -> str:
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_example(capsys):
    code, out, _ = run(capsys, "analyze", data("exa3.1-G"))
    assert code == EXIT_OK
    assert "degree = 1" in out and "free distance = 5" in out


def test_analyze_not_reduced(capsys):
    code, out, _ = run(capsys, "analyze", data("exa4.3-Gb"))
    assert code == EXIT_OK
    assert "not reduced" in out and "Forney indices: 2, 2" in out and "reduced encoder:" in out


def test_analyze_json_round_trip(capsys):
    code, out, _ = run(capsys, "--json", "analyze", data("exa4.3-Gb"))
    assert code == EXIT_OK
    obj = json.loads(out)
    rep = AnalysisReport.from_json(obj)
    assert rep.forney_indices == [2, 2] and rep.delta == 4 and not rep.reduced
    assert json.loads(io.dumps(rep.to_json())) == obj
    assert obj["provenance"]["sha256"] == io.digest(data("exa4.3-Gb"))


@pytest.mark.parametrize(
    "argv",
    [
        ("--json", "analyze", "exa3.2-G"),
        ("--json", "wam", "exa3.2-G"),
        ("--json", "distances", "exa3.1-G", "--jmax", "4"),
        ("--json", "wenum", "exa3.1-G", "--lmax", "5"),
        ("--json", "equiv", "--mode", "strong", "exa3.2-G", "exa3.2-Gp"),
    ],
)
def test_json_is_deterministic(capsys, argv):
    argv = [data(a) if a.startswith("exa") else a for a in argv]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second
    json.loads(first)


def test_parse_errors(capsys, tmp_path):
    assert run(capsys, "analyze", write(tmp_path, "e.json", {"rows": []}))[0] == EXIT_PARSE
    assert run(capsys, "analyze", write(tmp_path, "b.json", "{not json"))[0] == EXIT_PARSE
    assert run(capsys, "analyze", str(tmp_path / "missing.json"))[0] == EXIT_PARSE
    bad = {"rows": [["1", "z"], ["1"]]}
    assert run(capsys, "analyze", write(tmp_path, "r.json", bad))[0] == EXIT_PARSE
    assert run(capsys, "analyze", write(tmp_path, "c.json", {"rows": [[[0, 2]]]}))[0] == EXIT_PARSE


def test_precondition_and_budget(capsys, tmp_path):
    nb = write(tmp_path, "nb.json", {"field": {"p": 2, "m": 1}, "rows": [["z", "z"]]})
    code, _, err = run(capsys, "analyze", nb)
    assert code == EXIT_PRECONDITION and "not basic" in err
    code, _, err = run(capsys, "--budget", "orbit=10", "equiv", "--mode", "me", data("exa3.3-G"), data("exa3.3-Gb"))
    assert code == EXIT_BUDGET


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["examples", "--filter", "nosuch"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["--budget", "bogus=1", "examples", "--list"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit):
        main(["distances", data("exa3.1-G"), "--jmax", "-1"])
    capsys.readouterr()


def test_wam_prints_matrix(capsys):
    code, out, _ = run(capsys, "--json", "wam", data("exa3.2-G"))
    assert code == EXIT_OK
    obj = json.loads(out)
    assert obj["matrix"][0] == ["1+W", "W^3+W^4", "W^5+W^6", "W^2+W^3"]
    assert obj["states"] == ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]
    code, out, _ = run(capsys, "--json", "wam", "--reduced", "tilde", data("exa3.1-G"))
    assert json.loads(out)["matrix"] == [["0", "W^2"], ["W^3", "W^3"]]


def test_dual_command(capsys, tmp_path):
    code, out, _ = run(capsys, "--json", "dual", data("exa4.3p-G"))
    assert code == EXIT_OK
    H = io.encoder_from_json(json.loads(out))
    path = write(tmp_path, "h.json", out)
    code, out, _ = run(capsys, "equiv", "--mode", "me", path, data("exa4.3p-H"))
    assert "equivalent (me)" in out
    code, out, _ = run(capsys, "dual", data("exa4.3p-G"))
    assert "canonical (Hermite) form:" in out
    assert H.k == 2


def test_equiv_modes(capsys):
    code, out, _ = run(capsys, "--json", "equiv", "--mode", "strong", data("exa3.2-G"), data("exa3.2-Gp"))
    w = json.loads(out)
    assert w["equivalent"] and set(w["witness"]) >= {"perm", "scalars", "exponents", "U"}
    code, out, _ = run(capsys, "equiv", "--mode", "me", data("exa3.2-G"), data("exa3.2-Gp"))
    assert out.startswith("not equivalent:")
    code, out, _ = run(capsys, "--json", "equiv", "--mode", "iso", data("exa4.3-G"), data("exa4.3-Gb"))
    w = json.loads(out)["witness"]
    assert w["U"] is not None and len(w["exponents"]) == 3
    code, out, _ = run(capsys, "equiv", "--mode", "zme", data("exa3.3-G"), data("exa3.3-Gb"))
    assert "exponents = [0, 0, 0, 0, 0, 0, -1, 1]" in out
    code, out, _ = run(capsys, "equiv", "--mode", "iso", data("exa4.2-G"), data("exa4.2-Gb"))
    assert out.startswith("not equivalent:")


def test_other_commands(capsys):
    code, out, _ = run(capsys, "ccf", data("rem2.3-G"))
    assert code == EXIT_OK and out.startswith("A =")
    code, out, _ = run(capsys, "distances", data("exa3.1-G"), "--family", "column", "--jmax", "3")
    assert "column" in out and "0:2  1:5  2:5  3:5" in out
    code, out, _ = run(capsys, "wenum", data("exa3.1-G"), "--lmax", "4")
    assert "L^2: W^5" in out


def test_examples_command(capsys):
    code, out, _ = run(capsys, "examples", "--list")
    assert out.split() == ["exa3.1", "exa3.2", "exa3.3", "exa3.4/4.3", "exa4.2", "exa4.3'", "rem2.3", "appendix", "gf4-5.1"]
    code, out, _ = run(capsys, "examples", "--filter", "appendix")
    assert code == EXIT_OK and "FAIL" not in out


def test_console_script_runs():
    proc = subprocess.run([sys.executable, "-m", "convcode.cli", "examples", "--filter", "rem2.3"], capture_output=True, text=True)
    assert proc.returncode == 0 and "3/3 checks passed" in proc.stdout


def test_io_round_trip(tmp_path):
    G = PolyMatrix.parse(GF(4), [["1+a*z", "a2", "z^2"]])
    p = tmp_path / "g.json"
    io.dump_encoder(G, p)
    assert io.load_encoder(p) == G
    with pytest.raises(ParseError):
        io.encoder_from_json({"field": {"p": 4}, "rows": [["1"]]})
    with pytest.raises(KeyError):
        io.example_encoder("nosuch")
    assert "exa3.1-G" in io.example_names()
    assert io.dumps({"x": float("inf")}) == '{\n  "x": "inf"\n}'


def test_budget_parsing(monkeypatch):
    b = Budgets.parse("orbit=10, gl_search=1e3")
    assert (b.orbit, b.gl_search) == (10, 1000)
    with pytest.raises(ValueError):
        Budgets.parse("orbit=ten")
    with pytest.raises(ValueError):
        Budgets.parse("nosuch=1")
    monkeypatch.setenv("CONVCODE_BUDGET", "wam_states=16")
    assert Budgets.from_env().wam_states == 16
