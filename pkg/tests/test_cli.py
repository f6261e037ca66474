import json
from pathlib import Path

import pytest

from reidemeister import suites
from reidemeister.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def sample(name):
    return SAMPLES / f"{name}.json"


def test_eval_trefoil(capsys):
    code, out, _ = run(capsys, "eval", sample("trefoil"))
    assert code == 0
    assert out.splitlines()[0] == "Delta = 1 - t + t^2 (up to ±t^k)"
    assert "    a1 -> 1: 1 - t + t^2" in out


def test_knot_figure_eight(capsys):
    code, out, _ = run(capsys, "knot", sample("figure-eight"))
    assert code == 0
    assert out.splitlines() == ["Delta = 1 - 3*t + t^2 (up to ±t^k)",
                                "torsion = (1 - 3*t + t^2)/(1 - t) (up to units)"]


def test_closed_s1xs2(capsys):
    code, out, _ = run(capsys, "closed", sample("s1xs2"))
    assert (code, out) == (0, "tau = 1/(1 - 2*t + t^2) (up to units)\n")


def test_magnus_twist(capsys):
    code, out, _ = run(capsys, "magnus", sample("twist-cylinder"))
    assert code == 0
    assert out.splitlines() == ["tau = 1 (up to units)", "r =", "  [1, 0]", "  [t, 1]"]


def test_magnus_rejects_non_homology_cobordism(capsys):
    code, out, _ = run(capsys, "magnus", sample("handle"))
    assert code == 1
    assert out.startswith("not a homology cobordism value")


def test_compose_and_dual(capsys):
    code, out, _ = run(capsys, "compose", sample("handle"), sample("cap"))
    assert code == 0 and "functoriality: pass" in out and "zero map" in out
    code, out, _ = run(capsys, "compose", sample("identity-cylinder"), sample("twist-cylinder"))
    assert code == 0 and "functoriality: pass" in out
    code, out, _ = run(capsys, "dual", sample("ball"))
    assert code == 0
    assert out.splitlines()[-2:] == ["duality: pass", "volume duality: pass"]


def test_compose_mismatch(capsys):
    code, _, err = run(capsys, "compose", sample("ball"), sample("twist-cylinder"))
    assert code == 2 and err.startswith("error[schema]")


def test_json_output(capsys):
    code, out, _ = run(capsys, "knot", sample("trefoil"), "--json")
    assert code == 0
    assert json.loads(out) == {"alexander": "1 - t + t^2", "torsion": "(1 - t + t^2)/(1 - t)"}


@pytest.mark.parametrize("argv, code", [
    (["eval", "nope.json"], "io"),
    (["verify", "nonsense"], "usage"),
    (["verify", "functoriality", "--count", "-1"], "usage"),
    (["eval", "SAMPLE", "--vars", "2"], "schema"),
])
def test_input_errors(capsys, argv, code):
    argv = [str(sample("trefoil")) if a == "SAMPLE" else a for a in argv]
    rc, out, err = run(capsys, *argv)
    assert rc == 2 and err.startswith(f"error[{code}]") and out == ""
    rc, out, _ = run(capsys, *argv, "--json")
    assert rc == 2 and json.loads(out)["error"]["code"] == code


def test_bad_pd_and_json(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"kind": "knot", "pd": [[1, 2, 3, 7]]}')
    assert run(capsys, "knot", bad)[0] == 2
    bad.write_text("{")
    assert run(capsys, "eval", bad)[0] == 2


def test_argparse_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "eval")[0] == 2


def test_n_alias(capsys):
    a = run(capsys, "verify", "vanishing", "--n", "1", "--count", "3")
    b = run(capsys, "verify", "vanishing", "--vars", "1", "--count", "3")
    assert a == b and a[0] == 0


@pytest.mark.parametrize("argv", [
    ["verify", "functoriality", "--seed", "3", "--count", "4"],
    ["verify", "duality-95", "--seed", "1", "--count", "4", "--json"],
    ["eval", "SAMPLE"],
])
def test_byte_identical(capsys, argv):
    argv = [str(sample("twist-cylinder")) if a == "SAMPLE" else a for a in argv]
    first = run(capsys, *argv)
    assert first[0] == 0
    assert run(capsys, *argv) == first


def test_verify_summary(capsys):
    code, out, _ = run(capsys, "verify", "torsion-mult", "--seed", "5", "--count", "6")
    assert code == 0
    assert out.splitlines()[0] == "torsion-mult: pass 6/6 (seed 5)"


def test_counterexample_serialized_and_replayed(capsys, monkeypatch):
    # a doctored check: fails whenever the first word has a cylinder
    real = suites.check_functoriality

    def doctored(w1, w2):
        return real(w1, w2) and not any(p.kind == "cylinder" for p in w1.pieces)

    monkeypatch.setattr(suites, "check_functoriality", doctored)
    code, out, _ = run(capsys, "verify", "functoriality", "--seed", "2", "--count", "8", "--json")
    rep = json.loads(out)
    assert code == 1 and not rep["ok"] and rep["counterexamples"]
    for ce in rep["counterexamples"]:
        assert ce["reproduced"] is True
        assert not suites.replay("functoriality", ce["documents"])
        monkeypatch.setattr(suites, "check_functoriality", real)
        assert suites.replay("functoriality", ce["documents"])
        monkeypatch.setattr(suites, "check_functoriality", doctored)
    code, out, _ = run(capsys, "verify", "functoriality", "--seed", "2", "--count", "8")
    assert code == 1
    assert "counterexample 1 [functoriality]" in out
    assert "reproduced on replay: True" in out


def test_module_entry_point():
    import subprocess
    import sys
    p = subprocess.run([sys.executable, "-m", "reidemeister", "eval", str(sample("ball"))],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "1 -> 1: 1" in p.stdout
    p = subprocess.run([sys.executable, "-m", "reidemeister", "closed", str(sample("ball"))],
                       capture_output=True, text=True)
    assert p.returncode == 2 and p.stderr.startswith("error[")
