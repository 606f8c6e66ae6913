import json
import subprocess
import sys

import pytest

from wuni.abelian import parse_module
from wuni.cli import main
from wuni.presets import preset
from wuni.rank1 import parse_type_literal


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    return code, json.loads(out)


@pytest.mark.parametrize("expr, value, clause", [
    ("Z^2", True, "M ≅ R^n"),
    ("Z/2 + Z/4", False, "M₁ ↛ M₂ and M₂ ↛ M₁"),
    ("Z/2^inf", True, "M ≅ Z_{p^∞}"),
])
def test_classify(capsys, expr, value, clause):
    code, rep = run_json(capsys, "classify", expr)
    assert code == 0
    assert rep["weakly_uniserial"] is value
    assert rep["clause"] == clause
    assert parse_module(rep["input"]) == parse_module(expr)


def test_classify_text_is_aligned(capsys):
    code, out, _ = run(capsys, "classify", "Z/2 + Z/4")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["command", "classify"]
    values = [line.index(line.split(None, 1)[1]) for line in lines]
    assert len(set(values)) == 1
    assert "bad-p-shape" in out


def test_classify_parse_error(capsys):
    code, out, err = run(capsys, "classify", "Z/")
    assert code == 2 and "cannot parse" in err and out == ""


def test_embed(capsys):
    code, rep = run_json(capsys, "embed", "Z/4", "Z/2 + Z/2")
    assert (code, rep["embeds"], rep["oracle"]) == (0, False, "confirmed")
    code, rep = run_json(capsys, "embed", "Z", "Z^2")
    assert code == 0 and rep["embeds"] is True
    code, rep = run_json(capsys, "embed", "Z/2+Z/2", "Z/4+Z/2")
    assert rep["embeds"] and rep["oracle"] == "confirmed"
    images = {tuple(a): tuple(b) for a, b in rep["witness"]}
    assert len(images) == 2 and all(b != (0, 0) for b in images.values())


def test_embed_rejects_infinite_shapes(capsys):
    code, _, err = run(capsys, "embed", "Z/2^inf", "Z")
    assert code == 2 and "finitely generated" in err


def test_embed_beyond_cap_skips_oracle(capsys, monkeypatch):
    monkeypatch.setenv("WU_CAP", "8")
    code, rep = run_json(capsys, "embed", "Z/16", "Z/32")
    assert code == 0 and rep["embeds"] and rep["oracle"].startswith("skipped")


@pytest.mark.parametrize("lit, value", [
    ("2:inf,3:1,5:1,tail:0", True), ("tail:inf", False), ("tail:1", False), ("1/2^inf,1/3,1/5", True),
])
def test_type(capsys, lit, value):
    code, rep = run_json(capsys, "type", lit)
    assert code == 0 and rep["weakly_uniserial"] is value
    assert parse_type_literal(rep["input"]) == parse_type_literal(lit)


def test_type_comparison(capsys):
    code, rep = run_json(capsys, "type", "2:inf", "3:inf")
    assert code == 0
    assert (rep["leq"], rep["geq"], rep["hom_nonzero"]) == (False, False, False)


def test_type_rejects_non_eventually_constant(capsys):
    code, _, err = run(capsys, "type", "1,1,1,...")
    assert code == 2 and "eventually constant" in err


def test_ring_presets(capsys):
    code, rep = run_json(capsys, "ring", "z6", "--check", "wu")
    assert code == 0 and rep["checks"]["wu"]["right"] is False and rep["checks"]["wu"]["left"] is False
    code, rep = run_json(capsys, "ring", "struct3f2", "--check", "wu")
    assert rep["checks"]["wu"] == {"right": True, "left": True}
    code, rep = run_json(capsys, "ring", "z4", "--check", "2gen", "--check", "local")
    assert rep["checks"]["2gen"]["found"] and rep["checks"]["local"]["value"]


def test_ring_all_checks_on_matrix_ring(capsys):
    code, rep = run_json(capsys, "ring", "m2f2", "--check", "all")
    assert code == 0
    assert rep["checks"]["emwu"]["value"] is True
    assert rep["checks"]["2gen"] == {"found": False, "witness": None}


def test_ring_file_and_axiom_errors(capsys, tmp_path):
    good = tmp_path / "z4.json"
    good.write_text(json.dumps(preset("z4").to_json()))
    code, rep = run_json(capsys, "ring", str(good), "--check", "local")
    assert code == 0 and rep["checks"]["local"]["value"]
    table = preset("z4").to_json()
    table["mul"][1][1] = 2
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(table))
    code, _, err = run(capsys, "ring", str(bad))
    assert code == 2 and "ring axiom violated" in err
    code, _, err = run(capsys, "ring", "nope")
    assert code == 2


def test_sweep(capsys):
    code, out, _ = run(capsys, "sweep", "--suite", "thm55", "--pmax", "3", "--omax", "81")
    assert code == 0 and "0 divergences" in out
    code, rep = run_json(capsys, "sweep", "--suite", "types")
    assert code == 0 and rep["passed"]
    code, _, err = run(capsys, "sweep", "--suite", "bogus")
    assert code == 2


def test_sweep_divergence_exits_nonzero(capsys, monkeypatch):
    from wuni import classifier
    monkeypatch.setattr(classifier, "pgroup_embeds", lambda a, b: True)
    code, out, _ = run(capsys, "sweep", "--suite", "orders")
    assert code == 1 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wuni", "classify", "Z/6", "--json"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["reason"] == "mixed-primes"
