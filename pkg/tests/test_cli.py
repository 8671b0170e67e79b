from __future__ import annotations

import json

import pytest

from thdist.cli import main

GOOD_CAT = (
    '(language L (P 0) (Q 0) :vars 0)\n'
    '(theory A :over L :axioms "P")\n'
    '(theory B :over L :axioms "P" "Q")\n'
    '(certificate :kind axiom-add :from A :to B :axiom "Q")\n'
    '(network N :equiv logical :step axiom :nodes A B)\n'
)


@pytest.fixture(autouse=True)
def no_disk_cache(monkeypatch):
    monkeypatch.delenv("THDIST_CACHE_DIR", raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_good_catalog(tmp_path, capsys):
    path = tmp_path / "good.cat"
    path.write_text(GOOD_CAT)
    code, out, _ = run(capsys, "check", str(path))
    assert code == 0
    data = json.loads(out)
    assert data["summary"] == {"verified-exact": 1}


def test_check_refuted_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.cat"
    path.write_text(GOOD_CAT.replace(':axiom "Q"', ':axiom "(not Q)"'))
    code, out, _ = run(capsys, "check", str(path))
    assert code == 1
    code, out, _ = run(capsys, "check", str(path), "--allow-refuted-prune")
    assert code == 0


def test_check_input_error_exit_code(tmp_path, capsys):
    path = tmp_path / "broken.cat"
    path.write_text("(theory T :over Missing)")
    code, _, err = run(capsys, "check", str(path))
    assert code == 2 and "Missing" in err


def test_models_and_spectrum_builtin(capsys):
    code, out, _ = run(capsys, "models", "TStar1", "--size", "1")
    assert code == 0
    data = json.loads(out)
    assert data["count"] == 2
    code, out, _ = run(capsys, "spectrum", "Posets", "--max-size", "3")
    assert code == 0
    assert json.loads(out)["spectrum"] == {"1": 1, "2": 2, "3": 5}


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "models", "Posets", "--size", "9")
    assert code == 3


def test_dist_and_export(tmp_path, capsys):
    path = tmp_path / "good.cat"
    path.write_text(GOOD_CAT)
    code, out, _ = run(capsys, "dist", f"{path}:N", "A", "B")
    assert code == 0
    assert json.loads(out)["distance"] == 1
    code, out, _ = run(capsys, "export", f"{path}:N", "--format", "dot")
    assert code == 0 and out.startswith('digraph "N"')


def test_dist_builtin_human(capsys):
    code, out, _ = run(capsys, "dist", "Ladder", "TStar0", "TStar2", "--human")
    assert code == 0 and "= 2" in out


def test_cz_builtin(capsys):
    code, out, _ = run(capsys, "cz", "SentPQ")
    assert code == 0 and json.loads(out)["value"] == 2


def test_closure_command(tmp_path, capsys):
    model = tmp_path / "m.json"
    model.write_text('{"size": 2, "interp": {"R": [[0, 1]]}}')
    code, out, _ = run(capsys, "closure", str(model), "--vars", "2")
    assert code == 0 and json.loads(out)["count"] == 16


def test_classify_ad_builtin(capsys):
    code, out, _ = run(capsys, "classify-ad", "SentAx", "SentP", "SentPQ")
    assert code == 0
    assert json.loads(out)["distance"] == 1
