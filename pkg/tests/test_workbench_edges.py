"""Edge cases around the workbench shell: reference parsing, cap
fallbacks, unverifiable certificates, model-JSON inference."""

from __future__ import annotations

import json

import pytest

from thdist.catalog import loads_catalog, verify_all
from thdist.cli import main
from thdist.errors import LanguageError
from thdist.relations import EdgeCertificate, verify_certificate
from thdist.semantics import Theory, model_lang_from_json
from thdist.sexpr import read_all, read_one, SString
from thdist.syntax import Language


def test_sexpr_strings_and_comments():
    nodes = read_all('; comment\n(a "with \\"quote\\" and \\\\ backslash") ; end')
    assert len(nodes) == 1
    assert isinstance(nodes[0][1], SString)
    assert nodes[0][1].value == 'with "quote" and \\ backslash'
    with pytest.raises(Exception):
        read_one('(unterminated "string')


def test_model_json_rank_inference():
    lang, model = model_lang_from_json(
        '{"size": 2, "interp": {"R": [[0, 1]], "P": true, "S": []}, "ranks": {"S": 1}}',
        var_bound=2,
    )
    assert dict(lang.symbols) == {"R": 2, "P": 0, "S": 1}
    assert model.rel("S") == frozenset()
    with pytest.raises(LanguageError):
        model_lang_from_json('{"size": 2, "interp": {"S": []}}', var_bound=2)


def test_concept_add_cap_fallback_records_where_it_stopped():
    base_lang = Language.make("K", {"IOb": 1, "W": 2}, 3)
    ext_lang = Language.make("KE", {"IOb": 1, "W": 2, "E": 1}, 3)
    base = Theory.make("base", base_lang, ["(exists v0 (IOb v0))"])
    ext = Theory.make("ext", ext_lang, [
        "(exists v0 (IOb v0))",
        "(exists v0 (and (IOb v0) (forall v1 (iff (E v1) (and (IOb v1) (W v0 v1))))))",
    ])
    cert = EdgeCertificate("concept-add", "base", "ext")
    # size 4 would take 2^24 candidates; verification backs off to 3
    status = verify_certificate(cert, {"base": base, "ext": ext}, bound=4)
    assert status.state == "verified-bounded"
    assert status.bound == 3 and "cap stopped at 3" in status.note


def test_unverifiable_declared_certificate_lands_in_errors():
    text = (
        '(language A (R 2) :vars 3)\n'
        '(language B (S 2) :vars 3)\n'
        '(theory TA :over A)\n'
        '(theory TB :over B)\n'
        '(certificate :kind defeq :from TA :to TB)\n'
    )
    report = verify_all(loads_catalog(text))
    assert len(report.errors) == 1
    assert "translations" in report.errors[0][1]


def test_cli_unverifiable_certificate_exit_code(tmp_path, capsys):
    path = tmp_path / "fo.cat"
    path.write_text(
        '(language A (R 2) :vars 3)\n(theory TA :over A)\n(theory TB :over A '
        ':axioms "(forall v0 (R v0 v0))")\n'
        '(certificate :kind concept-remove :from TB :to TA :formula "(R v0 v0)")\n'
    )
    assert main(["check", str(path)]) == 2
    capsys.readouterr()


def test_cli_directed_network_and_json_export(capsys):
    assert main(["dist", "FourDir", "FourT2", "FourT1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["distance"] == 1
    assert main(["export", "FourDir", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    kinds = {e["kind"] for e in data["edges"]}
    assert "concept-remove" in kinds and "defeq" in kinds


def test_cli_bad_reference(capsys):
    assert main(["dist", "Ladder", "TStar0", "NoSuchTheory"]) == 2
    capsys.readouterr()
    assert main(["models", "NoSuchTheory", "--size", "1"]) == 2
    capsys.readouterr()
