import json
import os

import pytest
from click.testing import CliRunner

from tameact.catalog import build_case, catalog_names
from tameact.cli import main
from tameact.geometry import inertia_hopf, is_free, is_torsor
from tameact.runner import run_case
from tameact.schema import SchemaError, validate_document
from tameact.tameness import total_integral

EXAMPLE = os.path.join(os.path.dirname(__file__), "..", "docs",
                       "example-action.json")


def test_catalog_inventory():
    names = catalog_names()
    assert len(names) >= 15
    assert "gauss-p2" in names
    with pytest.raises(KeyError):
        build_case("no-such-entry")


def test_catalog_expected_verdicts(cases):
    """Every hand-computed oracle in the catalog matches the verdicts the
    library actually produces."""
    for name, case in cases.items():
        B = case.algebra
        exp = case.expected
        assert (total_integral(B) is not None) == exp["tame"], name
        assert is_free(B) == exp["free"], name
        assert is_torsor(B).verdict == exp["torsor"], name
        assert B.invariant_basis.cols == exp["invariants_dim"], name
        dims = [inertia_hopf(B, pt).dimension for pt in case.points]
        assert dims == exp["inertia_orders"], name


def test_run_case_report_shape(cases):
    rep = run_case(cases["gauss-p3"])
    assert rep["name"] == "gauss-p3"
    assert set(rep["checks"]) == {"total-integral", "inertia", "slice",
                                  "torsor", "equivalence"}
    assert rep["checks"]["total-integral"]["tame"] is True
    assert "integral" in rep["checks"]["total-integral"]
    assert len(rep["digest"]) == 64


def test_schema_rejects_unknown_keys():
    with open(EXAMPLE) as fh:
        doc = json.load(fh)
    validate_document(doc)
    doc["unexpected"] = 1
    with pytest.raises(SchemaError):
        validate_document(doc)


def test_cli_validate_and_check_example():
    runner = CliRunner()
    res = runner.invoke(main, ["validate", EXAMPLE])
    assert res.exit_code == 0 and "valid" in res.output
    res = runner.invoke(main, ["check", EXAMPLE, "--format", "json"])
    assert res.exit_code == 0
    rep = json.loads(res.output)
    assert rep["checks"]["total-integral"]["tame"] is True
    assert rep["checks"]["torsor"]["torsor"] is True


def test_cli_exit_code_on_malformed_json(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    res = CliRunner().invoke(main, ["check", str(bad)])
    assert res.exit_code == 2


def test_cli_exit_code_on_schema_violation(tmp_path):
    with open(EXAMPLE) as fh:
        doc = json.load(fh)
    doc["kind"] = "something-else"
    f = tmp_path / "doc.json"
    f.write_text(json.dumps(doc))
    res = CliRunner().invoke(main, ["check", str(f)])
    assert res.exit_code == 2


def test_cli_exit_code_on_validator_failure(tmp_path):
    with open(EXAMPLE) as fh:
        doc = json.load(fh)
    # break the second automorphism: no longer an algebra map
    doc["automorphisms"][1]["entries"] = ["0", "2", "1", "0"]
    f = tmp_path / "doc.json"
    f.write_text(json.dumps(doc))
    res = CliRunner().invoke(main, ["check", str(f)])
    assert res.exit_code == 3


def test_cli_unknown_check_name():
    res = CliRunner().invoke(main, ["check", EXAMPLE, "--only", "bogus"])
    assert res.exit_code == 2


def test_cli_catalog_list():
    res = CliRunner().invoke(main, ["catalog", "list"])
    assert res.exit_code == 0
    assert "gauss-p2" in res.output.split()


def test_cli_catalog_run_single_entry():
    res = CliRunner().invoke(main, ["catalog", "run", "gauss-p5",
                                    "--only", "total-integral,torsor",
                                    "--format", "text"])
    assert res.exit_code == 0
    assert "tame: True" in res.output
    assert "torsor: True" in res.output


def test_cli_batch_outputs(tmp_path):
    runner = CliRunner()
    out1, out2 = tmp_path / "a", tmp_path / "b"
    subset = ["gauss-p2", "gauss-p3", "trivial-c2-f3"]
    for out in (out1, out2):
        res = runner.invoke(main, ["catalog", "run", *subset,
                                   "--out", str(out)])
        assert res.exit_code == 0
    for fname in ("report.json", "verdicts.csv", "verdicts.png"):
        assert (out1 / fname).exists()
    assert (out1 / "report.json").read_bytes() == (out2 / "report.json").read_bytes()
    csv_text = (out1 / "verdicts.csv").read_text()
    assert csv_text.splitlines()[0] == "name,tame,free,torsor,equivalence_agree"
    assert "gauss-p2,False,False,False,True" in csv_text
    assert "gauss-p3,True,True,True,True" in csv_text
