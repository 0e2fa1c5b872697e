import json

import pytest

from csurg.catalog import Catalog, load_catalog
from csurg.cli import main
from csurg.errors import CatalogLookupError, DomainError


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_bundled_catalog(catalog):
    assert set(catalog.knots) == {"unknot", "trefoil", "8_20", "m(10_125)", "m(10_140)"}
    assert catalog.problems() == []
    assert catalog.knot("8_20").epsilon == 0
    with pytest.raises(CatalogLookupError):
        catalog.knot("9_42")


def test_catalog_rejects_tau_mismatch(catalog):
    data = catalog.to_json()
    data["cfk"]["trefoil"]["tau"] = 0
    data["cfk"]["trefoil"]["arrows"] = [[2, -2]]
    with pytest.raises(DomainError):
        Catalog.from_json(data)


def test_catalog_env_path(tmp_path, monkeypatch, catalog):
    path = tmp_path / "cat.json"
    data = catalog.to_json()
    data["knots"] = data["knots"][:2]
    path.write_text(json.dumps(data))
    monkeypatch.setenv("CSURG_CATALOG", str(path))
    assert set(load_catalog().knots) == {"unknot", "trefoil"}


def test_cli_expand(capsys):
    code, out = run(capsys, "--json", "expand", "7/2")
    assert code == 0 and json.loads(out.out)["chain"] == [1, 0, 1]
    code, out = run(capsys, "--json", "expand", "1/3")
    assert json.loads(out.out)["k"] == 3 and json.loads(out.out)["chain"] == []
    code, _ = run(capsys, "expand", "-1")
    assert code == 2


def test_cli_decide(capsys):
    code, out = run(capsys, "--json", "decide", "trefoil", "1", "0", "1", "minus")
    assert code == 0 and json.loads(out.out)["verdict"] == "nonzero"
    for tb in (-3, -4, -5):
        code, out = run(capsys, "--json", "decide", "m(10_125)", str(tb), str(tb + 3), "2")
        assert json.loads(out.out)["verdict"] == "zero"
    code, _ = run(capsys, "decide", "nope", "1", "0", "1")
    assert code == 3


def test_cli_model_sigma_verify(capsys):
    code, out = run(capsys, "--json", "model", "trefoil", "-3")
    assert code == 0 and json.loads(out.out)["dim"] == 7
    code, out = run(capsys, "sigma", "trefoil", "0", "--compare")
    assert code == 0 and "MATCH" in out.out
    code, out = run(capsys, "verify", "--grid", "default")
    assert code == 0 and "0 failures" in out.out


def test_cli_misc(capsys):
    assert json.loads(run(capsys, "--json", "tight", "8_20", "0")[1].out)["tight"] == "yes"
    assert json.loads(run(capsys, "--json", "transverse", "trefoil", "1")[1].out)["verdict"] == "nonzero"
    assert json.loads(run(capsys, "--json", "dims", "1", "0", "-1")[1].out)["dim"] == 5
    assert json.loads(run(capsys, "--json", "slot", "trefoil", "0", "1")[1].out)["slot"] == 2
    assert json.loads(run(capsys, "--json", "cable", "trefoil", "1", "0", "2", "1")[1].out)["tb"] == 5
    assert run(capsys, "model", "8_20", "-3")[0] == 3
