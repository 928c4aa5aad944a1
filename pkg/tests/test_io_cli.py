import json

import pytest

from dp1 import cli
from dp1.io import (SHIPPED, InstanceError, document_to_instance, dumps, emit_instance, emit_report,
                    instance_document, load_instance, read_document, shipped_path, validate)
from dp1.algebra import parse_wpoly


def write(tmp_path, doc, name="inst.json"):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return p


def test_shipped_example1():
    X, mp = load_instance(shipped_path("example1"))
    assert X.to_wpoly() == parse_wpoly("w^2+z^3+x^5*y+t^24*x*y^5")
    assert mp.fwd == (0, 6, 2, 3) and mp.inv == (6, 0, 10, 15)


@pytest.mark.parametrize("name", SHIPPED)
def test_emit_load_identity(name, tmp_path):
    path = shipped_path(name)
    doc = read_document(path)
    fib, mp = document_to_instance(doc)
    out = tmp_path / f"{name}.json"
    emit_instance(fib, mp, out, name=doc.get("name"), expected=doc.get("expected"))
    assert json.loads(out.read_text()) == doc
    assert out.read_text() == path.read_text()


def test_schema_error_pointer(tmp_path):
    doc = {"fibration": {"equation": "w^2+z^3"}, "map": {"forward": [0, 6, 2]}}
    with pytest.raises(InstanceError) as err:
        load_instance(write(tmp_path, doc))
    assert err.value.pointer == "/map/forward"


def test_missing_equation_pointer():
    with pytest.raises(InstanceError) as err:
        validate({"fibration": {}})
    assert err.value.pointer == "/fibration"


def test_bad_cd_names_condition(tmp_path):
    doc = {"fibration": {"equation": "w^2+z^3+x^6"}, "map": {"forward": [0, 1, 2, 4]}}
    with pytest.raises(InstanceError, match="2d = 3c") as err:
        load_instance(write(tmp_path, doc))
    assert err.value.pointer == "/map/forward"


def test_bad_equation_pointer(tmp_path):
    doc = {"fibration": {"equation": "w^2+z^3+f"}}
    with pytest.raises(InstanceError) as err:
        load_instance(write(tmp_path, doc))
    assert err.value.pointer == "/fibration/equation"


def test_non_homogeneous_equation(tmp_path):
    with pytest.raises(InstanceError):
        load_instance(write(tmp_path, {"fibration": {"equation": "w^2+x"}}))


def test_invalid_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    with pytest.raises(InstanceError, match="invalid JSON"):
        load_instance(p)


def test_emit_report_roundtrips(tmp_path):
    from dp1.chain import verify_canonical_identities
    rep = verify_canonical_identities(2)
    text = emit_report(rep, tmp_path / "r.json")
    assert json.loads(text) == rep.to_dict()
    validate(json.loads(dumps(instance_document(*load_instance(shipped_path("example2"))))))


# -- CLI -----------------------------------------------------------------------

def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr()


def test_cli_transform_ok(capsys):
    code, out = run(capsys, "transform", "--fibration", str(shipped_path("example1")), "--json")
    assert code == cli.EXIT_OK
    data = json.loads(out.out)
    assert data["target"] == "s^2 + r^3 + p^5*q + p*q^5" and data["cleared_valuation"] == 30


def test_cli_transform_failure_exit_code(capsys):
    code, out = run(capsys, "transform", "--equation", "w^2+z^3+x*y^5", "--map", "0,6,2,3")
    assert code == cli.EXIT_TRANSFORM
    assert "x*y^5" in out.out


def test_cli_io_error(capsys, tmp_path):
    code, out = run(capsys, "transform", "--fibration", str(tmp_path / "missing.json"))
    assert code == cli.EXIT_IO
    assert "dp1:" in out.err


def test_cli_bad_map_is_io_error(capsys):
    code, _ = run(capsys, "transform", "--equation", "w^2+z^3+x^6", "--map", "0,1,2,4")
    assert code == cli.EXIT_IO


def test_cli_classify_map(capsys):
    code, out = run(capsys, "classify-map", "--map", "0,6,2,3", "--json")
    data = json.loads(out.out)
    assert code == 0 and data["case"] == "D" and (data["k"], data["l"]) == (1, 5)
    assert {"coefficient": "f6[5]", "min_valuation": 24} in data["constraints"]


def test_cli_normalize(capsys):
    code, out = run(capsys, "normalize", "--equation", "w^2+w*x^3+z^3", "--json")
    assert code == 0 and json.loads(out.out)["normal_form"] == "w^2 + z^3 - 1/4*x^6"
    code, _ = run(capsys, "normalize", "--equation", "t*w^2+z^3+x^6")
    assert code == cli.EXIT_FAIL


def test_cli_singularities(capsys):
    code, out = run(capsys, "singularities", "--fibration", str(shipped_path("example2")), "--json")
    data = json.loads(out.out)
    assert code == 0
    assert [r["type"] for r in data["threefold"]] == ["cE8"]
    code, out = run(capsys, "singularities", "--fibration", str(shipped_path("example2")),
                    "--point", "1:0:0:0", "--json")
    assert json.loads(out.out)[0]["type"] == "cE8"


def test_cli_chain(capsys):
    code, out = run(capsys, "chain", "--n", "4")
    assert code == 0 and "all identities hold" in out.out


def test_cli_verify_paper_exit_codes(capsys):
    code, out = run(capsys, "verify-paper", "--claims", "chain,example1", "--json")
    data = json.loads(out.out)
    assert code == 0 and data["passed"]
    code, _ = run(capsys, "verify-paper", "--claims", "example3b.threefold")
    assert code == cli.EXIT_FAIL
