"""JSON instances and reports."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from pathlib import Path

import jsonschema

from .algebra import parse_wpoly
from .maps import MapError, MonomialMap, solve_weights
from .normal_form import Fibration

SHIPPED = ("example1", "example2", "example3a", "example3b")


class InstanceError(ValueError):
    """Schema or content error; ``pointer`` is a JSON pointer into the document."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


def _pointer(path) -> str:
    return "".join(f"/{p}" for p in path)


@lru_cache(maxsize=None)
def load_schema(name: str) -> dict:
    text = resources.files("dp1.schemas").joinpath(f"{name}.schema.json").read_text()
    return json.loads(text)


def validate(doc, schema_name: str = "instance") -> None:
    validator = jsonschema.Draft202012Validator(load_schema(schema_name))
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        raise InstanceError(err.message, _pointer(err.absolute_path))


def read_document(path) -> dict:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"invalid JSON: {exc}") from exc
    validate(doc)
    return doc


def shipped_path(name: str) -> Path:
    return Path(str(resources.files("dp1.data").joinpath(f"{name}.json")))


def document_to_instance(doc: dict):
    """``(Fibration, MonomialMap | None)`` from a validated document."""
    fib_doc = doc["fibration"]
    variables = fib_doc.get("variables", "xyzw")
    try:
        poly = parse_wpoly(fib_doc["equation"], variables=variables, homogeneous=6)
        fib = Fibration.from_wpoly(poly, allow_degenerate=True)
    except ValueError as exc:
        raise InstanceError(str(exc), "/fibration/equation") from exc
    mp = None
    if "map" in doc:
        try:
            mp = solve_weights(doc["map"]["forward"])
        except MapError as exc:
            raise InstanceError(str(exc), "/map/forward") from exc
    return fib, mp


def load_instance(path):
    return document_to_instance(read_document(path))


def instance_document(fib: Fibration, mp: MonomialMap | None = None, name: str | None = None,
                      expected: dict | None = None) -> dict:
    doc = {}
    if name is not None:
        doc["name"] = name
    doc["fibration"] = {"equation": str(fib), "variables": "".join(fib.names)}
    if mp is not None:
        doc["map"] = {"forward": list(mp.fwd)}
    if expected:
        doc["expected"] = expected
    return doc


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def emit_instance(fib: Fibration, mp: MonomialMap | None, path, name=None, expected=None) -> None:
    doc = instance_document(fib, mp, name, expected)
    validate(doc)
    Path(path).write_text(dumps(doc))


def emit_report(report, path=None) -> str:
    """Serialize a report (anything with ``to_dict`` or plain JSON data)."""
    data = report.to_dict() if hasattr(report, "to_dict") else report
    text = dumps(data)
    if path is not None:
        Path(path).write_text(text)
    return text
