"""JSON document schema and parsing for the CLI.

Two document kinds are accepted: a raw comodule algebra over a Hopf
algebra given by a constructor or by structure constants, and a finite
group action with local factors.  Unknown keys are rejected everywhere.
"""
from __future__ import annotations

import jsonschema

from .actions import LocalFactor, build_gamma_action
from .comodule import ComoduleAlgebra
from .fields import FieldSpec
from .geometry import Point
from .groups import FiniteGroup, cyclic_group, symmetric_group
from .hopf import HopfAlgebra, alpha_p, function_algebra, mu_n, validate_hopf, HopfError
from .linalg import Matrix

CHECK_NAMES = ("total-integral", "inertia", "slice", "torsor", "equivalence")

_FIELD = {
    "oneOf": [
        {"type": "object", "properties": {"kind": {"const": "rationals"}},
         "required": ["kind"], "additionalProperties": False},
        {"type": "object", "properties": {"kind": {"const": "prime"},
                                          "p": {"type": "integer", "minimum": 2}},
         "required": ["kind", "p"], "additionalProperties": False},
        {"type": "object", "properties": {"kind": {"const": "extension"},
                                          "p": {"type": "integer", "minimum": 2},
                                          "modulus": {"type": "array",
                                                      "items": {"type": "integer"}}},
         "required": ["kind", "p", "modulus"], "additionalProperties": False},
    ]
}

_SCALAR = {"oneOf": [{"type": "string"},
                     {"type": "array", "items": {"type": "string"}}]}

_MATRIX = {
    "type": "object",
    "properties": {"rows": {"type": "integer", "minimum": 0},
                   "cols": {"type": "integer", "minimum": 0},
                   "entries": {"type": "array", "items": _SCALAR}},
    "required": ["rows", "cols", "entries"],
    "additionalProperties": False,
}

_GROUP = {
    "oneOf": [
        {"type": "object", "properties": {"named": {"enum": ["c1", "c2", "c3", "c4",
                                                             "c5", "c6", "s3"]}},
         "required": ["named"], "additionalProperties": False},
        {"type": "object", "properties": {"table": {"type": "array",
                                                    "items": {"type": "array",
                                                              "items": {"type": "integer"}}}},
         "required": ["table"], "additionalProperties": False},
    ]
}

_HOPF = {
    "oneOf": [
        {"type": "object", "properties": {"constructor": {"const": "function-algebra"},
                                          "group": _GROUP},
         "required": ["constructor", "group"], "additionalProperties": False},
        {"type": "object", "properties": {"constructor": {"const": "mu"},
                                          "n": {"type": "integer", "minimum": 1}},
         "required": ["constructor", "n"], "additionalProperties": False},
        {"type": "object", "properties": {"constructor": {"const": "alpha"}},
         "required": ["constructor"], "additionalProperties": False},
        {"type": "object",
         "properties": {"raw": {
             "type": "object",
             "properties": {"dim": {"type": "integer", "minimum": 1},
                            "mult": _MATRIX, "unit": _MATRIX, "comult": _MATRIX,
                            "counit": _MATRIX, "antipode": _MATRIX},
             "required": ["dim", "mult", "unit", "comult", "counit", "antipode"],
             "additionalProperties": False}},
         "required": ["raw"], "additionalProperties": False},
    ]
}

_ALGEBRA = {
    "type": "object",
    "properties": {"dim": {"type": "integer", "minimum": 1},
                   "mult": _MATRIX, "unit": _MATRIX},
    "required": ["dim", "mult", "unit"],
    "additionalProperties": False,
}

_POINT = {
    "type": "object",
    "properties": {"field": _FIELD,
                   "residues": {"type": "array", "items": _SCALAR},
                   "label": {"type": "string"}},
    "required": ["field", "residues"],
    "additionalProperties": False,
}

_FACTOR = {
    "type": "object",
    "properties": {"idempotent": _MATRIX,
                   "residue_field": _FIELD,
                   "residues": {"type": "array", "items": _SCALAR},
                   "label": {"type": "string"}},
    "required": ["idempotent", "residue_field", "residues"],
    "additionalProperties": False,
}

_CHECKS = {"type": "array", "items": {"enum": list(CHECK_NAMES)}}

DOCUMENT_SCHEMA = {
    "oneOf": [
        {"type": "object",
         "properties": {"kind": {"const": "comodule-algebra"},
                        "name": {"type": "string"},
                        "field": _FIELD, "hopf": _HOPF, "algebra": _ALGEBRA,
                        "coaction": _MATRIX,
                        "points": {"type": "array", "items": _POINT},
                        "checks": _CHECKS},
         "required": ["kind", "field", "hopf", "algebra", "coaction"],
         "additionalProperties": False},
        {"type": "object",
         "properties": {"kind": {"const": "group-action"},
                        "name": {"type": "string"},
                        "field": _FIELD, "group": _GROUP, "algebra": _ALGEBRA,
                        "automorphisms": {"type": "array", "items": _MATRIX},
                        "factors": {"type": "array", "items": _FACTOR},
                        "checks": _CHECKS},
         "required": ["kind", "field", "group", "algebra", "automorphisms", "factors"],
         "additionalProperties": False},
    ]
}


class SchemaError(ValueError):
    pass


def validate_document(data) -> None:
    try:
        jsonschema.validate(data, DOCUMENT_SCHEMA)
    except jsonschema.ValidationError as exc:
        raise SchemaError(str(exc)) from exc


def _parse_group(data) -> FiniteGroup:
    if "named" in data:
        name = data["named"]
        if name == "s3":
            return symmetric_group(3)
        return cyclic_group(int(name[1:]))
    return FiniteGroup(tuple(tuple(r) for r in data["table"]))


def _parse_hopf(data, field: FieldSpec) -> HopfAlgebra:
    if "raw" in data:
        raw = data["raw"]
        h = HopfAlgebra(field, raw["dim"],
                        Matrix.from_json(field, raw["mult"]),
                        Matrix.from_json(field, raw["unit"]),
                        Matrix.from_json(field, raw["comult"]),
                        Matrix.from_json(field, raw["counit"]),
                        Matrix.from_json(field, raw["antipode"]))
        failed = validate_hopf(h)
        if failed:
            raise HopfError(f"document Hopf algebra failed validation: {failed}")
        return h
    ctor = data["constructor"]
    if ctor == "function-algebra":
        return function_algebra(_parse_group(data["group"]), field)
    if ctor == "mu":
        return mu_n(data["n"], field)
    return alpha_p(field)


def _parse_point(data) -> Point:
    K = FieldSpec.spec_from_json(data["field"])
    residues = tuple(K.from_json(x) for x in data["residues"])
    return Point(K, residues, label=data.get("label", ""))


def parse_document(data):
    """Validated document -> (name, CatalogCase-shaped bundle).

    Raises SchemaError for shape problems and the structure validators'
    own errors for semantic ones.
    """
    from .actions import coaction_from_group_action, factor_point
    from .catalog import CatalogCase
    validate_document(data)
    field = FieldSpec.spec_from_json(data["field"])
    name = data.get("name", "document")
    checks = tuple(data.get("checks", CHECK_NAMES))
    if data["kind"] == "comodule-algebra":
        hopf = _parse_hopf(data["hopf"], field)
        alg = data["algebra"]
        B = ComoduleAlgebra.build(hopf,
                                  Matrix.from_json(field, alg["mult"]),
                                  Matrix.from_json(field, alg["unit"]),
                                  Matrix.from_json(field, data["coaction"]))
        points = tuple(_parse_point(p) for p in data.get("points", ()))
        return CatalogCase(name, "user document", B, points), checks
    group = _parse_group(data["group"])
    alg = data["algebra"]
    factors = []
    for f in data["factors"]:
        K = FieldSpec.spec_from_json(f["residue_field"])
        factors.append(LocalFactor(Matrix.from_json(field, f["idempotent"]), K,
                                   tuple(K.from_json(x) for x in f["residues"]),
                                   f.get("label", "")))
    ga = build_gamma_action(group, field,
                            Matrix.from_json(field, alg["mult"]),
                            Matrix.from_json(field, alg["unit"]),
                            [Matrix.from_json(field, m) for m in data["automorphisms"]],
                            factors)
    case = CatalogCase(name, "user document", coaction_from_group_action(ga),
                       tuple(factor_point(ga, i) for i in range(len(factors))), ga)
    return case, checks
