"""JSON instance documents: schemas, parsing, and serialization.

Every document carries a ``kind``.  Partitions are written as block lists
and canonicalized on load; distances are rational strings such as ``"3/2"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import jsonschema

from . import classes as C
from . import relations as R
from . import topology as T
from .classes import UeqClass
from .errors import SchemaError, UeqError, ValidationError
from .maps import SpaceMap
from .pseudometrics import MetricFamily, TransitivePseudoMetric, as_matrix

KINDS = ("space", "map", "metric", "family", "topology", "subset")

_partition = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}},
}
_space = {
    "type": "object",
    "required": ["carrier", "generators"],
    "properties": {
        "kind": {"const": "space"},
        "carrier": {"type": "integer", "minimum": 1},
        "generators": {"type": "array", "minItems": 1, "items": _partition},
        "factors": {"type": "array", "items": {"type": "integer", "minimum": 1}},
    },
}
_rational = {
    "oneOf": [
        {"type": "integer", "minimum": 0},
        {"type": "string", "pattern": r"^\s*\d+(\s*/\s*\d+)?\s*$"},
    ]
}
_matrix = {"type": "array", "minItems": 1, "items": {"type": "array", "items": _rational}}

SCHEMAS: dict[str, dict] = {
    "space": _space,
    "map": {
        "type": "object",
        "required": ["source", "target", "values"],
        "properties": {
            "source": _space,
            "target": _space,
            "values": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
    "metric": {
        "type": "object",
        "required": ["carrier", "dist"],
        "properties": {"carrier": {"type": "integer", "minimum": 1}, "dist": _matrix},
    },
    "family": {
        "type": "object",
        "required": ["carrier", "metrics"],
        "properties": {
            "carrier": {"type": "integer", "minimum": 1},
            "metrics": {"type": "array", "minItems": 1, "items": _matrix},
        },
    },
    "topology": {
        "type": "object",
        "required": ["carrier"],
        "properties": {
            "carrier": {"type": "integer", "minimum": 1},
            "min_nbhd": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
            "opens": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        },
        "oneOf": [{"required": ["min_nbhd"]}, {"required": ["opens"]}],
    },
    "subset": {
        "type": "object",
        "required": ["space", "elements"],
        "properties": {
            "space": _space,
            "elements": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
    },
}

_envelope = {
    "type": "object",
    "required": ["kind"],
    "properties": {"kind": {"enum": list(KINDS)}},
}


@dataclass(frozen=True)
class Instance:
    kind: str
    value: Any
    doc: dict


def _path(err: jsonschema.ValidationError) -> str:
    return "/".join(str(p) for p in err.absolute_path) or "<root>"


def _load_space(doc: dict, where: str) -> UeqClass:
    n = doc["carrier"]
    try:
        gens = [R.from_blocks(n, blocks) for blocks in doc["generators"]]
    except (UeqError, IndexError) as e:
        raise ValidationError(f"{where}/generators: {e}") from None
    if "factors" in doc:
        size = 1
        for s in doc["factors"]:
            size *= s
        if size != n:
            raise ValidationError(f"{where}/factors: product of factor sizes is {size}, carrier is {n}")
    return C.generate(n, gens)


def _load_matrix(rows, n: int, where: str):
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValidationError(f"{where}: expected a {n}x{n} matrix")
    try:
        return as_matrix([[Fraction(str(v).replace(" ", "")) for v in row] for row in rows])
    except (UeqError, ZeroDivisionError) as e:
        raise ValidationError(f"{where}: {e}") from None


def _check_elements(elements, n: int, where: str) -> None:
    bad = [x for x in elements if x >= n]
    if bad:
        raise ValidationError(f"{where}: elements {bad} outside carrier of size {n}")


def from_doc(doc: Any) -> Instance:
    """Validate a decoded JSON document and build the value it describes."""
    try:
        jsonschema.validate(doc, _envelope)
        kind = doc["kind"]
        jsonschema.validate(doc, SCHEMAS[kind])
    except jsonschema.ValidationError as e:
        raise SchemaError(f"{_path(e)}: {e.message}") from None

    if kind == "space":
        value = _load_space(doc, "")
    elif kind == "map":
        src = _load_space(doc["source"], "source")
        dst = _load_space(doc["target"], "target")
        if len(doc["values"]) != src.n:
            raise ValidationError(f"values: {len(doc['values'])} entries for a source of size {src.n}")
        _check_elements(doc["values"], dst.n, "values")
        value = SpaceMap(src, dst, tuple(doc["values"]))
    elif kind == "metric":
        value = _load_matrix(doc["dist"], doc["carrier"], "dist")
    elif kind == "family":
        ms = []
        for i, rows in enumerate(doc["metrics"]):
            m = _load_matrix(rows, doc["carrier"], f"metrics/{i}")
            try:
                ms.append(TransitivePseudoMetric(m))
            except UeqError as e:
                raise ValidationError(f"metrics/{i}: {e}") from None
        value = MetricFamily(doc["carrier"], tuple(ms))
    elif kind == "topology":
        n = doc["carrier"]
        try:
            if "min_nbhd" in doc:
                if len(doc["min_nbhd"]) != n:
                    raise ValidationError(f"min_nbhd: need {n} neighbourhoods")
                for i, nb in enumerate(doc["min_nbhd"]):
                    _check_elements(nb, n, f"min_nbhd/{i}")
                value = T.FiniteTopology(n, tuple(R.to_mask(nb) for nb in doc["min_nbhd"]))
            else:
                for i, g in enumerate(doc["opens"]):
                    _check_elements(g, n, f"opens/{i}")
                value = T.from_opens(n, doc["opens"])
        except ValueError as e:
            if isinstance(e, ValidationError):
                raise
            raise ValidationError(f"topology: {e}") from None
    else:
        sp = _load_space(doc["space"], "space")
        _check_elements(doc["elements"], sp.n, "elements")
        value = (sp, frozenset(doc["elements"]))
    return Instance(kind, value, doc)


def parse_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    return from_doc(doc)


def load(path) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def _blocks(u: R.EquivRel) -> list[list[int]]:
    return [sorted(b) for b in u.blocks()]


def space_doc(c: UeqClass, factors=None, *, kind=True) -> dict:
    doc: dict = {"kind": "space"} if kind else {}
    doc["carrier"] = c.n
    doc["generators"] = [_blocks(g) for g in c.generators]
    if factors is not None:
        doc["factors"] = list(factors)
    return doc


def members_doc(c: UeqClass) -> dict:
    return {"kind": "space", "carrier": c.n, "generators": [_blocks(u) for u in c]}


def map_doc(f: SpaceMap) -> dict:
    return {
        "kind": "map",
        "source": space_doc(f.source, kind=False),
        "target": space_doc(f.target, kind=False),
        "values": list(f.values),
    }


def _rat(v) -> str:
    return str(Fraction(v))


def metric_doc(m) -> dict:
    if isinstance(m, TransitivePseudoMetric):
        m = m.dist
    return {"kind": "metric", "carrier": len(m), "dist": [[_rat(v) for v in row] for row in m]}


def family_doc(fam: MetricFamily) -> dict:
    return {
        "kind": "family",
        "carrier": fam.n,
        "metrics": [[[_rat(v) for v in row] for row in d.dist] for d in fam.metrics],
    }


def topology_doc(t: T.FiniteTopology) -> dict:
    return {
        "kind": "topology",
        "carrier": t.n,
        "min_nbhd": [sorted(t.nbhd(x)) for x in range(t.n)],
    }


def subset_doc(c: UeqClass, elements) -> dict:
    return {"kind": "subset", "space": space_doc(c, kind=False), "elements": sorted(elements)}


def dumps(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True)
