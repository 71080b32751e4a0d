"""Instance documents: JSON files describing a finite system or a shift.

Finite instance::

    {"kind": "finite", "points": 3,
     "topology": {"opens": [[], [2], [1, 2], [0, 1, 2]]},   # or "min_nbhd"
     "map": [0, 1, 2],
     "covers": {"all": [[0, 1, 2]]}}

Shift instance::

    {"kind": "sft", "alphabet": 2, "matrix": [[1, 1], [1, 1]],
     "covers": {"cyl": [[0], [1]]}, "fixed_symbol": 0}

Unknown fields are rejected.  :func:`dumps` writes the canonical form (sorted
keys, sorted point lists, neighbourhood topology), so parse/dump/parse is the
identity on canonical documents.
"""
import json
from dataclasses import dataclass, field
from typing import Optional

import jsonschema

from .dynamics import Cover, Homeo, identity
from .errors import InstanceError
from .pointset import mask, members
from .sft import Sft, sft_new, symbol_cover
from .topology import FiniteSpace, space_from_open_family

_point_lists = {"type": "array", "items": {
    "type": "array", "items": {"type": "integer", "minimum": 0}}}

SCHEMA = {
    "oneOf": [
        {
            "type": "object",
            "properties": {
                "kind": {"const": "finite"},
                "points": {"type": "integer", "minimum": 1},
                "topology": {
                    "type": "object",
                    "properties": {"opens": _point_lists, "min_nbhd": _point_lists},
                    "additionalProperties": False,
                    "minProperties": 1,
                    "maxProperties": 1,
                },
                "map": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                "covers": {"type": "object", "additionalProperties": _point_lists},
            },
            "required": ["kind", "points", "topology"],
            "additionalProperties": False,
        },
        {
            "type": "object",
            "properties": {
                "kind": {"const": "sft"},
                "alphabet": {"type": "integer", "minimum": 1},
                "matrix": {"type": "array", "items": {
                    "type": "array", "items": {"enum": [0, 1]}}},
                "covers": {"type": "object", "additionalProperties": _point_lists},
                "fixed_symbol": {"type": "integer", "minimum": 0},
            },
            "required": ["kind", "alphabet", "matrix"],
            "additionalProperties": False,
        },
    ]
}


@dataclass
class FiniteInstance:
    space: FiniteSpace
    homeo: Homeo
    covers: dict = field(default_factory=dict)


@dataclass
class SftInstance:
    sft: Sft
    covers: dict = field(default_factory=dict)
    fixed_symbol: Optional[int] = None


def parse_instance(doc):
    """Validate and build an instance from a dict or a JSON string."""
    if isinstance(doc, (str, bytes)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as e:
            raise InstanceError(f"not JSON: {e}") from None
    try:
        jsonschema.validate(doc, SCHEMA)
    except jsonschema.ValidationError as e:
        raise InstanceError(_schema_message(doc, e)) from None
    if doc["kind"] == "finite":
        return _parse_finite(doc)
    return _parse_sft(doc)


def _schema_message(doc, err):
    if isinstance(doc, dict) and doc.get("kind") in ("finite", "sft"):
        # report against the branch the document claims to be
        branch = SCHEMA["oneOf"][0 if doc["kind"] == "finite" else 1]
        best = jsonschema.exceptions.best_match(
            jsonschema.Draft202012Validator(branch).iter_errors(doc))
        if best is not None:
            where = "/".join(map(str, best.absolute_path)) or "document"
            return f"{where}: {best.message}"
    return err.message


def _check_range(lists, n, what):
    for s in lists:
        for p in s:
            if p >= n:
                raise InstanceError(f"{what}: point {p} out of range for {n} points")


def _parse_finite(doc):
    n = doc["points"]
    top = doc["topology"]
    if "opens" in top:
        _check_range(top["opens"], n, "topology")
        space = space_from_open_family(n, [mask(s) for s in top["opens"]])
    else:
        nb = top["min_nbhd"]
        if len(nb) != n:
            raise InstanceError(f"min_nbhd lists {len(nb)} sets for {n} points")
        _check_range(nb, n, "topology")
        space = FiniteSpace.from_neighbourhoods(nb)
    if "map" in doc:
        if len(doc["map"]) != n:
            raise InstanceError(f"map has {len(doc['map'])} entries for {n} points")
        homeo = Homeo(space, tuple(doc["map"]))
    else:
        homeo = identity(space)
    covers = {}
    for name, sets in doc.get("covers", {}).items():
        _check_range(sets, n, f"cover {name!r}")
        covers[name] = Cover.from_points(space, sets)
    return FiniteInstance(space, homeo, covers)


def _parse_sft(doc):
    a = doc["alphabet"]
    rows = doc["matrix"]
    if len(rows) != a or any(len(r) != a for r in rows):
        raise InstanceError(f"matrix must be {a}x{a}")
    sft = sft_new(rows)
    covers = {name: symbol_cover(sft, sets) for name, sets in doc.get("covers", {}).items()}
    fixed = doc.get("fixed_symbol")
    if fixed is not None and fixed >= a:
        raise InstanceError(f"fixed_symbol {fixed} out of range")
    return SftInstance(sft, covers, fixed)


def load_instance(path):
    with open(path) as fh:
        return parse_instance(fh.read())


def finite_doc(space, homeo=None, covers=None):
    doc = {
        "kind": "finite",
        "points": space.n,
        "topology": {"min_nbhd": [members(m) for m in space.min_nbhd]},
        "map": list(homeo.perm) if homeo is not None else list(range(space.n)),
        "covers": {name: [members(u) for u in c] for name, c in (covers or {}).items()},
    }
    return doc


def dump_instance(inst):
    """Canonical dict form of an instance."""
    if isinstance(inst, FiniteInstance):
        return finite_doc(inst.space, inst.homeo, inst.covers)
    doc = {
        "kind": "sft",
        "alphabet": inst.sft.alphabet_size,
        "matrix": [list(r) for r in inst.sft.allowed],
        "covers": {name: [sorted(e) for e in c] for name, c in inst.covers.items()},
    }
    if inst.fixed_symbol is not None:
        doc["fixed_symbol"] = inst.fixed_symbol
    return doc


def dumps(obj):
    """Canonical JSON text (sorted keys, compact separators)."""
    if isinstance(obj, (FiniteInstance, SftInstance)):
        obj = dump_instance(obj)
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
