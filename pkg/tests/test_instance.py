import json

import pytest

from expanso.constructions import enumerate_homeos, enumerate_spaces_upto
from expanso.dynamics import canonical_cover
from expanso.errors import InstanceError, InvalidCover, NotATopology, NotContinuous
from expanso.instance import (FiniteInstance, SftInstance, dump_instance, dumps, finite_doc,
                              parse_instance)

CHAIN = {"kind": "finite", "points": 3,
         "topology": {"opens": [[], [2], [1, 2], [0, 1, 2]]},
         "map": [0, 1, 2], "covers": {"all": [[0, 1, 2]]}}
SHIFT = {"kind": "sft", "alphabet": 2, "matrix": [[1, 1], [1, 1]],
         "covers": {"cyl": [[0], [1]]}, "fixed_symbol": 0}


def test_parse_finite():
    inst = parse_instance(CHAIN)
    assert isinstance(inst, FiniteInstance)
    assert inst.space.min_nbhd == (0b111, 0b110, 0b100)
    assert tuple(inst.covers["all"]) == (0b111,)


def test_parse_text_and_default_map():
    doc = dict(CHAIN)
    del doc["map"]
    inst = parse_instance(json.dumps(doc))
    assert inst.homeo.perm == (0, 1, 2)


def test_parse_sft():
    inst = parse_instance(SHIFT)
    assert isinstance(inst, SftInstance)
    assert inst.fixed_symbol == 0 and len(inst.covers["cyl"]) == 2


def test_canonical_roundtrip():
    for doc in (CHAIN, SHIFT):
        once = dumps(parse_instance(doc))
        assert dumps(parse_instance(once)) == once


def test_roundtrip_enumeration():
    for sp in enumerate_spaces_upto(3):
        for f in enumerate_homeos(sp):
            doc = finite_doc(sp, f, {"m": canonical_cover(sp)})
            back = parse_instance(dumps(doc))
            assert back.space == sp and back.homeo.perm == f.perm
            assert dump_instance(back) == doc


@pytest.mark.parametrize("doc,err", [
    ({**CHAIN, "extra": 1}, InstanceError),
    ({**CHAIN, "kind": "other"}, InstanceError),
    ({**CHAIN, "topology": {"opens": [[], [0], [1], [0, 1, 2]]}}, NotATopology),
    ({**CHAIN, "map": [2, 1, 0]}, NotContinuous),
    ({**CHAIN, "map": [0, 1]}, InstanceError),
    ({**CHAIN, "covers": {"bad": [[0]]}}, InvalidCover),
    ({**CHAIN, "covers": {"bad": [[5]]}}, InstanceError),
    ({**CHAIN, "topology": {"min_nbhd": [[0]]}}, InstanceError),
    ({**SHIFT, "matrix": [[1, 1]]}, InstanceError),
    ({**SHIFT, "fixed_symbol": 4}, InstanceError),
    ({**SHIFT, "matrix": [[1, 2], [1, 1]]}, InstanceError),
])
def test_rejections(doc, err):
    with pytest.raises(err):
        parse_instance(doc)


def test_not_json():
    with pytest.raises(InstanceError):
        parse_instance("{nope")


def test_schema_message_names_field():
    with pytest.raises(InstanceError) as e:
        parse_instance({**CHAIN, "points": "three"})
    assert "points" in str(e.value)


def test_dumps_is_compact_and_sorted():
    text = dumps(parse_instance(SHIFT))
    assert " " not in text
    assert text.index('"alphabet"') < text.index('"covers"') < text.index('"kind"')
