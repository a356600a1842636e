import json

import pytest

from ringprops.errors import MalformedDescription
from ringprops.io import is_module, load_structure, structure_from_description

CYC2 = {"kind": "cyclic", "n": 2}


@pytest.mark.parametrize("desc,order", [
    (CYC2, 2),
    ({"kind": "matrix", "base": CYC2, "k": 2}, 16),
    ({"kind": "triangular", "base": {"kind": "cyclic", "n": 3}, "k": 2}, 27),
    ({"kind": "product", "factors": [CYC2, {"kind": "cyclic", "n": 4}]}, 8),
    ({"kind": "quotient", "base": {"kind": "cyclic", "n": 12}, "ideal_generators": [[4]]}, 4),
])
def test_ring_descriptions(desc, order):
    r = structure_from_description(desc)
    assert not is_module(r) and r.order == order
    again = structure_from_description(json.loads(json.dumps(r.description)))
    assert again == r


@pytest.mark.parametrize("desc,order,ring_order", [
    ({"kind": "regular", "ring": CYC2}, 2, 2),
    ({"kind": "free", "ring": CYC2, "n": 3}, 8, 2),
    ({"kind": "z_module", "orders": [2, 4]}, 8, 4),
    ({"kind": "z_module", "orders": [2], "ring": {"kind": "cyclic", "n": 4}}, 2, 4),
    ({"kind": "direct_sum", "summands": [{"kind": "regular", "ring": CYC2}] * 2}, 4, 2),
])
def test_module_descriptions(desc, order, ring_order):
    m = structure_from_description(desc)
    assert is_module(m) and m.order == order and m.ring.order == ring_order


@pytest.mark.parametrize("desc", [
    [], {"n": 3}, {"kind": "cyclic"}, {"kind": "cyclic", "n": 0}, {"kind": "cyclic", "n": "4"},
    {"kind": "product", "factors": [CYC2]}, {"kind": "blob"},
    {"kind": "quotient", "base": CYC2, "ideal_generators": [[1, 0]]},
    {"kind": "z_module", "orders": []}, {"kind": "z_module", "orders": [4], "exponent": 6},
    {"kind": "direct_sum", "summands": [{"kind": "regular", "ring": CYC2}]},
])
def test_malformed_descriptions(desc):
    with pytest.raises(MalformedDescription):
        structure_from_description(desc)


def test_load_structure_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(MalformedDescription):
        load_structure(bad)
    with pytest.raises(MalformedDescription):
        load_structure(tmp_path / "missing.json")
    good = tmp_path / "z4.json"
    good.write_text(json.dumps({"kind": "z_module", "orders": [4]}))
    assert load_structure(good).order == 4
