import pytest

from quhom.complex2 import rp2, torus, torus_grid, validate
from quhom.documents import complex_from_dict, complex_to_dict, hypermap_from_dict
from quhom.errors import SchemaError


def rp2_doc():
    return {
        "modulus": 2,
        "vertices": ["v"],
        "edges": [{"name": "e", "source": "v", "target": "v"}],
        "faces": [{"name": "f", "walk": ["e", "e"]}],
    }


def test_roundtrip_builders():
    for builder in (rp2, torus, lambda: torus_grid(2, 3)):
        complex2 = builder()
        doc = complex_to_dict(complex2, 4)
        again, modulus = complex_from_dict(doc)
        assert modulus == 4
        assert again == complex2
        assert validate(again) == []


def test_parse_rp2_doc():
    complex2, modulus = complex_from_dict(rp2_doc())
    assert modulus == 2
    assert complex2 == rp2()


def test_walk_tilde_means_inverse():
    doc = {
        "modulus": 3,
        "vertices": ["v"],
        "edges": [
            {"name": "e1", "source": "v", "target": "v"},
            {"name": "e2", "source": "v", "target": "v"},
        ],
        "faces": [{"name": "f", "walk": ["e1", "e2", "e1~", "e2~"]}],
    }
    complex2, _ = complex_from_dict(doc)
    assert complex2 == torus()


def test_empty_walk_is_degenerate():
    doc = {
        "modulus": 2,
        "vertices": ["v"],
        "edges": [],
        "faces": [{"name": "f", "walk": []}],
    }
    complex2, _ = complex_from_dict(doc)
    assert complex2.walks[0].is_degenerate


@pytest.mark.parametrize(
    "mutate",
    [
        lambda d: d.update(extra=1),
        lambda d: d.pop("modulus"),
        lambda d: d.update(modulus=1),
        lambda d: d.update(modulus=True),
        lambda d: d.update(vertices=["v", "v"]),
        lambda d: d["edges"].append({"name": "e", "source": "v", "target": "v"}),
        lambda d: d["edges"][0].update(color="red"),
        lambda d: d["edges"][0].pop("target"),
        lambda d: d["faces"][0].update(walk=[3]),
        lambda d: d["edges"][0].update(name="bad~name"),
        lambda d: d.update(vertices="v"),
    ],
)
def test_schema_rejections(mutate):
    doc = rp2_doc()
    mutate(doc)
    with pytest.raises(SchemaError):
        complex_from_dict(doc)


def test_hypermap_doc():
    doc = {"modulus": 3, "n": 2, "alpha": [[1, 2]], "sigma": [[1, 2]]}
    hypermap, specials, modulus = hypermap_from_dict(doc)
    assert modulus == 3
    assert hypermap.alpha == (2, 1)
    assert specials.darts == (1,)

    doc["special_darts"] = [2]
    _, specials, _ = hypermap_from_dict(doc)
    assert specials.darts == (2,)


@pytest.mark.parametrize(
    "doc",
    [
        {"modulus": 3, "n": 2, "alpha": [[1, 1]], "sigma": []},
        {"modulus": 3, "n": 2, "alpha": [[1, 2], [2]], "sigma": []},
        {"modulus": 3, "n": 2, "alpha": [[3]], "sigma": []},
        {"modulus": 3, "n": 2, "alpha": [], "sigma": [], "special_darts": [1]},
        {"modulus": 3, "n": 2, "alpha": [], "sigma": [], "unknown": 1},
        {"modulus": 3, "alpha": [], "sigma": []},
        {"modulus": 3, "n": 0, "alpha": [], "sigma": []},
    ],
)
def test_hypermap_schema_rejections(doc):
    with pytest.raises(SchemaError):
        hypermap_from_dict(doc)
