import json

import pytest

from fermatiq.dataset import DatasetError, load_dataset, load_newform, newform_from_dict, newform_to_dict, save_newform
from fermatiq.hecke import HeckeField
from fermatiq.okarith import make_field
from fermatiq.sieve import NewformRecord, default_primes


def _sample(d=11):
    K = make_field(d)
    F = HeckeField((-2, 0, 1))
    S = default_primes(K, K(2))[:4]
    eig = {P.label: F((i % 3 - 1, 1 if i % 2 else 0)) for i, P in enumerate(S)}
    return NewformRecord(d, K(2), 4, F, eig, "sample")


def test_round_trip(tmp_path):
    f = _sample()
    path = tmp_path / "f.json"
    save_newform(f, path, provenance="handmade")
    g = load_newform(path)
    assert g == f and g.eigenvalues == f.eigenvalues
    assert json.loads(path.read_text())["provenance"] == "handmade"
    assert newform_from_dict(newform_to_dict(f)) == f


def test_malformed(tmp_path):
    doc = newform_to_dict(_sample())
    for key in ("d", "level", "min_poly", "eigenvalues"):
        bad = {k: v for k, v in doc.items() if k != key}
        with pytest.raises(DatasetError):
            newform_from_dict(bad)
    with pytest.raises(DatasetError):
        newform_from_dict(dict(doc, min_poly=[1, 2, 1]))
    with pytest.raises(DatasetError):
        newform_from_dict(dict(doc, d=5))
    dup = dict(doc, eigenvalues=doc["eigenvalues"] + doc["eigenvalues"][:1])
    with pytest.raises(DatasetError):
        newform_from_dict(dup)
    (tmp_path / "x.json").write_text("{not json")
    with pytest.raises(DatasetError):
        load_newform(tmp_path / "x.json")
    (tmp_path / "y.json").write_text("[1, 2]")
    with pytest.raises(DatasetError):
        load_newform(tmp_path / "y.json")


def test_label_mismatch():
    doc = newform_to_dict(_sample())
    # a label whose generator does not have the stated norm
    doc["eigenvalues"][0]["prime"] = "3.3.5.5"
    with pytest.raises(DatasetError):
        newform_from_dict(doc)
    doc = newform_to_dict(_sample())
    doc["eigenvalues"][0]["prime"] = "2.4.2.0"  # divides the level
    with pytest.raises(DatasetError):
        newform_from_dict(doc)


def test_load_dataset(tmp_path):
    with pytest.raises(DatasetError, match="no newforms"):
        load_dataset(tmp_path)
    with pytest.raises(DatasetError):
        load_dataset(tmp_path / "missing")
    save_newform(_sample(), tmp_path / "b.json")
    save_newform(_sample(19), tmp_path / "a.json")
    assert [f.field_d for f in load_dataset(tmp_path)] == [19, 11]
    with pytest.raises(DatasetError):
        load_dataset(tmp_path, d=11)
