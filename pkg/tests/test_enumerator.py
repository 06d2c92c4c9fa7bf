import pytest

from index2poly.enumerator import (
    EnumerationError,
    canonical_shape,
    census_fingerprint,
    check_counts,
    family,
    family_ids,
    shape_classes,
    verify_record,
)
from index2poly.tracer import ALPHABETS


def test_family_ids_unique(families):
    ids = [f.family_id for f in families]
    assert len(set(ids)) == 22
    assert ids == family_ids()
    assert family("ico1-hrsr").face_vector == (24, 60, 30)
    with pytest.raises(KeyError):
        family("ico1-rr")


def test_order_groups_by_symmetry(families):
    order = [f.symmetry for f in families]
    assert order == ["tetrahedral"] * 4 + ["octahedral"] * 2 + ["icosahedral"] * 16


def test_shapes_are_class_representatives(families):
    for f in families:
        alphabet = ALPHABETS[f.configuration.q - 1]
        assert canonical_shape(f.face_shape, alphabet) == f.face_shape


def test_class_counts():
    assert shape_classes(ALPHABETS[2]) == [("r", "r"), ("r", "l")]
    assert len(shape_classes(ALPHABETS[3])) == 4
    assert len(shape_classes(ALPHABETS[4])) == 6


def test_census_fingerprint():
    assert census_fingerprint(13, "{10,5}_6", True) == "R13:{10,5}_6"
    assert census_fingerprint(1, "{4,3}_3", False) == "N1:{4,3}_3"


def test_check_counts_raises(families):
    with pytest.raises(EnumerationError):
        check_counts(families[:-1])


def test_row(by_id):
    row = by_id["ico1-hrsl"].row()
    assert row == {
        "family_id": "ico1-hrsl",
        "symmetry": "icosahedral",
        "type": "{6,5}_4",
        "generator": None,
        "face_vector": [24, 60, 20],
        "edge_length": 1,
        "face_shape": "[hr,sl]",
        "genus": 9,
        "orientable": True,
        "census": "R9:{6,5}_4",
        "planar_lambda": "2+√5",
    }


@pytest.mark.parametrize("fid", ["tetA-rl", "oct-rr", "ico2-hrsr"])
def test_verify_record(by_id, fid):
    checks = verify_record(by_id[fid])
    assert checks and all(checks.values()), checks


def test_rejections_cover_every_scanned_configuration(rejections, families):
    from index2poly.solids import all_configurations

    seen = {r.configuration for r in rejections} | {f.configuration.label() for f in families}
    assert seen == {c.label() for c in all_configurations()}
