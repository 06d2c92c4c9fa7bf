from fractions import Fraction

import pytest

from index2poly.doubling import by_name, catalogue, double, generator_for

EXPECTED = {
    "Tetrahedron": ("{3,3}_4", (4, 6, 4)),
    "Cube": ("{4,3}_6", (8, 12, 6)),
    "Octahedron": ("{3,4}_6", (6, 12, 8)),
    "Dodecahedron": ("{5,3}_10", (20, 30, 12)),
    "Icosahedron": ("{3,5}_10", (12, 30, 20)),
    "Small Stellated Dodecahedron": ("{5,5}_6", (12, 30, 12)),
    "Great Dodecahedron": ("{5,5}_6", (12, 30, 12)),
    "Great Icosahedron": ("{3,5}_10", (12, 30, 20)),
    "Great Stellated Dodecahedron": ("{5,3}_10", (20, 30, 12)),
    "Petrie-dual of Icosahedron": ("{10,5}_3", (12, 30, 6)),
}


def test_catalogue_members():
    cat = catalogue()
    assert len(cat) == 18
    assert len({q.name for q in cat}) == 18
    for q in cat:
        assert q.complex.is_regular()
        if q.name in EXPECTED:
            assert (q.schlafli.type_symbol, q.schlafli.face_vector) == EXPECTED[q.name]


def test_petrie_duals_preserve_q():
    for q in catalogue():
        if q.is_petrie_dual:
            base = by_name(q.name.removeprefix("Petrie-dual of "))
            assert q.schlafli.q == base.schlafli.q
            assert q.schlafli.p == base.schlafli.petrie
            assert q.schlafli.petrie == base.schlafli.p


@pytest.mark.parametrize(
    "name,fv",
    [
        ("Tetrahedron", (8, 12, 4)),
        ("Cube", (8, 12, 6)),
        ("Octahedron", (12, 24, 8)),
        ("Dodecahedron", (40, 60, 12)),
        ("Small Stellated Dodecahedron", (24, 60, 12)),
        ("Icosahedron", (24, 60, 20)),
    ],
)
def test_doubled_face_vectors(name, fv):
    d = double(by_name(name))
    assert d.face_vector == fv
    assert d.complex.is_regular()


def test_odd_faces_double_in_length_even_faces_split():
    ico = double(by_name("Icosahedron"))
    assert {len(f) for f in ico.faces} == {6}
    cube = double(by_name("Cube"))
    assert {len(f) for f in cube.faces} == {4}
    assert cube.configuration.opposed


def test_double_at_a_ratio():
    d = double(by_name("Dodecahedron"), Fraction(1, 2))
    assert d.configuration.lam == Fraction(1, 2)
    assert len(set(d.coordinates())) == 40


def test_generator_lookup(by_id):
    assert generator_for(by_id["ico2-hrhr"].polyhedron).name == "Small Stellated Dodecahedron"
    assert generator_for(by_id["tetO-rr"].polyhedron).name == "Cube"
    assert generator_for(by_id["ico1-hrsr"].polyhedron) is None


def test_unknown_name():
    with pytest.raises(KeyError):
        by_name("Rhombicuboctahedron")
    assert by_name("great icosahedron").schlafli.face_vector == (12, 30, 20)
