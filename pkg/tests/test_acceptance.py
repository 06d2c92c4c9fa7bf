"""Acceptance criteria 1-11. Each test carries a ``criterion`` marker and the
terminal summary prints one PASS/FAIL line per criterion."""

import random
import re
from collections import Counter
from fractions import Fraction
from itertools import combinations, product

import pytest

from index2poly.analysis import face_stabilizer_check, no_antipodal_edges, planarity, symmetries
from index2poly.doubling import by_name, double
from index2poly.enumerator import (
    reverse_shape,
    shape_class,
    shape_classes,
    swap_shape,
)
from index2poly.exactgeom import TAU, FieldElement
from index2poly.export import count_obj, mesh_document
from index2poly.flagmap import canonical_cycle
from index2poly.solids import SolidKind, all_configurations, candidate_count_precheck, candidate_edges
from index2poly.tracer import ALPHABETS, alphabet_for, reverse_symbol, trace_face

criterion = pytest.mark.criterion


def _parse_shape(text):
    return tuple(text.strip("[]").split(","))


def _key(type_symbol, face_vector, edge_length, shape, generator):
    return (type_symbol, tuple(face_vector), edge_length, shape_class(shape), generator)


def _family_key(f):
    return _key(f.schlafli_type, f.face_vector, f.edge_length, f.face_shape, f.generator)


def _row_key(r):
    return _key(r["type"], r["face_vector"], r["edge_length"], _parse_shape(r["face_shape"]), r["generator"])


@pytest.fixture(scope="module")
def matched(families, reference_rows):
    """Reference row index -> family, a bijection on the comparison key."""
    pool = {}
    for f in families:
        pool.setdefault(_family_key(f), []).append(f)
    out = {}
    for i, r in enumerate(reference_rows):
        candidates = pool.get(_row_key(r), [])
        assert candidates, f"no family matches reference row {i}: {r}"
        out[i] = candidates.pop(0)
    return out


# -- 1 --------------------------------------------------------------------------------


@criterion(1, "reference table reproduced exactly (22 families)")
def test_reference_table_multiset(families, reference_rows):
    assert len(families) == 22
    assert len(reference_rows) == 22
    got = Counter(_family_key(f) for f in families)
    want = Counter(_row_key(r) for r in reference_rows)
    assert got == want


# -- 2 --------------------------------------------------------------------------------


@criterion(2, "|Aut| = 4 f1, |G| = 2 f1, index 2, two flag orbits")
def test_index_and_flag_orbits(families):
    for f in families:
        f1 = f.face_vector[1]
        rep = f.report
        assert rep.aut_order == 4 * f1, f.family_id
        assert rep.sym_group_order == 2 * f1, f.family_id
        assert rep.index == 2 and isinstance(rep.index, Fraction), f.family_id
        assert rep.flag_orbits == 2, f.family_id


# -- 3 --------------------------------------------------------------------------------


@criterion(3, "symmetry split 4 tetrahedral + 2 octahedral + 16 icosahedral")
def test_symmetry_split(families):
    split = Counter(f.symmetry for f in families)
    assert split == {"tetrahedral": 4, "octahedral": 2, "icosahedral": 16}
    orders = {"tetrahedral": 24, "octahedral": 48, "icosahedral": 120}
    for f in families:
        assert f.report.sym_group_order == orders[f.symmetry], f.family_id
        assert f.report.full_platonic, f.family_id


# -- 4 --------------------------------------------------------------------------------


@criterion(4, "18/18 generator-bearing families isomorphic to the doubled generator")
def test_doubling_oracle(families):
    bearing = [f for f in families if f.generator is not None]
    assert len(bearing) == 18
    ok = [f.family_id for f in bearing if double(by_name(f.generator)).complex.is_isomorphic(f.polyhedron.complex)]
    assert len(ok) == 18, sorted({f.family_id for f in bearing} - set(ok))


# -- 5 --------------------------------------------------------------------------------


@criterion(5, "Petrie lengths match the type subscripts; Petrie-dual pairs within figure rows")
def test_petrie_lengths(families):
    want = {"{4,3}_6": 6, "{6,3}_4": 4, "{6,4}_6": 6, "{10,3}_10": 10,
            "{4,5}_6": 6, "{6,5}_4": 4, "{6,5}_10": 10, "{10,5}_6": 6}
    for f in families:
        data = f.polyhedron.complex.schlafli()
        assert data.type_symbol == f.schlafli_type, f.family_id
        assert data.petrie == want[f.schlafli_type], f.family_id
        lengths = {len(p) for p in f.polyhedron.complex.petrie_polygons()}
        assert lengths == {data.petrie}, f.family_id


@criterion(5, "Petrie lengths match the type subscripts; Petrie-dual pairs within figure rows")
def test_petrie_pairing_within_figures(matched, reference_rows):
    for i in range(0, len(reference_rows), 2):
        a, b = matched[i], matched[i + 1]
        assert reference_rows[i]["figure"] == reference_rows[i + 1]["figure"]
        assert a.configuration == b.configuration
        dual = a.polyhedron.complex.petrie_dual()
        assert dual.face_keys == b.polyhedron.complex.face_keys, (a.family_id, b.family_id)
        assert b.polyhedron.complex.petrie_dual().face_keys == a.polyhedron.complex.face_keys


# -- 6 --------------------------------------------------------------------------------


@criterion(6, "genus from the Euler characteristic matches the census labels; all orientable")
def test_genus_fingerprints(families, matched, reference_rows):
    by_type = {"{6,4}_6": 3, "{10,3}_10": 5, "{4,5}_6": 4, "{6,5}_4": 9, "{6,5}_10": 9, "{10,5}_6": 13}
    for f in families:
        f0, f1, f2 = f.face_vector
        chi = f0 - f1 + f2
        assert f.orientable and f.polyhedron.complex.is_orientable, f.family_id
        assert f.genus == (2 - chi) // 2, f.family_id
        if f.schlafli_type in by_type:
            assert f.genus == by_type[f.schlafli_type], f.family_id
    for i, row in enumerate(reference_rows):
        if row["census"] is None:
            continue
        digits = int(re.match(r"R(\d+)\.", row["census"]).group(1))
        assert matched[i].genus == digits, (row, matched[i].family_id)


# -- 7 --------------------------------------------------------------------------------


@criterion(7, "the {10,3}_10, {6,5}_10 and {10,5}_6 complexes coincide as maps")
@pytest.mark.parametrize("type_symbol", ["{10,3}_10", "{6,5}_10", "{10,5}_6"])
def test_map_coincidences(families, type_symbol):
    group = [f for f in families if f.schlafli_type == type_symbol]
    assert len(group) == 4
    for a, b in combinations(group, 2):
        assert a.polyhedron.complex.is_isomorphic(b.polyhedron.complex), (a.family_id, b.family_id)


# -- 8 --------------------------------------------------------------------------------


@criterion(8, "planar members exactly at tau and 2 tau + 1, none elsewhere")
def test_planar_lambda(families):
    from index2poly.analysis import find_planar_lambda

    expected = {"ico1-hrsr": TAU, "ico1-hrsl": 2 * TAU + 1}
    for f in families:
        lam = find_planar_lambda(f.polyhedron)
        assert lam == expected.get(f.family_id), f.family_id
        assert f.planar_lambda == lam
        if lam is not None:
            assert isinstance(lam, FieldElement)
            assert all(planarity(f.polyhedron, lam))


# -- 9 --------------------------------------------------------------------------------


@criterion(9, "rejection ledger carries the expected reason codes")
def test_rejection_ledger(families, rejections):
    reasons = {(r.configuration, r.shape): r.reason for r in rejections}
    assert not [f for f in families if f.configuration.base is SolidKind.CUBE]
    cube_shapes = [(c, s) for (c, s) in reasons if c.startswith("cube") and s is not None]
    assert {c for c, _ in cube_shapes} == {"cube1", "cube2"}
    assert all(reasons[k] == "disconnected" for k in cube_shapes)
    assert reasons[("oct", ("f", "f"))] == "disconnected"
    assert reasons[("oct", ("r", "f"))] == "vertex-figure"
    assert reasons[("dod2", None)] == "precheck-count"
    assert reasons[("dod3", None)] == "precheck-count"


# -- 10 -------------------------------------------------------------------------------


@criterion(10, "G_F dihedral with mirrors through opposite vertices, G_F+ cyclic; orbits 2/1/1")
def test_stabilizer_suite(families):
    for f in families:
        syms = symmetries(f.polyhedron)
        check = face_stabilizer_check(f.polyhedron, syms)
        assert check, f"{f.family_id}: {check.witness}"
        stab = f.report.face_stabilizer
        p = int(f.schlafli_type[1:].split(",")[0])
        assert (stab["order"], stab["rotation_order"], stab["rotation_cyclic"]) == (p, p // 2, True)
        o = f.report.orbits_G
        assert (o.vertices, o.edges, o.faces) == (2, 1, 1), f.family_id


# -- 11 -------------------------------------------------------------------------------


def _random_lambda(rng):
    while True:
        a = Fraction(rng.randint(-40, 80), rng.randint(1, 40))
        b = Fraction(rng.randint(-20, 20), rng.randint(1, 40)) if rng.random() < 0.5 else Fraction(0)
        lam = FieldElement(a, b)
        if lam.sign() > 0 and lam != 1:
            return lam


@criterion(11, "random ratios keep mesh counts and avoid antipodal edges; shape-class involutions")
def test_random_lambda_meshes(families):
    rng = random.Random(20240611)
    for f in families:
        f0, _, f2 = f.face_vector
        for _ in range(100):
            lam = _random_lambda(rng)
            doc = mesh_document(f.polyhedron, lam, check_planarity=False)
            assert doc.counts == (f0, f2), (f.family_id, str(lam))
            assert len(set(doc.vertices)) == f0, (f.family_id, str(lam))
            assert count_obj(doc.to_obj()) == (f0, f2), (f.family_id, str(lam))
            assert no_antipodal_edges(f.polyhedron, lam), (f.family_id, str(lam))


@criterion(11, "random ratios keep mesh counts and avoid antipodal edges; shape-class involutions")
@pytest.mark.parametrize("q_minus_1", sorted(ALPHABETS))
def test_shape_class_involutions(q_minus_1):
    alphabet = ALPHABETS[q_minus_1]
    pairs = list(product(alphabet, repeat=2))
    for s in pairs:
        assert reverse_shape(reverse_shape(s)) == s
        assert swap_shape(swap_shape(s)) == s
        assert reverse_shape(swap_shape(s)) == swap_shape(reverse_shape(s))
        cls = shape_class(s)
        assert cls == {s, reverse_shape(s), swap_shape(s), reverse_shape(swap_shape(s))}
        assert all(shape_class(t) == cls for t in cls)
    reps = shape_classes(alphabet)
    assert sorted(t for r in reps for t in shape_class(r)) == sorted(pairs)
    for r1, r2 in combinations(reps, 2):
        assert not shape_class(r1) & shape_class(r2)


def _traceable():
    return [c for c in all_configurations() if candidate_count_precheck(c)]


@criterion(11, "random ratios keep mesh counts and avoid antipodal edges; shape-class involutions")
@pytest.mark.parametrize("cfg", _traceable(), ids=lambda c: c.label())
def test_shape_class_faces(cfg):
    """Reversal and swap relate traced faces exactly, for every pair of symbols."""
    n = cfg.n
    edges = candidate_edges(cfg)

    def swap_label(v):
        return v + n if v < n else v - n

    for a, b in product(alphabet_for(cfg), repeat=2):
        shape = (a, b)
        rev = (reverse_symbol(b), reverse_symbol(a))
        faces = {canonical_cycle(trace_face(e, shape, cfg)) for e in edges}
        for x, y in edges:
            f = trace_face((x, y), shape, cfg)
            g = trace_face((y, x), rev, cfg)
            assert canonical_cycle(f) == canonical_cycle(g), (cfg.label(), shape)
        swapped = {canonical_cycle(trace_face(e, (b, a), cfg)) for e in edges}
        assert {canonical_cycle([swap_label(v) for v in f]) for f in faces} == swapped, (cfg.label(), shape)
