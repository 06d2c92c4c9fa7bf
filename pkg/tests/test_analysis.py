from fractions import Fraction
from types import SimpleNamespace

import pytest

from index2poly.analysis import (
    antipodal_edges,
    face_stabilizer_check,
    find_planar_lambda,
    orthogonal_stabilizer,
    peval,
    planarity,
    planarity_polynomials,
    symmetries,
    symmetry_group,
)
from index2poly.exactgeom import TAU, Isometry, reflection, vec, vneg
from index2poly.solids import Alignment, SolidKind, VertexConfiguration, solid


@pytest.mark.parametrize("fid,order", [("tetA-rr", 24), ("tetO-rl", 24), ("oct-rr", 48), ("dod4-rl", 120), ("ico2-srsl", 120)])
def test_group_orders(by_id, fid, order):
    rec = by_id[fid]
    assert rec.report.sym_group_order == order
    assert rec.report.rot_subgroup_order == order // 2
    assert rec.report.aut_order == 2 * order


def test_tetrahedral_automorphism_group(by_id):
    for fid in ("tetA-rr", "tetA-rl", "tetO-rr", "tetO-rl"):
        assert by_id[fid].report.aut_order == 48


def test_symmetries_do_not_depend_on_the_ratio(by_id):
    poly = by_id["ico1-hrsr"].polyhedron
    generic = {g for g, _ in symmetries(poly)}
    assert {g for g, _ in symmetries(poly, Fraction(3, 7))} == generic
    assert {g for g, _ in symmetries(poly, TAU)} == generic


def test_report_json(by_id):
    _, rep = symmetry_group(by_id["oct-rl"].polyhedron)
    data = rep.to_json()
    assert data["index"] == "2"
    assert data["orbits_G"] == {"vertices": 2, "edges": 1, "faces": 1}
    assert data["face_stabilizer"]["rotation_cyclic"]


def test_face_stabilizer_shape(by_id):
    stab = by_id["dod1-rr"].report.face_stabilizer
    assert stab == {
        "p": 10,
        "order": 10,
        "rotation_order": 5,
        "rotation_cyclic": True,
        "improper_are_reflections": True,
    }


def test_edge_midpoint_mirror_fails():
    """A square with mirrors through edge midpoints is not a valid stabilizer."""
    pts = solid(SolidKind.CUBE).points
    top = [i for i, p in enumerate(pts) if p[2] == 1]
    # order the top face cyclically
    a = top[0]
    ring = [a]
    while len(ring) < 4:
        cur = ring[-1]
        nxt = [j for j in top if j not in ring and sum(x != y for x, y in zip(pts[cur], pts[j])) == 1]
        ring.append(nxt[0])
    elements = [
        Isometry.identity(),
        Isometry.from_rows([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
        reflection(vec(1, 0, 0)),
        reflection(vec(0, 1, 0)),
    ]
    index = {p: i for i, p in enumerate(pts)}
    syms = [(g, tuple(index[g.apply(p)] for p in pts)) for g in elements]
    fake = SimpleNamespace(complex=SimpleNamespace(faces=[tuple(ring)]))
    check = face_stabilizer_check(fake, syms)
    assert not check
    assert "edge midpoint" in check.witness


def _config_points(base, alignment, lam):
    cfg = VertexConfiguration(base, alignment, 1, lam)
    return [cfg.coordinates(v) for v in range(2 * cfg.n)]


@pytest.mark.parametrize(
    "base,alignment,lam,order",
    [
        (SolidKind.TETRAHEDRON, Alignment.ALIGNED, Fraction(1, 2), 24),
        (SolidKind.TETRAHEDRON, Alignment.OPPOSED, Fraction(1, 2), 24),
        (SolidKind.TETRAHEDRON, Alignment.OPPOSED, 1, 48),
        (SolidKind.OCTAHEDRON, Alignment.ALIGNED, Fraction(2), 48),
        (SolidKind.ICOSAHEDRON, Alignment.ALIGNED, TAU, 120),
    ],
)
def test_orthogonal_stabilizer(base, alignment, lam, order):
    assert len(orthogonal_stabilizer(_config_points(base, alignment, lam))) == order


def test_synthetic_antipodal_edge():
    p, q = vec(1, 2, 3), vec(1, 0, 0)
    coords = [p, vneg(p), q, vec(2, 4, 6)]
    assert antipodal_edges(coords, [(0, 1), (0, 2), (0, 3)]) == [(0, 1)]


def test_no_antipodal_edges_in_families(families):
    from index2poly.analysis import no_antipodal_edges

    assert all(no_antipodal_edges(f.polyhedron) for f in families)


def test_planarity_polynomials_vanish_at_the_planar_ratio(by_id):
    poly = by_id["ico1-hrsr"].polyhedron
    polys = planarity_polynomials(poly)
    assert polys and all(not peval(p, TAU) for p in polys)
    assert any(peval(p, Fraction(1, 2)) for p in polys)
    assert all(planarity(poly, TAU))
    assert not any(planarity(poly, Fraction(1, 2)))


def test_planar_lambda_values(by_id):
    assert find_planar_lambda(by_id["ico1-hrsr"].polyhedron) == TAU
    assert find_planar_lambda(by_id["ico1-hrsl"].polyhedron) == 2 * TAU + 1
    assert find_planar_lambda(by_id["ico2-hrsl"].polyhedron) is None
    # a cube is planar at lam = 1, which is excluded from the family
    assert find_planar_lambda(by_id["tetO-rr"].polyhedron) is None
    assert all(planarity(by_id["tetO-rr"].polyhedron, 1))
