"""Geometric symmetry of two-orbit polyhedra: symmetry group, index, orbit
counts, face stabilizers and the search for planar-faced family members.

With a generic ratio lam an isometry acts on vertex labels: it must send
each orbit to itself, and vertex ``orbit*n + i`` goes to
``orbit*n + j`` where the isometry maps base point i to base point j.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Optional, Sequence

import numpy as np

from .exactgeom import (
    ONE,
    ZERO,
    FieldElement,
    Isometry,
    PointGroup,
    Vec3,
    cross,
    det3,
    dot,
    generate_point_group,
    is_zero_vec,
    vneg,
)
from .flagmap import FlagComplex, PolyhedronRejected, canonical_cycle
from .solids import group_action, solid
from .tracer import GeometricPolyhedron

# -- symmetry group -----------------------------------------------------------


def ambient_group(poly: GeometricPolyhedron) -> PointGroup:
    return generate_point_group(poly.configuration.base.group_kind)


def vertex_permutation(g: Isometry, poly: GeometricPolyhedron, lam=None) -> Optional[tuple[int, ...]]:
    """Action of ``g`` on vertex labels, or None if it does not preserve the
    vertex set.  With ``lam`` given the action is computed from coordinates."""
    cfg = poly.configuration
    if lam is None:
        base = solid(cfg.base)
        images = [base._index.get(g.apply(p)) for p in base.points]
        if None in images:
            return None
        return _label_perm(cfg, images)
    coords = poly.coordinates(lam)
    where = {p: i for i, p in enumerate(coords)}
    perm = []
    for p in coords:
        j = where.get(g.apply(p))
        if j is None:
            return None
        perm.append(j)
    return tuple(perm)


def _label_perm(cfg, images) -> tuple[int, ...]:
    n = cfg.n
    return tuple(images[v % n] + n * (v // n) for v in range(2 * n))


def _maps_faces(perm, keys) -> bool:
    return all(canonical_cycle([perm[v] for v in k]) in keys for k in keys)


def symmetries(poly: GeometricPolyhedron, lam=None) -> list[tuple[Isometry, tuple[int, ...]]]:
    """Elements of the ambient Platonic group that map ``poly`` to itself,
    each paired with its vertex permutation."""
    keys = poly.face_keys
    out = []
    if lam is None:
        candidates = [(g, _label_perm(poly.configuration, images)) for g, images in group_action(poly.configuration.base)]
    else:
        candidates = [(g, vertex_permutation(g, poly, lam)) for g in ambient_group(poly).elements]
    for g, perm in candidates:
        if perm is not None and _maps_faces(perm, keys):
            out.append((g, perm))
    return out


def flag_permutation(c: FlagComplex, perm: Sequence[int]) -> tuple[int, ...]:
    """Flag permutation induced by a vertex permutation that preserves faces."""
    edge_index = {e: i for i, e in enumerate(c.edges)}
    face_index = {canonical_cycle(f): i for i, f in enumerate(c.faces)}
    flag_index = c.flag_index()
    out = []
    for v, e, f in c.flags:
        a, b = c.edges[e]
        e2 = edge_index[tuple(sorted((perm[a], perm[b])))]
        f2 = face_index[canonical_cycle([perm[w] for w in c.faces[f]])]
        out.append(flag_index[(perm[v], e2, f2)])
    return tuple(out)


def _orbit_count(n: int, perms) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for x in range(n):
            a, b = find(x), find(p[x])
            if a != b:
                parent[a] = b
    return len({find(x) for x in range(n)})


def _element_order(g: Isometry) -> int:
    ident = Isometry.identity()
    h = g
    k = 1
    while h != ident:
        h = g @ h
        k += 1
        if k > 120:
            raise RuntimeError("element order exceeds the group order")
    return k


@dataclass
class OrbitCounts:
    vertices: int
    edges: int
    faces: int


@dataclass
class SymmetryReport:
    sym_group_order: int
    rot_subgroup_order: int
    aut_order: int
    index: Fraction
    flag_orbits: int
    orbits_G: OrbitCounts
    orbits_G_plus: OrbitCounts
    face_stabilizer: dict = field(default_factory=dict)
    full_platonic: bool = True

    def to_json(self) -> dict:
        d = asdict(self)
        d["index"] = str(self.index)
        return d


def _element_orbits(c: FlagComplex, perms) -> OrbitCounts:
    edge_index = {e: i for i, e in enumerate(c.edges)}
    face_index = {canonical_cycle(f): i for i, f in enumerate(c.faces)}
    vp, ep, fp = [], [], []
    for perm in perms:
        vp.append(perm)
        ep.append([edge_index[tuple(sorted((perm[a], perm[b])))] for a, b in c.edges])
        fp.append([face_index[canonical_cycle([perm[w] for w in f])] for f in c.faces])
    return OrbitCounts(
        _orbit_count(c.n_vertices, vp), _orbit_count(len(c.edges), ep), _orbit_count(len(c.faces), fp)
    )


def symmetry_group(poly: GeometricPolyhedron, lam=None) -> tuple[list, SymmetryReport]:
    syms = symmetries(poly, lam)
    c = poly.complex
    flag_perms = [flag_permutation(c, perm) for _, perm in syms]
    rot = [perm for g, perm in syms if g.is_proper]
    aut = len(c.automorphisms)
    report = SymmetryReport(
        sym_group_order=len(syms),
        rot_subgroup_order=len(rot),
        aut_order=aut,
        index=Fraction(aut, len(syms)),
        flag_orbits=_orbit_count(len(c), flag_perms),
        orbits_G=_element_orbits(c, [perm for _, perm in syms]),
        orbits_G_plus=_element_orbits(c, rot),
        full_platonic=len(syms) == ambient_group(poly).order,
    )
    report.face_stabilizer = face_stabilizer_shape(poly, syms)
    return syms, report


# -- face stabilizers -----------------------------------------------------------


def _cycle_action(face: tuple, perm) -> Optional[tuple[int, int]]:
    """How ``perm`` acts on the cycle ``face``: (shift, direction) or None."""
    p = len(face)
    img = [perm[v] for v in face]
    pos = {v: k for k, v in enumerate(face)}
    if img[0] not in pos:
        return None
    s = pos[img[0]]
    for direction in (1, -1):
        if all(img[k] == face[(s + direction * k) % p] for k in range(p)):
            return s, direction
    return None


def face_stabilizer(face: tuple, syms) -> list:
    out = []
    for g, perm in syms:
        act = _cycle_action(face, perm)
        if act is not None:
            out.append((g, perm, act))
    return out


def face_stabilizer_shape(poly: GeometricPolyhedron, syms) -> dict:
    face = poly.complex.faces[0]
    stab = face_stabilizer(face, syms)
    plus = [g for g, _, _ in stab if g.is_proper]
    orders = sorted({_element_order(g) for g in plus})
    cyclic = bool(plus) and max(orders) == len(plus)
    return {
        "p": len(face),
        "order": len(stab),
        "rotation_order": len(plus),
        "rotation_cyclic": cyclic,
        "improper_are_reflections": all(g.is_plane_reflection() for g, _, _ in stab if not g.is_proper),
    }


@dataclass
class StabilizerCheck:
    ok: bool
    witness: str = ""

    def __bool__(self) -> bool:
        return self.ok


def face_stabilizer_check(poly: GeometricPolyhedron, syms=None) -> StabilizerCheck:
    """G_F dihedral of order p with every mirror through two opposite
    vertices of F, and G_F+ cyclic of order p/2, for each face F."""
    if syms is None:
        syms = symmetries(poly)
    for face in poly.complex.faces:
        p = len(face)
        stab = face_stabilizer(face, syms)
        if len(stab) != p:
            return StabilizerCheck(False, f"face {face}: |G_F| = {len(stab)}, expected {p}")
        plus = [g for g, _, _ in stab if g.is_proper]
        if len(plus) != p // 2 or p % 2:
            return StabilizerCheck(False, f"face {face}: |G_F+| = {len(plus)}, expected {p // 2}")
        if max(_element_order(g) for g in plus) != p // 2:
            return StabilizerCheck(False, f"face {face}: G_F+ is not cyclic")
        for g, perm, (shift, direction) in stab:
            if g.is_proper:
                if direction != 1:
                    return StabilizerCheck(False, f"face {face}: a rotation reverses the boundary")
                continue
            if not g.is_plane_reflection():
                return StabilizerCheck(False, f"face {face}: improper element {g} is not a reflection")
            fixed = [v for v in face if perm[v] == v]
            if direction != -1 or len(fixed) != 2:
                return StabilizerCheck(False, f"face {face}: mirror {g} passes through an edge midpoint")
            k = face.index(fixed[0])
            if face[(k + p // 2) % p] != fixed[1]:
                return StabilizerCheck(False, f"face {face}: mirror {g} fixes non-opposite vertices")
    return StabilizerCheck(True)


# -- invariants tied to the rotation generators ------------------------------


def sigma2_squared_induced(poly: GeometricPolyhedron, syms=None) -> bool:
    """At every vertex the flag map (r1 r2)^2 is realised by a symmetry, and
    so is r1 r2 itself when q is odd."""
    if syms is None:
        syms = symmetries(poly)
    c = poly.complex
    perms = [flag_permutation(c, perm) for _, perm in syms]
    q = c.schlafli().q
    done = set()
    for x in range(len(c)):
        v = c.vertex_of(x)
        if v in done:
            continue
        done.add(v)
        y = c.r1[c.r2[x]]
        targets = [c.r1[c.r2[y]]]
        if q % 2:
            targets.append(y)
        for t in targets:
            if not any(fp[x] == t for fp in perms):
                return False
    return True


def petrie_dual_same_group(poly: GeometricPolyhedron, syms=None) -> Optional[bool]:
    """Whether the Petrie-dual has the same symmetry group; None when the
    Petrie polygons do not form a polyhedron."""
    if syms is None:
        syms = symmetries(poly)
    try:
        pd = poly.complex.petrie_dual()
    except PolyhedronRejected:
        return None
    other = GeometricPolyhedron(poly.configuration, pd.faces, pd, None, poly.name + " (Petrie-dual)")
    mine = {g for g, _ in syms}
    theirs = {g for g, _ in symmetries(other)}
    return mine == theirs


# -- vertex-set stabilizer in O(3) ---------------------------------------------


def _inverse3(rows):
    a = rows
    det = det3(a[0], a[1], a[2])
    if not det:
        return None
    cof = [cross(a[1], a[2]), cross(a[2], a[0]), cross(a[0], a[1])]
    # inverse of the matrix with rows a is (1/det) * [cof columns]
    return [[cof[j][i] / det for j in range(3)] for i in range(3)]


def orthogonal_stabilizer(points: Sequence[Vec3]) -> list[Isometry]:
    """All orthogonal maps sending the finite point set to itself.

    An orthogonal map is fixed by the images of three independent points, so
    image triples with matching Gram entries are tried exhaustively.
    """
    pts = list(points)
    pset = set(pts)
    basis = None
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            for k in range(j + 1, len(pts)):
                if det3(pts[i], pts[j], pts[k]):
                    basis = (pts[i], pts[j], pts[k])
                    break
            if basis:
                break
        if basis:
            break
    if basis is None:
        raise ValueError("point set spans less than three dimensions")
    # columns of P are the basis points; M = Q P^-1
    p_rows = [[basis[c][r] for c in range(3)] for r in range(3)]
    p_inv = _inverse3([tuple(r) for r in p_rows])
    gram = [[dot(x, y) for y in basis] for x in basis]
    out = []
    for trip in permutations(pts, 3):
        if any(dot(trip[i], trip[j]) != gram[i][j] for i in range(3) for j in range(3)):
            continue
        q_rows = [[trip[c][r] for c in range(3)] for r in range(3)]
        m = [[sum((q_rows[r][k] * p_inv[k][c] for k in range(3)), ZERO) for c in range(3)] for r in range(3)]
        g = Isometry.from_rows(m)
        if g.is_orthogonal() and all(g.apply(p) in pset for p in pts):
            out.append(g)
    return out


# -- antipodal edges ------------------------------------------------------------------


def antipodal_edges(coords: Sequence[Vec3], edges) -> list[tuple[int, int]]:
    bad = []
    for a, b in edges:
        u, v = coords[a], coords[b]
        if is_zero_vec(cross(u, v)) and dot(u, v).sign() < 0:
            bad.append((a, b))
    return bad


def no_antipodal_edges(poly: GeometricPolyhedron, lam=None) -> bool:
    """No edge joins two points on opposite rays from the centre."""
    cfg = poly.configuration
    if lam is None and cfg.lam is None:
        # directions do not depend on the (positive) ratio
        coords = []
        for v in range(poly.n_vertices):
            p = solid(cfg.base).points[cfg.base_of(v)]
            coords.append(vneg(p) if cfg.opposed and cfg.orbit_of(v) else p)
    else:
        coords = poly.coordinates(lam)
    return not antipodal_edges(coords, poly.edges)


# -- planarity ---------------------------------------------------------------------

Poly = list  # coefficients in lam, lowest degree first


def _padd(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else ZERO) + (b[i] if i < len(b) else ZERO) for i in range(n)]


def _pneg(a: Poly) -> Poly:
    return [-x for x in a]


def _pmul(a: Poly, b: Poly) -> Poly:
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return out


def _trim(a: Poly) -> Poly:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def peval(a: Poly, x) -> FieldElement:
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _vertex_poly(poly: GeometricPolyhedron, v: int) -> list[Poly]:
    cfg = poly.configuration
    p = solid(cfg.base).points[cfg.base_of(v)]
    if cfg.orbit_of(v) == 0:
        return [[c] for c in p]
    sign = -1 if cfg.opposed else 1
    return [[ZERO, sign * c] for c in p]


def _det_poly(u, v, w) -> Poly:
    def sub(x, y):
        return _padd(x, _pneg(y))

    terms = [
        _pmul(u[0], _padd(_pmul(v[1], w[2]), _pneg(_pmul(v[2], w[1])))),
        _pmul(u[1], _padd(_pmul(v[2], w[0]), _pneg(_pmul(v[0], w[2])))),
        _pmul(u[2], _padd(_pmul(v[0], w[1]), _pneg(_pmul(v[1], w[0])))),
    ]
    out = [ZERO]
    for t in terms:
        out = _padd(out, t)
    return _trim(out)


def planarity_polynomials(poly: GeometricPolyhedron) -> list[Poly]:
    """det(w2-w1, w3-w1, wk-w1) as polynomials in lam, for every face."""
    out = []
    for face in poly.complex.faces:
        w = [_vertex_poly(poly, v) for v in face]
        d1 = [_padd(w[1][i], _pneg(w[0][i])) for i in range(3)]
        d2 = [_padd(w[2][i], _pneg(w[0][i])) for i in range(3)]
        for k in range(3, len(face)):
            dk = [_padd(w[k][i], _pneg(w[0][i])) for i in range(3)]
            out.append(_det_poly(d1, d2, dk))
    return out


def planarity(poly: GeometricPolyhedron, lam=None) -> list[bool]:
    """Per face: are all its vertices coplanar at this ratio?"""
    coords = poly.coordinates(lam)
    res = []
    for face in poly.complex.faces:
        w = [coords[v] for v in face]
        a = tuple(x - y for x, y in zip(w[1], w[0]))
        b = tuple(x - y for x, y in zip(w[2], w[0]))
        res.append(all(not det3(a, b, tuple(x - y for x, y in zip(w[k], w[0]))) for k in range(3, len(face))))
    return res


def _float_roots(coeffs) -> list[complex]:
    c = [float(x) for x in reversed(coeffs)]
    if len(c) < 2:
        return []
    return list(np.roots(c))


@dataclass
class PlanarSearch:
    lam: Optional[FieldElement]
    numeric: list
    message: str = ""


NUMERIC_TOL = 1e-10
MAX_DENOMINATOR = 10**6
SQRT5 = math.sqrt(5.0)


def planar_lambda_search(poly: GeometricPolyhedron) -> PlanarSearch:
    polys = [p for p in planarity_polynomials(poly) if p]
    if not polys:
        return PlanarSearch(None, [], "faces are planar for every ratio")
    polys.sort(key=len)
    primary = polys[0]

    def small(pl, x):
        val = sum(float(c) * x**i for i, c in enumerate(pl))
        scale = sum(abs(float(c)) * abs(x) ** i for i, c in enumerate(pl))
        return abs(val) <= NUMERIC_TOL * max(scale, 1.0)

    numeric = []
    for r in _float_roots(primary):
        if abs(r.imag) > 1e-9 or r.real <= 0:
            continue
        x = r.real
        if abs(x - 1.0) < 1e-9:
            continue  # lam = 1 is not a family member
        if all(small(pl, x) for pl in polys):
            numeric.append(x)
    if not numeric:
        return PlanarSearch(None, [], "no positive common root")

    conj = [c.conjugate() for c in primary]
    partners = [r.real for r in _float_roots(conj) if abs(r.imag) <= 1e-9]
    found = set()
    for x in numeric:
        for y in partners or [x]:
            a = Fraction((x + y) / 2).limit_denominator(MAX_DENOMINATOR)
            b = Fraction((x - y) / (2 * SQRT5)).limit_denominator(MAX_DENOMINATOR)
            cand = FieldElement(a, b)
            if cand.sign() > 0 and cand != ONE and all(not peval(pl, cand) for pl in polys):
                found.add(cand)
    if not found:
        return PlanarSearch(None, numeric, f"no exact planar lambda in Q(sqrt 5); numeric witness {numeric}")
    if len(found) > 1:
        return PlanarSearch(None, numeric, f"several planar ratios {sorted(found)}")
    return PlanarSearch(found.pop(), numeric, "verified exactly")


def find_planar_lambda(poly: GeometricPolyhedron) -> Optional[FieldElement]:
    return planar_lambda_search(poly).lam
