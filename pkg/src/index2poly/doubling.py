"""The 18 finite regular polyhedra of index 1 and the doubling operator.

Doubling takes an index-1 polyhedron Q with vertex set V and builds a
polyhedron on V and a scaled copy V' of it: every edge {v0, v1} of Q becomes
the two edges {v0, v1'} and {v0', v1}.  A face of even length p splits into
two faces of length p, a face of odd length becomes one face of length 2p
that runs around the original boundary twice.

Q's whose edge graph is bipartite (the cube and its Petrie-dual) would fall
apart into a compound; they are instead mapped onto opposed tetrahedra by
sending the odd cube vertices to the second orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .exactgeom import dot, vneg
from .flagmap import FlagComplex, PolyhedronRejected, SchlafliData, canonical_cycle
from .solids import Alignment, SolidKind, VertexConfiguration, group_action, solid
from .tracer import GeometricPolyhedron, single_orbit_faces

# dual solid whose vertex directions are the face normals
_FACE_NORMALS = {
    SolidKind.TETRAHEDRON: SolidKind.TETRAHEDRON,  # negated below
    SolidKind.CUBE: SolidKind.OCTAHEDRON,
    SolidKind.OCTAHEDRON: SolidKind.CUBE,
    SolidKind.DODECAHEDRON: SolidKind.ICOSAHEDRON,
    SolidKind.ICOSAHEDRON: SolidKind.DODECAHEDRON,
}

PLATONIC_NAMES = {
    SolidKind.TETRAHEDRON: "Tetrahedron",
    SolidKind.CUBE: "Cube",
    SolidKind.OCTAHEDRON: "Octahedron",
    SolidKind.DODECAHEDRON: "Dodecahedron",
    SolidKind.ICOSAHEDRON: "Icosahedron",
}

# (name, vertex solid, combinatorial edge length, uniform turn symbol)
KEPLER_POINSOT = (
    ("Small Stellated Dodecahedron", SolidKind.ICOSAHEDRON, 2, "hr"),
    ("Great Dodecahedron", SolidKind.ICOSAHEDRON, 1, "sr"),
    ("Great Icosahedron", SolidKind.ICOSAHEDRON, 2, "sr"),
    ("Great Stellated Dodecahedron", SolidKind.DODECAHEDRON, 4, "r"),
)


@dataclass
class Index1Polyhedron:
    name: str
    solid: SolidKind
    faces: tuple
    complex: FlagComplex
    schlafli: SchlafliData
    edge_length: int = 1

    @property
    def coordinates(self) -> tuple:
        return solid(self.solid).points

    @property
    def is_petrie_dual(self) -> bool:
        return self.name.startswith("Petrie-dual of ")


def platonic_faces(kind: SolidKind) -> list[tuple[int, ...]]:
    """Faces of a convex Platonic solid from exact support planes."""
    g = solid(kind)
    normals = solid(_FACE_NORMALS[kind]).points
    if kind is SolidKind.TETRAHEDRON:
        normals = [vneg(p) for p in normals]
    faces = []
    for nrm in normals:
        heights = [dot(nrm, p) for p in g.points]
        top = max(heights)
        members = [i for i, h in enumerate(heights) if h == top]
        # walk the boundary along solid edges
        cycle = [members[0]]
        while len(cycle) < len(members):
            cur = cycle[-1]
            nxt = [j for j in g.adjacency[cur] if j in members and j not in cycle]
            cycle.append(nxt[0])
        faces.append(tuple(cycle))
    return faces


def _symmetry_order(kind: SolidKind, faces) -> int:
    keys = {canonical_cycle(f) for f in faces}
    count = 0
    for _, perm in group_action(kind):
        if all(canonical_cycle([perm[v] for v in f]) in keys for f in keys):
            count += 1
    return count


def _make(name, kind, faces, edge_length) -> Index1Polyhedron:
    c = FlagComplex.from_faces(len(solid(kind)), faces)
    if not c.is_regular():
        raise RuntimeError(f"{name}: catalogue member is not combinatorially regular")
    order = _symmetry_order(kind, c.faces)
    if order != len(c):
        raise RuntimeError(f"{name}: {order} symmetries for {len(c)} flags; index is not 1")
    return Index1Polyhedron(name, kind, c.faces, c, c.schlafli(), edge_length)


@lru_cache(maxsize=None)
def catalogue() -> tuple[Index1Polyhedron, ...]:
    """The 5 Platonic solids, 4 Kepler-Poinsot polyhedra and their 9 Petrie-duals."""
    base = []
    for kind, name in PLATONIC_NAMES.items():
        base.append(_make(name, kind, platonic_faces(kind), 1))
    for name, kind, d, sym in KEPLER_POINSOT:
        base.append(_make(name, kind, single_orbit_faces(kind, d, (sym, sym)), d))
    duals = []
    for q in base:
        pd = q.complex.petrie_dual()
        duals.append(_make(f"Petrie-dual of {q.name}", q.solid, pd.faces, q.edge_length))
    return tuple(base + duals)


def by_name(name: str) -> Index1Polyhedron:
    for q in catalogue():
        if q.name.lower() == name.lower():
            return q
    raise KeyError(name)


def _is_bipartite(n: int, edges) -> bool:
    colour = [-1] * n
    adj = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    for s in range(n):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def _cube_to_opposed(q: Index1Polyhedron, lam) -> GeometricPolyhedron:
    cfg = VertexConfiguration(SolidKind.TETRAHEDRON, Alignment.OPPOSED, 1, lam)
    tet = solid(SolidKind.TETRAHEDRON)
    relabel = {}
    for c, p in enumerate(solid(SolidKind.CUBE).points):
        if p in tet._index:
            relabel[c] = tet.index(p)
        else:
            relabel[c] = cfg.n + tet.index(vneg(p))
    faces = [tuple(relabel[v] for v in f) for f in q.faces]
    c = FlagComplex.from_faces(2 * cfg.n, faces)
    return GeometricPolyhedron(cfg, c.faces, c, None, f"doubled {q.name}", {"generator": q.name})


def double(q: Index1Polyhedron, lam=None) -> GeometricPolyhedron:
    """Index-2 polyhedron generated from ``q``; ``lam=None`` keeps the ratio generic."""
    if q.solid is SolidKind.CUBE:
        return _cube_to_opposed(q, lam)
    n = len(solid(q.solid))
    if _is_bipartite(n, q.complex.edges):
        raise PolyhedronRejected("disconnected", f"{q.name} has a bipartite edge graph; doubling gives a compound")
    cfg = VertexConfiguration(q.solid, Alignment.ALIGNED, q.edge_length, lam)
    faces = []
    for f in q.faces:
        p = len(f)
        if p % 2 == 0:
            for start in (0, 1):
                faces.append(tuple(f[k] + n * ((k + start) % 2) for k in range(p)))
        else:
            faces.append(tuple(f[k % p] + n * (k % 2) for k in range(2 * p)))
    c = FlagComplex.from_faces(2 * n, faces)
    return GeometricPolyhedron(cfg, c.faces, c, None, f"doubled {q.name}", {"generator": q.name})


def generator_for(poly: GeometricPolyhedron) -> Optional[Index1Polyhedron]:
    """Catalogue member whose doubling has exactly the faces of ``poly``.

    The second orbit may play either role, so the label swap is tried too.
    """
    cfg = poly.configuration
    target = poly.face_keys
    n = cfg.n
    swapped = frozenset(_swap_key(k, n) for k in target)
    for q in catalogue():
        try:
            d = double(q)
        except PolyhedronRejected:
            continue
        if d.configuration.key != cfg.key:
            continue
        if d.face_keys == target or d.face_keys == swapped:
            return q
    return None


def _swap_key(key, n):
    return canonical_cycle(tuple((v + n) % (2 * n) for v in key))
