"""Platonic vertex sets, their edge-graph metrics, and the combinatorial
edge-length semantics of two-orbit vertex configurations.

A two-orbit polyhedron has vertices on a Platonic solid S and on a second
copy S' = lam*S (aligned) or S' = -lam*S (opposed, tetrahedron only).
Vertex ids are ``orbit * n + i`` where ``n = |S|``, orbit 0 is S and
orbit 1 is S', and ``i`` indexes the base vertex of S.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Optional

from .exactgeom import (
    ONE,
    Isometry,
    generate_point_group,
    TAU,
    TAU_INV,
    FieldElement,
    Vec3,
    dot,
    fe,
    vec,
    vneg,
    vscale,
    vsub,
)


class SolidKind(str, enum.Enum):
    TETRAHEDRON = "Tetrahedron"
    CUBE = "Cube"
    OCTAHEDRON = "Octahedron"
    DODECAHEDRON = "Dodecahedron"
    ICOSAHEDRON = "Icosahedron"

    @property
    def group_kind(self) -> str:
        return {
            SolidKind.TETRAHEDRON: "[3,3]",
            SolidKind.CUBE: "[3,4]",
            SolidKind.OCTAHEDRON: "[3,4]",
            SolidKind.DODECAHEDRON: "[3,5]",
            SolidKind.ICOSAHEDRON: "[3,5]",
        }[self]

    @property
    def short(self) -> str:
        return {
            SolidKind.TETRAHEDRON: "tet",
            SolidKind.CUBE: "cube",
            SolidKind.OCTAHEDRON: "oct",
            SolidKind.DODECAHEDRON: "dod",
            SolidKind.ICOSAHEDRON: "ico",
        }[self]


def _cyclic_perms(x, y, z):
    return [(x, y, z), (y, z, x), (z, x, y)]


def _raw_vertices(kind: SolidKind) -> list[Vec3]:
    signs = (1, -1)
    if kind is SolidKind.TETRAHEDRON:
        return [vec(a, b, c) for a, b, c in product(signs, repeat=3) if a * b * c == 1]
    if kind is SolidKind.CUBE:
        return [vec(a, b, c) for a, b, c in product(signs, repeat=3)]
    if kind is SolidKind.OCTAHEDRON:
        pts = []
        for axis in range(3):
            for s in signs:
                p = [0, 0, 0]
                p[axis] = s
                pts.append(vec(*p))
        return pts
    if kind is SolidKind.ICOSAHEDRON:
        pts = []
        for s1, s2 in product(signs, repeat=2):
            pts.extend(vec(*p) for p in _cyclic_perms(0, s1 * ONE, s2 * TAU))
        return pts
    if kind is SolidKind.DODECAHEDRON:
        pts = [vec(a, b, c) for a, b, c in product(signs, repeat=3)]
        for s1, s2 in product(signs, repeat=2):
            # dual-aligned with the icosahedron above, so one [3,5] group fixes both
            pts.extend(vec(*p) for p in _cyclic_perms(0, s1 * TAU, s2 * TAU_INV))
        return pts
    raise ValueError(kind)


def _sort_key(p: Vec3):
    return tuple(float(c) for c in p)


def _bfs_distances(adj: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    n = len(adj)
    rows = []
    for s in range(n):
        dist = [-1] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        rows.append(tuple(dist))
    return tuple(rows)


@dataclass(frozen=True)
class PointGraph:
    """Exact points with min-distance adjacency and BFS graph distances."""

    points: tuple
    adjacency: tuple
    distance: tuple

    @classmethod
    def from_points(cls, points) -> "PointGraph":
        points = tuple(points)
        n = len(points)
        d2 = [[dot(vsub(p, q), vsub(p, q)) for q in points] for p in points]
        nonzero = [d2[i][j] for i in range(n) for j in range(n) if i != j]
        m = min(nonzero)
        adj = tuple(tuple(j for j in range(n) if j != i and d2[i][j] == m) for i in range(n))
        return cls(points, adj, _bfs_distances([list(a) for a in adj]))

    def __len__(self) -> int:
        return len(self.points)

    @property
    def diameter(self) -> int:
        return max(max(row) for row in self.distance)

    def index(self, p: Vec3) -> int:
        return self._index[p]

    @cached_property
    def _index(self) -> dict:
        return {p: i for i, p in enumerate(self.points)}

    def antipode(self, i: int) -> Optional[int]:
        return self._index.get(vneg(self.points[i]))

    def distance_spectrum(self, i: int = 0) -> list[int]:
        row = self.distance[i]
        return [row.count(k) for k in range(max(row) + 1)]


@lru_cache(maxsize=None)
def solid(kind: SolidKind) -> PointGraph:
    return PointGraph.from_points(sorted(_raw_vertices(kind), key=_sort_key))


@lru_cache(maxsize=None)
def group_action(kind: SolidKind) -> tuple[tuple[Isometry, tuple[int, ...]], ...]:
    """Each element of the full point group with its permutation of the
    vertices of ``kind``."""
    g = solid(kind)
    out = []
    for m in generate_point_group(kind.group_kind).elements:
        out.append((m, tuple(g.index(m.apply(p)) for p in g.points)))
    return tuple(out)


def valency(kind: SolidKind) -> int:
    return len(solid(kind).adjacency[0])


class Alignment(str, enum.Enum):
    ALIGNED = "aligned"
    OPPOSED = "opposed"


@dataclass(frozen=True)
class VertexConfiguration:
    """Base solid S, alignment of the second orbit, combinatorial edge
    length and orbit ratio ``lam``.  ``lam=None`` means generic."""

    base: SolidKind
    alignment: Alignment = Alignment.ALIGNED
    edge_length: int = 1
    lam: Optional[FieldElement] = None

    def __post_init__(self):
        if self.alignment is Alignment.OPPOSED and self.base is not SolidKind.TETRAHEDRON:
            raise ValueError("opposed alignment is only defined for the tetrahedron")
        if self.edge_length < 1:
            raise ValueError("edge length must be a positive integer")
        if self.lam is not None:
            lam = fe(self.lam)
            object.__setattr__(self, "lam", lam)
            if lam.sign() <= 0:
                raise ValueError("lambda must be positive")
            if lam == 1 and self.alignment is Alignment.ALIGNED:
                raise ValueError("lambda = 1 collapses the two aligned orbits")

    @property
    def n(self) -> int:
        return len(solid(self.base))

    @property
    def q(self) -> int:
        return valency(self.base)

    @property
    def opposed(self) -> bool:
        return self.alignment is Alignment.OPPOSED

    @property
    def key(self) -> tuple:
        """Combinatorial key, independent of lambda."""
        return (self.base, self.alignment, self.edge_length)

    def with_lambda(self, lam) -> "VertexConfiguration":
        return VertexConfiguration(self.base, self.alignment, self.edge_length, lam)

    def generic(self) -> "VertexConfiguration":
        return VertexConfiguration(self.base, self.alignment, self.edge_length)

    def label(self) -> str:
        """Short prefix used in family ids: tetA, tetO, oct, dod1, ico2, ..."""
        if self.base is SolidKind.TETRAHEDRON:
            prefix = "tetO" if self.opposed else "tetA"
        else:
            prefix = self.base.short
        if self.base in (SolidKind.TETRAHEDRON, SolidKind.OCTAHEDRON) and self.edge_length == 1:
            return prefix
        return f"{prefix}{self.edge_length}"

    def __str__(self) -> str:
        return f"{self.base.value}/{self.alignment.value}/d={self.edge_length}"

    # -- labels -----------------------------------------------------------
    def orbit_of(self, v: int) -> int:
        return v // self.n

    def base_of(self, v: int) -> int:
        return v % self.n

    def vertex_id(self, orbit: int, i: int) -> int:
        return orbit * self.n + i

    def coordinates(self, v: int, lam=None) -> Vec3:
        lam = self.lam if lam is None else fe(lam)
        p = solid(self.base).points[self.base_of(v)]
        if self.orbit_of(v) == 0:
            return p
        if lam is None:
            raise ValueError("a concrete lambda is needed for coordinates")
        return vscale(-lam if self.opposed else lam, p)


@dataclass(frozen=True)
class Frame:
    """Reference points on the circumsphere of S onto which vertices project,
    with the graph giving combinatorial distances."""

    graph: PointGraph
    n: int
    opposed: bool

    def project(self, v: int) -> int:
        orbit, i = divmod(v, self.n)
        if orbit == 1 and self.opposed:
            return self.n + i
        return i

    def point(self, v: int) -> Vec3:
        return self.graph.points[self.project(v)]


@lru_cache(maxsize=None)
def frame(base: SolidKind, alignment: Alignment) -> Frame:
    s = solid(base)
    if alignment is Alignment.ALIGNED:
        return Frame(s, len(s), False)
    # S together with -S, in that order: the cube for the tetrahedron
    pts = list(s.points) + [vneg(p) for p in s.points]
    return Frame(PointGraph.from_points(pts), len(s), True)


def comb_distance(u: int, v: int, cfg: VertexConfiguration) -> int:
    """Combinatorial distance between two vertex ids of the configuration."""
    fr = frame(cfg.base, cfg.alignment)
    return fr.graph.distance[fr.project(u)][fr.project(v)]


def is_antipodal(u: int, v: int, cfg: VertexConfiguration) -> bool:
    fr = frame(cfg.base, cfg.alignment)
    return fr.point(u) == vneg(fr.point(v))


def neighbours(v: int, cfg: VertexConfiguration) -> tuple[int, ...]:
    """Vertices of the other orbit at combinatorial distance ``edge_length``."""
    return _neighbours(v, cfg.key)


@lru_cache(maxsize=None)
def _neighbours(v: int, key: tuple) -> tuple[int, ...]:
    cfg = VertexConfiguration(*key)
    other = 1 - cfg.orbit_of(v)
    d = cfg.edge_length
    return tuple(
        cfg.vertex_id(other, j)
        for j in range(cfg.n)
        if comb_distance(v, cfg.vertex_id(other, j), cfg) == d
    )


def successor_candidates(u: int, v: int, cfg: VertexConfiguration) -> list[int]:
    """Possible next vertices after the directed edge u -> v."""
    return [w for w in neighbours(v, cfg) if w != u]


def candidate_edges(cfg: VertexConfiguration) -> list[tuple[int, int]]:
    """All directed S -> S' pairs at the configured combinatorial length."""
    return [(x, y) for x in range(cfg.n) for y in neighbours(x, cfg)]


@dataclass(frozen=True)
class Precheck:
    ok: bool
    reason: Optional[str] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def candidate_count_precheck(cfg: VertexConfiguration) -> Precheck:
    """Each vertex must offer exactly q-1 non-antipodal ways to continue."""
    want = cfg.q - 1
    for v in range(2 * cfg.n):
        nbrs = neighbours(v, cfg)
        for w in nbrs:
            if is_antipodal(v, w, cfg):
                return Precheck(False, "antipodal", f"vertex {v} reaches its antipode {w}")
        if not nbrs:
            return Precheck(False, "precheck-count", f"0 candidates != {want}")
        for u in nbrs:
            count = len(successor_candidates(u, v, cfg))
            if count != want:
                return Precheck(False, "precheck-count", f"{count} candidates != {want}")
    return Precheck(True)


ALL_CONFIGURATION_BASES = (
    (SolidKind.TETRAHEDRON, Alignment.ALIGNED),
    (SolidKind.TETRAHEDRON, Alignment.OPPOSED),
    (SolidKind.OCTAHEDRON, Alignment.ALIGNED),
    (SolidKind.CUBE, Alignment.ALIGNED),
    (SolidKind.DODECAHEDRON, Alignment.ALIGNED),
    (SolidKind.ICOSAHEDRON, Alignment.ALIGNED),
)


def all_configurations() -> list[VertexConfiguration]:
    """Every (S, alignment, d) with d up to the diameter of the frame graph."""
    out = []
    for base, alignment in ALL_CONFIGURATION_BASES:
        diam = frame(base, alignment).graph.diameter
        for d in range(1, diam + 1):
            out.append(VertexConfiguration(base, alignment, d))
    return out
