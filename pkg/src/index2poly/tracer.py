"""Face shapes: turn classification on the reference sphere, face tracing
and assembly of candidate two-orbit polyhedra.

Turns are classified by projecting vertices radially onto the circumsphere
of S.  At the projected current vertex ``n`` the incoming and outgoing
great-circle arcs have tangents ``t_in`` and ``t_out``; the side of the
turn is the sign of ``det(n, t_in, t_out)`` (negative is a right turn seen
from outside) and harder turns have smaller ``cos(t_in, t_out)``.  All of it
is exact over Q(sqrt 5).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional, Sequence

from .exactgeom import FieldElement, Vec3, det3, dot, fe, vneg, vscale, vsub
from .flagmap import FlagComplex, PolyhedronRejected, canonical_cycle
from .solids import (
    PointGraph,
    SolidKind,
    VertexConfiguration,
    candidate_edges,
    frame,
    solid,
    successor_candidates,
)

ALPHABETS = {
    2: ("r", "l"),
    3: ("r", "l", "f"),
    4: ("hr", "sr", "sl", "hl"),
}
REVERSED = {"r": "l", "l": "r", "f": "f", "hr": "hl", "hl": "hr", "sr": "sl", "sl": "sr"}


class AmbiguousTurn(RuntimeError):
    pass


def reverse_symbol(s: str) -> str:
    return REVERSED[s]


def alphabet_for(cfg: VertexConfiguration) -> tuple[str, ...]:
    return ALPHABETS[cfg.q - 1]


def _tangent(at: Vec3, toward: Vec3) -> Vec3:
    # component of ``toward`` orthogonal to ``at``, scaled by |at|^2
    return vsub(vscale(dot(at, at), toward), vscale(dot(toward, at), at))


def _cos_less(dot_a: FieldElement, norm_a: FieldElement, dot_b: FieldElement, norm_b: FieldElement) -> int:
    """Compare dot_a/sqrt(norm_a) with dot_b/sqrt(norm_b): -1, 0 or 1."""
    sa, sb = dot_a.sign(), dot_b.sign()
    if sa != sb:
        return -1 if sa < sb else 1
    if sa == 0:
        return 0
    lhs = dot_a * dot_a * norm_b
    rhs = dot_b * dot_b * norm_a
    c = (lhs - rhs).sign()
    return c if sa > 0 else -c


def rank_turns(prev: Vec3, cur: Vec3, candidates: Sequence[Vec3]) -> list[str]:
    """Turn symbols for each candidate continuation of the arc prev -> cur."""
    t_in = vneg(_tangent(cur, prev))
    rights, lefts, forward = [], [], []
    info = []
    for k, w in enumerate(candidates):
        t_out = _tangent(cur, w)
        side = det3(cur, t_in, t_out).sign()
        d = dot(t_in, t_out)
        info.append((d, dot(t_out, t_out)))
        if side < 0:
            rights.append(k)
        elif side > 0:
            lefts.append(k)
        elif d.sign() > 0:
            forward.append(k)
        else:
            raise AmbiguousTurn("candidate doubles back along the incoming arc")

    def order(ks):
        # hardest (smallest cosine) first
        ks = list(ks)
        for i in range(len(ks)):
            for j in range(i + 1, len(ks)):
                c = _cos_less(*info[ks[i]], *info[ks[j]])
                if c == 0:
                    raise AmbiguousTurn("ambiguous ordering")
                if c > 0:
                    ks[i], ks[j] = ks[j], ks[i]
        return ks

    rights, lefts = order(rights), order(lefts)
    symbols = [""] * len(candidates)
    pattern = (len(rights), len(forward), len(lefts))
    if pattern == (1, 0, 1):
        symbols[rights[0]], symbols[lefts[0]] = "r", "l"
    elif pattern == (1, 1, 1):
        symbols[rights[0]], symbols[forward[0]], symbols[lefts[0]] = "r", "f", "l"
    elif pattern == (2, 0, 2):
        symbols[rights[0]], symbols[rights[1]] = "hr", "sr"
        symbols[lefts[0]], symbols[lefts[1]] = "hl", "sl"
    else:
        raise AmbiguousTurn(f"unsupported turn pattern (right, forward, left) = {pattern}")
    return symbols


@lru_cache(maxsize=None)
def turn_table(graph: PointGraph, d: int) -> dict:
    """(i, j) -> {symbol: k} for frame points with dist(i,j) = dist(j,k) = d."""
    table = {}
    dist = graph.distance
    n = len(graph)
    for j in range(n):
        ring = [k for k in range(n) if dist[j][k] == d]
        for i in ring:
            cands = [k for k in ring if k != i]
            syms = rank_turns(graph.points[i], graph.points[j], [graph.points[k] for k in cands])
            table[(i, j)] = dict(zip(syms, cands))
    return table


def _config_table(cfg: VertexConfiguration) -> dict:
    fr = frame(cfg.base, cfg.alignment)
    return turn_table(fr.graph, cfg.edge_length)


def _unproject(cfg: VertexConfiguration, orbit: int, k: int) -> int:
    if cfg.opposed:
        return k  # frame order is S then -S, matching vertex ids
    return cfg.vertex_id(orbit, k)


def classify_turn(u: int, v: int, w: int, cfg: VertexConfiguration) -> str:
    """Turn symbol of the step u -> v -> w in the configuration."""
    if w not in successor_candidates(u, v, cfg):
        raise ValueError(f"{w} is not a successor candidate of {u} -> {v}")
    fr = frame(cfg.base, cfg.alignment)
    row = _config_table(cfg)[(fr.project(u), fr.project(v))]
    target = fr.project(w)
    for sym, k in row.items():
        if k == target:
            return sym
    raise AssertionError("candidate missing from turn table")


def next_vertex(u: int, v: int, symbol: str, cfg: VertexConfiguration) -> int:
    fr = frame(cfg.base, cfg.alignment)
    row = _config_table(cfg)[(fr.project(u), fr.project(v))]
    if symbol not in row:
        raise ValueError(f"turn {symbol!r} not available (alphabet {sorted(row)})")
    return _unproject(cfg, 1 - cfg.orbit_of(v), row[symbol])


def trace_face(start: tuple[int, int], shape: Sequence[str], cfg: VertexConfiguration) -> tuple[int, ...]:
    """Vertex cycle of the face through the directed edge ``start``.

    ``shape[0]`` is applied at vertices in the orbit of the head of the
    starting edge, ``shape[1]`` at the other orbit.
    """
    a, b = shape
    x, y = start
    head_orbit = cfg.orbit_of(y)
    bound = 4 * cfg.n * cfg.q + 2
    cycle = [x]
    prev, cur = x, y
    for _ in range(bound):
        cycle.append(cur)
        sym = a if cfg.orbit_of(cur) == head_orbit else b
        nxt = next_vertex(prev, cur, sym, cfg)
        prev, cur = cur, nxt
        if (prev, cur) == (x, y):
            cycle.pop()  # last appended vertex is x again
            return tuple(cycle)
    raise RuntimeError("face trace did not close")


def trace_single_orbit(kind: SolidKind, d: int, shape: Sequence[str], start: tuple[int, int]) -> tuple[int, ...]:
    """Face trace on the vertices of one solid, symbols alternating by step."""
    graph = solid(kind)
    table = turn_table(graph, d)
    x, y = start
    cycle = [x]
    prev, cur = x, y
    step = 0
    period = 1 if shape[0] == shape[1] else 2
    for _ in range(4 * len(graph) ** 2):
        cycle.append(cur)
        nxt = table[(prev, cur)][shape[step % 2]]
        prev, cur = cur, nxt
        step += 1
        if (prev, cur) == (x, y) and step % period == 0:
            cycle.pop()
            return tuple(cycle)
    raise RuntimeError("face trace did not close")


def single_orbit_faces(kind: SolidKind, d: int, shape: Sequence[str]) -> list[tuple[int, ...]]:
    graph = solid(kind)
    seen = {}
    for i in range(len(graph)):
        for j in range(len(graph)):
            if graph.distance[i][j] == d:
                f = trace_single_orbit(kind, d, shape, (i, j))
                seen.setdefault(canonical_cycle(f), f)
    return [seen[k] for k in sorted(seen)]


@dataclass
class GeometricPolyhedron:
    """Two-orbit polyhedron on labelled vertices; ``configuration.lam`` may be
    None (generic family member)."""

    configuration: VertexConfiguration
    faces: tuple
    complex: FlagComplex
    shape: Optional[tuple[str, str]] = None
    name: str = ""
    meta: dict = field(default_factory=dict)

    @property
    def n_vertices(self) -> int:
        return 2 * self.configuration.n

    @property
    def face_vector(self) -> tuple[int, int, int]:
        return self.complex.face_vector

    @property
    def edges(self) -> tuple:
        return self.complex.edges

    def coordinates(self, lam=None) -> list[Vec3]:
        cfg = self.configuration
        lam = cfg.lam if lam is None else fe(lam)
        return [cfg.coordinates(v, lam) for v in range(self.n_vertices)]

    def at(self, lam) -> "GeometricPolyhedron":
        return GeometricPolyhedron(
            self.configuration.with_lambda(lam), self.faces, self.complex, self.shape, self.name, dict(self.meta)
        )

    @property
    def face_keys(self) -> frozenset:
        return self.complex.face_keys


def traced_faces(cfg: VertexConfiguration, shape: Sequence[str]) -> list[tuple[int, ...]]:
    seen = {}
    for start in candidate_edges(cfg):
        f = trace_face(start, shape, cfg)
        seen.setdefault(canonical_cycle(f), f)
    return [seen[k] for k in sorted(seen)]


def assemble(cfg: VertexConfiguration, shape: Sequence[str]) -> GeometricPolyhedron:
    """Trace from every directed S -> S' edge and validate the result.

    Raises :class:`PolyhedronRejected` when the faces do not form a
    polyhedron.
    """
    faces = traced_faces(cfg, shape)
    expected = set(frozenset(e) for e in candidate_edges(cfg))
    covered = set()
    for f in faces:
        for k in range(len(f)):
            covered.add(frozenset((f[k], f[(k + 1) % len(f)])))
    if covered != expected:
        raise PolyhedronRejected("edge-coverage", f"{len(covered)} of {len(expected)} edges covered")
    complex_ = FlagComplex.from_faces(2 * cfg.n, faces)
    return GeometricPolyhedron(cfg, tuple(complex_.faces), complex_, tuple(shape))
