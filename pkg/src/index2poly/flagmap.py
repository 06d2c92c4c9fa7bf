"""Abstract polyhedra as flag complexes.

A complex is built from a vertex count and a list of face cycles.  Each face
of length p contributes 2p flags ``(face, position, side)``: the edge joins
positions ``position`` and ``position + 1`` and the flag's vertex sits at
``position + side``.  The three adjacency involutions r0, r1, r2 change the
vertex, the edge and the face of a flag respectively.
"""

from __future__ import annotations

import json
import math
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence


class PolyhedronRejected(ValueError):
    """Face data that does not form a polyhedron.

    ``reason`` is a short machine-readable code (``edge-degree``,
    ``disconnected``, ``vertex-figure``, ``degenerate-face``, ...).
    """

    def __init__(self, reason: str, detail: str = "") -> None:
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason
        self.detail = detail


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Lexicographic minimum over rotations and the reversed cycle."""
    seq = tuple(cycle)
    n = len(seq)
    best = None
    for s in (seq, seq[::-1]):
        for k in range(n):
            rot = s[k:] + s[:k]
            if best is None or rot < best:
                best = rot
    return best


def _perm_order(perm: Sequence[int]) -> int:
    seen = [False] * len(perm)
    order = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            length += 1
        order = order * length // math.gcd(order, length)
    return order


@dataclass(frozen=True)
class SchlafliData:
    p: int
    q: int
    petrie: int
    face_vector: tuple[int, int, int]
    orientable: bool
    genus: int  # cross-cap number when non-orientable

    @property
    def euler_characteristic(self) -> int:
        f0, f1, f2 = self.face_vector
        return f0 - f1 + f2

    @property
    def type_symbol(self) -> str:
        return f"{{{self.p},{self.q}}}_{self.petrie}"


class FlagComplex:
    """Flags of a polyhedral map with the involutions r0, r1, r2.

    Use :meth:`from_faces` to construct one; it validates the polyhedron
    conditions and raises :class:`PolyhedronRejected` otherwise.
    """

    def __init__(self, n_vertices, faces, edges, flags, r0, r1, r2):
        self.n_vertices = n_vertices
        self.faces = faces
        self.edges = edges
        self.flags = flags
        self.r0 = r0
        self.r1 = r1
        self.r2 = r2

    # -- construction -----------------------------------------------------
    @classmethod
    def from_faces(cls, n_vertices: int, faces: Sequence[Sequence[int]]) -> "FlagComplex":
        faces = tuple(tuple(f) for f in faces)
        if not faces:
            raise PolyhedronRejected("disconnected", "no faces")
        for fi, f in enumerate(faces):
            if len(f) < 3:
                raise PolyhedronRejected("degenerate-face", f"face {fi} has length {len(f)}")
            for k in range(len(f)):
                if f[k] == f[(k + 1) % len(f)]:
                    raise PolyhedronRejected("degenerate-face", f"face {fi} repeats vertex {f[k]}")

        occurrences: dict[frozenset, list[tuple[int, int]]] = defaultdict(list)
        for fi, f in enumerate(faces):
            p = len(f)
            for k in range(p):
                occurrences[frozenset((f[k], f[(k + 1) % p]))].append((fi, k))
        edges = sorted(occurrences, key=lambda e: tuple(sorted(e)))
        edge_index = {e: i for i, e in enumerate(edges)}

        _check_folded_corners(faces)
        _check_connected(n_vertices, faces, edges, occurrences)

        for e in edges:
            if len(occurrences[e]) != 2:
                raise PolyhedronRejected(
                    "edge-degree",
                    f"edge {tuple(sorted(e))} lies in {len(occurrences[e])} faces",
                )

        for fi, f in enumerate(faces):
            if len(set(f)) != len(f):
                raise PolyhedronRejected("degenerate-face", f"face {fi} revisits a vertex")

        _check_vertex_figures(n_vertices, faces)

        flags = []
        index = {}
        for fi, f in enumerate(faces):
            for k in range(len(f)):
                for s in (0, 1):
                    index[(fi, k, s)] = len(flags)
                    flags.append((fi, k, s))
        r0 = [0] * len(flags)
        r1 = [0] * len(flags)
        r2 = [0] * len(flags)
        labels = []
        for x, (fi, k, s) in enumerate(flags):
            f = faces[fi]
            p = len(f)
            v = f[(k + s) % p]
            e = frozenset((f[k], f[(k + 1) % p]))
            labels.append((v, edge_index[e], fi))
            r0[x] = index[(fi, k, 1 - s)]
            if s == 1:
                r1[x] = index[(fi, (k + 1) % p, 0)]
            else:
                r1[x] = index[(fi, (k - 1) % p, 1)]
            (g1, k1), (g2, k2) = occurrences[e]
            other = (g2, k2) if (g1, k1) == (fi, k) else (g1, k1)
            g, j = other
            h = faces[g]
            t = 0 if h[j] == v else 1
            r2[x] = index[(g, j, t)]

        complex_ = cls(n_vertices, faces, tuple(tuple(sorted(e)) for e in edges), tuple(labels), r0, r1, r2)
        complex_._check_flag_axioms()
        return complex_

    def _check_flag_axioms(self) -> None:
        n = len(self.flags)
        for name, r in (("r0", self.r0), ("r1", self.r1), ("r2", self.r2)):
            for x in range(n):
                if r[x] == x or r[r[x]] != x:
                    raise PolyhedronRejected("diamond", f"{name} is not a fixed-point-free involution at flag {x}")
        for x in range(n):
            y = self.r0[self.r2[x]]
            if y == x or self.r0[self.r2[y]] != x:
                raise PolyhedronRejected("diamond", f"(r0 r2)^2 fails at flag {x}")
        if len(self._flag_orbit(0, (self.r0, self.r1, self.r2))) != n:
            raise PolyhedronRejected("disconnected", "flags are not connected")

    def _flag_orbit(self, start: int, gens) -> set[int]:
        seen = {start}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for r in gens:
                y = r[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    # -- basic data -------------------------------------------------------
    def __len__(self) -> int:
        return len(self.flags)

    @property
    def face_vector(self) -> tuple[int, int, int]:
        return (self.n_vertices, len(self.edges), len(self.faces))

    def vertex_of(self, x: int) -> int:
        return self.flags[x][0]

    def flag_index(self) -> dict:
        """(vertex, edge id, face id) -> flag."""
        return {lab: x for x, lab in enumerate(self.flags)}

    def to_json(self) -> dict:
        return {"vertices": self.n_vertices, "faces": [list(f) for f in self.faces]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    @classmethod
    def from_json(cls, data: dict) -> "FlagComplex":
        return cls.from_faces(data["vertices"], data["faces"])

    @cached_property
    def face_keys(self) -> frozenset:
        return frozenset(canonical_cycle(f) for f in self.faces)

    # -- automorphisms ----------------------------------------------------
    def _extend(self, other: "FlagComplex", base: int, image: int) -> Optional[list[int]]:
        """Propagate base -> image along adjacencies; None if inconsistent."""
        n = len(self.flags)
        phi = [-1] * n
        used = [False] * n
        phi[base] = image
        used[image] = True
        queue = deque([base])
        pairs = ((self.r0, other.r0), (self.r1, other.r1), (self.r2, other.r2))
        while queue:
            x = queue.popleft()
            fx = phi[x]
            for ra, rb in pairs:
                y = ra[x]
                fy = rb[fx]
                if phi[y] < 0:
                    if used[fy]:
                        return None
                    phi[y] = fy
                    used[fy] = True
                    queue.append(y)
                elif phi[y] != fy:
                    return None
        if min(phi) < 0:
            return None
        return phi

    @cached_property
    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for y in range(len(self.flags)):
            phi = self._extend(self, 0, y)
            if phi is not None:
                out.append(tuple(phi))
        return tuple(out)

    def automorphism_group(self) -> tuple[tuple[int, ...], ...]:
        return self.automorphisms

    def is_regular(self) -> bool:
        return len(self.automorphisms) == len(self.flags)

    def is_isomorphic(self, other: "FlagComplex") -> bool:
        return isomorphism(self, other) is not None

    # -- invariants -------------------------------------------------------
    def _compose(self, *perms) -> list[int]:
        """Permutation x -> perms[0][perms[1][...perms[-1][x]]]."""
        out = list(range(len(self.flags)))
        for r in reversed(perms):
            out = [r[x] for x in out]
        return out

    @cached_property
    def is_orientable(self) -> bool:
        color = [-1] * len(self.flags)
        color[0] = 0
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for r in (self.r0, self.r1, self.r2):
                y = r[x]
                if color[y] < 0:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return False
        return True

    def schlafli(self) -> SchlafliData:
        p = _perm_order(self._compose(self.r0, self.r1))
        q = _perm_order(self._compose(self.r1, self.r2))
        petrie = _perm_order(self._compose(self.r0, self.r1, self.r2))
        f0, f1, f2 = self.face_vector
        chi = f0 - f1 + f2
        orientable = self.is_orientable
        genus = (2 - chi) // 2 if orientable else 2 - chi
        return SchlafliData(p, q, petrie, self.face_vector, orientable, genus)

    def petrie_polygons(self) -> list[tuple[int, ...]]:
        """Vertex cycles of the Petrie polygons (orbits of <r0 r2, r1>)."""
        a = self._compose(self.r0, self.r2)
        b = self.r1
        seen = [False] * len(self.flags)
        polygons = []
        for start in range(len(self.flags)):
            if seen[start]:
                continue
            for y in self._flag_orbit(start, (a, b)):
                seen[y] = True
            cycle = []
            x = start
            while True:
                cycle.append(self.vertex_of(x))
                x = b[a[x]]
                if x == start:
                    break
            polygons.append(tuple(cycle))
        return polygons

    def petrie_dual(self) -> "FlagComplex":
        polygons = self.petrie_polygons()
        for poly in polygons:
            if len(set(poly)) != len(poly):
                raise PolyhedronRejected("petrie-revisits-vertex", f"Petrie polygon {poly} revisits a vertex")
        return FlagComplex.from_faces(self.n_vertices, polygons)


def isomorphism(c1: FlagComplex, c2: FlagComplex) -> Optional[list[int]]:
    """A flag bijection c1 -> c2 commuting with r0, r1, r2, or None."""
    if len(c1) != len(c2) or c1.face_vector != c2.face_vector:
        return None
    for y in range(len(c2)):
        phi = c1._extend(c2, 0, y)
        if phi is not None:
            return phi
    return None


def from_faces(n_vertices: int, faces) -> FlagComplex:
    return FlagComplex.from_faces(n_vertices, faces)


def _check_connected(n_vertices, faces, edges, occurrences) -> None:
    adj = defaultdict(set)
    for e in edges:
        u, v = tuple(e)
        adj[u].add(v)
        adj[v].add(u)
    used = set(adj)
    if len(used) != n_vertices:
        missing = sorted(set(range(n_vertices)) - used)
        raise PolyhedronRejected("disconnected", f"vertex {missing[0]} lies on no edge")
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n_vertices:
        raise PolyhedronRejected(
            "disconnected", f"edge graph has a component of {len(seen)} of {n_vertices} vertices"
        )
    # faces must hang together across shared edges
    face_adj = defaultdict(set)
    for occ in occurrences.values():
        fs = {fi for fi, _ in occ}
        for a in fs:
            face_adj[a] |= fs - {a}
    seen = {0}
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for b in face_adj[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    if len(seen) != len(faces):
        raise PolyhedronRejected(
            "disconnected", f"faces split: a component of {len(seen)} of {len(faces)} faces"
        )


def _check_folded_corners(faces) -> None:
    """Two faces sharing a pair of consecutive edges u-v-w fold together at
    v; the vertex-figure there contains a 2-cycle (the q = 2 degeneracy)."""
    corners = {}
    for fi, f in enumerate(faces):
        p = len(f)
        for k in range(p):
            a, b = f[k - 1], f[(k + 1) % p]
            key = (f[k], min(a, b), max(a, b))
            if key in corners:
                raise PolyhedronRejected(
                    "vertex-figure",
                    f"faces {corners[key]} and {fi} share the corner {a}-{f[k]}-{b}; vertex-figure degenerates to q=2",
                )
            corners[key] = fi


def _check_vertex_figures(n_vertices, faces) -> None:
    figure = defaultdict(list)
    for f in faces:
        p = len(f)
        for k in range(p):
            figure[f[k]].append((f[k - 1], f[(k + 1) % p]))
    for v in range(n_vertices):
        pairs = figure[v]
        degree = defaultdict(int)
        adj = defaultdict(set)
        for a, b in pairs:
            degree[a] += 1
            degree[b] += 1
            adj[a].add(b)
            adj[b].add(a)
        nodes = list(degree)
        if len(nodes) < 3 or any(degree[u] != 2 for u in nodes) or len(pairs) != len(nodes):
            raise PolyhedronRejected("vertex-figure", f"vertex-figure at {v} is not a single cycle")
        seen = {nodes[0]}
        stack = [nodes[0]]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != len(nodes):
            raise PolyhedronRejected("vertex-figure", f"vertex-figure at {v} is not a single cycle")
