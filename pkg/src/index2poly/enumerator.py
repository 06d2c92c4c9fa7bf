"""Exhaustive scan over vertex configurations and face-shape classes.

Every (solid, alignment, edge length) up to the frame diameter is scanned,
including the ones that cannot work, so that rejections are computed and
recorded rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Optional

from .analysis import SymmetryReport, find_planar_lambda, symmetry_group
from .doubling import double, generator_for
from .exactgeom import FieldElement
from .flagmap import PolyhedronRejected
from .solids import VertexConfiguration, all_configurations, candidate_count_precheck
from .tracer import GeometricPolyhedron, alphabet_for, assemble, reverse_symbol

EXPECTED_FAMILIES = 22
EXPECTED_BY_SYMMETRY = {"tetrahedral": 4, "octahedral": 2, "icosahedral": 16}
SYMMETRY_NAMES = {"[3,3]": "tetrahedral", "[3,4]": "octahedral", "[3,5]": "icosahedral"}


class EnumerationError(RuntimeError):
    pass


@dataclass
class FamilyRecord:
    family_id: str
    symmetry: str
    schlafli_type: str
    face_vector: tuple[int, int, int]
    edge_length: int
    face_shape: tuple[str, str]
    generator: Optional[str]
    genus: int
    orientable: bool
    petrie: int
    census: str
    planar_lambda: Optional[FieldElement]
    polyhedron: GeometricPolyhedron = field(repr=False, compare=False)
    report: SymmetryReport = field(repr=False, compare=False)

    @property
    def configuration(self) -> VertexConfiguration:
        return self.polyhedron.configuration

    @property
    def shape_text(self) -> str:
        return "[" + ",".join(self.face_shape) + "]"

    def row(self) -> dict:
        """Plain serialisable view used by the table emitters."""
        return {
            "family_id": self.family_id,
            "symmetry": self.symmetry,
            "type": self.schlafli_type,
            "generator": self.generator,
            "face_vector": list(self.face_vector),
            "edge_length": self.edge_length,
            "face_shape": self.shape_text,
            "genus": self.genus,
            "orientable": self.orientable,
            "census": self.census,
            "planar_lambda": None if self.planar_lambda is None else str(self.planar_lambda),
        }


@dataclass(frozen=True)
class RejectionRecord:
    configuration: str
    shape: Optional[tuple[str, str]]
    reason: str
    detail: str = ""

    @property
    def shape_text(self) -> str:
        return "-" if self.shape is None else "[" + ",".join(self.shape) + "]"


# -- shape classes -------------------------------------------------------------


def reverse_shape(shape) -> tuple[str, str]:
    a, b = shape
    return (reverse_symbol(b), reverse_symbol(a))


def swap_shape(shape) -> tuple[str, str]:
    a, b = shape
    return (b, a)


def shape_class(shape) -> frozenset:
    """Orbit of ``shape`` under reversal and orbit swap."""
    out = {tuple(shape)}
    frontier = [tuple(shape)]
    while frontier:
        s = frontier.pop()
        for t in (reverse_shape(s), swap_shape(s)):
            if t not in out:
                out.add(t)
                frontier.append(t)
    return frozenset(out)


def canonical_shape(shape, alphabet) -> tuple[str, str]:
    rank = {s: i for i, s in enumerate(alphabet)}
    return min(shape_class(shape), key=lambda s: (rank[s[0]], rank[s[1]]))


def shape_classes(cfg_or_alphabet) -> list[tuple[str, str]]:
    """Class representatives for all pairs over the configuration's alphabet."""
    if isinstance(cfg_or_alphabet, VertexConfiguration):
        alphabet = alphabet_for(cfg_or_alphabet)
    else:
        alphabet = tuple(cfg_or_alphabet)
    reps = {canonical_shape(s, alphabet) for s in product(alphabet, repeat=2)}
    rank = {s: i for i, s in enumerate(alphabet)}
    return sorted(reps, key=lambda s: (rank[s[0]], rank[s[1]]))


# -- scan --------------------------------------------------------------------------


def family_id(cfg: VertexConfiguration, shape) -> str:
    return f"{cfg.label()}-{''.join(shape)}"


def census_fingerprint(genus: int, type_symbol: str, orientable: bool) -> str:
    return f"{'R' if orientable else 'N'}{genus}:{type_symbol}"


def _symmetry_name(cfg: VertexConfiguration) -> str:
    return SYMMETRY_NAMES[cfg.base.group_kind]


def analyse(cfg: VertexConfiguration, shape) -> FamilyRecord:
    """Assemble and fully analyse one candidate; raises PolyhedronRejected."""
    poly = assemble(cfg, shape)
    c = poly.complex
    if not c.is_regular():
        raise PolyhedronRejected("not-regular", f"|Aut| = {len(c.automorphisms)} for {len(c)} flags")
    _, report = symmetry_group(poly)
    if report.index != 2:
        raise PolyhedronRejected("index≠2", f"index {report.index}")
    data = c.schlafli()
    fid = family_id(cfg, shape)
    poly.name = fid
    poly.shape = tuple(shape)

    gen = generator_for(poly)
    if gen is not None and not double(gen).complex.is_isomorphic(c):
        raise EnumerationError(f"{fid}: faces match {gen.name} but the complexes are not isomorphic")
    return FamilyRecord(
        family_id=fid,
        symmetry=_symmetry_name(cfg),
        schlafli_type=data.type_symbol,
        face_vector=data.face_vector,
        edge_length=cfg.edge_length,
        face_shape=tuple(shape),
        generator=gen.name if gen else None,
        genus=data.genus,
        orientable=data.orientable,
        petrie=data.petrie,
        census=census_fingerprint(data.genus, data.type_symbol, data.orientable),
        planar_lambda=find_planar_lambda(poly),
        polyhedron=poly,
        report=report,
    )


_SYMMETRY_ORDER = {"tetrahedral": 0, "octahedral": 1, "icosahedral": 2}


@lru_cache(maxsize=None)
def _scan() -> tuple[tuple[FamilyRecord, ...], tuple[RejectionRecord, ...]]:
    families = []
    rejections = []
    for cfg in all_configurations():
        pre = candidate_count_precheck(cfg)
        if not pre:
            rejections.append(RejectionRecord(cfg.label(), None, pre.reason, pre.detail))
            continue
        for shape in shape_classes(cfg):
            try:
                families.append(analyse(cfg, shape))
            except PolyhedronRejected as e:
                rejections.append(RejectionRecord(cfg.label(), shape, e.reason, e.detail))
    families.sort(key=lambda r: _SYMMETRY_ORDER[r.symmetry])  # stable: scan order within a group
    return tuple(families), tuple(rejections)


def enumerate_all(strict: bool = True) -> tuple[list[FamilyRecord], list[RejectionRecord]]:
    families, rejections = _scan()
    if strict:
        check_counts(families)
    return list(families), list(rejections)


def check_counts(families) -> None:
    ids = [f.family_id for f in families]
    problems = []
    if len(families) != EXPECTED_FAMILIES:
        problems.append(f"{len(families)} families, expected {EXPECTED_FAMILIES}")
    for sym, want in EXPECTED_BY_SYMMETRY.items():
        got = sum(1 for f in families if f.symmetry == sym)
        if got != want:
            problems.append(f"{sym}: {got}, expected {want}")
    if problems:
        raise EnumerationError("; ".join(problems) + f"\nfound: {ids}")


def family(fid: str) -> FamilyRecord:
    for f in _scan()[0]:
        if f.family_id == fid:
            return f
    raise KeyError(fid)


def family_ids() -> list[str]:
    return [f.family_id for f in _scan()[0]]


def verify_record(rec: FamilyRecord) -> dict[str, bool]:
    """The invariant suite for one family; every value should be True."""
    from .analysis import (
        face_stabilizer_check,
        no_antipodal_edges,
        petrie_dual_same_group,
        sigma2_squared_induced,
        symmetries,
    )

    poly = rec.polyhedron
    c = poly.complex
    rep = rec.report
    f0, f1, f2 = rec.face_vector
    data = c.schlafli()
    syms = symmetries(poly)
    checks = {
        "regular": c.is_regular(),
        "aut=4f1": rep.aut_order == 4 * f1,
        "G=2f1": rep.sym_group_order == 2 * f1,
        "index=2": rep.index == 2,
        "flag-orbits=2": rep.flag_orbits == 2,
        "orbits-2/1/1": (rep.orbits_G.vertices, rep.orbits_G.edges, rep.orbits_G.faces) == (2, 1, 1),
        "G+ face-transitive": rep.orbits_G_plus.faces == 1,
        "full-platonic": rep.full_platonic,
        "pf2=2f1=qf0": data.p * f2 == 2 * f1 == data.q * f0,
        "orientable": data.orientable,
        "face-stabilizer": bool(face_stabilizer_check(poly, syms)),
        "no-antipodal-edges": no_antipodal_edges(poly),
        "sigma2-squared": sigma2_squared_induced(poly, syms),
        "petrie-dual-same-G": petrie_dual_same_group(poly, syms) is not False,
    }
    if rec.generator is not None:
        from .doubling import by_name

        checks["doubling-isomorphic"] = double(by_name(rec.generator)).complex.is_isomorphic(c)
    return checks
