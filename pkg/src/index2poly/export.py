"""Text emitters: exact ratio parsing, Wavefront-style meshes and the
family table as JSON, CSV or markdown."""

from __future__ import annotations

import csv
import io
import json
import re
from dataclasses import dataclass, field
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Sequence

from .analysis import planarity
from .exactgeom import TAU, FieldElement, to_float
from .tracer import GeometricPolyhedron

# -- ratio literals ---------------------------------------------------------------

_SQRT5 = re.compile(r"(√5|sqrt\(5\)|sqrt5|s5)")
_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
    (?P<coef>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?(?:\s*/\s*\d+)?)?\s*
    \*?\s*(?P<unit>S|T)?\s*""",
    re.VERBOSE,
)


def parse_lambda(text: str) -> FieldElement:
    """Parse ``a/b+c/d√5``-style literals, decimals, ``tau`` or ``τ``.

    >>> str(parse_lambda("1/2+1/2√5"))
    '1/2+1/2√5'
    >>> parse_lambda("2tau+1") == 2 * TAU + 1
    True
    """
    s = text.strip().lower().replace(" ", "")
    if not s:
        raise ValueError("empty ratio")
    s = _SQRT5.sub("S", s).replace("tau", "T").replace("τ", "T").replace("φ", "T").replace("phi", "T")
    pos = 0
    total = FieldElement(0)
    n_terms = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (m.group("coef") is None and m.group("unit") is None):
            raise ValueError(f"cannot parse ratio {text!r} at {s[pos:]!r}")
        if n_terms and m.group("sign") is None:
            raise ValueError(f"missing operator in {text!r}")
        coef = m.group("coef")
        try:
            if coef is None:
                value = Fraction(1)
            elif "/" in coef:
                num, den = coef.split("/")
                value = Fraction(Decimal(num)) / Fraction(Decimal(den))
            else:
                value = Fraction(Decimal(coef))
        except (InvalidOperation, ZeroDivisionError) as e:
            raise ValueError(f"bad coefficient in {text!r}") from e
        if m.group("sign") == "-":
            value = -value
        unit = m.group("unit")
        if unit == "S":
            total = total + FieldElement(0, value)
        elif unit == "T":
            total = total + TAU * value
        else:
            total = total + FieldElement(value)
        n_terms += 1
        pos = m.end()
    return total


# -- meshes ------------------------------------------------------------------------


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _exact(p) -> str:
    return "(" + ", ".join(str(c) for c in p) + ")"


@dataclass
class MeshDocument:
    vertices: list  # exact points
    faces: list  # vertex cycles
    header: dict = field(default_factory=dict)
    planar: list = field(default_factory=list)

    @property
    def counts(self) -> tuple[int, int]:
        return len(self.vertices), len(self.faces)

    def to_obj(self, mode: str = "fan") -> str:
        if mode not in ("fan", "polyline"):
            raise ValueError(f"unknown face mode {mode!r}")
        out = io.StringIO()
        for key, value in self.header.items():
            out.write(f"# {key}: {value}\n")
        out.write(f"# face mode: {mode}\n")
        for p in self.vertices:
            x, y, z = to_float(p)
            out.write(f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}  # {_exact(p)}\n")
        if mode == "fan":
            # centroids follow the polyhedron's own vertices
            out.write(f"# centroids: {len(self.faces)}\n")
            for f in self.faces:
                pts = [to_float(self.vertices[v]) for v in f]
                c = [sum(p[i] for p in pts) / len(pts) for i in range(3)]
                out.write(f"v {_fmt(c[0])} {_fmt(c[1])} {_fmt(c[2])}\n")
        n = len(self.vertices)
        for k, f in enumerate(self.faces):
            out.write(f"g face_{k}\n")
            if mode == "fan":
                centre = n + k + 1
                for i in range(len(f)):
                    a, b = f[i] + 1, f[(i + 1) % len(f)] + 1
                    out.write(f"f {centre} {a} {b}\n")
            else:
                out.write("l " + " ".join(str(v + 1) for v in list(f) + [f[0]]) + "\n")
        return out.getvalue()


def mesh_document(poly: GeometricPolyhedron, lam, check_planarity: bool = True) -> MeshDocument:
    cfg = poly.configuration
    coords = poly.coordinates(lam)
    planar = planarity(poly, lam) if check_planarity else []
    header = {
        "family": poly.name or "?",
        "lambda": str(lam),
        "alignment": cfg.alignment.value,
        "edge length": cfg.edge_length,
        "shape": "[" + ",".join(poly.shape) + "]" if poly.shape else "-",
        "face vector": poly.face_vector,
    }
    if check_planarity:
        header["planar faces"] = f"{sum(planar)} of {len(planar)}"
    return MeshDocument(list(coords), [tuple(f) for f in poly.complex.faces], header, planar)


def count_obj(text: str) -> tuple[int, int]:
    """(polyhedron vertices, face groups) in an emitted mesh."""
    vertices = 0
    faces = 0
    for line in text.splitlines():
        if line.startswith("# centroids"):
            break
        if line.startswith("v "):
            vertices += 1
    faces = sum(1 for line in text.splitlines() if line.startswith("g face_"))
    return vertices, faces


# -- tables -------------------------------------------------------------------------

COLUMNS = (
    "family_id",
    "type",
    "generator",
    "face_vector",
    "edge_length",
    "face_shape",
    "genus",
    "census",
    "planar_lambda",
    "symmetry",
)


def _cell(key, value) -> str:
    if value is None:
        return "-" if key != "generator" else "none"
    if key == "face_vector":
        return "(" + ",".join(str(x) for x in value) + ")"
    return str(value)


def table_json(rows: Sequence[dict]) -> str:
    return json.dumps({"families": list(rows)}, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def table_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rows:
        w.writerow([_cell(k, r[k]) for k in COLUMNS])
    return buf.getvalue()


def table_markdown(rows: Sequence[dict]) -> str:
    lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
    for r in rows:
        lines.append("| " + " | ".join(_cell(k, r[k]) for k in COLUMNS) + " |")
    return "\n".join(lines) + "\n"


EMITTERS = {"json": table_json, "csv": table_csv, "markdown": table_markdown}


def load_schema() -> dict:
    from importlib import resources

    return json.loads(resources.files("index2poly").joinpath("table.schema.json").read_text())
