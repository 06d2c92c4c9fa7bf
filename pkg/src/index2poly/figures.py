"""Static figures of family members (matplotlib, file output only)."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
from mpl_toolkits.mplot3d.art3d import Poly3DCollection  # noqa: E402

from .exactgeom import to_float  # noqa: E402

ORBIT_COLOURS = ("#08589e", "#e6550d")
FACE_COLOUR = "#7bccc4"

RC = {
    "font.family": "serif",
    "font.size": 7,
    "axes.titlesize": 7,
    "figure.dpi": 150,
    "savefig.bbox": "tight",
}


def default_lambda(record):
    """Planar member when there is one, otherwise a half-size second orbit."""
    from fractions import Fraction

    from .exactgeom import fe

    return record.planar_lambda if record.planar_lambda is not None else fe(Fraction(1, 2))


def _draw(ax, poly, lam, title: str) -> None:
    pts = [to_float(p) for p in poly.coordinates(lam)]
    cfg = poly.configuration
    polys = [[pts[v] for v in f] for f in poly.complex.faces]
    ax.add_collection3d(
        Poly3DCollection(polys, facecolor=FACE_COLOUR, edgecolor="#303030", linewidths=0.3, alpha=0.25)
    )
    for orbit in (0, 1):
        xs = [pts[v] for v in range(len(pts)) if cfg.orbit_of(v) == orbit]
        ax.scatter(*zip(*xs), s=4, color=ORBIT_COLOURS[orbit], depthshade=False)
    r = max(max(abs(c) for c in p) for p in pts)
    for setter in (ax.set_xlim, ax.set_ylim, ax.set_zlim):
        setter(-r, r)
    ax.set_box_aspect((1, 1, 1))
    ax.set_axis_off()
    ax.set_title(title)


def render_family(record, path: Path, lam=None) -> Path:
    lam = default_lambda(record) if lam is None else lam
    with plt.rc_context(RC):
        fig = plt.figure(figsize=(3, 3))
        ax = fig.add_subplot(projection="3d")
        _draw(ax, record.polyhedron, lam, f"{record.family_id}  {record.schlafli_type}  λ={lam}")
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def render_overview(records: Sequence, path: Path, columns: int = 6) -> Path:
    rows = -(-len(records) // columns)
    with plt.rc_context(RC):
        fig = plt.figure(figsize=(2 * columns, 2 * rows))
        for k, rec in enumerate(records):
            ax = fig.add_subplot(rows, columns, k + 1, projection="3d")
            _draw(ax, rec.polyhedron, default_lambda(rec), f"{rec.family_id}\n{rec.schlafli_type}")
        fig.savefig(path)
        plt.close(fig)
    return Path(path)


def render_all(records: Sequence, outdir: Path) -> list[Path]:
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths = [render_family(r, outdir / f"{r.family_id}.png") for r in records]
    paths.append(render_overview(records, outdir / "overview.png"))
    return paths
