"""Regular polyhedra of index 2 whose vertices lie on two orbits of the
symmetry group: exact construction, verification and export."""

from .exactgeom import TAU, FieldElement, generate_point_group
from .flagmap import FlagComplex, PolyhedronRejected, SchlafliData
from .solids import Alignment, SolidKind, VertexConfiguration
from .tracer import GeometricPolyhedron, assemble, trace_face

__version__ = "0.1.0"

__all__ = [
    "Alignment",
    "FieldElement",
    "FlagComplex",
    "GeometricPolyhedron",
    "PolyhedronRejected",
    "SchlafliData",
    "SolidKind",
    "TAU",
    "VertexConfiguration",
    "assemble",
    "generate_point_group",
    "trace_face",
]
