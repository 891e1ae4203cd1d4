"""Combinatorics of strip triangulations with a representation-theoretic oracle."""

from .arcs import (
    Arc,
    MarkedPoint,
    Side,
    conn,
    conn_leq,
    cross,
    lower,
    parse_arc,
    rotates_to,
    translate,
    upper,
)
from .cluster import QuiverGraph, ext_dim, flip, fz_mutate, hom_dim, quadrilateral, quiver
from .triangulation import (
    FountainInfo,
    TriangulationDesc,
    ValidationReport,
    component_count,
    connecting_chain,
    fountains,
    incidence_at,
    is_compact,
    validate,
)

__all__ = [
    "Arc",
    "MarkedPoint",
    "Side",
    "conn",
    "conn_leq",
    "cross",
    "lower",
    "parse_arc",
    "rotates_to",
    "translate",
    "upper",
    "QuiverGraph",
    "ext_dim",
    "flip",
    "fz_mutate",
    "hom_dim",
    "quadrilateral",
    "quiver",
    "FountainInfo",
    "TriangulationDesc",
    "ValidationReport",
    "component_count",
    "connecting_chain",
    "fountains",
    "incidence_at",
    "is_compact",
    "validate",
]

__version__ = "0.1.0"
