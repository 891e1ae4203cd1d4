"""Quiver-representation oracle for the doubly infinite line quiver.

Independent of the arc model: representations are interval modules, Hom and
Ext are computed by exact linear algebra, and the cluster-level Hom spaces
come from the orbit-category decomposition.  The arc dictionary is validated
against this package, never the other way round.
"""

from .orientation import Orientation, zigzag
from .intervals import (
    Interval,
    ext_rep,
    hom_rep,
    inj,
    is_injective,
    is_projective,
    proj,
    proj_presentation,
    tau,
    tau_inv,
)
from .knitting import (
    FundDomainObject,
    ShiftedPreinjective,
    WindowError,
    classify_interval,
    grid_object,
    hom_orbit,
    knit_connecting,
    phi,
    phi_inv,
    projective_grid,
    realize,
    wing_contains,
)

__all__ = [
    "Orientation",
    "zigzag",
    "Interval",
    "hom_rep",
    "ext_rep",
    "proj",
    "inj",
    "proj_presentation",
    "is_projective",
    "is_injective",
    "tau",
    "tau_inv",
    "FundDomainObject",
    "ShiftedPreinjective",
    "WindowError",
    "classify_interval",
    "grid_object",
    "projective_grid",
    "knit_connecting",
    "phi",
    "phi_inv",
    "realize",
    "hom_orbit",
    "wing_contains",
]
