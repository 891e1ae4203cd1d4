"""Reference triangulations used across the test suites."""

from __future__ import annotations

from .arcs import Arc, conn
from .families import BOTH, ConnFanUpper, LEFT, LowerFan, NestedStaircase, Periodic, RIGHT, UpperFan
from .oracle.knitting import phi, fd_conn, projective_grid
from .oracle.orientation import Orientation
from .triangulation import TriangulationDesc


def staircase() -> TriangulationDesc:
    """The period-one staircase of connecting arcs; no fountains."""
    seed = (conn(0, 0), conn(1, 0))
    return TriangulationDesc(frozenset(seed), (Periodic(seed, 1, BOTH),), (-1, 2))


def two_fountain() -> TriangulationDesc:
    """A left fountain at l_4 and a right fountain at l_5."""
    fams = (
        UpperFan(4, 2, LEFT),
        ConnFanUpper(4, 3, LEFT),
        UpperFan(5, 7, RIGHT),
        ConnFanUpper(5, 3, RIGHT),
    )
    return TriangulationDesc(frozenset(), fams, (0, 8))


def full_fountain(base: int = 0) -> TriangulationDesc:
    """All arcs through one upper point: the unique full-fountain shape."""
    fams = (
        UpperFan(base, base - 2, LEFT),
        UpperFan(base, base + 2, RIGHT),
        ConnFanUpper(base, -base + 1, LEFT),
        ConnFanUpper(base, -base, RIGHT),
    )
    return TriangulationDesc(frozenset(), fams, (base - 2, base + 2))


def split_nested() -> TriangulationDesc:
    """No connecting arcs: nested staircase above, two-sided fan below."""
    fams = (
        NestedStaircase(0, 2, "", "LR"),
        LowerFan(0, 2, LEFT),
        LowerFan(0, -2, RIGHT),
    )
    return TriangulationDesc(frozenset(), fams, (-2, 2))


def catalog() -> dict[str, TriangulationDesc]:
    return {
        "staircase": staircase(),
        "two_fountain": two_fountain(),
        "full_fountain": full_fountain(),
        "split_nested": split_nested(),
    }


def projective_chain_arc(o: Orientation, x: int) -> Arc:
    """The connecting arc of the indecomposable projective at vertex x."""
    return phi(fd_conn(*projective_grid(o, x)))


def projectives_desc(o: Orientation) -> TriangulationDesc:
    """The triangulation formed by the arcs of all projectives.

    The chain of arcs is explicit across the orientation core and one full
    cycle block on each side; beyond that it repeats under the shift whose
    upper and lower steps are the R and L letter counts of the cycle.
    """
    cl, cr = len(o.left_cycle), len(o.right_cycle)
    core_lo = o.core_start
    core_hi = o.core_start + len(o.core)
    xl = core_lo - cl
    xr = core_hi + cr - 1
    explicit = frozenset(projective_chain_arc(o, x) for x in range(xl, xr + 1))

    left_seed = tuple(sorted(projective_chain_arc(o, x) for x in range(xl, core_lo)))
    right_seed = tuple(sorted(projective_chain_arc(o, x) for x in range(core_hi, xr + 1)))
    du_l = o.left_cycle.count("R")
    dl_l = cl - du_l
    du_r = o.right_cycle.count("R")
    dl_r = cr - du_r
    fams = (
        Periodic(left_seed, du_l, LEFT, dl_l),
        Periodic(right_seed, du_r, RIGHT, dl_r),
    )
    idxs = [u.i for u in explicit] + [u.j for u in explicit]
    return TriangulationDesc(explicit, fams, (min(idxs), max(idxs)))
