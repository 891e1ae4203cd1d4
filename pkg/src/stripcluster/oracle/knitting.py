"""Connecting-component knitting, the arc bijection, and orbit Hom spaces.

The component containing the projectives is a doubly infinite grid: the
object at grid cell ``(i, j)`` lies on the i-th translate of the sectional
line through ``P_{b_0} ~> P_{a_0}`` and the j-th translate of the one
through ``P_{b_-1} ~> P_{a_0}``; arrows decrease exactly one coordinate.
Cells below the projective section are modules, cells above are shifted
preinjectives.  The bijection ``phi`` matches grid cells with connecting
arcs and regular-component cells with upper/lower arcs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..arcs import CONNECTING, LOWER, UPPER, Arc, conn, lower, upper
from .intervals import Interval, hom_rep, inj, is_injective, is_projective, proj, tau, tau_inv
from .orientation import Orientation

CONN = "conn"
REG_L = "reg_l"
REG_R = "reg_r"


class WindowError(ValueError):
    """A required realization does not fit in the declared window."""


@dataclass(frozen=True, order=True)
class FundDomainObject:
    """Indecomposable of the orbit category in component coordinates.

    * ``conn(i, j)``  -- connecting component, line indices (i, j);
    * ``reg_l(i, j)`` -- left regular component, i <= j (coray i, ray j);
    * ``reg_r(i, j)`` -- right regular component, i >= j (ray i, coray j).
    """

    variant: str
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.variant not in (CONN, REG_L, REG_R):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant == REG_L and self.i > self.j:
            raise ValueError("reg_l needs i <= j")
        if self.variant == REG_R and self.i < self.j:
            raise ValueError("reg_r needs i >= j")

    def translated(self, k: int) -> "FundDomainObject":
        return FundDomainObject(self.variant, self.i + k, self.j + k)

    def is_quasi_simple(self) -> bool:
        return self.variant in (REG_L, REG_R) and self.i == self.j

    def __str__(self) -> str:
        return f"{self.variant}({self.i},{self.j})"


def fd_conn(i: int, j: int) -> FundDomainObject:
    return FundDomainObject(CONN, i, j)


def fd_reg_l(i: int, j: int) -> FundDomainObject:
    return FundDomainObject(REG_L, i, j)


def fd_reg_r(i: int, j: int) -> FundDomainObject:
    return FundDomainObject(REG_R, i, j)


@dataclass(frozen=True)
class ShiftedPreinjective:
    """The object N[-1] for a preinjective module N."""

    module: Interval

    def __str__(self) -> str:
        return f"{self.module}[-1]"


# -- the arc bijection ----------------------------------------------------------


def phi(x: FundDomainObject) -> Arc:
    if x.variant == CONN:
        return conn(x.i, x.j)
    if x.variant == REG_L:
        return upper(x.i - 1, x.j + 1)
    return lower(x.i + 1, x.j - 1)


def phi_inv(a: Arc) -> FundDomainObject:
    if a.kind == CONNECTING:
        return fd_conn(a.i, a.j)
    if a.kind == UPPER:
        return fd_reg_l(a.i + 1, a.j - 1)
    return fd_reg_r(a.i - 1, a.j + 1)


# -- grid coordinates of the connecting component -------------------------------


@lru_cache(maxsize=None)
def projective_grid(o: Orientation, x: int) -> tuple[int, int]:
    """Grid cell of P_x.  Walking the section one vertex to the right
    raises the first coordinate over an R letter and lowers the second
    over an L letter, anchored at P_{a_0} = (0, 0)."""
    a0 = o.a0
    if x == a0:
        return (0, 0)
    if x > a0:
        rs = sum(1 for n in range(a0, x) if o.letter(n) == "R")
        return (rs, -(x - a0 - rs))
    rs = sum(1 for n in range(x, a0) if o.letter(n) == "R")
    return (-rs, (a0 - x - rs))


@lru_cache(maxsize=None)
def _tau_inv_power_proj(o: Orientation, x: int, s: int) -> Interval:
    if s == 0:
        return proj(o, x)
    prev = _tau_inv_power_proj(o, x, s - 1)
    return tau_inv(o, prev)


@lru_cache(maxsize=None)
def _tau_power_inj(o: Orientation, x: int, t: int) -> Interval:
    if t == 0:
        return inj(o, x)
    return tau(o, _tau_power_inj(o, x, t - 1))


def grid_object(o: Orientation, i: int, j: int) -> Interval | ShiftedPreinjective:
    """Underlying object at connecting-grid cell (i, j)."""
    x = o.a0 + (i - j)
    level, _ = projective_grid(o, x)
    s = level - i
    if s >= 0:
        return _tau_inv_power_proj(o, x, s)
    return ShiftedPreinjective(_tau_power_inj(o, x, -s - 1))


def grid_level(o: Orientation, i: int, j: int) -> int:
    """Translate level s of cell (i, j): the object is the s-th inverse
    translate of a projective; negative above the section."""
    x = o.a0 + (i - j)
    return projective_grid(o, x)[0] - i


# -- realizing fundamental-domain objects as modules -----------------------------


def realize(o: Orientation, x: FundDomainObject) -> Interval | ShiftedPreinjective:
    if x.variant == CONN:
        return grid_object(o, x.i, x.j)
    if x.variant == REG_L:
        lo = o.ql_tile(x.i - 1)[0]
        hi = o.ql_tile(x.j - 1)[1]
        return Interval(lo, hi)
    lo = o.qr_tile(1 - x.i)[0]
    hi = o.qr_tile(1 - x.j)[1]
    return Interval(lo, hi)


def realize_module(o: Orientation, x: FundDomainObject) -> Interval:
    m = realize(o, x)
    if isinstance(m, ShiftedPreinjective):
        raise WindowError(f"{x} is a shifted preinjective, not a module")
    return m


def classify_interval(o: Orientation, m: Interval, cap: int = 500) -> tuple[str, tuple[int, int]]:
    """Component and coordinates of an interval module.

    Returns one of ``("reg_r", (i, j))``, ``("reg_l", (i, j))``,
    ``("preproj", (i, j))`` with the connecting-grid cell of the module, or
    ``("preinj", (i, j))`` with the grid cell of its shift by -1.
    """
    n_lo = o.qr_tile_of_vertex(m.lo)
    n_hi = o.qr_tile_of_vertex(m.hi)
    reg_r_hit = o.qr_tile(n_lo)[0] == m.lo and o.qr_tile(n_hi)[1] == m.hi
    l_lo = o.ql_tile_of_vertex(m.lo)
    l_hi = o.ql_tile_of_vertex(m.hi)
    reg_l_hit = o.ql_tile(l_lo)[0] == m.lo and o.ql_tile(l_hi)[1] == m.hi
    if reg_r_hit and reg_l_hit:
        raise RuntimeError(f"{m} matches both regular components; tiling broken")
    if reg_r_hit:
        return REG_R, (1 - n_lo, 1 - n_hi)
    if reg_l_hit:
        return REG_L, (l_lo + 1, l_hi + 1)

    # march towards both ends of the component at once; exactly one side
    # terminates (the other keeps translating into ever larger modules)
    up, down = m, m
    for step in range(cap + 1):
        if is_projective(o, up):
            x = _single_peak(o, up)
            level, r = projective_grid(o, x)
            return "preproj", (level - step, r - step)
        if is_injective(o, down):
            x = _single_valley(o, down)
            level, r = projective_grid(o, x)
            return "preinj", (level + step + 1, r + step + 1)
        up = tau(o, up)
        down = tau_inv(o, down)
    raise RuntimeError(f"could not classify {m} within {cap} translate steps")


def _single_peak(o: Orientation, m: Interval) -> int:
    from .intervals import peaks

    ps = peaks(o, m)
    if len(ps) != 1:
        raise RuntimeError(f"projective {m} without a unique peak")
    return ps[0]


def _single_valley(o: Orientation, m: Interval) -> int:
    vs = [
        v
        for v in range(m.lo, m.hi + 1)
        if (v == m.lo or o.letter(v - 1) == "R") and (v == m.hi or o.letter(v) == "L")
    ]
    if len(vs) != 1:
        raise RuntimeError(f"injective {m} without a unique valley")
    return vs[0]


# -- knitting -------------------------------------------------------------------


@dataclass(frozen=True)
class GridEntry:
    i: int
    j: int
    payload: Interval | ShiftedPreinjective

    @property
    def is_module(self) -> bool:
        return isinstance(self.payload, Interval)


def knit_connecting(o: Orientation, window: tuple[int, int]) -> list[GridEntry]:
    """All connecting-grid cells with both coordinates in the window.

    The window must contain the anchor cells of both sectional lines, i.e.
    (0, 0) together with the cells of ``P_{b_0}`` and ``P_{b_-1}``.
    """
    lo, hi = window
    need = [0, projective_grid(o, o.sink(0))[0], projective_grid(o, o.sink(-1))[1]]
    if lo > 0 or hi < max(need):
        raise WindowError(
            f"window [{lo},{hi}] cannot anchor both sectional lines; needs [0,{max(need)}]"
        )
    return [
        GridEntry(i, j, grid_object(o, i, j))
        for i in range(lo, hi + 1)
        for j in range(lo, hi + 1)
    ]


# -- wings and orbit Hom ---------------------------------------------------------


def wing_contains(o: Orientation, s: FundDomainObject, y: FundDomainObject) -> bool:
    """Membership of y in the infinite wing under the quasi-simple s."""
    if not s.is_quasi_simple():
        raise ValueError(f"{s} is not quasi-simple")
    if y.variant != s.variant:
        raise ValueError(f"{y} lies in a different component than {s}")
    if s.variant == REG_R:
        return y.i >= s.i >= y.j
    return y.i <= s.i <= y.j


def _check_window(m: Interval, window: tuple[int, int], what: str) -> None:
    lo, hi = window
    if m.lo < lo or m.hi > hi:
        raise WindowError(f"{what} = {m} leaves window [{lo},{hi}]")


def hom_orbit(
    o: Orientation,
    x: FundDomainObject,
    y: FundDomainObject,
    window: tuple[int, int],
) -> int:
    """dim Hom in the orbit category: the module Hom plus the dual Hom into
    the second translate.  At most one by the one-dimensionality of module
    Hom spaces; transported by translates until both arguments are modules."""
    k = 0
    for z in (x, y):
        if z.variant == CONN:
            k = max(k, -grid_level(o, z.i, z.j))
    xs, ys = x.translated(-k), y.translated(-k)
    mx = realize_module(o, xs)
    my = realize_module(o, ys)
    _check_window(mx, window, f"{x} transported {k} steps")
    _check_window(my, window, f"{y} transported {k} steps")
    total = hom_rep(o, mx, my)

    # second summand: Hom(y, tau^2 x), zero when tau^2 x leaves the modules
    xs2 = xs.translated(2)
    if xs2.variant != CONN or grid_level(o, xs2.i, xs2.j) >= 0:
        mx2 = realize_module(o, xs2)
        _check_window(mx2, window, f"second translate of {x}")
        total += hom_rep(o, my, mx2)

    if total > 1:
        raise RuntimeError(f"hom_orbit({x}, {y}) = {total} > 1; oracle inconsistent")
    return total


def ext_orbit(
    o: Orientation,
    x: FundDomainObject,
    y: FundDomainObject,
    window: tuple[int, int],
) -> int:
    """dim Hom(x, y[1]) in the orbit category: Hom into the translate."""
    return hom_orbit(o, x, y.translated(1), window)


# -- structural summary ----------------------------------------------------------


def structure(o: Orientation, window: tuple[int, int]) -> dict:
    """Sources, sinks, maximal paths and quasi-simple families inside a
    vertex window."""
    lo, hi = window

    def collect(of) -> dict[int, int]:
        i = 0
        while of(i) >= lo:
            i -= 1
        i += 1
        while of(i) < lo:
            i += 1
        out = {}
        while of(i) <= hi:
            out[i] = of(i)
            i += 1
        return out

    sources = collect(o.source)
    sinks = collect(o.sink)
    paths_p = {
        i: Interval(*o.path_p(i)) for i in sources if o.path_p(i)[1] <= hi
    }
    paths_q = {
        i: Interval(*o.path_q(i)) for i in sources if o.path_q(i)[0] >= lo
    }
    qr, ql = [], []
    n = 0
    while o.qr_tile(n)[1] >= lo:
        n -= 1
    n += 1
    while o.qr_tile(n)[1] <= hi:
        t = o.qr_tile(n)
        if t[0] >= lo:
            qr.append(Interval(*t))
        n += 1
    n = 0
    while o.ql_tile(n)[1] >= lo:
        n -= 1
    n += 1
    while o.ql_tile(n)[1] <= hi:
        t = o.ql_tile(n)
        if t[0] >= lo:
            ql.append(Interval(*t))
        n += 1
    return {
        "sources": sources,
        "sinks": sinks,
        "paths_p": paths_p,
        "paths_q": paths_q,
        "qr_members": qr,
        "ql_members": ql,
    }
