"""Finitely described infinite arc families: fans, periodic tails, staircases.

Each family compiles to a list of *templates*: arcs whose endpoint indices
are affine functions of one integer parameter ranging over a half-line (or
a finite list).  Crossing, membership and windowing are decided in closed
form by solving the template inequalities over the parameter, never by
unbounded enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .arcs import Arc, CONNECTING, LOWER, UPPER, MarkedPoint, Side, conn, hshift, lower, lower_point, upper, upper_point

LEFT = "left"
RIGHT = "right"
BOTH = "both"


# -- integer half-line intervals --------------------------------------------------

FULL = (None, None)
EMPTY = "empty"


def _isect(a, b):
    if a == EMPTY or b == EMPTY:
        return EMPTY
    lo = a[0] if b[0] is None else (b[0] if a[0] is None else max(a[0], b[0]))
    hi = a[1] if b[1] is None else (b[1] if a[1] is None else min(a[1], b[1]))
    if lo is not None and hi is not None and lo > hi:
        return EMPTY
    return (lo, hi)


def _lt(lhs: tuple[int, int], rhs: tuple[int, int]):
    """Solve lhs(k) < rhs(k) for affine integer forms (slope, const)."""
    m = lhs[0] - rhs[0]
    c = rhs[1] - lhs[1]
    if m == 0:
        return FULL if 0 < c else EMPTY
    if m > 0:
        return (None, (c - 1) // m)  # k*m < c
    return (c // m + 1, None)


def _eq(lhs: tuple[int, int], value: int):
    m, b = lhs
    if m == 0:
        return FULL if b == value else EMPTY
    if (value - b) % m != 0:
        return EMPTY
    k = (value - b) // m
    return (k, k)


@dataclass(frozen=True)
class Template:
    """Arcs Arc(kind, ai*k + bi, aj*k + bj) for k in [kmin, kmax]."""

    kind: str
    ai: int
    bi: int
    aj: int
    bj: int
    kmin: Optional[int]
    kmax: Optional[int]

    @property
    def fi(self) -> tuple[int, int]:
        return (self.ai, self.bi)

    @property
    def fj(self) -> tuple[int, int]:
        return (self.aj, self.bj)

    def krange(self):
        return (self.kmin, self.kmax)

    def at(self, k: int) -> Arc:
        return Arc(self.kind, self.ai * k + self.bi, self.aj * k + self.bj)

    def k_of(self, u: Arc) -> Optional[int]:
        if u.kind != self.kind:
            return None
        r = _isect(_isect(_eq(self.fi, u.i), _eq(self.fj, u.j)), self.krange())
        if r == EMPTY:
            return None
        lo, hi = r
        if lo is not None:
            return lo
        if hi is not None:
            return hi
        raise RuntimeError(f"constant template {self} with unbounded range")

    def contains(self, u: Arc) -> bool:
        return self.k_of(u) is not None

    def cross_kranges(self, u: Arc):
        """k-intervals over which the template arc crosses u."""
        c = lambda v: (0, v)
        fi, fj = self.fi, self.fj
        pats: list[list] = []
        if self.kind == UPPER and u.kind == UPPER:
            pats = [
                [_lt(fi, c(u.i)), _lt(c(u.i), fj), _lt(fj, c(u.j))],
                [_lt(c(u.i), fi), _lt(fi, c(u.j)), _lt(c(u.j), fj)],
            ]
        elif self.kind == LOWER and u.kind == LOWER:
            pats = [
                [_lt(c(u.i), fi), _lt(fj, c(u.i)), _lt(c(u.j), fj)],
                [_lt(fi, c(u.i)), _lt(c(u.j), fi), _lt(fj, c(u.j))],
            ]
        elif self.kind == CONNECTING and u.kind == CONNECTING:
            pats = [
                [_lt(c(u.i), fi), _lt(c(u.j), fj)],
                [_lt(fi, c(u.i)), _lt(fj, c(u.j))],
            ]
        elif self.kind == UPPER and u.kind == CONNECTING:
            pats = [[_lt(fi, c(u.i)), _lt(c(u.i), fj)]]
        elif self.kind == CONNECTING and u.kind == UPPER:
            pats = [[_lt(c(u.i), fi), _lt(fi, c(u.j))]]
        elif self.kind == LOWER and u.kind == CONNECTING:
            pats = [[_lt(c(u.j), fi), _lt(fj, c(u.j))]]
        elif self.kind == CONNECTING and u.kind == LOWER:
            pats = [[_lt(fj, c(u.i)), _lt(c(u.j), fj)]]
        out = []
        for pat in pats:
            r = self.krange()
            for cond in pat:
                r = _isect(r, cond)
            if r != EMPTY:
                out.append(r)
        return out

    def crosses(self, u: Arc) -> bool:
        return bool(self.cross_kranges(u))

    def ks_in_window(self, lo: int, hi: int) -> Optional[tuple[int, int]]:
        """Parameter range with both endpoint indices inside [lo, hi]."""
        r = self.krange()
        for f in (self.fi, self.fj):
            r = _isect(r, _lt((0, lo - 1), f))
            r = _isect(r, _lt(f, (0, hi + 1)))
        if r == EMPTY:
            return None
        klo, khi = r
        if klo is None or khi is None:
            raise RuntimeError(f"template {self} constant inside a window; degenerate family")
        return (klo, khi)

    def members_in_window(self, lo: int, hi: int) -> list[Arc]:
        r = self.ks_in_window(lo, hi)
        if r is None:
            return []
        return [self.at(k) for k in range(r[0], r[1] + 1)]

    def endpoint_forms(self) -> list[tuple[Side, tuple[int, int]]]:
        if self.kind == UPPER:
            return [(Side.UPPER, self.fi), (Side.UPPER, self.fj)]
        if self.kind == LOWER:
            return [(Side.LOWER, self.fi), (Side.LOWER, self.fj)]
        return [(Side.UPPER, self.fi), (Side.LOWER, self.fj)]

    def point_hits(self, p: MarkedPoint) -> list[tuple[int, tuple[Optional[int], Optional[int]]]]:
        """(endpoint form index, k-interval) of members incident to p; an
        unbounded interval signals a fan based at p."""
        hits = []
        for form_idx, (side, form) in enumerate(self.endpoint_forms()):
            if side is not p.side:
                continue
            r = _isect(_eq(form, p.index), self.krange())
            if r != EMPTY:
                hits.append((form_idx, r))
        return hits


# -- family kinds -----------------------------------------------------------------


@dataclass(frozen=True)
class UpperFan:
    """Upper arcs through a fixed upper base point, one side of it.

    dir=left: arcs [l_i, l_base] for i <= start; dir=right: [l_base, l_i]
    for i >= start.
    """

    base: int
    start: int
    dir: str

    def __post_init__(self) -> None:
        if self.dir not in (LEFT, RIGHT):
            raise ValueError("UpperFan dir must be left or right")
        if self.dir == LEFT and self.start > self.base - 2:
            raise ValueError("UpperFan left needs start <= base - 2")
        if self.dir == RIGHT and self.start < self.base + 2:
            raise ValueError("UpperFan right needs start >= base + 2")

    def templates(self) -> list[Template]:
        if self.dir == LEFT:
            return [Template(UPPER, 1, 0, 0, self.base, None, self.start)]
        return [Template(UPPER, 0, self.base, 1, 0, self.start, None)]

    def base_point(self) -> MarkedPoint:
        return upper_point(self.base)

    def boundary_fan(self) -> bool:
        return True

    def hshifted(self, k: int) -> "UpperFan":
        return UpperFan(self.base + k, self.start + k, self.dir)

    def removed(self, u: Arc):
        k = self.templates()[0].k_of(u)
        if k is None:
            raise KeyError(f"{u} is not a member of {self}")
        if self.dir == LEFT:
            extra = [upper(i, self.base) for i in range(k + 1, self.start + 1)]
            fam = UpperFan(self.base, k - 1, LEFT)
        else:
            extra = [upper(self.base, i) for i in range(self.start, k)]
            fam = UpperFan(self.base, k + 1, RIGHT)
        return extra, [fam]

    def to_json(self) -> dict:
        return {"kind": "upper_fan", "base": self.base, "start": self.start, "dir": self.dir}


@dataclass(frozen=True)
class LowerFan:
    """Lower arcs through a fixed lower base point, one side of it.

    Geometric left of ``r_q`` means larger lower indices: dir=left gives
    [r_j, r_base] for j >= start, dir=right gives [r_base, r_j] for
    j <= start.
    """

    base: int
    start: int
    dir: str

    def __post_init__(self) -> None:
        if self.dir not in (LEFT, RIGHT):
            raise ValueError("LowerFan dir must be left or right")
        if self.dir == LEFT and self.start < self.base + 2:
            raise ValueError("LowerFan left needs start >= base + 2")
        if self.dir == RIGHT and self.start > self.base - 2:
            raise ValueError("LowerFan right needs start <= base - 2")

    def templates(self) -> list[Template]:
        if self.dir == LEFT:
            return [Template(LOWER, 1, 0, 0, self.base, self.start, None)]
        return [Template(LOWER, 0, self.base, 1, 0, None, self.start)]

    def base_point(self) -> MarkedPoint:
        return lower_point(self.base)

    def boundary_fan(self) -> bool:
        return True

    def hshifted(self, k: int) -> "LowerFan":
        return LowerFan(self.base - k, self.start - k, self.dir)

    def removed(self, u: Arc):
        k = self.templates()[0].k_of(u)
        if k is None:
            raise KeyError(f"{u} is not a member of {self}")
        if self.dir == LEFT:
            extra = [lower(j, self.base) for j in range(self.start, k)]
            fam = LowerFan(self.base, k + 1, LEFT)
        else:
            extra = [lower(self.base, j) for j in range(k + 1, self.start + 1)]
            fam = LowerFan(self.base, k - 1, RIGHT)
        return extra, [fam]

    def to_json(self) -> dict:
        return {"kind": "lower_fan", "base": self.base, "start": self.start, "dir": self.dir}


@dataclass(frozen=True)
class ConnFanUpper:
    """Connecting arcs through a fixed upper base: [l_base, r_j].

    dir=left: j >= start (lower endpoints leftwards), dir=right: j <= start.
    """

    base: int
    start: int
    dir: str

    def __post_init__(self) -> None:
        if self.dir not in (LEFT, RIGHT):
            raise ValueError("ConnFanUpper dir must be left or right")

    def templates(self) -> list[Template]:
        if self.dir == LEFT:
            return [Template(CONNECTING, 0, self.base, 1, 0, self.start, None)]
        return [Template(CONNECTING, 0, self.base, 1, 0, None, self.start)]

    def base_point(self) -> MarkedPoint:
        return upper_point(self.base)

    def boundary_fan(self) -> bool:
        return False

    def hshifted(self, k: int) -> "ConnFanUpper":
        return ConnFanUpper(self.base + k, self.start - k, self.dir)

    def removed(self, u: Arc):
        k = self.templates()[0].k_of(u)
        if k is None:
            raise KeyError(f"{u} is not a member of {self}")
        if self.dir == LEFT:
            extra = [conn(self.base, j) for j in range(self.start, k)]
            fam = ConnFanUpper(self.base, k + 1, LEFT)
        else:
            extra = [conn(self.base, j) for j in range(k + 1, self.start + 1)]
            fam = ConnFanUpper(self.base, k - 1, RIGHT)
        return extra, [fam]

    def to_json(self) -> dict:
        return {"kind": "conn_fan_upper", "base": self.base, "start": self.start, "dir": self.dir}


@dataclass(frozen=True)
class ConnFanLower:
    """Connecting arcs through a fixed lower base: [l_i, r_base].

    dir=left: i <= start (upper endpoints leftwards), dir=right: i >= start.
    """

    base: int
    start: int
    dir: str

    def __post_init__(self) -> None:
        if self.dir not in (LEFT, RIGHT):
            raise ValueError("ConnFanLower dir must be left or right")

    def templates(self) -> list[Template]:
        if self.dir == LEFT:
            return [Template(CONNECTING, 1, 0, 0, self.base, None, self.start)]
        return [Template(CONNECTING, 1, 0, 0, self.base, self.start, None)]

    def base_point(self) -> MarkedPoint:
        return lower_point(self.base)

    def boundary_fan(self) -> bool:
        return False

    def hshifted(self, k: int) -> "ConnFanLower":
        return ConnFanLower(self.base - k, self.start + k, self.dir)

    def removed(self, u: Arc):
        k = self.templates()[0].k_of(u)
        if k is None:
            raise KeyError(f"{u} is not a member of {self}")
        if self.dir == LEFT:
            extra = [conn(i, self.base) for i in range(k + 1, self.start + 1)]
            fam = ConnFanLower(self.base, k - 1, LEFT)
        else:
            extra = [conn(i, self.base) for i in range(self.start, k)]
            fam = ConnFanLower(self.base, k + 1, RIGHT)
        return extra, [fam]

    def to_json(self) -> dict:
        return {"kind": "conn_fan_lower", "base": self.base, "start": self.start, "dir": self.dir}


def _pshift(u: Arc, k: int, du: int, dl: int) -> Arc:
    """Horizontal shift with independent upper/lower step sizes."""
    if u.kind == UPPER:
        return upper(u.i + k * du, u.j + k * du)
    if u.kind == LOWER:
        return lower(u.i - k * dl, u.j - k * dl)
    return conn(u.i + k * du, u.j - k * dl)


@dataclass(frozen=True)
class Periodic:
    """Shift-periodic tails of a finite seed.

    Members are the seed re-indexed k whole periods rightwards (dir=right,
    k >= 1), leftwards (dir=left, k <= -1), or both.  One period moves
    upper indices by ``period`` and lower indices by ``period_lower``
    (equal by default; unequal steps arise from staircases whose upper and
    lower densities differ).
    """

    seed: tuple[Arc, ...]
    period: int = 1
    dir: str = BOTH
    period_lower: Optional[int] = None

    def __post_init__(self) -> None:
        if not self.seed:
            raise ValueError("Periodic seed must be nonempty")
        if self.period < 1 or (self.period_lower is not None and self.period_lower < 1):
            raise ValueError("Periodic periods must be >= 1")
        if self.dir not in (LEFT, RIGHT, BOTH):
            raise ValueError("Periodic dir must be left, right or both")
        object.__setattr__(self, "seed", tuple(sorted(set(self.seed))))

    @property
    def dl(self) -> int:
        return self.period if self.period_lower is None else self.period_lower

    def _ranges(self) -> list[tuple[Optional[int], Optional[int]]]:
        out = []
        if self.dir in (RIGHT, BOTH):
            out.append((1, None))
        if self.dir in (LEFT, BOTH):
            out.append((None, -1))
        return out

    def templates(self) -> list[Template]:
        du, dl = self.period, self.dl
        out = []
        for s in self.seed:
            if s.kind == UPPER:
                coef = (du, s.i, du, s.j)
            elif s.kind == LOWER:
                coef = (-dl, s.i, -dl, s.j)
            else:
                coef = (du, s.i, -dl, s.j)
            for kmin, kmax in self._ranges():
                out.append(Template(s.kind, coef[0], coef[1], coef[2], coef[3], kmin, kmax))
        return out

    def base_point(self) -> None:
        return None

    def boundary_fan(self) -> bool:
        return False

    def hshifted(self, k: int) -> "Periodic":
        return Periodic(tuple(hshift(s, k) for s in self.seed), self.period, self.dir, self.period_lower)

    def member_shift_of(self, u: Arc) -> Optional[int]:
        for t in self.templates():
            k = t.k_of(u)
            if k is not None:
                return k
        return None

    def removed(self, u: Arc):
        k = self.member_shift_of(u)
        if k is None:
            raise KeyError(f"{u} is not a member of {self}")
        extra: list[Arc] = []
        fams: list = []
        du, dl = self.period, self.dl
        if k >= 1:
            for m in range(1, k + 1):
                extra.extend(_pshift(s, m, du, dl) for s in self.seed)
            fams.append(Periodic(tuple(_pshift(s, k, du, dl) for s in self.seed), du, RIGHT, dl))
            if self.dir == BOTH:
                fams.append(Periodic(self.seed, du, LEFT, dl))
        else:
            for m in range(k, 0):
                extra.extend(_pshift(s, m, du, dl) for s in self.seed)
            fams.append(Periodic(tuple(_pshift(s, k, du, dl) for s in self.seed), du, LEFT, dl))
            if self.dir == BOTH:
                fams.append(Periodic(self.seed, du, RIGHT, dl))
        extra = [a for a in extra if a != u]
        return extra, fams

    def to_json(self) -> dict:
        obj = {
            "kind": "periodic",
            "seed": [str(s) for s in self.seed],
            "period": self.period,
            "dir": self.dir,
        }
        if self.period_lower is not None and self.period_lower != self.period:
            obj["period_lower"] = self.period_lower
        return obj


@dataclass(frozen=True)
class NestedStaircase:
    """Nested upper arcs grown one endpoint at a time.

    ``u_0 = [l_a, l_b]``; letter n of ``prefix + cycle^inf`` extends
    ``u_n`` one step left (L) or right (R).  With both letters occurring
    forever the members cover every upper point while no single point
    collects infinitely many of them.
    """

    a: int
    b: int
    prefix: str = ""
    cycle: str = "LR"

    def __post_init__(self) -> None:
        if self.b < self.a + 2:
            raise ValueError("NestedStaircase needs b >= a + 2")
        if not self.cycle:
            raise ValueError("NestedStaircase cycle must be nonempty")
        for w in (self.prefix, self.cycle):
            if set(w) - {"L", "R"}:
                raise ValueError("staircase word letters must be L or R")

    def letter(self, n: int) -> str:
        if n < len(self.prefix):
            return self.prefix[n]
        return self.cycle[(n - len(self.prefix)) % len(self.cycle)]

    def member(self, n: int) -> Arc:
        i, j = self.a, self.b
        full = len(self.prefix) + len(self.cycle)
        if n > full:
            # fast-forward whole cycles
            for t in range(len(self.prefix)):
                if self.prefix[t] == "L":
                    i -= 1
                else:
                    j += 1
            cyc = (n - len(self.prefix)) // len(self.cycle)
            nl = self.cycle.count("L")
            nr = len(self.cycle) - nl
            i -= cyc * nl
            j += cyc * nr
            for t in range(n - len(self.prefix) - cyc * len(self.cycle)):
                if self.cycle[t] == "L":
                    i -= 1
                else:
                    j += 1
            return upper(i, j)
        for t in range(n):
            if self.letter(t) == "L":
                i -= 1
            else:
                j += 1
        return upper(i, j)

    def templates(self) -> list[Template]:
        out = []
        pfx = len(self.prefix)
        c = len(self.cycle)
        nl = self.cycle.count("L")
        nr = c - nl
        for n in range(pfx):
            u = self.member(n)
            out.append(Template(UPPER, 0, u.i, 0, u.j, 0, 0))
        for t in range(c):
            u = self.member(pfx + t)
            out.append(Template(UPPER, -nl, u.i, nr, u.j, 0, None))
        return out

    def base_point(self) -> None:
        return None

    def boundary_fan(self) -> bool:
        return False

    def hshifted(self, k: int) -> "NestedStaircase":
        return NestedStaircase(self.a + k, self.b + k, self.prefix, self.cycle)

    def index_of(self, u: Arc) -> Optional[int]:
        if u.kind != UPPER:
            return None
        # n is determined by the total growth b - a of the member
        growth = (u.j - u.i) - (self.b - self.a)
        if growth < 0:
            return None
        return growth if self.member(growth) == u else None

    def removed(self, u: Arc):
        n = self.index_of(u)
        if n is None:
            raise KeyError(f"{u} is not a member of {self}")
        extra = [self.member(m) for m in range(n)]
        nxt = self.member(n + 1)
        word = self.prefix + self.cycle
        consumed = n + 1
        if consumed <= len(self.prefix):
            pfx = self.prefix[consumed:]
            cyc = self.cycle
        else:
            r = (consumed - len(self.prefix)) % len(self.cycle)
            pfx = ""
            cyc = self.cycle[r:] + self.cycle[:r]
        return extra, [NestedStaircase(nxt.i, nxt.j, pfx, cyc)]

    def to_json(self) -> dict:
        return {
            "kind": "nested",
            "a": self.a,
            "b": self.b,
            "word": {"prefix": self.prefix, "cycle": self.cycle},
        }


ArcFamily = UpperFan | LowerFan | ConnFanUpper | ConnFanLower | Periodic | NestedStaircase

FAN_KINDS = (UpperFan, LowerFan, ConnFanUpper, ConnFanLower)


# -- generic family queries --------------------------------------------------------


def family_contains(f: ArcFamily, u: Arc) -> bool:
    return any(t.contains(u) for t in f.templates())


def crosses_family(f: ArcFamily, u: Arc) -> bool:
    """True iff some member of the family crosses u; closed form."""
    return any(t.crosses(u) for t in f.templates())


def family_members_in_window(f: ArcFamily, lo: int, hi: int) -> list[Arc]:
    seen = set()
    for t in f.templates():
        seen.update(t.members_in_window(lo, hi))
    return sorted(seen)


def family_sample(f: ArcFamily, depth: int = 4) -> list[Arc]:
    """A few members off every template tail, for representative checks."""
    out = []
    for t in f.templates():
        lo, hi = t.kmin, t.kmax
        if lo is not None and hi is not None:
            ks = range(lo, min(hi, lo + depth - 1) + 1)
        elif lo is not None:
            ks = range(lo, lo + depth)
        elif hi is not None:
            ks = range(hi - depth + 1, hi + 1)
        else:
            raise RuntimeError("template with unbounded parameter on both sides")
        out.extend(t.at(k) for k in ks)
    return sorted(set(out))


def family_generates_connecting(f: ArcFamily) -> bool:
    return any(t.kind == CONNECTING for t in f.templates())


def family_from_json(obj: dict) -> ArcFamily:
    from .arcs import parse_arc

    kind = obj.get("kind")
    if kind == "upper_fan":
        return UpperFan(int(obj["base"]), int(obj["start"]), str(obj["dir"]))
    if kind == "lower_fan":
        return LowerFan(int(obj["base"]), int(obj["start"]), str(obj["dir"]))
    if kind == "conn_fan_upper":
        return ConnFanUpper(int(obj["base"]), int(obj["start"]), str(obj["dir"]))
    if kind == "conn_fan_lower":
        return ConnFanLower(int(obj["base"]), int(obj["start"]), str(obj["dir"]))
    if kind == "periodic":
        return Periodic(
            tuple(parse_arc(s) for s in obj["seed"]),
            int(obj.get("period", 1)),
            str(obj.get("dir", BOTH)),
            int(obj["period_lower"]) if "period_lower" in obj else None,
        )
    if kind == "nested":
        word = obj.get("word", {})
        return NestedStaircase(
            int(obj["a"]), int(obj["b"]), str(word.get("prefix", "")), str(word.get("cycle", "LR"))
        )
    raise ValueError(f"unknown family kind {kind!r}")
