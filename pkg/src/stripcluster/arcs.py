"""Arc calculus on the marked infinite strip.

The strip has upper marked points ``l_i`` at plane position ``(i, 1)`` and
lower marked points ``r_j`` at ``(-j, 0)``; note the lower index grows
leftwards.  An arc joins two marked points that are not equal and not
adjacent on the same boundary line.  Everything here is exact integer
combinatorics; no floating point geometry is involved.

Arc kinds and their canonical strings:

* ``U(i,j)`` -- upper arc ``[l_i, l_j]`` with ``j >= i + 2``,
* ``D(i,j)`` -- lower arc ``[r_i, r_j]`` with ``i >= j + 2``,
* ``C(i,j)`` -- connecting arc ``[l_i, r_j]``, unrestricted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

I64_MIN = -(2**63)
I64_MAX = 2**63 - 1

UPPER = "U"
LOWER = "D"
CONNECTING = "C"

_KINDS = (UPPER, LOWER, CONNECTING)


class Side(Enum):
    UPPER = "upper"
    LOWER = "lower"


def _check_i64(*values: int) -> None:
    for v in values:
        if not (I64_MIN <= v <= I64_MAX):
            raise OverflowError(f"index {v} outside signed 64-bit range")


@dataclass(frozen=True, order=True)
class MarkedPoint:
    """A marked point on one of the two boundary lines."""

    side: Side
    index: int

    def __post_init__(self) -> None:
        _check_i64(self.index)

    def __str__(self) -> str:
        return ("l_%d" if self.side is Side.UPPER else "r_%d") % self.index


def upper_point(i: int) -> MarkedPoint:
    return MarkedPoint(Side.UPPER, i)


def lower_point(j: int) -> MarkedPoint:
    return MarkedPoint(Side.LOWER, j)


@dataclass(frozen=True, order=True)
class Arc:
    """An arc of the strip, encoded by kind and two endpoint indices."""

    kind: str
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError(f"unknown arc kind {self.kind!r}")
        _check_i64(self.i, self.j)
        if self.kind == UPPER and self.j < self.i + 2:
            raise ValueError(f"U({self.i},{self.j}): upper arc needs j >= i + 2")
        if self.kind == LOWER and self.i < self.j + 2:
            raise ValueError(f"D({self.i},{self.j}): lower arc needs i >= j + 2")

    def endpoints(self) -> tuple[MarkedPoint, MarkedPoint]:
        if self.kind == UPPER:
            return upper_point(self.i), upper_point(self.j)
        if self.kind == LOWER:
            return lower_point(self.i), lower_point(self.j)
        return upper_point(self.i), lower_point(self.j)

    def has_endpoint(self, p: MarkedPoint) -> bool:
        a, b = self.endpoints()
        return p == a or p == b

    def other_endpoint(self, p: MarkedPoint) -> MarkedPoint:
        a, b = self.endpoints()
        if p == a:
            return b
        if p == b:
            return a
        raise KeyError(f"{p} is not an endpoint of {self}")

    def is_connecting(self) -> bool:
        return self.kind == CONNECTING

    def __str__(self) -> str:
        return f"{self.kind}({self.i},{self.j})"


def upper(i: int, j: int) -> Arc:
    return Arc(UPPER, i, j)


def lower(i: int, j: int) -> Arc:
    return Arc(LOWER, i, j)


def conn(i: int, j: int) -> Arc:
    return Arc(CONNECTING, i, j)


def arc_between(p: MarkedPoint, q: MarkedPoint) -> Arc:
    """The arc with endpoint set {p, q}; raises ValueError on edges."""
    if p.side is q.side:
        lo, hi = sorted((p.index, q.index))
        if hi - lo < 2:
            raise ValueError(f"{{{p}, {q}}} is an edge or a point, not an arc")
        if p.side is Side.UPPER:
            return upper(lo, hi)
        return lower(hi, lo)
    if p.side is Side.LOWER:
        p, q = q, p
    return conn(p.index, q.index)


def is_arc_pair(p: MarkedPoint, q: MarkedPoint) -> bool:
    if p.side is not q.side:
        return True
    return abs(p.index - q.index) >= 2


def cross(u: Arc, v: Arc) -> bool:
    """True iff (u, v) is a crossing pair.

    Symmetric, irreflexive, and false whenever the arcs share an endpoint.
    """
    a, b = u.kind, v.kind
    if a == b == UPPER:
        return u.i < v.i < u.j < v.j or v.i < u.i < v.j < u.j
    if a == b == LOWER:
        return u.i > v.i > u.j > v.j or v.i > u.i > v.j > u.j
    if a == b == CONNECTING:
        return (u.i > v.i and u.j > v.j) or (u.i < v.i and u.j < v.j)
    if {a, b} == {UPPER, LOWER}:
        return False
    if a != CONNECTING:
        u, v = v, u  # now u connecting, v boundary arc
    if v.kind == UPPER:
        return v.i < u.i < v.j
    return v.i > u.j > v.j


def translate(u: Arc, k: int = 1) -> Arc:
    """The k-th translate: every endpoint index shifted by k, kind kept."""
    _check_i64(u.i + k, u.j + k)
    return Arc(u.kind, u.i + k, u.j + k)


def hshift(u: Arc, k: int = 1) -> Arc:
    """Re-index u under the horizontal plane shift x -> x + k.

    Upper indices move with the shift, lower indices against it (the lower
    point ``r_j`` sits at ``x = -j``).  Preserves crossing and non-crossing:
    every crossing rule only compares upper indices with upper ones and
    lower with lower.
    """
    if u.kind == UPPER:
        return translate(u, k)
    if u.kind == LOWER:
        return translate(u, -k)
    _check_i64(u.i + k, u.j - k)
    return conn(u.i + k, u.j - k)


def hshift_point(p: MarkedPoint, k: int = 1) -> MarkedPoint:
    delta = k if p.side is Side.UPPER else -k
    return MarkedPoint(p.side, p.index + delta)


def conn_leq(u: Arc, v: Arc) -> bool:
    """Partial order on connecting arcs: C(i,j) <= C(r,s) iff i <= r, j >= s."""
    if u.kind != CONNECTING or v.kind != CONNECTING:
        raise ValueError("conn_leq is defined on connecting arcs only")
    return u.i <= v.i and u.j >= v.j


def ccw_key(p: MarkedPoint, m: MarkedPoint) -> tuple[int, int]:
    """Sort key for the counter-clockwise sweep of arcs at p.

    Arcs at p are ordered by their other endpoint m; smaller key = earlier
    in the sweep.  The order is linear (no cyclic wrap): same-side points
    before p, then every opposite-side point, then same-side points after
    p, each block by descending index.
    """
    if not is_arc_pair(p, m):
        raise ValueError(f"{{{p}, {m}}} is not an arc endpoint pair")
    if m.side is not p.side:
        return (1, -m.index)
    if m.index <= p.index - 2:
        return (0, -m.index)
    return (2, -m.index)


def ccw_precedes(p: MarkedPoint, m1: MarkedPoint, m2: MarkedPoint) -> bool:
    """True iff m1 strictly precedes m2 in the CCW sweep of arcs at p."""
    if m1 == m2:
        raise ValueError("ccw_precedes needs two distinct endpoints")
    return ccw_key(p, m1) < ccw_key(p, m2)


def shared_endpoint(u: Arc, v: Arc) -> MarkedPoint | None:
    """The unique common endpoint of two distinct arcs, or None."""
    if u == v:
        return None
    ue = u.endpoints()
    for p in v.endpoints():
        if p in ue:
            return p
    return None


def rotates_to(u: Arc, v: Arc) -> bool:
    """True iff v is reached from u by rotating CCW about a shared endpoint."""
    p = shared_endpoint(u, v)
    if p is None:
        return False
    return ccw_precedes(p, u.other_endpoint(p), v.other_endpoint(p))


_ARC_RE = re.compile(r"([UDC])\((-?\d+),(-?\d+)\)\Z")


class ArcParseError(ValueError):
    """Malformed arc string; carries the offending position."""

    def __init__(self, text: str, pos: int, reason: str):
        super().__init__(f"cannot parse arc {text!r} at position {pos}: {reason}")
        self.text = text
        self.pos = pos


def parse_arc(text: str) -> Arc:
    """Parse a canonical arc string such as ``C(0,-1)``."""
    s = text.strip()
    if not s:
        raise ArcParseError(text, 0, "empty string")
    if s[0] not in _KINDS:
        raise ArcParseError(text, 0, "kind must be one of U, D, C")
    m = _ARC_RE.match(s)
    if m is None:
        # locate the first character where the shape breaks down
        probe = re.match(r"[UDC]\((-?\d+)?(,)?(-?\d+)?(\))?", s)
        pos = probe.end() if probe else 1
        raise ArcParseError(text, pos, "expected K(i,j) with integer i, j")
    kind, i, j = m.group(1), int(m.group(2)), int(m.group(3))
    try:
        return Arc(kind, i, j)
    except (ValueError, OverflowError) as exc:
        raise ArcParseError(text, 1, str(exc)) from exc


def format_arc(u: Arc) -> str:
    return str(u)


def arc_to_json(u: Arc) -> dict:
    return {"k": u.kind, "i": u.i, "j": u.j}


def arc_from_json(obj: dict) -> Arc:
    try:
        return Arc(str(obj["k"]), int(obj["i"]), int(obj["j"]))
    except KeyError as exc:
        raise ValueError(f"arc object missing key {exc}") from exc


def arcs_in_window(lo: int, hi: int) -> Iterator[Arc]:
    """Every arc whose endpoint indices both lie in [lo, hi]."""
    if lo > hi:
        raise ValueError("window must satisfy lo <= hi")
    for i in range(lo, hi + 1):
        for j in range(i + 2, hi + 1):
            yield upper(i, j)
            yield lower(j, i)
    for i in range(lo, hi + 1):
        for j in range(lo, hi + 1):
            yield conn(i, j)
