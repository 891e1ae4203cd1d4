"""Interval modules over a line-quiver orientation, with exact Hom/Ext.

An interval module is one-dimensional over each vertex of an integer
interval, with identity maps along the supported arrows; these are exactly
the finite dimensional indecomposables here.  Hom dimensions come from the
commutativity constraints on per-vertex scalars, Ext from the projective
presentation, and the translate from Ext dimension vectors against the
indecomposable projectives.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .orientation import Orientation


@dataclass(frozen=True, order=True)
class Interval:
    """Support interval [lo, hi], lo <= hi."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"interval needs lo <= hi, got [{self.lo}, {self.hi}]")

    def __contains__(self, v: int) -> bool:
        return self.lo <= v <= self.hi

    def __len__(self) -> int:
        return self.hi - self.lo + 1

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


def simple(x: int) -> Interval:
    return Interval(x, x)


@lru_cache(maxsize=None)
def proj(o: Orientation, x: int) -> Interval:
    """P_x: the vertices reachable from x."""
    lo = x
    while o.letter(lo - 1) == "L":
        lo -= 1
    hi = x
    while o.letter(hi) == "R":
        hi += 1
    return Interval(lo, hi)


@lru_cache(maxsize=None)
def inj(o: Orientation, x: int) -> Interval:
    """I_x: the vertices from which x is reachable."""
    lo = x
    while o.letter(lo - 1) == "R":
        lo -= 1
    hi = x
    while o.letter(hi) == "L":
        hi += 1
    return Interval(lo, hi)


def peaks(o: Orientation, m: Interval) -> list[int]:
    """Local sources of the orientation restricted to the interval."""
    out = []
    for t in range(m.lo, m.hi + 1):
        if (t == m.lo or o.letter(t - 1) == "L") and (t == m.hi or o.letter(t) == "R"):
            out.append(t)
    return out


def inner_valleys(o: Orientation, m: Interval) -> list[int]:
    return [
        s
        for s in range(m.lo + 1, m.hi)
        if o.letter(s - 1) == "R" and o.letter(s) == "L"
    ]


def proj_presentation(o: Orientation, m: Interval) -> tuple[list[Interval], list[Interval]]:
    """Summands (P0, P1) of the presentation 0 -> P1 -> P0 -> m -> 0."""
    p0 = [proj(o, t) for t in peaks(o, m)]
    p1 = [proj(o, s) for s in inner_valleys(o, m)]
    if o.letter(m.lo - 1) == "L":
        p1.insert(0, proj(o, m.lo - 1))
    if o.letter(m.hi) == "R":
        p1.append(proj(o, m.hi + 1))
    return p0, p1


def is_projective(o: Orientation, m: Interval) -> bool:
    return not proj_presentation(o, m)[1]


def is_injective(o: Orientation, m: Interval) -> bool:
    inner_peaks = [
        t
        for t in range(m.lo + 1, m.hi)
        if o.letter(t - 1) == "L" and o.letter(t) == "R"
    ]
    return not inner_peaks and o.letter(m.lo - 1) == "L" and o.letter(m.hi) == "R"


def hom_rep(o: Orientation, m: Interval, n: Interval) -> int:
    """dim Hom(m, n): solution space of per-vertex scalars commuting with
    every arrow map.  Always 0 or 1 for intervals."""
    lo = max(m.lo, n.lo)
    hi = min(m.hi, n.hi)
    if lo > hi:
        return 0
    # union-find over the overlap, plus forced-zero flags
    parent = {x: x for x in range(lo, hi + 1)}
    zero = {x: False for x in range(lo, hi + 1)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for pos in range(min(m.lo, n.lo) - 1, max(m.hi, n.hi) + 1):
        s, t = o.arrow(pos)
        # scalar equation f_t * [s,t in m][t in n] = f_s * [s,t in n][s in m]
        left = s in m and t in m and t in n
        right = s in n and t in n and s in m
        if left and right:
            rs, rt = find(s), find(t)
            if rs != rt:
                parent[rs] = rt
                zero[rt] = zero[rt] or zero[rs]
        elif left:
            zero[find(t)] = True
        elif right:
            zero[find(s)] = True

    # push zero flags to roots, then count free classes
    for x in range(lo, hi + 1):
        if zero[x]:
            zero[find(x)] = True
    roots = {find(x) for x in range(lo, hi + 1)}
    return sum(1 for r in roots if not zero[r])


def ext_rep(o: Orientation, m: Interval, n: Interval) -> int:
    """dim Ext^1(m, n), as the cokernel of Hom(P0, n) -> Hom(P1, n)."""
    p0, p1 = proj_presentation(o, m)
    rank = sum(hom_rep(o, p, n) for p in p0) - hom_rep(o, m, n)
    dim = sum(hom_rep(o, p, n) for p in p1) - rank
    if dim < 0:
        raise RuntimeError(f"negative Ext dimension for {m}, {n}; presentation broken")
    return dim


def _dim_vector_interval(d: dict[int, int], what: str) -> Interval:
    ones = [x for x, v in d.items() if v == 1]
    if any(v not in (0, 1) for v in d.values()):
        raise RuntimeError(f"{what}: dimension vector not 0/1: {d}")
    if not ones:
        raise RuntimeError(f"{what}: empty dimension vector")
    lo, hi = min(ones), max(ones)
    if hi - lo + 1 != len(ones):
        raise RuntimeError(f"{what}: support not an interval: {sorted(ones)}")
    xs = sorted(d)
    if d[xs[0]] != 0 or d[xs[-1]] != 0:
        raise RuntimeError(f"{what}: scan window too narrow")
    return Interval(lo, hi)


@lru_cache(maxsize=None)
def tau(o: Orientation, m: Interval) -> Interval:
    """Translate of a non-projective interval, by the dimension vector
    d_x = dim Ext^1(m, P_x)."""
    if is_projective(o, m):
        raise ValueError(f"{m} is projective; it has no translate")
    _, p1 = proj_presentation(o, m)
    span_lo = min([p.lo for p in p1] + [m.lo])
    span_hi = max([p.hi for p in p1] + [m.hi])
    g = o.max_run + 2
    d = {
        x: ext_rep(o, m, proj(o, x))
        for x in range(span_lo - g, span_hi + g + 1)
    }
    return _dim_vector_interval(d, f"tau {m}")


@lru_cache(maxsize=None)
def tau_inv(o: Orientation, m: Interval) -> Interval:
    """Inverse translate of a non-injective interval, by the dimension
    vector d_x = dim Ext^1(I_x, m)."""
    if is_injective(o, m):
        raise ValueError(f"{m} is injective; it has no inverse translate")
    g = o.max_run + 2
    d = {
        x: ext_rep(o, inj(o, x), m)
        for x in range(m.lo - 3 * g, m.hi + 3 * g + 1)
    }
    return _dim_vector_interval(d, f"tau_inv {m}")
