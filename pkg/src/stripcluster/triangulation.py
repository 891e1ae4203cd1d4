"""Triangulation descriptions and their certification.

A triangulation is described by a finite explicit arc set plus a catalog of
infinite tail families.  Validation checks pairwise non-crossing (closed
form against family tails, representatives for family pairs), windowed
maximality by exhaustive search, and certifies maximality-at-infinity only
for the documented catalog shapes:

* fountain-ended: every fan family belongs to a complete fountain group
  (boundary fan plus connecting fan at one base and side, or the four
  families of a full fountain), and both ends of the strip are covered by
  a fountain;
* periodic: shift-periodic connecting staircases covering both directions,
  where window maximality over one period transports to every window by
  shift equivariance;
* split nested: one nested staircase covering the whole upper line plus a
  two-sided lower fan pair, with no connecting arcs.

Family sets outside this catalog are never silently accepted: the report
comes back uncertified with an explanatory note.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .arcs import (
    Arc,
    CONNECTING,
    MarkedPoint,
    arcs_in_window,
    ccw_key,
    conn_leq,
    cross,
    hshift,
    translate,
)
from .families import (
    ArcFamily,
    BOTH,
    ConnFanLower,
    ConnFanUpper,
    EMPTY as LIN_EMPTY,
    LEFT,
    LowerFan,
    NestedStaircase,
    Periodic,
    RIGHT,
    Template,
    UpperFan,
    _isect as _lin_isect,
    _lt as _lin_lt,
    crosses_family,
    family_contains,
    family_from_json,
    family_generates_connecting,
    family_members_in_window,
    family_sample,
)


class InvalidDescription(ValueError):
    """Structurally malformed triangulation description."""


class UncertifiedError(ValueError):
    """Operation requires a certified-maximal description."""


class IncomparableChainError(ValueError):
    """Two connecting arcs fail to be comparable (description not valid)."""


class NotCompactError(ValueError):
    """Operation requires a compact triangulation."""


@dataclass(frozen=True)
class FountainInfo:
    base: MarkedPoint
    kind: str  # "left" | "right" | "full"


@dataclass(frozen=True)
class ValidationReport:
    pairwise_noncrossing: bool
    window_maximal: bool
    certified_maximal: bool
    counterexample: Optional[Arc] = None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class TriangulationDesc:
    explicit: frozenset[Arc]
    families: tuple[ArcFamily, ...]
    window: tuple[int, int]

    def __post_init__(self) -> None:
        if self.window[0] > self.window[1]:
            raise InvalidDescription("declared window must satisfy lo <= hi")

    # -- membership and crossing -------------------------------------------------

    def contains(self, u: Arc) -> bool:
        return u in self.explicit or any(family_contains(f, u) for f in self.families)

    def crosses(self, u: Arc) -> bool:
        """True iff some member of the description crosses u."""
        return any(cross(v, u) for v in self.explicit) or any(
            crosses_family(f, u) for f in self.families
        )

    def blocks(self, u: Arc) -> bool:
        return self.contains(u) or self.crosses(u)

    def members_in_window(self, lo: int, hi: int) -> list[Arc]:
        out = {u for u in self.explicit if _inside(u, lo, hi)}
        for f in self.families:
            out.update(family_members_in_window(f, lo, hi))
        return sorted(out)

    def has_connecting(self) -> bool:
        return any(u.kind == CONNECTING for u in self.explicit) or any(
            family_generates_connecting(f) for f in self.families
        )

    # -- derived descriptions ------------------------------------------------------

    def translated(self, k: int) -> "TriangulationDesc":
        return TriangulationDesc(
            frozenset(translate(u, k) for u in self.explicit),
            tuple(family_translated(f, k) for f in self.families),
            (self.window[0] + k, self.window[1] + k),
        )

    def hshifted(self, k: int) -> "TriangulationDesc":
        return TriangulationDesc(
            frozenset(hshift(u, k) for u in self.explicit),
            tuple(f.hshifted(k) for f in self.families),
            (self.window[0] + k, self.window[1] + k),
        )

    def without(self, old: Arc) -> "TriangulationDesc":
        """The description minus one arc; family membership of the removed
        arc is folded into the explicit core (widening the declared window
        over the folded arcs)."""
        if old in self.explicit:
            return TriangulationDesc(self.explicit - {old}, self.families, self.window)
        for t, f in enumerate(self.families):
            if family_contains(f, old):
                extra, repl = f.removed(old)
                fams = self.families[:t] + tuple(repl) + self.families[t + 1 :]
                explicit = self.explicit | set(extra)
                return TriangulationDesc(explicit, fams, _hull(self.window, explicit))
        raise KeyError(f"{old} is not a member of the description")

    def with_replacement(self, old: Arc, new: Arc) -> "TriangulationDesc":
        """The description with one arc exchanged."""
        base = self.without(old)
        explicit = base.explicit | {new}
        return TriangulationDesc(explicit, base.families, _hull(base.window, explicit))

    # -- serialization --------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "arcs": [str(u) for u in sorted(self.explicit)],
            "families": [f.to_json() for f in self.families],
            "window": list(self.window),
        }

    @staticmethod
    def from_json(obj: dict) -> "TriangulationDesc":
        from .arcs import parse_arc

        try:
            arcs = frozenset(parse_arc(s) for s in obj.get("arcs", []))
            fams = tuple(family_from_json(fo) for fo in obj.get("families", []))
            window = tuple(int(x) for x in obj["window"])
        except (KeyError, TypeError) as exc:
            raise InvalidDescription(f"bad triangulation object: {exc}") from exc
        return TriangulationDesc(arcs, fams, window)  # type: ignore[arg-type]


def _inside(u: Arc, lo: int, hi: int) -> bool:
    return lo <= u.i <= hi and lo <= u.j <= hi


def _hull(window: tuple[int, int], arcs) -> tuple[int, int]:
    lo, hi = window
    for u in arcs:
        lo = min(lo, u.i, u.j)
        hi = max(hi, u.i, u.j)
    return (lo, hi)


def family_translated(f: ArcFamily, k: int) -> ArcFamily:
    """Apply the arc translation to every member of a family."""
    if isinstance(f, UpperFan):
        return UpperFan(f.base + k, f.start + k, f.dir)
    if isinstance(f, LowerFan):
        return LowerFan(f.base + k, f.start + k, f.dir)
    if isinstance(f, ConnFanUpper):
        return ConnFanUpper(f.base + k, f.start + k, f.dir)
    if isinstance(f, ConnFanLower):
        return ConnFanLower(f.base + k, f.start + k, f.dir)
    if isinstance(f, Periodic):
        return Periodic(tuple(translate(s, k) for s in f.seed), f.period, f.dir, f.period_lower)
    if isinstance(f, NestedStaircase):
        return NestedStaircase(f.a + k, f.b + k, f.prefix, f.cycle)
    raise TypeError(f"unknown family {f!r}")


# -- incidence machinery ------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryEdge:
    """Edge between two adjacent marked points on one boundary line."""

    a: MarkedPoint
    b: MarkedPoint

    def __post_init__(self) -> None:
        if self.a.side is not self.b.side or abs(self.a.index - self.b.index) != 1:
            raise ValueError(f"not a boundary edge: {self.a}, {self.b}")

    def __str__(self) -> str:
        return f"edge({self.a},{self.b})"


@dataclass(frozen=True)
class FanMarker:
    """Stands for an infinite pencil of incident arcs in an incidence list."""

    family: ArcFamily

    def __str__(self) -> str:
        return f"fan[{self.family.to_json()['kind']}:{self.family.to_json()['dir']}]"


@dataclass(frozen=True)
class TailNeighbor:
    """Immediate neighbor lies inside an infinite fan tail (no nearest arc)."""

    family: ArcFamily


class _Ray:
    """Members of one template incident to a point, over an unbounded
    parameter range: an infinite pencil with keys in arithmetic progression
    inside a single sweep block."""

    def __init__(self, p: MarkedPoint, family: ArcFamily, t: Template, form_idx: int, krange):
        self.p = p
        self.family = family
        self.t = t
        self.klo, self.khi = krange
        forms = t.endpoint_forms()
        self.other_side, (self.m, self.c) = forms[1 - form_idx]
        if self.m == 0:
            raise InvalidDescription(f"degenerate family template {t} at {p}")
        sample_k = self.klo if self.klo is not None else self.khi
        other = MarkedPoint(self.other_side, self.m * sample_k + self.c)
        self.block = ccw_key(p, other)[0]

    def key_s(self, k: int) -> int:
        return -(self.m * k + self.c)

    def arc_at(self, k: int) -> Arc:
        return self.t.at(k)

    def k_of(self, u: Arc) -> Optional[int]:
        return self.t.k_of(u)

    def _k_in_range(self, k: int) -> bool:
        if self.klo is not None and k < self.klo:
            return False
        if self.khi is not None and k > self.khi:
            return False
        return True

    def key_bounds(self) -> tuple[Optional[int], Optional[int]]:
        """(min_s, max_s) over the range; None marks an unbounded side."""
        ends = []
        for k in (self.klo, self.khi):
            ends.append(None if k is None else self.key_s(k))
        s_at_lo, s_at_hi = ends
        if -self.m > 0:  # key_s increasing in k
            return (s_at_lo, s_at_hi)
        return (s_at_hi, s_at_lo)

    def _key_halfplane(self, s0: int, want_above: bool):
        """k-interval on which key_s(k) lies strictly beyond s0."""
        form = (-self.m, -self.c)  # key_s as an affine form in k
        cond = _lin_lt((0, s0), form) if want_above else _lin_lt(form, (0, s0))
        return _lin_isect((self.klo, self.khi), cond)

    def nearest(self, ku: tuple[int, int], side: int):
        """Nearest member strictly beyond key ku in the given direction:
        ("arc", key, arc), ("tail",), or None."""
        blk, s0 = ku
        s_min, s_max = self.key_bounds()
        if self.block == blk:
            r = self._key_halfplane(s0, want_above=side > 0)
            if r == LIN_EMPTY:
                return None
            # extreme-key element: slope of key_s is -self.m
            if (side > 0) == (-self.m > 0):
                k = r[0]
            else:
                k = r[1]
            if k is None:
                raise RuntimeError("unbounded nearest-key search; ray degenerate")
            return ("arc", (self.block, self.key_s(k)), self.arc_at(k))
        if side > 0 and self.block > blk:
            if s_min is None:
                return ("tail",)
            return ("arc", (self.block, s_min), self._arc_with_s(s_min))
        if side < 0 and self.block < blk:
            if s_max is None:
                return ("tail",)
            return ("arc", (self.block, s_max), self._arc_with_s(s_max))
        return None

    def _arc_with_s(self, s: int) -> Arc:
        k = (-s - self.c) // self.m
        return self.arc_at(k)

    def has_key_strictly_between(self, ka: tuple[int, int], kb: tuple[int, int]) -> bool:
        """Any member with ka < key < kb?"""
        if self.block < ka[0] or self.block > kb[0]:
            return False
        r = (self.klo, self.khi)
        if ka[0] == self.block:
            r = _lin_isect(r, self._key_halfplane(ka[1], want_above=True))
        if kb[0] == self.block:
            r = _lin_isect(r, self._key_halfplane(kb[1], want_above=False))
        return r != LIN_EMPTY


def _point_data(desc: TriangulationDesc, p: MarkedPoint):
    """Finite incident arcs (key -> arc) and infinite incident rays at p."""
    finite: dict[tuple[int, int], Arc] = {}
    rays: list[_Ray] = []

    def add(u: Arc) -> None:
        key = ccw_key(p, u.other_endpoint(p))
        old = finite.get(key)
        if old is not None and old != u:
            raise InvalidDescription(f"two arcs {old}, {u} with the same sweep position at {p}")
        finite[key] = u

    for u in desc.explicit:
        if u.has_endpoint(p):
            add(u)
    for f in desc.families:
        for t in f.templates():
            for form_idx, (klo, khi) in t.point_hits(p):
                if klo is not None and khi is not None:
                    for k in range(klo, khi + 1):
                        add(t.at(k))
                else:
                    rays.append(_Ray(p, f, t, form_idx, (klo, khi)))
    return finite, rays


def neighbor(desc: TriangulationDesc, u: Arc, p: MarkedPoint, side: int):
    """Immediate CCW neighbor of u at its endpoint p.

    side=+1 for the successor, -1 for the predecessor.  Returns an Arc, a
    BoundaryEdge when the sweep ends at the boundary, or a TailNeighbor
    when an infinite fan accumulates against u with no nearest member.
    """
    if not u.has_endpoint(p):
        raise KeyError(f"{p} is not an endpoint of {u}")
    finite, rays = _point_data(desc, p)
    ku = ccw_key(p, u.other_endpoint(p))

    best_key = None
    best_val: object = None
    for key, a in finite.items():
        if a == u:
            continue
        if (side > 0 and key > ku) or (side < 0 and key < ku):
            if best_key is None or (side > 0 and key < best_key) or (side < 0 and key > best_key):
                best_key, best_val = key, a
    for ray in rays:
        res = ray.nearest(ku, side)
        if res is None:
            continue
        if res[0] == "tail":
            # effective key hugs the block boundary facing u
            key = (ray.block, -math.inf) if side > 0 else (ray.block, math.inf)
            val: object = TailNeighbor(ray.family)
        else:
            _, key, val = res
            if val == u:
                continue
        if best_key is None or (side > 0 and key < best_key) or (side < 0 and key > best_key):
            best_key, best_val = key, val
    if best_val is not None:
        return best_val
    q = MarkedPoint(p.side, p.index + side)
    a, b = (p, q) if p.index < q.index else (q, p)
    return BoundaryEdge(a, b)


def exists_member_between(
    desc: TriangulationDesc, p: MarkedPoint, m1: MarkedPoint, m2: MarkedPoint
) -> bool:
    """Is some member at p strictly between the sweep positions of m1, m2?"""
    ka, kb = ccw_key(p, m1), ccw_key(p, m2)
    if ka > kb:
        ka, kb = kb, ka
    finite, rays = _point_data(desc, p)
    if any(ka < key < kb for key in finite):
        return True
    return any(ray.has_key_strictly_between(ka, kb) for ray in rays)


def incidence_at(
    desc: TriangulationDesc, p: MarkedPoint, window: Optional[tuple[int, int]] = None
) -> list:
    """CCW-ordered incidence list at p: arcs, with each infinite pencil
    collapsed to a FanMarker at its sweep position (or unfolded to its
    members inside the window when one is given)."""
    finite, rays = _point_data(desc, p)
    items: list[tuple] = [(key, u) for key, u in finite.items()]
    for ray in rays:
        if window is not None:
            r = ray.t.ks_in_window(window[0], window[1])
            if r is not None:
                for k in range(r[0], r[1] + 1):
                    items.append(((ray.block, ray.key_s(k)), ray.arc_at(k)))
            continue
        s_min, s_max = ray.key_bounds()
        pos = (ray.block, -math.inf if s_min is None else s_min)
        items.append((pos, FanMarker(ray.family)))
    items.sort(key=lambda kv: kv[0])
    return [v for _, v in items]


# -- validation ----------------------------------------------------------------------


def _structural_check(desc: TriangulationDesc) -> None:
    for u in desc.explicit:
        if not _inside(u, *desc.window):
            raise InvalidDescription(f"explicit arc {u} outside the declared window {desc.window}")
        for f in desc.families:
            if family_contains(f, u):
                raise InvalidDescription(f"explicit arc {u} duplicates a member of {f}")
    samples = [family_sample(f, _sample_depth(f)) for f in desc.families]
    for s, f in zip(samples, desc.families):
        if len(s) != len(set(s)):
            raise InvalidDescription(f"family {f} generates repeated arcs")
    for a in range(len(desc.families)):
        for b in range(len(desc.families)):
            if a == b:
                continue
            for u in samples[a]:
                if family_contains(desc.families[b], u):
                    raise InvalidDescription(
                        f"families {desc.families[a]} and {desc.families[b]} share member {u}"
                    )


def _sample_depth(f: ArcFamily) -> int:
    if isinstance(f, Periodic):
        return 2 + len(f.seed)
    if isinstance(f, NestedStaircase):
        return len(f.prefix) + 2 * len(f.cycle) + 2
    return 3


def default_test_windows(desc: TriangulationDesc) -> list[tuple[int, int]]:
    lo, hi = desc.window
    return [(lo - 5, hi + 5)]


def validate(
    desc: TriangulationDesc, test_windows: Optional[Sequence[tuple[int, int]]] = None
) -> ValidationReport:
    """Check pairwise non-crossing and windowed maximality, and certify
    maximality at infinity for catalog-shaped family sets.

    Family tails are compared through the closed-form crossing predicate:
    each sampled member of one family is tested against the whole of every
    other family, in both directions.  Periodic and staircase tails repeat
    under their defining shift, which preserves crossing, so a crossing
    pair deep in two tails transports to one with a sampled member.
    """
    _structural_check(desc)
    notes: list[str] = []
    ok = True

    expl = sorted(desc.explicit)
    for s in range(len(expl)):
        for t in range(s + 1, len(expl)):
            if cross(expl[s], expl[t]):
                ok = False
                notes.append(f"explicit arcs cross: {expl[s]} x {expl[t]}")
    for u in expl:
        for f in desc.families:
            if crosses_family(f, u):
                ok = False
                notes.append(f"explicit arc {u} crosses family {f.to_json()['kind']}")
    for a, f in enumerate(desc.families):
        for u in family_sample(f, _sample_depth(f)):
            if crosses_family(f, u):
                ok = False
                notes.append(f"family {f.to_json()['kind']} crosses itself near {u}")
            for b, g in enumerate(desc.families):
                if a != b and crosses_family(g, u):
                    ok = False
                    notes.append(
                        f"families cross: {f.to_json()['kind']} member {u} x {g.to_json()['kind']}"
                    )

    if test_windows is None:
        test_windows = default_test_windows(desc)
    window_max = True
    counterexample = None
    for wlo, whi in test_windows:
        for u in arcs_in_window(wlo, whi):
            if not desc.blocks(u):
                window_max = False
                counterexample = u
                notes.append(f"window [{wlo},{whi}] misses {u}")
                break
        if not window_max:
            break

    catalog_ok, cat_note = _catalog_certified(desc)
    if not catalog_ok:
        notes.append(cat_note)
    certified = ok and window_max and catalog_ok
    return ValidationReport(ok, window_max, certified, counterexample, tuple(notes))


def _fountain_groups(desc: TriangulationDesc) -> dict[tuple[MarkedPoint, str], dict[str, bool]]:
    """For each (base, side): which of boundary fan / connecting fan exist."""
    groups: dict[tuple[MarkedPoint, str], dict[str, bool]] = {}
    for f in desc.families:
        base = f.base_point()
        if base is None:
            continue
        slot = groups.setdefault((base, f.dir), {"boundary": False, "connecting": False})
        slot["boundary" if f.boundary_fan() else "connecting"] = True
    return groups


def _catalog_certified(desc: TriangulationDesc) -> tuple[bool, str]:
    """Structural certification that windowed maximality extends to all arcs.

    Soundness of the three accepted shapes, given windowed maximality over
    the declared window inflated by 5:

    * Periodic staircases with connecting tails in both directions.  The
      generating shift preserves crossing, so for any arc u outside the
      checked window, some shift of u lands with its "core interaction
      zone" inside it, unless u is wider than a period; a wider arc spans
      a full period of the unbounded connecting chain and therefore covers
      a chain endpoint strictly inside itself, which is a crossing by the
      boundary-versus-connecting rules.

    * Fountain-ended descriptions.  A left fountain at an upper base p
      consists of boundary arcs [l_i, l_p] with i -> -inf and connecting
      arcs [l_p, r_j] with j -> +inf; together they sweep past every
      marked point on the left end of the strip (and dually on the right),
      so any arc with an endpoint beyond the checked window crosses a deep
      fan member: a boundary arc reaching past the base interleaves with
      arbitrarily long fan arcs, and a connecting arc not through the base
      crosses either the boundary half or the connecting half.  Arcs
      confined to the finite middle zone are covered by the window check.

    * Split nested staircases.  When the staircase cycle repeats both
      letters, the right endpoints of its members take every value above
      the seed and the left endpoints every value below it; an upper arc
      outside the window therefore strictly covers some staircase endpoint
      (a crossing), every connecting arc is eventually covered by a member
      spanning it, and the two-sided lower fan blocks every lower arc as
      in the fountain case.

    Anything else is rejected, never silently accepted.
    """
    fans = [f for f in desc.families if f.base_point() is not None]
    periodics = [f for f in desc.families if isinstance(f, Periodic)]
    nested = [f for f in desc.families if isinstance(f, NestedStaircase)]

    if not desc.families:
        return False, "uncertified: finite descriptions are never maximal"

    if periodics and not fans and not nested:
        dirs = set()
        for f in periodics:
            if not any(s.kind == CONNECTING for s in f.seed):
                return False, "uncertified: periodic family without connecting seed"
            dirs.update({LEFT, RIGHT} if f.dir == BOTH else {f.dir})
        if dirs >= {LEFT, RIGHT}:
            return True, ""
        return False, "uncertified: periodic tails do not cover both directions"

    if fans and not periodics and not nested:
        groups = _fountain_groups(desc)
        for (base, d), slot in groups.items():
            if not (slot["boundary"] and slot["connecting"]):
                return False, f"uncertified: incomplete fountain group at {base} ({d})"
        covered = {d for (_, d) in groups}
        bases = {base for (base, _) in groups}
        if len(bases) > 2:
            return False, "uncertified: more than two fountain bases"
        if covered >= {LEFT, RIGHT}:
            return True, ""
        return False, "uncertified: fountain groups do not cover both ends"

    if nested and not periodics:
        if len(nested) != 1:
            return False, "uncertified: more than one nested staircase"
        st = nested[0]
        if "L" not in st.cycle or "R" not in st.cycle:
            return False, "uncertified: staircase cycle must repeat both letters"
        lfans = [f for f in fans if isinstance(f, LowerFan)]
        if len(lfans) != len(fans):
            return False, "uncertified: split description with non-lower fans"
        bases = {f.base for f in lfans}
        dirs = {f.dir for f in lfans}
        if len(lfans) == 2 and len(bases) == 1 and dirs == {LEFT, RIGHT}:
            return True, ""
        return False, "uncertified: split description needs a two-sided lower fan pair"

    return False, "uncertified: family combination outside the catalog"


# -- compactness, fountains, chain ---------------------------------------------------


@lru_cache(maxsize=512)
def validate_cached(desc: TriangulationDesc) -> ValidationReport:
    """validate() with the default test windows, memoized per description."""
    return validate(desc)


def _require_certified(desc: TriangulationDesc, report: Optional[ValidationReport]) -> ValidationReport:
    rep = report if report is not None else validate_cached(desc)
    if not rep.certified_maximal:
        raise UncertifiedError(f"description is not certified maximal: {rep.notes}")
    return rep


def is_compact(
    desc: TriangulationDesc, report: Optional[ValidationReport] = None
) -> tuple[bool, Optional[str]]:
    """Compactness via the boundedness criterion: some connecting arc must
    exist and every marked point must be either an endpoint of finitely
    many arcs or of infinitely many connecting arcs.  On descriptions the
    only points with infinite incidence are fan bases."""
    _require_certified(desc, report)
    if not desc.has_connecting():
        return False, "no connecting arc"
    for f in desc.families:
        base = f.base_point()
        if base is None:
            continue
        has_conn_fan = any(
            g.base_point() == base and not g.boundary_fan() for g in desc.families
        )
        if not has_conn_fan:
            return False, f"unbounded point {base} with finitely many connecting arcs"
    return True, None


def fountains(
    desc: TriangulationDesc, report: Optional[ValidationReport] = None
) -> list[FountainInfo]:
    """Fountain bases: a side of a base counts only when both the boundary
    fan and the connecting fan on that side are infinite."""
    _require_certified(desc, report)
    groups = _fountain_groups(desc)
    sides: dict[MarkedPoint, set[str]] = {}
    for (base, d), slot in groups.items():
        if slot["boundary"] and slot["connecting"]:
            sides.setdefault(base, set()).add(d)
    out = []
    for base, ds in sorted(sides.items()):
        kind = "full" if ds == {LEFT, RIGHT} else next(iter(ds))
        out.append(FountainInfo(base, kind))
    _check_fountain_invariants(out)
    return out


def _check_fountain_invariants(fs: list[FountainInfo]) -> None:
    fulls = [f for f in fs if f.kind == "full"]
    if fulls and len(fs) > 1:
        raise InvalidDescription("a full fountain must be the only fountain")
    if len(fs) > 2:
        raise InvalidDescription("more than two fountains")
    if len(fs) == 2 and {f.kind for f in fs} != {LEFT, RIGHT}:
        raise InvalidDescription("two fountains must be one left and one right")


def component_count(
    desc: TriangulationDesc, report: Optional[ValidationReport] = None
) -> tuple[int, int, int]:
    """(full fountains, other fountains, quiver component count)."""
    rep = _require_certified(desc, report)
    compact, witness = is_compact(desc, rep)
    if not compact:
        raise NotCompactError(f"component count needs a compact triangulation: {witness}")
    fs = fountains(desc, rep)
    m = sum(1 for f in fs if f.kind == "full")
    n = len(fs) - m
    return m, n, 2 * m + n + 1


def connecting_chain(desc: TriangulationDesc, window: tuple[int, int]) -> list[Arc]:
    """Connecting members inside the window, sorted along the chain order."""
    members = [u for u in desc.members_in_window(*window) if u.kind == CONNECTING]
    for s in range(len(members)):
        for t in range(s + 1, len(members)):
            u, v = members[s], members[t]
            if not (conn_leq(u, v) or conn_leq(v, u)):
                raise IncomparableChainError(f"incomparable connecting arcs {u}, {v}")
    return sorted(members, key=lambda u: (u.i, -u.j))


# -- independent windowed checks (used by the verification suites) -------------------


def windowed_compactness_witness(
    desc: TriangulationDesc,
    u: Arc,
    inner: tuple[int, int],
    outer: tuple[int, int],
) -> bool:
    """Windowed probe of the finite-witness property for the crossing set
    of u: the members inside the inner window must already block every
    member inside the outer window, after translation either way."""
    crossers_inner = [v for v in desc.members_in_window(*inner) if cross(v, u)]
    crossers_outer = [v for v in desc.members_in_window(*outer) if cross(v, u)]
    plus = [translate(v, 1) for v in crossers_inner]
    minus = [translate(v, -1) for v in crossers_inner]
    for w in crossers_outer:
        if not any(cross(w, x) for x in plus):
            return False
        if not any(cross(w, x) for x in minus):
            return False
    return True
