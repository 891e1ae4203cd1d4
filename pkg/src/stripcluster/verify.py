"""Cross-validation sweeps between the arc model and the oracle.

These are the machine-checkable bridges: Hom/Ext dimensions computed by
exact linear algebra on the oracle side must match the crossing-based
dimensions of the corresponding arcs, pair by pair, and the projectives'
arcs must assemble into a certified compact triangulation whose quiver is
the opposite orientation.
"""

from __future__ import annotations

from dataclasses import dataclass

from .arcs import Arc
from .catalog import projective_chain_arc, projectives_desc
from .cluster import ext_dim, hom_dim, quiver
from .oracle.intervals import Interval
from .oracle.knitting import (
    FundDomainObject,
    WindowError,
    ext_orbit,
    fd_conn,
    fd_reg_l,
    fd_reg_r,
    grid_level,
    hom_orbit,
    phi,
    realize,
)
from .oracle.orientation import Orientation
from .triangulation import is_compact, validate


def _fits(m, window: tuple[int, int]) -> bool:
    return isinstance(m, Interval) and window[0] <= m.lo and m.hi <= window[1]


def fund_domain_objects(o: Orientation, window: tuple[int, int]) -> list[FundDomainObject]:
    """Fundamental-domain objects whose first three translates are all
    modules realizable inside the window."""
    lo, hi = window
    bound = (hi - lo) + 4
    out: list[FundDomainObject] = []
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            if grid_level(o, i, j) < 2:
                continue
            x = fd_conn(i, j)
            if all(_fits(realize(o, x.translated(t)), window) for t in range(3)):
                out.append(x)
    for i in range(-bound, bound + 1):
        for j in range(-bound, bound + 1):
            for mk, ok in ((fd_reg_l, i <= j), (fd_reg_r, i >= j)):
                if not ok:
                    continue
                x = mk(i, j)
                if all(_fits(realize(o, x.translated(t)), window) for t in range(3)):
                    out.append(x)
    return out


@dataclass
class DictionaryReport:
    objects: int
    pairs: int
    hom_mismatches: int
    ext_mismatches: int
    skipped: int

    @property
    def ok(self) -> bool:
        return self.hom_mismatches == 0 and self.ext_mismatches == 0

    def to_json(self) -> dict:
        return {
            "objects": self.objects,
            "pairs": self.pairs,
            "hom_mismatches": self.hom_mismatches,
            "ext_mismatches": self.ext_mismatches,
            "skipped": self.skipped,
            "ok": self.ok,
        }


def dictionary_check(o: Orientation, window: tuple[int, int]) -> DictionaryReport:
    """Compare orbit-category Hom/Ext with the crossing dictionary over
    every realizable pair of fundamental-domain objects."""
    objs = fund_domain_objects(o, window)
    arcs = {x: phi(x) for x in objs}
    pairs = homm = extm = skipped = 0
    for x in objs:
        for y in objs:
            try:
                h = hom_orbit(o, x, y, window)
                e = ext_orbit(o, x, y, window)
            except WindowError:
                skipped += 1
                continue
            pairs += 1
            if h != hom_dim(arcs[x], arcs[y]):
                homm += 1
            if e != ext_dim(arcs[x], arcs[y]):
                extm += 1
    return DictionaryReport(len(objs), pairs, homm, extm, skipped)


def projectives_check(o: Orientation, span: int = 6) -> dict:
    """The projectives' arcs form a certified compact triangulation whose
    quiver on the chain matches the opposite orientation."""
    desc = projectives_desc(o)
    report = validate(desc)
    out = {
        "certified": report.certified_maximal,
        "compact": False,
        "quiver_matches_opposite": False,
    }
    if not report.certified_maximal:
        return out
    compact, _ = is_compact(desc, report)
    out["compact"] = compact
    if not compact:
        return out

    a0 = o.a0
    xs = range(a0 - span, a0 + span + 1)
    chain = {x: projective_chain_arc(o, x) for x in xs}
    idxs = [v for u in chain.values() for v in (u.i, u.j)]
    q = quiver(desc, (min(idxs) - 2, max(idxs) + 2), report)
    expected = set()
    for x in xs:
        src, dst = o.arrow(x)  # arrow src -> dst between x, x+1
        if src in chain and dst in chain:
            expected.add((chain[dst], chain[src]))  # opposite orientation
    got = {
        (a, b)
        for a, b in q.arrows
        if a in set(chain.values()) and b in set(chain.values())
    }
    out["quiver_matches_opposite"] = expected == got
    return out
