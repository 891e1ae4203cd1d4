"""Cluster operations on arcs: Hom/Ext dimensions, flips, and quivers.

All Hom-level data is read off crossing: two arcs have an extension
between them iff they cross, and a nonzero morphism iff the target crosses
the translate of the source.  Flips exchange the diagonals of the two
triangles adjacent to an arc; quiver arrows are the covers of the
counter-clockwise rotation relation.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .arcs import (
    Arc,
    CONNECTING,
    UPPER,
    MarkedPoint,
    arc_between,
    conn,
    cross,
    is_arc_pair,
    lower,
    rotates_to,
    translate,
    upper,
)
from .triangulation import (
    NotCompactError,
    TailNeighbor,
    TriangulationDesc,
    ValidationReport,
    is_compact,
    neighbor,
)


class NotMemberError(KeyError):
    """The arc is not a member of the triangulation."""


class NoQuadrilateralError(ValueError):
    """An adjacent triangle is missing; the arc cannot be flipped."""


class FrontierVertexError(ValueError):
    """Mutation at a vertex with an incomplete windowed neighborhood."""


def ext_dim(u: Arc, v: Arc) -> int:
    """dim Ext^1 between the objects of two arcs: 1 iff they cross."""
    return 1 if cross(u, v) else 0


def hom_dim(u: Arc, v: Arc) -> int:
    """dim Hom from the object of u to the object of v."""
    return 1 if cross(v, translate(u, 1)) else 0


def ar_neighbors(u: Arc) -> set[Arc]:
    """Targets of the irreducible maps out of u's object."""
    out: set[Arc] = set()
    if u.kind == CONNECTING:
        out.add(conn(u.i, u.j - 1))
        out.add(conn(u.i - 1, u.j))
    elif u.kind == UPPER:
        if u.i < u.j - 2:
            out.add(upper(u.i, u.j - 1))
        out.add(upper(u.i - 1, u.j))
    else:
        if u.i > u.j + 2:
            out.add(lower(u.i - 1, u.j))
        out.add(lower(u.i, u.j - 1))
    return out


# -- flips ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Quadrilateral:
    """The two triangles adjacent to a diagonal, as a four-sided frame."""

    diagonal: Arc
    corners: tuple[MarkedPoint, MarkedPoint, MarkedPoint, MarkedPoint]  # p, z1, q, z2
    sides: tuple
    other_diagonal: Arc


def _triangle_corner(desc: TriangulationDesc, u: Arc, p: MarkedPoint, q: MarkedPoint, side: int):
    """Third corner of the triangle on one side of u, found from both
    endpoints independently; they must agree."""
    np_ = neighbor(desc, u, p, side)
    nq = neighbor(desc, u, q, -side)
    for n in (np_, nq):
        if isinstance(n, TailNeighbor):
            raise NoQuadrilateralError(
                f"no adjacent triangle at {u}: an infinite fan accumulates against it"
            )
    zp = np_.other_endpoint(p) if isinstance(np_, Arc) else (np_.a if np_.b == p else np_.b)
    zq = nq.other_endpoint(q) if isinstance(nq, Arc) else (nq.a if nq.b == q else nq.b)
    if zp != zq:
        raise NoQuadrilateralError(
            f"no adjacent triangle at {u}: neighbours at {p} and {q} disagree ({zp} vs {zq})"
        )
    return zp, np_, nq


def quadrilateral(desc: TriangulationDesc, u: Arc) -> Quadrilateral:
    """The frame of the two triangles of the triangulation adjacent to u."""
    if not desc.contains(u):
        raise NotMemberError(f"{u} is not in the triangulation")
    p, q = u.endpoints()
    z1, s1p, s1q = _triangle_corner(desc, u, p, q, -1)
    z2, s2p, s2q = _triangle_corner(desc, u, p, q, +1)
    if z1 == z2 or not is_arc_pair(z1, z2):
        raise NoQuadrilateralError(f"degenerate quadrilateral around {u}")
    return Quadrilateral(u, (p, z1, q, z2), (s1p, s1q, s2q, s2p), arc_between(z1, z2))


def flip(desc: TriangulationDesc, u: Arc) -> tuple[TriangulationDesc, Arc]:
    """Exchange u for the other diagonal of its quadrilateral."""
    quad = quadrilateral(desc, u)
    new = quad.other_diagonal
    return desc.with_replacement(u, new), new


# -- quivers -------------------------------------------------------------------------


@dataclass(frozen=True)
class QuiverGraph:
    """Windowed quiver of a triangulation: vertices are arcs, arrows the
    covering pairs of the rotation order; frontier vertices may be missing
    arrows that leave the window."""

    vertices: tuple[Arc, ...]
    interior: frozenset[Arc]
    arrows: tuple[tuple[Arc, Arc], ...]

    def arrow_multiset(self, restrict_interior: bool = False) -> Counter:
        out: Counter = Counter()
        for a, b in self.arrows:
            if restrict_interior and (a not in self.interior or b not in self.interior):
                continue
            out[(a, b)] += 1
        return out

    def out_degree(self, u: Arc) -> int:
        return sum(1 for a, _ in self.arrows if a == u)

    def in_degree(self, u: Arc) -> int:
        return sum(1 for _, b in self.arrows if b == u)

    def relabeled(self, mapping: dict[Arc, Arc]) -> "QuiverGraph":
        mv = tuple(sorted(mapping.get(v, v) for v in self.vertices))
        mi = frozenset(mapping.get(v, v) for v in self.interior)
        ma = tuple(sorted((mapping.get(a, a), mapping.get(b, b)) for a, b in self.arrows))
        return QuiverGraph(mv, mi, ma)

    def to_json(self) -> dict:
        return {
            "vertices": [
                {"arc": str(v), "interior": v in self.interior}
                for v in sorted(self.vertices, key=str)
            ],
            "arrows": sorted([str(a), str(b)] for a, b in self.arrows),
        }

    def to_dot(self) -> str:
        lines = ["digraph quiver {"]
        for v in sorted(self.vertices, key=str):
            shape = "ellipse" if v in self.interior else "box"
            lines.append(f'  "{v}" [shape={shape}];')
        for a, b in sorted(self.arrows, key=lambda e: (str(e[0]), str(e[1]))):
            lines.append(f'  "{a}" -> "{b}";')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _b_mediated(desc: TriangulationDesc, u: Arc, v: Arc) -> bool:
    """Mediator through the pair of far endpoints: u |- w |- v with
    w = [other(u), other(v)]."""
    p = None
    ue, ve = u.endpoints(), v.endpoints()
    for cand in ve:
        if cand in ue:
            p = cand
    if p is None:
        return False
    a, b = u.other_endpoint(p), v.other_endpoint(p)
    if a == b or not is_arc_pair(a, b):
        return False
    w = arc_between(a, b)
    return desc.contains(w) and rotates_to(u, w) and rotates_to(w, v)


def cover_partners(desc: TriangulationDesc, u: Arc) -> set[Arc]:
    """Arcs covering u in the rotation order (arrow targets of u)."""
    out = set()
    for p in u.endpoints():
        v = neighbor(desc, u, p, +1)
        if isinstance(v, Arc) and not _b_mediated(desc, u, v):
            out.add(v)
    return out


def cocover_partners(desc: TriangulationDesc, u: Arc) -> set[Arc]:
    """Arcs covered by u (arrow sources into u)."""
    out = set()
    for p in u.endpoints():
        v = neighbor(desc, u, p, -1)
        if isinstance(v, Arc) and not _b_mediated(desc, v, u):
            out.add(v)
    return out


def quiver(
    desc: TriangulationDesc,
    window: tuple[int, int],
    report: Optional[ValidationReport] = None,
) -> QuiverGraph:
    """Quiver of a compact triangulation on the members inside a window.

    Arrow decisions are exact (the covering search runs over the full
    description); a vertex is flagged frontier when one of its arrow
    partners lies outside the window.
    """
    compact, witness = is_compact(desc, report)
    if not compact:
        raise NotCompactError(f"quiver needs a compact triangulation: {witness}")
    verts = desc.members_in_window(*window)
    vset = set(verts)
    arrows: set[tuple[Arc, Arc]] = set()
    interior = set()
    for u in verts:
        outs = cover_partners(desc, u)
        ins = cocover_partners(desc, u)
        if all(x in vset for x in outs | ins):
            interior.add(u)
        arrows.update((u, x) for x in outs if x in vset)
        arrows.update((x, u) for x in ins if x in vset)
    return QuiverGraph(tuple(verts), frozenset(interior), tuple(sorted(arrows)))


# -- Fomin-Zelevinsky mutation ---------------------------------------------------------


def fz_mutate(q: QuiverGraph, at: Arc) -> QuiverGraph:
    """Quiver mutation at an interior vertex: compose through, reverse at
    the vertex, cancel opposing pairs."""
    if at not in q.vertices:
        raise KeyError(f"{at} is not a vertex")
    if at not in q.interior:
        raise FrontierVertexError(f"{at} is a frontier vertex; neighborhood incomplete")
    arrows = Counter()
    for a, b in q.arrows:
        if a == b:
            raise ValueError("loop in quiver")
        arrows[(a, b)] += 1
    for (a, b), m in arrows.items():
        if a == at or b == at:
            if arrows.get((b, a), 0):
                raise ValueError(f"two-cycle at {at}")

    new = Counter(arrows)
    for (a, b), m1 in arrows.items():
        if b != at:
            continue
        for (c, d), m2 in arrows.items():
            if c == at:
                new[(a, d)] += m1 * m2
    for (a, b), m in arrows.items():
        if a == at or b == at:
            del new[(a, b)]
            new[(b, a)] += m
    for a, b in list(new):
        if a < b and new.get((b, a), 0):
            k = min(new[(a, b)], new[(b, a)])
            new[(a, b)] -= k
            new[(b, a)] -= k
    out = []
    for (a, b), m in new.items():
        out.extend([(a, b)] * m)
    return QuiverGraph(q.vertices, q.interior, tuple(sorted(out)))


def b_matrix(q: QuiverGraph, order: Optional[list[Arc]] = None) -> np.ndarray:
    """Skew-symmetric exchange matrix of a 2-cycle-free quiver."""
    if order is None:
        order = sorted(q.vertices)
    idx = {v: t for t, v in enumerate(order)}
    b = np.zeros((len(order), len(order)), dtype=int)
    for a, c in q.arrows:
        if a in idx and c in idx:
            b[idx[a], idx[c]] += 1
            b[idx[c], idx[a]] -= 1
    return b


def b_matrix_mutate(b: np.ndarray, k: int) -> np.ndarray:
    """Matrix form of the mutation rule; independent oracle for fz_mutate."""
    n = b.shape[0]
    out = b.copy()
    for i in range(n):
        for j in range(n):
            if i == k or j == k:
                out[i, j] = -b[i, j]
            else:
                out[i, j] = b[i, j] + np.sign(b[i, k]) * max(0, b[i, k] * b[k, j])
    return out
