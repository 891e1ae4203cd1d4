"""Eventually periodic orientations of the doubly infinite line quiver.

Vertices are the integers.  Position ``n`` carries the arrow between ``n``
and ``n + 1``: letter ``R`` means ``n -> n+1``, letter ``L`` means
``n+1 -> n``.  The word is a finite core flanked by nonempty periodic
cycles; requiring both letters in each cycle rules out infinite paths, so
every projective and injective representation is finite dimensional.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


def _check_word(word: str, name: str, allow_empty: bool = False) -> None:
    if not allow_empty and not word:
        raise ValueError(f"{name} must be nonempty")
    bad = set(word) - {"R", "L"}
    if bad:
        raise ValueError(f"{name} may contain only R and L, got {sorted(bad)}")


@dataclass(frozen=True)
class Orientation:
    """Orientation word: ``core`` starting at position ``core_start``,
    ``left_cycle`` tiling positions below it, ``right_cycle`` above."""

    core: str = ""
    core_start: int = 0
    left_cycle: str = "RL"
    right_cycle: str = "RL"

    def __post_init__(self) -> None:
        _check_word(self.core, "core", allow_empty=True)
        _check_word(self.left_cycle, "left_cycle")
        _check_word(self.right_cycle, "right_cycle")
        for name in ("left_cycle", "right_cycle"):
            w = getattr(self, name)
            if "R" not in w or "L" not in w:
                raise ValueError(f"{name} must contain both R and L (no infinite path)")

    # -- the letter at a position -------------------------------------------------

    def letter(self, n: int) -> str:
        lo = self.core_start
        hi = lo + len(self.core)
        if lo <= n < hi:
            return self.core[n - lo]
        if n >= hi:
            return self.right_cycle[(n - hi) % len(self.right_cycle)]
        # left cycle tiles leftwards, ending just before the core
        t = lo - 1 - n
        w = self.left_cycle
        return w[len(w) - 1 - (t % len(w))]

    def arrow(self, n: int) -> tuple[int, int]:
        """The arrow at position n as (source, target)."""
        return (n, n + 1) if self.letter(n) == "R" else (n + 1, n)

    def is_source(self, v: int) -> bool:
        return self.letter(v - 1) == "L" and self.letter(v) == "R"

    def is_sink(self, v: int) -> bool:
        return self.letter(v - 1) == "R" and self.letter(v) == "L"

    # -- sources and sinks --------------------------------------------------------

    @property
    def a0(self) -> int:
        """Anchor source: the smallest source >= 0."""
        v = 0
        bound = len(self.core) + 2 * (len(self.left_cycle) + len(self.right_cycle)) + abs(self.core_start) + 4
        while not self.is_source(v):
            v += 1
            if v > bound + abs(self.core_start) + 4:
                raise RuntimeError("no source found; orientation invariants violated")
        return v

    def source(self, i: int) -> int:
        """The i-th source a_i, counted from the anchor a_0."""
        return self._nth_extremum(self.is_source, self.a0, i)

    def sink(self, i: int) -> int:
        """The i-th sink b_i, with b_{i-1} < a_i < b_i."""
        a_i = self.source(i)
        v = a_i + 1
        while not self.is_sink(v):
            v += 1
        return v

    def _nth_extremum(self, pred, start: int, i: int) -> int:
        v, found = start, 0
        step = 1 if i >= 0 else -1
        while found != abs(i):
            v += step
            if pred(v):
                found += 1
        return v

    def path_p(self, i: int) -> tuple[int, int]:
        """Support [a_i, b_i] of the maximal rightward path from a_i."""
        return self.source(i), self.sink(i)

    def path_q(self, i: int) -> tuple[int, int]:
        """Support [b_{i-1}, a_i] of the maximal leftward path from a_i."""
        return self.sink(i - 1), self.source(i)

    # -- run structure ------------------------------------------------------------

    @property
    def max_run(self) -> int:
        """Length of the longest run of equal letters anywhere in the word."""
        lo = self.core_start - 2 * len(self.left_cycle)
        hi = self.core_start + len(self.core) + 2 * len(self.right_cycle)
        best, run = 1, 1
        for n in range(lo + 1, hi):
            if self.letter(n) == self.letter(n - 1):
                run += 1
                best = max(best, run)
            else:
                run = 1
        return best

    # -- quasi-simple tilings -----------------------------------------------------
    #
    # The right family consists of the maximal rightward paths [a_i, b_i]
    # together with one singleton for each interior vertex of a maximal
    # leftward path; these supports tile the integers.  Dually for the left
    # family.  Tiles are indexed ascending by starting vertex, tile 0 being
    # the one based at the anchor source (right family: [a_0, b_0]) or the
    # anchor leftward path (left family: [b_{-1}, a_0]).

    def qr_tile(self, n: int) -> tuple[int, int]:
        return _qr_tile(self, n)

    def ql_tile(self, n: int) -> tuple[int, int]:
        return _ql_tile(self, n)

    def qr_tile_of_vertex(self, v: int) -> int:
        """Index of the right-family tile containing vertex v."""
        return _tile_of_vertex(self, v, self.qr_tile)

    def ql_tile_of_vertex(self, v: int) -> int:
        return _tile_of_vertex(self, v, self.ql_tile)

    # -- serialization ------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "core": self.core,
            "core_start": self.core_start,
            "left_cycle": self.left_cycle,
            "right_cycle": self.right_cycle,
        }

    @staticmethod
    def from_json(obj: dict) -> "Orientation":
        return Orientation(
            core=str(obj.get("core", "")),
            core_start=int(obj.get("core_start", 0)),
            left_cycle=str(obj.get("left_cycle", "RL")),
            right_cycle=str(obj.get("right_cycle", "RL")),
        )


@lru_cache(maxsize=None)
def _qr_tile(o: Orientation, n: int) -> tuple[int, int]:
    if n == 0:
        return o.path_p(0)
    prev = _qr_tile(o, n - 1 if n > 0 else n + 1)
    if n > 0:
        start = prev[1] + 1  # next tile begins right after the previous one
        if o.is_source(start):
            return start, o.sink(_source_index(o, start))
        return start, start
    end = prev[0] - 1
    if o.is_sink(end):
        lo = o.source(_sink_index(o, end))
        return lo, end
    return end, end


@lru_cache(maxsize=None)
def _ql_tile(o: Orientation, n: int) -> tuple[int, int]:
    if n == 0:
        return o.path_q(0)
    prev = _ql_tile(o, n - 1 if n > 0 else n + 1)
    if n > 0:
        start = prev[1] + 1
        if o.is_sink(start):
            # a leftward maximal path ends at this sink; find its source
            v = start + 1
            while not o.is_source(v):
                v += 1
            return start, v
        return start, start
    end = prev[0] - 1
    if o.is_source(end):
        v = end - 1
        while not o.is_sink(v):
            v -= 1
        return v, end
    return end, end


def _source_index(o: Orientation, v: int) -> int:
    """Index i with a_i = v (v must be a source)."""
    a0 = o.a0
    if v == a0:
        return 0
    step = 1 if v > a0 else -1
    idx, w = 0, a0
    while w != v:
        w += step
        if o.is_source(w):
            idx += step
    return idx


def _sink_index(o: Orientation, v: int) -> int:
    """Index i with b_i = v (v must be a sink)."""
    b0 = o.sink(0)
    if v == b0:
        return 0
    step = 1 if v > b0 else -1
    idx, w = 0, b0
    while w != v:
        w += step
        if o.is_sink(w):
            idx += step
    return idx


def _tile_of_vertex(o: Orientation, v: int, tile) -> int:
    n = 0
    lo, hi = tile(0)
    while v < lo:
        n -= 1
        lo, hi = tile(n)
    while v > hi:
        n += 1
        lo, hi = tile(n)
    return n


def zigzag() -> Orientation:
    """The alternating orientation: sources at even, sinks at odd vertices."""
    return Orientation(core="RL", core_start=0, left_cycle="RL", right_cycle="RL")
