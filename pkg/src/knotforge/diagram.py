"""Planar diagram codes for oriented knots.

A diagram is written as a semicolon separated list of crossing tokens
``X[a,b,c,d]``, one per crossing, or the single token ``U`` for the
zero-crossing unknot (which has no crossings to encode).  Each token
lists the four edge labels around the crossing in cyclic order starting
at the incoming under-edge.  Edge labels run 1..2n consecutively along
the knot's orientation, so the successor of edge e is ``e % 2n + 1``;
the parser verifies the numbering rather than repairing it.

The crossing sign falls out of the slot order: the over-strand occupies
slots 1 and 3, and the crossing is positive exactly when slot 3 holds
the successor of slot 1 (the over-strand enters at slot 1).  With one
crossing both orientations are label-consistent and the tie is broken
by whether the over-strand enters on the edge that leaves the
under-strand.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
import re


class DiagramError(ValueError):
    """Base class for everything the parser or validator can reject."""


class MalformedTokenError(DiagramError):
    """Text does not scan as a PD code."""


class EdgeDegreeError(DiagramError):
    """An edge label is not used exactly twice, or a crossing's slot
    pairs are not consecutive along the strand."""


class MultiComponentError(DiagramError):
    """Edge labels do not trace a single closed strand (a link, not a knot)."""


class NonPlanarError(DiagramError):
    """Face tracing over the rotation system fails the Euler check."""


_TOKEN_RE = re.compile(r"X\[\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\]\Z")


@dataclass(frozen=True)
class Crossing:
    """One crossing: slot 0 is the incoming under-edge, slots continue
    cyclically, and the sign is inferred from the slot order."""

    slots: tuple[int, int, int, int]
    sign: int

    @property
    def under_in(self) -> int:
        return self.slots[0]

    @property
    def under_out(self) -> int:
        return self.slots[2]

    @property
    def over_in(self) -> int:
        return self.slots[1] if self.sign > 0 else self.slots[3]

    @property
    def over_out(self) -> int:
        return self.slots[3] if self.sign > 0 else self.slots[1]

    def in_slots(self) -> tuple[int, int]:
        """Slot positions where a strand enters this crossing."""
        return (0, 1) if self.sign > 0 else (0, 3)

    def out_slots(self) -> tuple[int, int]:
        return (2, 3) if self.sign > 0 else (2, 1)


@dataclass(frozen=True)
class Arc:
    """Maximal run of edges from one undercrossing exit to the next
    undercrossing entry.  Arcs are what quandle colorings color."""

    index: int
    edges: tuple[int, ...]


@dataclass(frozen=True)
class Corner:
    """One step of a region boundary: the edge traversed, which way it
    was traversed ('L' means along the knot's orientation), and the
    crossing plus quadrant the step arrives at.  Quadrant q is the
    sector between slots q and q+1 of that crossing."""

    edge: int
    side: str
    crossing: int
    quadrant: int


@dataclass(frozen=True)
class Region:
    """A complementary face of the diagram, as its cyclic boundary."""

    index: int
    boundary: tuple[Corner, ...]

    def edge_sides(self) -> tuple[tuple[int, str], ...]:
        return tuple((c.edge, c.side) for c in self.boundary)


@dataclass(frozen=True)
class Diagram:
    crossings: tuple[Crossing, ...]
    edge_count: int
    unknot_flag: bool = False

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def succ(self, edge: int) -> int:
        """The next edge along the knot's orientation."""
        return edge % self.edge_count + 1

    @cached_property
    def edge_head(self) -> dict[int, tuple[int, str]]:
        """edge label -> (crossing index, 'U' or 'O') of the passage the
        edge runs into."""
        heads: dict[int, tuple[int, str]] = {}
        for i, x in enumerate(self.crossings):
            heads[x.under_in] = (i, "U")
            heads[x.over_in] = (i, "O")
        return heads

    @cached_property
    def arcs(self) -> tuple[Arc, ...]:
        if self.unknot_flag:
            # one arc covering the whole circle; there are no numbered edges
            return (Arc(0, ()),)
        starts = sorted(x.under_out for x in self.crossings)
        arcs = []
        for idx, start in enumerate(starts):
            edges = [start]
            e = start
            while self.edge_head[e][1] == "O":
                e = self.succ(e)
                edges.append(e)
            arcs.append(Arc(idx, tuple(edges)))
        return tuple(arcs)

    @cached_property
    def arc_of_edge(self) -> dict[int, int]:
        return {e: a.index for a in self.arcs for e in a.edges}

    @cached_property
    def regions(self) -> tuple[Region, ...]:
        if self.unknot_flag:
            # the circle splits the plane into two faces with no corners
            return (Region(0, ()), Region(1, ()))
        other = _dart_pairing(self.crossings)
        seen: set[tuple[int, int]] = set()
        out: list[Region] = []
        for ci in range(len(self.crossings)):
            for s in range(4):
                if (ci, s) in seen:
                    continue
                boundary = []
                cur = (ci, s)
                while cur not in seen:
                    seen.add(cur)
                    di, ds = cur
                    x = self.crossings[di]
                    side = "L" if ds in x.out_slots() else "R"
                    cj, s2 = other[cur]
                    boundary.append(Corner(x.slots[ds], side, cj, s2))
                    cur = (cj, (s2 + 1) % 4)
                out.append(Region(len(out), tuple(boundary)))
        return tuple(out)

    @property
    def writhe(self) -> int:
        return sum(x.sign for x in self.crossings)

    def render_pd(self) -> str:
        if self.unknot_flag:
            return "U"
        return ";".join("X[%d,%d,%d,%d]" % x.slots for x in self.crossings)

    def to_gauss(self) -> str:
        """Signed over/under sequence along the edge cycle, crossings
        numbered by first visit."""
        if self.unknot_flag:
            return ""
        names: dict[int, int] = {}
        parts = []
        for e in range(1, self.edge_count + 1):
            ci, role = self.edge_head[e]
            if ci not in names:
                names[ci] = len(names) + 1
            sign = "+" if self.crossings[ci].sign > 0 else "-"
            parts.append("%s%d%s" % (role if role == "U" else "O", names[ci], sign))
        return "".join(parts)

    def json_dict(self) -> dict:
        return {
            "crossings": [list(x.slots) for x in self.crossings],
            "signs": [x.sign for x in self.crossings],
        }


def _dart_pairing(crossings: tuple[Crossing, ...]) -> dict:
    """Pair each (crossing, slot) dart with the other occurrence of its
    edge label."""
    occ: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(crossings):
        for s, e in enumerate(x.slots):
            occ.setdefault(e, []).append((ci, s))
    other = {}
    for darts in occ.values():
        a, b = darts
        other[a] = b
        other[b] = a
    return other


def parse_pd(text: str) -> Diagram:
    """Parse and fully validate a PD code.

    Raises MalformedTokenError, EdgeDegreeError, MultiComponentError or
    NonPlanarError; a returned Diagram always satisfies the Euler check
    V - E + F = 2.
    """
    stripped = text.strip()
    if stripped == "U":
        return Diagram((), 0, True)
    if not stripped:
        raise MalformedTokenError("empty PD code")

    raw = [t.strip() for t in stripped.split(";")]
    quads = []
    for tok in raw:
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise MalformedTokenError("bad crossing token: %r" % tok)
        quads.append(tuple(int(g) for g in m.groups()))

    n = len(quads)
    counts = Counter(e for q in quads for e in q)
    for e in sorted(counts):
        if not 1 <= e <= 2 * n:
            raise EdgeDegreeError(
                "edge label %d outside 1..%d" % (e, 2 * n))
    for e in range(1, 2 * n + 1):
        if counts[e] != 2:
            raise EdgeDegreeError(
                "edge label %d used %d times, expected exactly 2" % (e, counts[e]))

    def succ(e: int) -> int:
        return e % (2 * n) + 1

    crossings = []
    for i, (a, b, c, d) in enumerate(quads):
        if c != succ(a):
            raise EdgeDegreeError(
                "crossing %d: under-edges (%d,%d) are not consecutive" % (i, a, c))
        pos = d == succ(b)
        neg = b == succ(d)
        if pos and neg:
            sign = 1 if b == c else -1
        elif pos:
            sign = 1
        elif neg:
            sign = -1
        else:
            raise EdgeDegreeError(
                "crossing %d: over-edges (%d,%d) are not consecutive" % (i, b, d))
        crossings.append(Crossing((a, b, c, d), sign))

    entered: dict[int, int] = {}
    for i, x in enumerate(crossings):
        for e in (x.under_in, x.over_in):
            if e in entered:
                raise MultiComponentError(
                    "edge %d enters two crossings; the labels do not trace "
                    "a single closed strand" % e)
            entered[e] = i

    other = _dart_pairing(tuple(crossings))
    seen: set[tuple[int, int]] = set()
    faces = 0
    for ci in range(n):
        for s in range(4):
            if (ci, s) in seen:
                continue
            faces += 1
            cur = (ci, s)
            while cur not in seen:
                seen.add(cur)
                cj, s2 = other[cur]
                cur = (cj, (s2 + 1) % 4)
    if n - 2 * n + faces != 2:
        raise NonPlanarError(
            "Euler check failed: V-E+F = %d-%d+%d != 2" % (n, 2 * n, faces))

    return Diagram(tuple(crossings), 2 * n, False)


def arcs(d: Diagram) -> list[Arc]:
    return list(d.arcs)


def regions(d: Diagram) -> list[Region]:
    return list(d.regions)


def writhe(d: Diagram) -> int:
    return d.writhe


def to_gauss(d: Diagram) -> str:
    return d.to_gauss()


def render_pd(d: Diagram) -> str:
    return d.render_pd()


def to_json_dict(d: Diagram) -> dict:
    return d.json_dict()


def canonical_pd(d: Diagram) -> str:
    """Least PD text over all rotations of the edge numbering.

    Two diagrams differing only in where edge 1 starts get the same
    canonical text, which is how move round-trips are compared.
    """
    if d.unknot_flag:
        return "U"
    m = d.edge_count
    best = None
    for shift in range(m):
        relabel = lambda e: (e - 1 - shift) % m + 1
        toks = sorted(tuple(relabel(e) for e in x.slots) for x in d.crossings)
        text = ";".join("X[%d,%d,%d,%d]" % t for t in toks)
        if best is None or text < best:
            best = text
    return best
