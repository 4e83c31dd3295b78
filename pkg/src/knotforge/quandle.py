"""Finite quandles and coloring counts on knot diagrams.

A quandle is an operation table satisfying idempotence (I), column
invertibility (II) and right self-distributivity (III).  Colorings
assign quandle elements to diagram arcs; at a positive crossing the
outgoing under-arc gets in <| over, at a negative one the column
inverse applies, so non-involutory quandles color correctly in both
directions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import NamedTuple

import numpy as np

from .diagram import Diagram
from .groups import FiniteGroup, conjugate, symmetric_group


class OutOfRangeError(ValueError):
    """A table entry is not an element index."""


class NotClosedError(ValueError):
    """Conjugation leads outside the chosen subset."""


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    ok: bool
    witness: tuple | None


@dataclass(frozen=True)
class AxiomReport:
    passed: bool
    checks: tuple[AxiomCheck, ...]

    def witness(self, axiom: str):
        for c in self.checks:
            if c.axiom == axiom:
                return c.witness
        return None


def check_axioms(table) -> AxiomReport:
    """Verify quandle axioms I..III over all triples, reporting the
    first counterexample of each failing axiom."""
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise OutOfRangeError("table must be square")
    n = t.shape[0]
    if n == 0:
        raise OutOfRangeError("table must be nonempty")
    if t.min() < 0 or t.max() >= n:
        bad = np.argwhere((t < 0) | (t >= n))[0]
        raise OutOfRangeError(
            "entry table[%d][%d] is outside 0..%d" % (bad[0], bad[1], n - 1))

    checks = []

    diag = np.diagonal(t)
    bad_a = np.flatnonzero(diag != np.arange(n))
    checks.append(AxiomCheck("I", len(bad_a) == 0,
                             (int(bad_a[0]),) if len(bad_a) else None))

    w2 = None
    for b in range(n):
        col = t[:, b]
        if len(np.unique(col)) != n:
            seen: dict[int, int] = {}
            for a in range(n):
                v = int(col[a])
                if v in seen:
                    w2 = (seen[v], a, b)
                    break
                seen[v] = a
            break
    checks.append(AxiomCheck("II", w2 is None, w2))

    lhs = t[t]                                # lhs[a,b,c] = (a<|b)<|c
    rhs = t[t[:, None, :], t[None, :, :]]     # rhs[a,b,c] = (a<|c)<|(b<|c)
    bad = np.argwhere(lhs != rhs)
    w3 = tuple(int(v) for v in bad[0]) if len(bad) else None
    checks.append(AxiomCheck("III", w3 is None, w3))

    return AxiomReport(all(c.ok for c in checks), tuple(checks))


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    order: int
    table: np.ndarray
    inv_table: np.ndarray
    name: str = "Q"

    @cached_property
    def rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.table]

    @cached_property
    def inv_rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.inv_table]

    def op(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def json_dict(self) -> dict:
        return {
            "order": self.order,
            "table": [[int(v) for v in row] for row in self.table],
        }


def from_table(table, name: str = "Q") -> FiniteQuandle:
    report = check_axioms(table)
    if not report.passed:
        failing = [c for c in report.checks if not c.ok]
        raise ValueError("not a quandle: axiom %s fails at %r"
                         % (failing[0].axiom, failing[0].witness))
    t = np.asarray(table, dtype=np.int64)
    # column b of inv undoes column b of the table
    inv = np.empty_like(t)
    for b in range(t.shape[0]):
        inv[:, b] = np.argsort(t[:, b])
    t.setflags(write=False)
    inv.setflags(write=False)
    return FiniteQuandle(t.shape[0], t, inv, name)


def dihedral(n: int) -> FiniteQuandle:
    """R_n, the reflections of an n-gon: a <| b = 2b - a mod n."""
    if n < 2:
        raise ValueError("dihedral quandle needs n >= 2, got %r" % (n,))
    a = np.arange(n)
    return from_table((2 * a[None, :] - a[:, None]) % n, "R%d" % n)


def conjugation_quandle(g: FiniteGroup, subset, name: str = "Conj") -> FiniteQuandle:
    """Quandle on a conjugation-closed subset of g, x <| y = y^-1 x y.

    Elements are indexed by their position in the given subset list.
    """
    elems = list(subset)
    if not elems:
        raise ValueError("subset must be nonempty")
    if len(set(elems)) != len(elems):
        raise ValueError("subset has repeated elements")
    for x in elems:
        if not 0 <= x < g.order:
            raise ValueError("subset element %r is not a group element index" % (x,))
    pos = {x: i for i, x in enumerate(elems)}
    k = len(elems)
    table = np.empty((k, k), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            z = conjugate(g, x, y)
            if z not in pos:
                raise NotClosedError(
                    "subset is not closed: conjugating element %d by %d "
                    "gives %d, which is outside it" % (x, y, z))
            table[i, j] = pos[z]
    return from_table(table, name)


def tetrahedral() -> FiniteQuandle:
    """QS4: the four oriented 3-cycles of S4 under conjugation, each
    labeled by the point it fixes."""
    perms = sorted(permutations(range(4)))
    rotations = [(0, 2, 3, 1), (3, 1, 0, 2), (1, 3, 2, 0), (2, 0, 1, 3)]
    return conjugation_quandle(symmetric_group(4),
                               [perms.index(p) for p in rotations], "QS4")


def is_isomorphic(q1: FiniteQuandle, q2: FiniteQuandle) -> bool:
    """Exhaustive bijection search; only sensible for order <= 6."""
    if q1.order != q2.order:
        return False
    if q1.order > 6:
        raise ValueError("isomorphism search is exhaustive, order capped at 6")
    n = q1.order
    t1, t2 = q1.rows, q2.rows
    for sigma in permutations(range(n)):
        if all(sigma[t1[a][b]] == t2[sigma[a]][sigma[b]]
               for a in range(n) for b in range(n)):
            return True
    return False


@dataclass(frozen=True)
class Coloring:
    """Arc index -> quandle element, as a tuple indexed by arc."""

    assignment: tuple[int, ...]

    def json_list(self) -> list[int]:
        return list(self.assignment)


class ColoringCount(NamedTuple):
    total: int
    nontrivial: int


def _constraints(d: Diagram) -> list[tuple[int, int, int, int]]:
    """(under-in arc, over arc, under-out arc, sign) per crossing."""
    arc = d.arc_of_edge
    return [(arc[x.under_in], arc[x.over_in], arc[x.under_out], x.sign)
            for x in d.crossings]


def _plan(d: Diagram):
    """Decide, once per diagram, which arcs are free and which are
    forced from already colored ones, and when each crossing rule
    becomes checkable."""
    cons = _constraints(d)
    n_arcs = len(d.arcs)
    colored: set[int] = set()
    used_as_rule = [False] * len(cons)
    steps = []
    while len(colored) < n_arcs:
        forced = None
        for k, (i, b, o, s) in enumerate(cons):
            if used_as_rule[k] or b not in colored:
                continue
            if i in colored and o not in colored:
                forced = ("force_out", o, k)
                break
            if o in colored and i not in colored:
                forced = ("force_in", i, k)
                break
        if forced is None:
            arc = min(a for a in range(n_arcs) if a not in colored)
            step = ("branch", arc, None)
        else:
            used_as_rule[forced[2]] = True
            step = forced
        target = step[1]
        colored.add(target)
        checks = [k for k, (i, b, o, s) in enumerate(cons)
                  if not used_as_rule[k]
                  and i in colored and b in colored and o in colored
                  and target in (i, b, o)]
        steps.append((step, checks))
    return cons, steps


def count_colorings(d: Diagram, q: FiniteQuandle) -> ColoringCount:
    """Exact number of colorings of d by q, and the count with the
    constant ones removed."""
    cons, steps = _plan(d)
    t, inv = q.rows, q.inv_rows
    order = q.order
    colors = [0] * len(d.arcs)

    def ok(k: int) -> bool:
        i, b, o, s = cons[k]
        expect = t[colors[i]][colors[b]] if s > 0 else inv[colors[i]][colors[b]]
        return colors[o] == expect

    def run(depth: int) -> int:
        if depth == len(steps):
            return 1
        (kind, arc, k), checks = steps[depth]
        if kind == "branch":
            total = 0
            for v in range(order):
                colors[arc] = v
                if all(ok(c) for c in checks):
                    total += run(depth + 1)
            return total
        i, b, o, s = cons[k]
        if kind == "force_out":
            v = t[colors[i]][colors[b]] if s > 0 else inv[colors[i]][colors[b]]
        else:
            v = inv[colors[o]][colors[b]] if s > 0 else t[colors[o]][colors[b]]
        colors[arc] = v
        if not all(ok(c) for c in checks):
            return 0
        return run(depth + 1)

    total = run(0)
    return ColoringCount(total, total - order)


def list_colorings(d: Diagram, q: FiniteQuandle,
                   limit: int | None = None) -> list[Coloring]:
    """Satisfying colorings in lexicographic order of the arc color
    tuple, at most limit of them if one is given."""
    cons = _constraints(d)
    n_arcs = len(d.arcs)
    by_last: dict[int, list[int]] = {}
    for k, (i, b, o, s) in enumerate(cons):
        by_last.setdefault(max(i, b, o), []).append(k)
    t, inv = q.rows, q.inv_rows
    cap = float("inf") if limit is None else limit
    out: list[Coloring] = []
    colors = [0] * n_arcs

    def ok(k: int) -> bool:
        i, b, o, s = cons[k]
        expect = t[colors[i]][colors[b]] if s > 0 else inv[colors[i]][colors[b]]
        return colors[o] == expect

    def walk(arc: int):
        if len(out) >= cap:
            return
        if arc == n_arcs:
            out.append(Coloring(tuple(colors)))
            return
        for v in range(q.order):
            colors[arc] = v
            if all(ok(k) for k in by_last.get(arc, ())):
                walk(arc + 1)
            if len(out) >= cap:
                return

    if cap > 0:
        walk(0)
    return out


def quandle_by_name(name: str) -> FiniteQuandle:
    """Builtin quandle names for the command line: R<n> and QS4."""
    m = name.strip().upper()
    if m == "QS4":
        return tetrahedral()
    if m.startswith("R") and m[1:].isdigit():
        return dihedral(int(m[1:]))
    raise ValueError("unknown quandle name: %r" % (name,))
