"""Reidemeister moves on planar diagrams.

A diagram is flattened to its passage list: entry i describes the
crossing entered via edge i+1, as (crossing id, "U" or "O", sign).
Moves edit that list (insert a kink, delete a bigon, swap the order of
triangle passages) and the diagram is rebuilt and re-validated from the
result, so every move output went through the same planarity checks as
parsed input.

Sites are discovered against a specific diagram and remember its PD
text; applying a site to any other diagram raises StaleSiteError.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .diagram import Diagram, NonPlanarError, parse_pd

KINDS = ("R1_ADD", "R1_REMOVE", "R2_ADD", "R2_REMOVE", "R3")

Passage = tuple[object, str, int]


class StaleSiteError(ValueError):
    """The site was found on a different diagram than the one given."""


@dataclass(frozen=True)
class MoveSite:
    kind: str
    payload: tuple
    signature: str  # PD text of the diagram the site belongs to
    summary: str

    def __str__(self) -> str:
        return "%s: %s" % (self.kind, self.summary)


# ------------------------------------------------------------ plumbing


def _passages(d: Diagram) -> list[Passage]:
    out: list[Passage | None] = [None] * d.edge_count
    for ci, x in enumerate(d.crossings):
        out[x.under_in - 1] = (ci, "U", x.sign)
        out[x.over_in - 1] = (ci, "O", x.sign)
    return list(out)


def _rebuild(passages: list[Passage]) -> Diagram:
    if not passages:
        return parse_pd("U")
    n2 = len(passages)
    where: dict[object, dict[str, int]] = {}
    order: list[object] = []
    for i, (cid, role, _) in enumerate(passages):
        if cid not in where:
            where[cid] = {}
            order.append(cid)
        if role in where[cid]:
            raise ValueError("crossing appears twice with role %s" % role)
        where[cid][role] = i
    tokens = []
    for cid in order:
        slots = where[cid]
        if set(slots) != {"U", "O"}:
            raise ValueError("crossing is missing a passage")
        iu, io = slots["U"], slots["O"]
        sign = passages[iu][2]
        a = iu + 1
        c = a % n2 + 1
        oin = io + 1
        oout = oin % n2 + 1
        if sign > 0:
            tokens.append("X[%d,%d,%d,%d]" % (a, oin, c, oout))
        else:
            tokens.append("X[%d,%d,%d,%d]" % (a, oout, c, oin))
    return parse_pd(";".join(tokens))


def _edge_roles(d: Diagram) -> dict[int, list[str]]:
    roles: dict[int, list[str]] = {}
    for x in d.crossings:
        for s, e in enumerate(x.slots):
            roles.setdefault(e, []).append("U" if s % 2 == 0 else "O")
    return roles


# ------------------------------------------------------- site finders


def _r1_add_sites(d: Diagram, sig: str) -> list[MoveSite]:
    sites = []
    if d.crossing_count == 0:
        for sign in (1, -1):
            sites.append(MoveSite(
                "R1_ADD", (0, "OU", sign), sig,
                "add a %s kink to the unknot" % ("+" if sign > 0 else "-")))
        return sites
    for e in range(1, d.edge_count + 1):
        for order in ("OU", "UO"):
            for sign in (1, -1):
                sites.append(MoveSite(
                    "R1_ADD", (e, order, sign), sig,
                    "add a %s kink on edge %d (%s first)"
                    % ("+" if sign > 0 else "-", e,
                       "over" if order == "OU" else "under")))
    return sites


def _r1_remove_sites(d: Diagram, sig: str) -> list[MoveSite]:
    L = _passages(d)
    n2 = len(L)
    sites = []
    for i in range(n2):
        j = (i + 1) % n2
        if j != i and L[i][0] == L[j][0]:
            sites.append(MoveSite(
                "R1_REMOVE", (i,), sig,
                "remove the kink crossing entered via edges %d and %d"
                % (i + 1, j + 1)))
    return sites


def _r2_add_sites(d: Diagram, sig: str) -> list[MoveSite]:
    sites = []
    for region in d.regions:
        corners = region.boundary
        for ai in range(len(corners)):
            for bi in range(len(corners)):
                if ai == bi:
                    continue
                ca, cb = corners[ai], corners[bi]
                for over in (True, False):
                    sites.append(MoveSite(
                        "R2_ADD",
                        (ca.edge, ca.side, cb.edge, cb.side, over),
                        sig,
                        "push edge %d %s edge %d across region %d"
                        % (ca.edge, "over" if over else "under",
                           cb.edge, region.index)))
    return sites


def _r2_remove_sites(d: Diagram, sig: str) -> list[MoveSite]:
    roles = _edge_roles(d)
    sites = []
    for region in d.regions:
        b = region.boundary
        if len(b) != 2:
            continue
        c1, c2 = b
        if c1.crossing == c2.crossing or c1.edge == c2.edge:
            continue
        if d.crossings[c1.crossing].sign == d.crossings[c2.crossing].sign:
            continue
        r1, r2 = roles[c1.edge], roles[c2.edge]
        if not ((r1 == ["O", "O"] and r2 == ["U", "U"])
                or (r1 == ["U", "U"] and r2 == ["O", "O"])):
            continue
        sites.append(MoveSite(
            "R2_REMOVE", (c1.crossing, c2.crossing), sig,
            "cancel the bigon between crossings %d and %d"
            % (c1.crossing, c2.crossing)))
    return sites


def _r3_sites(d: Diagram, sig: str) -> list[MoveSite]:
    roles = _edge_roles(d)
    sites = []
    for region in d.regions:
        b = region.boundary
        if len(b) != 3:
            continue
        if len({c.crossing for c in b}) != 3:
            continue
        edges = [c.edge for c in b]
        if len(set(edges)) != 3:
            continue
        # a slidable triangle has exactly one edge that runs over at
        # both of its endpoints (and then necessarily one that runs
        # under at both, plus one mixed edge)
        if sum(1 for e in edges if roles[e] == ["O", "O"]) != 1:
            continue
        sites.append(MoveSite(
            "R3", tuple(sorted(edges)), sig,
            "slide the triangle bounded by edges %d, %d, %d"
            % tuple(sorted(edges))))
    return sites


_FINDERS = {
    "R1_ADD": _r1_add_sites,
    "R1_REMOVE": _r1_remove_sites,
    "R2_ADD": _r2_add_sites,
    "R2_REMOVE": _r2_remove_sites,
    "R3": _r3_sites,
}


def find_sites(d: Diagram, kind: str | None = None) -> list[MoveSite]:
    """All move sites of one kind, or of every kind in KINDS order."""
    sig = d.render_pd()
    if kind is None:
        out = []
        for k in KINDS:
            out.extend(_FINDERS[k](d, sig))
        return out
    if kind not in _FINDERS:
        raise ValueError("unknown move kind %r" % (kind,))
    return _FINDERS[kind](d, sig)


# ------------------------------------------------------------- apply


def _apply_r1_add(d: Diagram, payload) -> Diagram:
    e, order, sign = payload
    L = _passages(d)
    cid = d.crossing_count
    if order == "OU":
        pair = [(cid, "O", sign), (cid, "U", sign)]
    else:
        pair = [(cid, "U", sign), (cid, "O", sign)]
    pos = e - 1 if e else 0
    L[pos:pos] = pair
    return _rebuild(L)


def _apply_r1_remove(d: Diagram, payload) -> Diagram:
    (i,) = payload
    L = _passages(d)
    j = (i + 1) % len(L)
    for k in sorted((i, j), reverse=True):
        del L[k]
    return _rebuild(L)


def _apply_r2_add(d: Diagram, payload) -> Diagram:
    ea, sa, eb, sb, over = payload
    yid, zid = d.crossing_count, d.crossing_count + 1
    # Y is met first along the pushed edge, Z second.  The target strand
    # meets them in that same order exactly when the two corners see the
    # region from opposite sides.  The finger always approaches the
    # target from the region's side of it, which fixes the signs: Y is
    # positive when pushing over a target whose region side is L, or
    # under one whose region side is R, and Z cancels it.
    s1 = 1 if over == (sb == "L") else -1
    rf, rt = ("O", "U") if over else ("U", "O")
    fpair = [(yid, rf, s1), (zid, rf, -s1)]
    if sa != sb:
        tpair = [(yid, rt, s1), (zid, rt, -s1)]
    else:
        tpair = [(zid, rt, -s1), (yid, rt, s1)]

    if ea != eb:
        L = _passages(d)
        for pos, pair in sorted([(ea - 1, fpair), (eb - 1, tpair)],
                                reverse=True):
            L[pos:pos] = pair
        return _rebuild(L)

    # both corners sit on the same edge; the combinatorics do not say
    # which pair comes first along it, so try finger-first and fall
    # back on the other order if that is not planar
    for first, second in ((fpair, tpair), (tpair, fpair)):
        L = _passages(d)
        L[ea - 1:ea - 1] = first + second
        try:
            return _rebuild(L)
        except NonPlanarError:
            continue
    raise NonPlanarError("no planar filling for this push")


def _apply_r2_remove(d: Diagram, payload) -> Diagram:
    ci, cj = payload
    L = _passages(d)
    drop = sorted(
        (i for i, p in enumerate(L) if p[0] in (ci, cj)), reverse=True)
    for i in drop:
        del L[i]
    return _rebuild(L)


def _apply_r3(d: Diagram, payload) -> Diagram:
    L = _passages(d)
    n2 = len(L)
    for e in payload:
        i, j = (e - 2) % n2, (e - 1) % n2
        L[i], L[j] = L[j], L[i]
    return _rebuild(L)


_APPLIERS = {
    "R1_ADD": _apply_r1_add,
    "R1_REMOVE": _apply_r1_remove,
    "R2_ADD": _apply_r2_add,
    "R2_REMOVE": _apply_r2_remove,
    "R3": _apply_r3,
}


def apply(d: Diagram, site: MoveSite) -> Diagram:
    """Perform a move at a site found on this very diagram."""
    if site.signature != d.render_pd():
        raise StaleSiteError(
            "site was found on %r, not %r" % (site.signature, d.render_pd()))
    return _APPLIERS[site.kind](d, site.payload)


# ------------------------------------------------------------- walks


def random_walk(d: Diagram, steps: int, seed: int,
                max_crossings: int = 16) -> list[Diagram]:
    """Seeded random sequence of moves.  Returns the list of visited
    diagrams, the start included, so the result has steps+1 entries.
    Growing moves are excluded when they would push the crossing count
    past max_crossings; a step with no sites at all keeps the diagram.
    """
    rng = random.Random(seed)
    out = [d]
    cur = d
    for _ in range(steps):
        n = cur.crossing_count
        sites = []
        sig = cur.render_pd()
        for kind in KINDS:
            if kind == "R1_ADD" and n + 1 > max_crossings:
                continue
            if kind == "R2_ADD" and n + 2 > max_crossings:
                continue
            sites.extend(_FINDERS[kind](cur, sig))
        if sites:
            cur = apply(cur, sites[rng.randrange(len(sites))])
        out.append(cur)
    return out
