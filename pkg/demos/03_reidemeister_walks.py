"""
Shaking a diagram without changing the knot
===========================================

Reidemeister moves rewrite a diagram locally while preserving the knot
type.  Randomly walking the move graph therefore scrambles the PD code
but must leave every invariant fixed, which makes walks a cheap and
brutal correctness test.
"""

from knotforge import (
    apply_move,
    count_colorings,
    dihedral,
    find_sites,
    parse_pd,
    random_walk,
    tetrahedral,
)

trefoil = parse_pd("X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]")
r3 = dihedral(3)
qs4 = tetrahedral()

# which moves does the bare trefoil admit?
sites = find_sites(trefoil)
kinds = sorted({s.kind for s in sites})
print("the trefoil offers %d move sites:" % len(sites))
for kind in kinds:
    mine = [s for s in sites if s.kind == kind]
    print("  %-9s %2d sites, e.g. %s" % (kind, len(mine), mine[0].summary))

# a reduced alternating diagram has nothing to remove, so everything
# above grows the diagram.  Push one strand over another and back:
site = find_sites(trefoil, "R2_ADD")[0]
bigger = apply_move(trefoil, site)
print("\nafter one R2 push: %d crossings" % bigger.crossing_count)
print("  ", bigger.render_pd())

undo = find_sites(bigger, "R2_REMOVE")[0]
back = apply_move(bigger, undo)
print("after pulling it back: %d crossings" % back.crossing_count)

# now a longer seeded walk, checking invariants at every step
want = (count_colorings(trefoil, r3).total,
        count_colorings(trefoil, qs4).total)
print("\nseeded walk, invariants checked at each of 15 steps:")
walk = random_walk(trefoil, 15, seed=42, max_crossings=10)
for i, d in enumerate(walk):
    got = (count_colorings(d, r3).total, count_colorings(d, qs4).total)
    assert got == want, "invariant broke, which would be a bug"
    if i % 5 == 0:
        print("  step %2d: %d crossings, counts %s" %
              (i, d.crossing_count, got))
print("all steps kept R3 total %d and QS4 total %d" % want)
