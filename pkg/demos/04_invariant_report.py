"""
The full invariant table
========================

Everything the library computes, side by side for the built-in knots:
coloring counts, presentation sizes before and after simplification,
homomorphism counts, and the abelianization, plus pairwise verdicts on
which knots the chosen quandles can tell apart.
"""

from knotforge import (
    alternating_group,
    builtin,
    builtin_names,
    dihedral,
    report,
    symmetric_group,
    tetrahedral,
)

knots = [builtin(name) for name in builtin_names()]
quandles = [dihedral(3), dihedral(5), tetrahedral()]
groups = [symmetric_group(3), alternating_group(4), symmetric_group(4)]

rep = report(knots, quandles, groups)
print(rep.text())

# the same data ships as JSON for anything downstream
print("JSON keys per knot row:", sorted(rep.knots[0]))
