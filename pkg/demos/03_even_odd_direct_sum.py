"""Direct sums of sequences whose analysis ranges are orthogonal.

f = {0, 2 e1, 0, 4 e2, ...} lives on the even slots of the coefficient
space and g = {e1, 0, 3 e2, 0, ...} on the odd slots.  Their analysis
ranges meet at right angles, so the direct sum inherits the lower
semi-frame property from its components and vice versa.
"""

import math

from semiframes import (InternalSum, TruncationLadder, check_direct_sum_props, classify,
                        direct_sum, disjointness, materialize, taxonomy)
from semiframes.instances import even_odd_embeddings, even_odd_pair

ladder = TruncationLadder((8, 16, 32, 64, 128))
f, g = even_odd_pair()
print("f at level 6:\n", materialize(f, 6).real)
print("g at level 6:\n", materialize(g, 6).real)

reports = disjointness(f, g, ladder)
worst = max(abs(a - math.pi / 2) for r in reports for a in r.angles)
print(f"\nmax deviation of principal angles from pi/2: {worst}")
print("taxonomy:", taxonomy(reports))

for name, fam in [("f", f), ("g", g), ("f (+) g", direct_sum(f, g))]:
    v = classify(fam, ladder)
    print(f"{name:8s} lower semi-frame {v.lower_semi_frame}, A = {v.lower.values}")

# Placing H1 on even and H2 on odd coordinates of one space gives {n e_n}.
left, right = even_odd_embeddings()
print("\ninternal sum at level 5:\n", materialize(InternalSum(f, g, left, right), 5).real)

checks, consistent = check_direct_sum_props(f, g, ladder)
for c in checks:
    print(f"{c.id:13s} {c.status.value}")
print("no falsification:", consistent)
