"""A lower semi-frame that is not Bessel, and an operator that repairs it.

{n e_n} has lower bound 1 at every truncation level while its upper bound
grows like d^2.  Multiplying by diag(1/n) turns it into the orthonormal
basis even though diag(1/n) does not have closed range.  This is the
``example-3.4`` built-in of the command-line tool.
"""

from semiframes import (Diagonal, OperatorImage, TruncationLadder, WeightedBasis, classify,
                        gamma_ladder, run_check)

ladder = TruncationLadder((8, 16, 32, 64, 128))
f = WeightedBasis("n")
shrink = Diagonal("1/n")


def show(name, verdict):
    print(f"{name}")
    for flag, value in verdict.flags.items():
        print(f"  {flag:17s} {value}")
    print(f"  A per level       {verdict.lower.values}  ({verdict.lower.trend.value})")
    print(f"  B per level       {verdict.upper.values}  ({verdict.upper.trend.value})")


show("{n e_n}", classify(f, ladder))
show("{diag(1/n) n e_n}", classify(OperatorImage(f, shrink), ladder))
show("{e_n / n}", classify(WeightedBasis("1/n"), ladder))

g = gamma_ladder(shrink, ladder)
print(f"\nreduced minimum modulus of diag(1/n): {g.values} -> {g.trend.value}")

# The closed-range hypothesis fails, yet the image is still a frame: the
# implication is only sufficient.
check = run_check("Prop-3.3", {"f": f, "L": shrink, "ladder": ladder})
print(f"\n{check.id}: {check.status.value}")
for name, value in check.hypotheses:
    print(f"  hypothesis {name}: {value}")
print(f"  conclusion {check.conclusion[0]}: {check.conclusion[1]}")
