"""How much perturbation a lower semi-frame tolerates.

Three estimates are checked numerically on diagonal examples: adding the
identity to an operator whose adjoint has reduced minimum modulus above 1,
adding a small operator to one with a large reduced minimum modulus, and
adding a Bessel sequence with a small upper bound to a lower semi-frame.
"""

from semiframes import (Adjoint, Diagonal, IdentityPlus, Sum, TruncationLadder, WeightedBasis,
                        check_sum_hypotheses, spectral_report)

ladder = TruncationLadder((8, 16, 32, 64, 128))

L = Diagonal("2+1/n")
print("level  gamma(L*)  sigma_min(I+L*)  gamma(L*)-1")
for d in ladder:
    g = spectral_report(Adjoint(L), d).gamma
    s = spectral_report(Adjoint(IdentityPlus(L)), d).sigma_min
    print(f"{d:5d}  {g:9.6f}  {s:15.6f}  {g - 1:11.6f}")

L1, L2 = Diagonal("3"), Diagonal("-1/n")
print("\nlevel  sigma_min((L1+L2)*)  gamma(L1*)-|L2|")
for d in ladder:
    lhs = spectral_report(Adjoint(Sum(L1, L2)), d).sigma_min
    rhs = spectral_report(Adjoint(L1), d).gamma - spectral_report(L2, d).sigma_max
    print(f"{d:5d}  {lhs:19.6f}  {rhs:15.6f}")

rep = check_sum_hypotheses(WeightedBasis("n"), WeightedBasis("-1/2"), ladder)
print(f"\n{{n e_n}} + {{-e_n/2}}: alpha={rep.alpha}, beta={rep.beta}, "
      f"guarantee={rep.guarantee}, observed A={rep.sum_lower_bound}")
