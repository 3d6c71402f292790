"""Lower bounds on the closed span when the operator has a kernel.

L sends (x1, x2, x3, ...) to (x1 + x2, 0, x3, ...).  Applied to {n e_n} it
gives {e1, 2 e1, 3 e3, 4 e4, ...}: not complete, but a lower semi-frame for
its own closed span.  The restricted lower bound is compared with an
independent eigenvalue computation and with a brute-force sampling oracle.
"""

import numpy as np

from semiframes import (ExplicitFamily, OperatorImage, TruncationLadder, WeightedBasis, classify,
                        classify_as_sequence, density_diagnostic, realize)
from semiframes.operators import example_3_8_operator
from semiframes.oracle import OracleConfig, sampled_lower_bound
from semiframes.ladder import DEFAULT_SETTINGS
from semiframes.report import restricted_bound_oracle

ladder = TruncationLadder((8, 16, 32, 64, 128))
L = example_3_8_operator()
print("section of L at level 4:\n", realize(L, 4).real)
print("singular values at level 8:", np.round(np.linalg.svd(realize(L, 8), compute_uv=False), 6))

diag = density_diagnostic(L, ladder)
print(f"\nrange of L dense: {diag.range_dense}")
print(f"range of L* closed: {diag.adjoint_range_closed} (gamma of L*: {diag.gamma_adjoint.values})")

lf = OperatorImage(WeightedBasis("n"), L)
print(f"\n{{L f_n}} complete: {classify(lf, ladder).complete}")
span = classify_as_sequence(lf, ladder)
print(f"lower semi-frame on its span: {span.lower_semi_frame}, A = {span.lower.values}")
print("smallest nonzero eigenvalue of S:",
      [restricted_bound_oracle(lf, d, DEFAULT_SETTINGS) for d in ladder])

# Inside span{e1} the first two vectors are 1 and 2, so the bound there is
# |x1|^2 + |2 x1|^2 = 5 |x1|^2; the sampling oracle agrees.
on_e1 = ExplicitFamily(((1,), (2,)))
print("sampled bound for {e1, 2 e1} on span{e1}:",
      round(sampled_lower_bound(on_e1, 1, OracleConfig(samples=2000)), 9))
