"""Randomized falsification of the structural implications.

Every proposition checker is run on the worked examples and on seeded random
diagonal and permutation-weighted instances.  A FALSIFIED status would mean
an instance satisfying every hypothesis but not the conclusion.  The
curated counterexamples show that some one-directional readings are
genuinely false, so they are kept out of the default suite.
"""

from collections import Counter

from semiframes.propositions import run_all

report = run_all({"builtin": True, "random": 20, "seed": 1})
print("built-ins + 20 random instances per proposition:", report.counts)

per_id = Counter((c.id, c.status.value) for c in report.checks)
for (pid, status), n in sorted(per_id.items()):
    print(f"  {pid:13s} {status:15s} {n}")

bad = run_all({"counterexamples": True})
print("\ncurated counterexamples:")
for c in bad.checks:
    print(f"  {c.id:13s} {c.status.value:10s} {c.witness}")
