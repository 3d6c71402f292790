"""Acceptance criteria 1-8, one PASS/FAIL line each.

Run with ``python -m pytest tests/test_acceptance.py -s`` or directly with
``python tests/test_acceptance.py``.
"""

import io
import math
import sys

import numpy as np
import pytest

from semiframes import (Adjoint, Diagonal, DirectSum, ExplicitFamily,
                        OperatorImage, PermutationWeighted, Status, Sum, WeightedBasis,
                        assemble_triple, bounds_at, check_sum_hypotheses, classify,
                        classify_as_sequence, density_diagnostic, disjointness, gamma_ladder,
                        realize, run_check, sequence_from_operator, spectral_report)
from semiframes.cli import main
from semiframes.formulas import Expr, Periodic
from semiframes.instances import RandomSource, even_odd_pair, scaled_basis, shrunk_basis
from semiframes.ladder import DEFAULT_SETTINGS, TruncationLadder
from semiframes.operators import IdentityPlus, example_3_8_operator
from semiframes.oracle import OracleConfig, sampled_lower_bound, sampled_rf_bound
from semiframes.propositions import run_all
from semiframes.report import restricted_bound_oracle

LADDER = TruncationLadder((8, 16, 32, 64, 128))
SEED = 20240601


def _line(number, ok, detail):
    return f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}"


def _dev(values, expected):
    return max(abs(a - b) for a, b in zip(values, expected))


def criterion_1():
    levels = list(LADDER)
    v = classify(scaled_basis(), LADDER)
    ok = v.lower_semi_frame is True and all(a == 1.0 for a in v.lower.values)
    ok &= v.bessel is False and v.upper.trend.value == "DIVERGING"
    ok &= _dev([b / d**2 for b, d in zip(v.upper.values, levels)], [1.0] * 5) <= 1e-12
    op = Diagonal("1/n")
    vl = classify(OperatorImage(scaled_basis(), op), LADDER)
    ok &= vl.frame is True
    ok &= _dev(vl.lower.values + vl.upper.values, [1.0] * 10) <= 1e-10
    g = gamma_ladder(op, LADDER)
    ok &= g.trend.value == "VANISHING" and _dev(g.values, [1 / d for d in levels]) <= 1e-12
    vi = classify(shrunk_basis(), LADDER)
    ok &= vi.lower_semi_frame is False and vi.lower.trend.value == "VANISHING"
    ok &= _dev(vi.lower.values, [1 / d**2 for d in levels]) <= 1e-12
    return ok, ("{n e_n}: A = 1, B = d^2 DIVERGING; {L f_n}: frame A = B = 1; "
                "gamma(L) = 1/d VANISHING; {e_n/n}: A = 1/d^2 VANISHING")


def criterion_2():
    op = example_3_8_operator()
    fam = OperatorImage(scaled_basis(), op)
    seq = classify_as_sequence(fam, LADDER)
    oracle = [restricted_bound_oracle(fam, d, DEFAULT_SETTINGS) for d in LADDER]
    dens = density_diagnostic(op, LADDER)
    ok = seq.lower_semi_frame is True
    ok &= _dev(seq.lower.values, oracle) <= 1e-9 and _dev(oracle, [5.0] * 5) <= 1e-9
    ok &= dens.adjoint_range_closed is True and dens.range_dense is False
    out, err = io.StringIO(), io.StringIO()
    code = main(["reproduce-paper", "example-3.8"], stdout=out, stderr=err)
    surfaced = "printed_coefficient: 3" in err.getvalue()
    ok &= code == 0 and surfaced
    return ok, (f"restricted A = {seq.lower.last:.12g} vs eigen-oracle {oracle[-1]:.12g}, "
                f"printed 3 surfaced = {surfaced}; R(L*) closed, R(L) not dense")


def criterion_3():
    f, g = even_odd_pair()
    reports = disjointness(f, g, LADDER)
    dev = max(abs(a - math.pi / 2) for r in reports for a in r.angles)
    ok = dev <= 1e-10 and all(r.strongly_disjoint for r in reports)
    ok &= classify(f, LADDER).lower_semi_frame is True
    ok &= classify(g, LADDER).lower_semi_frame is True
    vs = classify(DirectSum(f, g), LADDER)
    ok &= vs.lower_semi_frame is True and all(a == 1.0 for a in vs.lower.values)
    statuses = [run_check(p, {"f": f, "g": g, "ladder": LADDER}).status
                for p in ("Prop-5.5.fwd", "Prop-5.5.rev")]
    ok &= all(s is Status.PASS for s in statuses)
    return ok, (f"max |angle - pi/2| = {dev:.3g}; direct sum A = 1 exactly; "
                f"Prop-5.5 fwd/rev = {[s.value for s in statuses]}")


def criterion_4():
    worst_image = worst_sum = 0.0
    exact = True
    for level in (8, 16, 32, 64):
        for k in range(50):
            src = RandomSource(np.random.default_rng([SEED, 4, level, k]))
            fam = src.family()
            op = src.operator() if k % 2 else src.dense_operator(level)
            c = assemble_triple(fam, level).analysis
            lstar = realize(op, level).conj().T
            got = assemble_triple(OperatorImage(fam, op), level).analysis
            worst_image = max(worst_image, float(np.max(np.abs(got - c @ lstar))))
            other = src.family()
            cs = assemble_triple(DirectSum(fam, other), level).analysis
            block = np.hstack([c, assemble_triple(other, level).analysis])
            worst_sum = max(worst_sum, float(np.max(np.abs(cs - block))))
            exact &= np.array_equal(assemble_triple(sequence_from_operator(op), level).analysis,
                                    realize(op, level))
    ok = worst_image <= 1e-12 and worst_sum == 0.0 and exact
    return ok, (f"200 instances: max |C_Lf - C L*| = {worst_image:.3g}, "
                f"max |C_sum - [C1|C2]| = {worst_sum:.3g}, L* e_n reassembles L exactly = {exact}")


def criterion_5():
    worst_rel, worst_under = 0.0, 0.0
    for k in range(50):
        rng = np.random.default_rng([SEED, 5, k])
        d, n = int(rng.integers(1, 7)), int(rng.integers(1, 9))
        v = rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))
        fam = ExplicitFamily(tuple(map(tuple, v)))
        est = bounds_at(fam, 1)
        w = np.linalg.eigvalsh(assemble_triple(fam, 1).frame_op)
        ref_a = w[0] if est.complete else 0.0
        ref_rf = w[d - n] if est.surjective else 0.0
        scale = w[-1]
        for got, ref in [(est.lower_bound, ref_a), (est.bessel_bound, w[-1]),
                         (est.rf_bound, ref_rf)]:
            worst_rel = max(worst_rel, abs(got - ref) / max(abs(ref), 1e-12 * scale))
        cfg = OracleConfig(seed=k)
        worst_under = max(worst_under, est.lower_bound - sampled_lower_bound(fam, 1, cfg),
                          est.rf_bound - sampled_rf_bound(fam, 1, cfg))
    ok = worst_rel <= 1e-8 and worst_under <= 1e-9
    return ok, (f"50 families: max relative spectral-vs-eigen gap = {worst_rel:.3g}, "
                f"max oracle undercut = {max(worst_under, 0.0):.3g}")


def _sign_mags(rng, k, lo, hi):
    mags = np.exp(rng.uniform(np.log(lo), np.log(hi), size=k))
    return tuple(float(m) for m in mags * rng.choice([-1.0, 1.0], size=k))


def criterion_6():
    worst41 = worst43 = math.inf
    for k in range(100):
        rng = np.random.default_rng([SEED, 6, k])
        period = int(rng.choice([1, 2, 4]))
        op = Diagonal(Periodic(_sign_mags(rng, period, 1.01, 16.0), int(rng.choice([0, 1]))))
        for d in LADDER:
            g = spectral_report(Adjoint(op), d).gamma
            assert g > 1
            lhs = spectral_report(Adjoint(IdentityPlus(op)), d).sigma_min
            worst41 = min(worst41, lhs - (g - 1))
    for k in range(100):
        rng = np.random.default_rng([SEED, 7, k])
        src = RandomSource(rng)
        l1 = Diagonal(src.weight())
        gam = min(spectral_report(Adjoint(l1), d).gamma for d in LADDER)
        frac = float(rng.uniform(0.05, 0.99))
        w2 = Periodic(tuple(frac * gam * x / 16 for x in _sign_mags(rng, 2, 1.0, 16.0)))
        l2 = Diagonal(w2) if k % 2 else PermutationWeighted(src.index(), w2)
        for d in LADDER:
            rhs = spectral_report(Adjoint(l1), d).gamma - spectral_report(l2, d).sigma_max
            assert rhs > 0
            lhs = spectral_report(Adjoint(Sum(l1, l2)), d).sigma_min
            worst43 = min(worst43, lhs - rhs)
    rep = check_sum_hypotheses(scaled_basis(), WeightedBasis(Expr("-1/2")), LADDER)
    eq = abs(rep.sum_lower_bound - 0.25) <= 1e-10 and abs(rep.guarantee - 0.25) <= 1e-12
    ok = worst41 >= -1e-12 and worst43 >= -1e-12 and eq
    return ok, (f"min slack I+L*: {worst41:.3g}; min slack (L1+L2)*: {worst43:.3g}; "
                f"A_sum = {rep.sum_lower_bound:.12g} vs (1 - 1/2)^2")


def criterion_7():
    report = run_all({"builtin": True, "random": 200, "seed": SEED})
    counts = report.counts
    converse = [c for c in report.checks if c.id == "Prop-3.3"
                and "example-3.4" == c.witness.split(";")[0]]
    conv_ok = bool(converse) and all(c.status is Status.NOT_APPLICABLE and c.conclusion[1]
                                     for c in converse)
    ok = counts["FALSIFIED"] == 0 and report.exit_status == 0 and conv_ok
    return ok, (f"{len(report.checks)} checks: {counts}; exit {report.exit_status}; "
                f"example-3.4 converse NOT_APPLICABLE with true conclusion = {conv_ok}")


SCENARIO = """\
SPACES
ladder = 8,16,32,64
seed = 99

SEQUENCES
f = weighted weight=n
g = weighted weight=-1/2

OPERATORS
L = diagonal 2+1/n

TASKS
classify f
transform identity-plus f L
transform family-sum f g
suite builtin=true random=3
"""


def criterion_8(tmp_dir):
    path = tmp_dir / "scenario.txt"
    path.write_text(SCENARIO)
    runs = []
    for _ in range(2):
        out = io.StringIO()
        code = main(["run", str(path), "--json"], stdout=out, stderr=io.StringIO())
        runs.append((code, out.getvalue().encode()))
    ok = runs[0] == runs[1] and runs[0][0] == 0 and len(runs[0][1]) > 0
    return ok, f"two runs, {len(runs[0][1])} bytes each, identical = {runs[0] == runs[1]}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7]


@pytest.mark.parametrize("number", range(1, 8))
def test_criterion(number, capsys):
    ok, detail = CRITERIA[number - 1]()
    with capsys.disabled():
        print("\n" + _line(number, ok, detail))
    assert ok, detail


def test_criterion_8(tmp_path, capsys):
    ok, detail = criterion_8(tmp_path)
    with capsys.disabled():
        print("\n" + _line(8, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    import pathlib
    import tempfile

    results = [fn() for fn in CRITERIA]
    with tempfile.TemporaryDirectory() as tmp:
        results.append(criterion_8(pathlib.Path(tmp)))
    for i, (ok, detail) in enumerate(results, 1):
        print(_line(i, ok, detail))
    sys.exit(0 if all(ok for ok, _ in results) else 1)
