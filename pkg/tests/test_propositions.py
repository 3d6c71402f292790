import json

import pytest

from semiframes import (PROPOSITION_IDS, Diagonal, Status, UnknownProposition, WeightedBasis,
                        run_check, standard_basis)
from semiframes.formulas import Periodic
from semiframes.instances import (builtin_instances, counterexample_instances, even_odd_pair,
                                  scaled_basis)
from semiframes.propositions import decide, expand_id, run_all

BICONDITIONALS = ("Prop-3.2", "Prop-3.5", "Prop-3.6", "Prop-3.9", "Prop-5.2", "Prop-5.5")


def _named(check):
    return dict(check.hypotheses)


def test_every_biconditional_has_two_directions():
    for base in BICONDITIONALS:
        assert expand_id(base) == [base + ".fwd", base + ".rev"]
        assert set(expand_id(base)) <= set(PROPOSITION_IDS)


def test_unknown_id():
    with pytest.raises(UnknownProposition):
        run_check("Prop-9.9", {})
    with pytest.raises(UnknownProposition):
        expand_id("Prop-9.9")


def test_decide_truth_table():
    assert decide([("h", True)], ("c", True)) is Status.PASS
    assert decide([("h", True)], ("c", False)) is Status.FALSIFIED
    assert decide([("h", False), ("k", None)], ("c", None)) is Status.NOT_APPLICABLE
    assert decide([("h", None)], ("c", True)) is Status.INCONCLUSIVE
    assert decide([("h", True)], ("c", None)) is Status.INCONCLUSIVE


def test_converse_counterexample_is_not_applicable(ladder):
    c = run_check("Prop-3.3", {"f": scaled_basis(), "L": Diagonal("1/n"), "ladder": ladder})
    assert c.status is Status.NOT_APPLICABLE
    assert c.conclusion[1] is True
    assert False in _named(c).values()


def test_unit_basis_under_shrink_is_consistent(ladder):
    fwd = run_check("Prop-3.6.fwd", {"f": standard_basis(), "L": Diagonal("1/n"),
                                     "ladder": ladder})
    rev = run_check("Prop-3.6.rev", {"f": standard_basis(), "L": Diagonal("1/n"),
                                     "ladder": ladder})
    assert fwd.status is Status.NOT_APPLICABLE
    assert rev.status is not Status.FALSIFIED


def test_riesz_fischer_summand(ladder):
    g = WeightedBasis(Periodic((3.0, -0.25)))
    c = run_check("Prop-5.8", {"f": standard_basis(), "g": g, "ladder": ladder})
    assert c.status is Status.PASS


def test_example_5_7_pair_passes_both_directions(ladder):
    f, g = even_odd_pair()
    for pid in ("Prop-5.5.fwd", "Prop-5.5.rev"):
        assert run_check(pid, {"f": f, "g": g, "ladder": ladder}).status is Status.PASS


def test_missing_binding_is_reported():
    with pytest.raises(KeyError, match="'L'"):
        run_check("Prop-3.3", {"f": standard_basis()})


def test_builtin_instances_never_falsify():
    report = run_all({"builtin": True})
    assert report.counts["FALSIFIED"] == 0
    assert report.counts["INCONCLUSIVE"] == 0
    assert report.exit_status == 0
    ids = {c.id for c in report.checks}
    assert ids == set(PROPOSITION_IDS)
    assert len(report.checks) == len(builtin_instances())


def test_empty_config():
    report = run_all({})
    assert report.checks == [] and report.exit_status == 0
    assert run_all().checks == []


def test_bad_config():
    with pytest.raises(ValueError):
        run_all({"randum": 3})
    with pytest.raises(ValueError):
        run_all({"random": -1})


def test_counterexamples_falsify_exactly_the_known_directions():
    report = run_all({"counterexamples": True})
    falsified = {c.id for c in report.checks if c.status is Status.FALSIFIED}
    assert falsified == {"Prop-3.5.fwd", "Prop-3.9.fwd", "Prop-4.3", "Prop-5.4"}
    assert len(report.checks) == len(counterexample_instances())
    assert report.exit_status == 2


def test_random_instances_are_deterministic_and_selection_independent():
    a = run_all({"random": 3, "seed": 11, "propositions": ["Prop-3.3", "Prop-5.2"]})
    b = run_all({"random": 3, "seed": 11, "propositions": ["Prop-3.3", "Prop-5.2"]})
    assert json.dumps(a.as_dict()) == json.dumps(b.as_dict())
    only = run_all({"random": 3, "seed": 11, "propositions": ["Prop-5.2.rev"]})
    assert [c.as_dict() for c in a.by_id("Prop-5.2.rev")] == \
        [c.as_dict() for c in only.checks]
    assert len(a.checks) == 9


def test_random_suite_sample_never_falsifies():
    report = run_all({"random": 10, "seed": 3})
    assert report.counts["FALSIFIED"] == 0
    assert report.counts["INCONCLUSIVE"] == 0


def test_stress_generator_only_hits_known_failing_directions():
    report = run_all({"random": 40, "seed": 0, "stress": True})
    falsified = {c.id for c in report.checks if c.status is Status.FALSIFIED}
    assert falsified <= {"Prop-3.5.fwd", "Prop-3.9.fwd", "Prop-4.3"}
