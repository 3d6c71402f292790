"""Mechanical checks of the structural propositions on concrete instances.

Each checker evaluates a list of hypotheses and one conclusion as
three-valued flags computed along a truncation ladder, then assigns

* ``PASS`` - all hypotheses and the conclusion hold,
* ``NOT_APPLICABLE`` - some hypothesis is false (the conclusion is still
  recorded, which is how converse counterexamples show up),
* ``FALSIFIED`` - every hypothesis holds and the conclusion fails,
* ``INCONCLUSIVE`` - a needed trajectory could not be classified.

Biconditionals are split into two directional checks, ``<id>.fwd``
(left-hand statement implies right-hand statement) and ``<id>.rev``.

Instance bindings are plain dicts with keys among ``f``, ``g``
(:class:`SequenceFamily`), ``L``, ``L2`` (:class:`OperatorSpec`),
``left_index``/``right_index`` (embeddings for the internal-sum
corollaries), ``ladder`` and ``settings``.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .classification import classify, classify_as_sequence
from .errors import EmptySpan, UnknownProposition
from .ladder import DEFAULT_SETTINGS, Trajectory, and3, as_ladder
from .operators import (IdentityPlus, Sum, density_diagnostic, gamma_ladder, norm_ladder,
                        realize, spectral_report)
from .sequences import (DirectSum, OperatorImage, PointwiseSum, assemble_triple,
                        sequence_from_operator)


class Status(str, enum.Enum):
    PASS = "PASS"
    NOT_APPLICABLE = "NOT_APPLICABLE"
    FALSIFIED = "FALSIFIED"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class PropositionCheck:
    id: str
    hypotheses: tuple
    conclusion: tuple
    status: Status
    witness: str
    notes: tuple = field(default=())

    def as_dict(self):
        return {
            "id": self.id,
            "status": self.status.value,
            "hypotheses": [{"name": n, "value": v} for n, v in self.hypotheses],
            "conclusion": {"name": self.conclusion[0], "value": self.conclusion[1]},
            "witness": self.witness,
            "notes": list(self.notes),
        }


def decide(hypotheses, conclusion):
    """Status from three-valued hypothesis and conclusion flags."""
    hyp = and3(*(v for _, v in hypotheses))
    if hyp is False:
        return Status.NOT_APPLICABLE
    if hyp is None or conclusion[1] is None:
        return Status.INCONCLUSIVE
    return Status.PASS if conclusion[1] else Status.FALSIFIED


class Instance:
    """Lazily evaluated flags for one binding set (memoized per instance)."""

    def __init__(self, bindings):
        self.b = dict(bindings)
        self.ladder = as_ladder(self.b.get("ladder", (8, 16, 32, 64, 128)))
        self.settings = self.b.get("settings", DEFAULT_SETTINGS)

    def __getitem__(self, key):
        try:
            return self.b[key]
        except KeyError:
            raise KeyError(f"instance is missing binding {key!r}") from None

    def witness(self, keys):
        parts = []
        for k in keys:
            if k in self.b:
                v = self.b[k]
                parts.append(f"{k}={v.describe() if hasattr(v, 'describe') else v}")
        if "label" in self.b:
            parts.insert(0, str(self.b["label"]))
        return "; ".join(parts)

    # sequences
    def verdict(self, fam):
        return classify(fam, self.ladder, self.settings)

    def flag(self, fam, name):
        return self.verdict(fam).flags[name]

    def lsf(self, fam):
        return self.flag(fam, "lower_semi_frame")

    def lsf_seq(self, fam):
        try:
            return classify_as_sequence(fam, self.ladder, self.settings).flags["lower_semi_frame"]
        except EmptySpan:
            return False

    # operators
    def density(self, op):
        return density_diagnostic(op, self.ladder, self.settings)

    def dense(self, op):
        return self.density(op).range_dense

    def gap_positive(self, values, name):
        """Trajectory of ``values`` stays positive and bounded away from zero."""
        traj = Trajectory.build(name, self.ladder.levels, [max(v, 0.0) for v in values],
                                self.settings.trend)
        if min(values) <= 0:
            return False
        return traj.bounded_below

    def gamma_adj_exceeds_one(self, op):
        g = gamma_ladder(op.adjoint, self.ladder, self.settings)
        return self.gap_positive([v - 1.0 for v in g.values], "gamma(L*) - 1")


def _check(pid, inst, keys, hypotheses, conclusion, notes=()):
    return PropositionCheck(pid, tuple(hypotheses), conclusion,
                            decide(hypotheses, conclusion), inst.witness(keys), tuple(notes))


# -- individual checkers -------------------------------------------------

def _prop_2_4(pid, inst):
    op = inst["L"]
    g = gamma_ladder(op, inst.ladder, inst.settings)
    ga = gamma_ladder(op.adjoint, inst.ladder, inst.settings)
    same = g.trend == ga.trend and np.allclose(g.values, ga.values, rtol=1e-10, atol=1e-14)
    return _check(pid, inst, ["L"], [("operator realizable", True)],
                  ("closedness of R(L) and R(L*) agree", bool(same)),
                  [f"gamma(L) trend {g.trend.value}, gamma(L*) trend {ga.trend.value}"])


def _prop_3_1(pid, inst):
    op = inst["L"]
    fam = sequence_from_operator(op)
    worst = 0.0
    for d in inst.ladder:
        c = assemble_triple(fam, d).analysis
        worst = max(worst, float(np.max(np.abs(c - realize(op, d)))))
    return _check(pid, inst, ["L"], [("operator realizable", True)],
                  ("analysis of {L* e_n} equals L", worst <= 1e-12),
                  [f"max entry deviation {worst:.3e}"])


def _image(inst):
    return OperatorImage(inst["f"], inst["L"])


def _prop_3_2_fwd(pid, inst):
    f, op = inst["f"], inst["L"]
    return _check(pid, inst, ["f", "L"],
                  [("f complete", inst.flag(f, "complete")), ("R(L) dense", inst.dense(op))],
                  ("{L f_n} complete", inst.flag(_image(inst), "complete")))


def _prop_3_2_rev(pid, inst):
    f, op = inst["f"], inst["L"]
    return _check(pid, inst, ["f", "L"],
                  [("f complete", inst.flag(f, "complete")),
                   ("{L f_n} complete", inst.flag(_image(inst), "complete"))],
                  ("R(L) dense", inst.dense(op)))


def _prop_3_3(pid, inst):
    f, op = inst["f"], inst["L"]
    dens = inst.density(op)
    concl = inst.lsf(_image(inst))
    hyps = [("f lower semi-frame", inst.lsf(f)), ("R(L) dense", dens.range_dense),
            ("R(L*) closed", dens.adjoint_range_closed)]
    notes = []
    if and3(*(v for _, v in hyps)) is False and concl:
        notes.append("hypotheses fail but the conclusion holds: the converse does not hold")
    return _check(pid, inst, ["f", "L"], hyps, ("{L f_n} lower semi-frame", concl), notes)


def _prop_3_5(pid, inst):
    f, op = inst["f"], inst["L"]
    dens = inst.density(op)
    base = [("R(L) dense", dens.range_dense), ("R(L*) = H", dens.adjoint_range_full)]
    lf, ff = ("{L f_n} lower semi-frame", inst.lsf(_image(inst))), \
        ("f lower semi-frame", inst.lsf(f))
    if pid.endswith(".fwd"):
        return _check(pid, inst, ["f", "L"], base + [lf], ff)
    return _check(pid, inst, ["f", "L"], base + [ff], lf)


def _prop_3_6(pid, inst):
    f, op = inst["f"], inst["L"]
    dens = inst.density(op)
    frame = ("f frame", inst.flag(f, "frame"))
    lf = ("{L f_n} lower semi-frame", inst.lsf(_image(inst)))
    ranges = ("R(L) dense and R(L*) closed", and3(dens.range_dense, dens.adjoint_range_closed))
    if pid.endswith(".fwd"):
        return _check(pid, inst, ["f", "L"], [frame, lf], ranges)
    return _check(pid, inst, ["f", "L"],
                  [frame, ("R(L) dense", dens.range_dense),
                   ("R(L*) closed", dens.adjoint_range_closed)], lf)


def _prop_3_7(pid, inst):
    f, op = inst["f"], inst["L"]
    return _check(pid, inst, ["f", "L"],
                  [("f lower semi-frame", inst.lsf(f)),
                   ("R(L*) closed", inst.density(op).adjoint_range_closed)],
                  ("{L f_n} lower semi-frame sequence", inst.lsf_seq(_image(inst))))


def _prop_3_9(pid, inst):
    f, op = inst["f"], inst["L"]
    full = ("R(L*) = H", inst.density(op).adjoint_range_full)
    seq = ("{L f_n} lower semi-frame sequence", inst.lsf_seq(_image(inst)))
    ff = ("f lower semi-frame", inst.lsf(f))
    if pid.endswith(".fwd"):
        return _check(pid, inst, ["f", "L"], [full, seq], ff)
    return _check(pid, inst, ["f", "L"], [full, ff], seq)


def _prop_3_10(pid, inst):
    f, op = inst["f"], inst["L"]
    return _check(pid, inst, ["f", "L"],
                  [("f Riesz-Fischer", inst.flag(f, "riesz_fischer")),
                   ("R(L*) = H", inst.density(op).adjoint_range_full)],
                  ("{L f_n} Riesz-Fischer", inst.flag(_image(inst), "riesz_fischer")))


def _identity_plus_notes(inst, op):
    d = inst.ladder.levels[-1]
    g_adj = spectral_report(op.adjoint, d, inst.settings).gamma
    g_sum = spectral_report(IdentityPlus(op).adjoint, d, inst.settings).gamma
    rel = "equal" if math.isclose(g_sum, g_adj - 1.0, rel_tol=1e-9, abs_tol=1e-12) else \
        ("strict" if g_sum > g_adj - 1.0 else "violated")
    return [f"level {d}: gamma(I+L*) = {g_sum:.12g}, gamma(L*) - 1 = {g_adj - 1.0:.12g} ({rel})"]


def _prop_4_1(pid, inst):
    f, op = inst["f"], inst["L"]
    fam = OperatorImage(f, IdentityPlus(op))
    return _check(pid, inst, ["f", "L"],
                  [("f lower semi-frame", inst.lsf(f)),
                   ("R(I+L) dense", inst.dense(IdentityPlus(op))),
                   ("R(L) dense", inst.dense(op)),
                   ("gamma(L*) > 1", inst.gamma_adj_exceeds_one(op))],
                  ("{f_n + L f_n} lower semi-frame", inst.lsf(fam)),
                  _identity_plus_notes(inst, op))


def _cor_4_2(pid, inst):
    f, op = inst["f"], inst["L"]
    fam = OperatorImage(f, IdentityPlus(op))
    return _check(pid, inst, ["f", "L"],
                  [("f lower semi-frame", inst.lsf(f)), ("R(L) dense", inst.dense(op)),
                   ("gamma(L*) > 1", inst.gamma_adj_exceeds_one(op))],
                  ("{f_n + L f_n} lower semi-frame sequence", inst.lsf_seq(fam)))


def _prop_4_3(pid, inst):
    f, l1, l2 = inst["f"], inst["L"], inst["L2"]
    total = Sum(l1, l2)
    g1 = gamma_ladder(l1.adjoint, inst.ladder, inst.settings)
    n2 = norm_ladder(l2, inst.ladder, inst.settings)
    gap = inst.gap_positive([a - b for a, b in zip(g1.values, n2.values)],
                            "gamma(L1*) - |L2|")
    return _check(pid, inst, ["f", "L", "L2"],
                  [("f lower semi-frame", inst.lsf(f)),
                   ("R(L1+L2) dense", inst.dense(total)),
                   ("L2 bounded", n2.bounded_above),
                   ("gamma(L1*) > |L2|", gap)],
                  ("{(L1+L2) f_n} lower semi-frame", inst.lsf(OperatorImage(f, total))))


def _cor_4_4(pid, inst):
    f, op = inst["f"], inst["L"]
    fam = OperatorImage(f, IdentityPlus(op))
    return _check(pid, inst, ["f", "L"],
                  [("f Riesz-Fischer", inst.flag(f, "riesz_fischer")),
                   ("R(L*) = H", inst.density(op).adjoint_range_full),
                   ("gamma(L*) > 1", inst.gamma_adj_exceeds_one(op))],
                  ("{f_n + L f_n} Riesz-Fischer", inst.flag(fam, "riesz_fischer")),
                  _identity_plus_notes(inst, op))


def _prop_4_5(pid, inst):
    f, g = inst["f"], inst["g"]
    vf, vg = inst.verdict(f), inst.verdict(g)
    total = PointwiseSum(f, g)
    gaps = [math.sqrt(a) - math.sqrt(b) for a, b in zip(vf.lower.values, vg.upper.values)]
    notes = []
    vs = inst.verdict(total)
    for gap, a_sum, d in zip(gaps, vs.lower.values, inst.ladder.levels):
        if gap > 0 and a_sum < gap**2 - 1e-9 * max(1.0, gap**2):
            notes.append(f"level {d}: A(f+g) = {a_sum:.12g} below (sqrt(alpha)-sqrt(beta))^2")
    return _check(pid, inst, ["f", "g"],
                  [("f lower semi-frame", vf.flags["lower_semi_frame"]),
                   ("g Bessel", vg.flags["bessel"]),
                   ("{f_n + g_n} complete", vs.flags["complete"]),
                   ("sqrt(alpha) > sqrt(beta)", inst.gap_positive(gaps, "sqrt gap"))],
                  ("{f_n + g_n} lower semi-frame", vs.flags["lower_semi_frame"]), notes)


def _disjoint_flags(inst):
    from .direct_sum import disjointness, taxonomy

    return taxonomy(disjointness(inst["f"], inst["g"], inst.ladder, inst.settings))


def _prop_5_2(pid, inst):
    f, g = inst["f"], inst["g"]
    disjoint = ("f, g disjoint", _disjoint_flags(inst)["disjoint"])
    both = ("f and g complete", and3(inst.flag(f, "complete"), inst.flag(g, "complete")))
    total = ("{f_n (+) g_n} complete", inst.flag(DirectSum(f, g), "complete"))
    if pid.endswith(".fwd"):
        return _check(pid, inst, ["f", "g"], [disjoint, total], both)
    return _check(pid, inst, ["f", "g"], [disjoint, both], total)


def _internal(inst):
    from .direct_sum import InternalSum

    left = inst.b.get("left_index")
    right = inst.b.get("right_index")
    if left is None or right is None:
        return DirectSum(inst["f"], inst["g"])
    return InternalSum(inst["f"], inst["g"], left, right)


def _cor_5_3(pid, inst):
    f, g = inst["f"], inst["g"]
    return _check(pid, inst, ["f", "g", "left_index", "right_index"],
                  [("f, g disjoint", _disjoint_flags(inst)["disjoint"]),
                   ("f complete for K1", inst.flag(f, "complete")),
                   ("g complete for K2", inst.flag(g, "complete"))],
                  ("{f_n (+) g_n} complete for H", inst.flag(_internal(inst), "complete")))


def _prop_5_4(pid, inst):
    f, g = inst["f"], inst["g"]
    return _check(pid, inst, ["f", "g"],
                  [("f lower semi-frame", inst.lsf(f)), ("g lower semi-frame", inst.lsf(g)),
                   ("f, g disjoint", _disjoint_flags(inst)["disjoint"])],
                  ("{f_n (+) g_n} lower semi-frame", inst.lsf(DirectSum(f, g))))


def _prop_5_5(pid, inst):
    f, g = inst["f"], inst["g"]
    strong = ("f, g strongly disjoint", _disjoint_flags(inst)["strongly_disjoint"])
    both = ("f and g lower semi-frames", and3(inst.lsf(f), inst.lsf(g)))
    total = ("{f_n (+) g_n} lower semi-frame", inst.lsf(DirectSum(f, g)))
    if pid.endswith(".fwd"):
        return _check(pid, inst, ["f", "g"], [strong, total], both)
    return _check(pid, inst, ["f", "g"], [strong, both], total)


def _cor_5_6(pid, inst):
    f, g = inst["f"], inst["g"]
    return _check(pid, inst, ["f", "g", "left_index", "right_index"],
                  [("f, g strongly disjoint", _disjoint_flags(inst)["strongly_disjoint"]),
                   ("f lower semi-frame for K1", inst.lsf(f)),
                   ("g lower semi-frame for K2", inst.lsf(g))],
                  ("{f_n (+) g_n} lower semi-frame for H", inst.lsf(_internal(inst))))


def _prop_5_8(pid, inst):
    f, g = inst["f"], inst["g"]
    return _check(pid, inst, ["f", "g"],
                  [("f Riesz-Fischer", inst.flag(f, "riesz_fischer"))],
                  ("{f_n (+) g_n} Riesz-Fischer", inst.flag(DirectSum(f, g), "riesz_fischer")))


@dataclass(frozen=True)
class Checker:
    id: str
    func: object
    needs: tuple
    summary: str


_TABLE = [
    ("Prop-2.4", _prop_2_4, ("L",), "closed range of L iff closed range of L*"),
    ("Prop-3.1", _prop_3_1, ("L",), "L is the analysis operator of {L* e_n}"),
    ("Prop-3.2.fwd", _prop_3_2_fwd, ("f", "L"), "f complete, R(L) dense => {L f_n} complete"),
    ("Prop-3.2.rev", _prop_3_2_rev, ("f", "L"), "f, {L f_n} complete => R(L) dense"),
    ("Prop-3.3", _prop_3_3, ("f", "L"),
     "f lower semi-frame, R(L) dense, R(L*) closed => {L f_n} lower semi-frame"),
    ("Prop-3.5.fwd", _prop_3_5, ("f", "L"),
     "R(L) dense, R(L*) = H, {L f_n} lower semi-frame => f lower semi-frame"),
    ("Prop-3.5.rev", _prop_3_5, ("f", "L"),
     "R(L) dense, R(L*) = H, f lower semi-frame => {L f_n} lower semi-frame"),
    ("Prop-3.6.fwd", _prop_3_6, ("f", "L"),
     "f frame, {L f_n} lower semi-frame => R(L) dense and R(L*) closed"),
    ("Prop-3.6.rev", _prop_3_6, ("f", "L"),
     "f frame, R(L) dense, R(L*) closed => {L f_n} lower semi-frame"),
    ("Prop-3.7", _prop_3_7, ("f", "L"),
     "f lower semi-frame, R(L*) closed => {L f_n} lower semi-frame sequence"),
    ("Prop-3.9.fwd", _prop_3_9, ("f", "L"),
     "R(L*) = H, {L f_n} lower semi-frame sequence => f lower semi-frame"),
    ("Prop-3.9.rev", _prop_3_9, ("f", "L"),
     "R(L*) = H, f lower semi-frame => {L f_n} lower semi-frame sequence"),
    ("Prop-3.10", _prop_3_10, ("f", "L"),
     "f Riesz-Fischer, R(L*) = H => {L f_n} Riesz-Fischer"),
    ("Prop-4.1", _prop_4_1, ("f", "L"),
     "f lower semi-frame, R(I+L), R(L) dense, gamma(L*) > 1 => {f_n + L f_n} lower semi-frame"),
    ("Cor-4.2", _cor_4_2, ("f", "L"),
     "f lower semi-frame, R(L) dense, gamma(L*) > 1 => {f_n + L f_n} lower semi-frame sequence"),
    ("Prop-4.3", _prop_4_3, ("f", "L", "L2"),
     "f lower semi-frame, R(L1+L2) dense, gamma(L1*) > |L2| => {(L1+L2) f_n} lower semi-frame"),
    ("Cor-4.4", _cor_4_4, ("f", "L"),
     "f Riesz-Fischer, R(L*) = H, gamma(L*) > 1 => {f_n + L f_n} Riesz-Fischer"),
    ("Prop-4.5", _prop_4_5, ("f", "g"),
     "f lower semi-frame (alpha), g Bessel (beta), f+g complete, sqrt(alpha) > sqrt(beta) "
     "=> {f_n + g_n} lower semi-frame"),
    ("Prop-5.2.fwd", _prop_5_2, ("f", "g"), "disjoint, f (+) g complete => f, g complete"),
    ("Prop-5.2.rev", _prop_5_2, ("f", "g"), "disjoint, f, g complete => f (+) g complete"),
    ("Cor-5.3", _cor_5_3, ("f", "g"),
     "K1 (+) K2 = H, disjoint, f, g complete for K1, K2 => f (+) g complete for H"),
    ("Prop-5.4", _prop_5_4, ("f", "g"),
     "f, g lower semi-frames, disjoint => f (+) g lower semi-frame"),
    ("Prop-5.5.fwd", _prop_5_5, ("f", "g"),
     "strongly disjoint, f (+) g lower semi-frame => f, g lower semi-frames"),
    ("Prop-5.5.rev", _prop_5_5, ("f", "g"),
     "strongly disjoint, f, g lower semi-frames => f (+) g lower semi-frame"),
    ("Cor-5.6", _cor_5_6, ("f", "g"),
     "K1 (+) K2 = H, strongly disjoint, f, g lower semi-frames => f (+) g lower semi-frame for H"),
    ("Prop-5.8", _prop_5_8, ("f", "g"), "f Riesz-Fischer => f (+) g Riesz-Fischer"),
]

REGISTRY = {pid: Checker(pid, fn, needs, summary) for pid, fn, needs, summary in _TABLE}
PROPOSITION_IDS = tuple(REGISTRY)
DIRECT_SUM_IDS = ("Prop-5.2.fwd", "Prop-5.2.rev", "Prop-5.4", "Prop-5.5.fwd",
                  "Prop-5.5.rev", "Prop-5.8")


def expand_id(pid):
    """Directional ids for ``pid``; ``"Prop-3.2"`` gives both directions."""
    if pid in REGISTRY:
        return [pid]
    found = [k for k in PROPOSITION_IDS if k.rsplit(".", 1)[0] == pid and k != pid
             and k.endswith((".fwd", ".rev"))]
    if not found:
        raise UnknownProposition(pid)
    return found


def run_check(pid, bindings):
    """Evaluate the checker registered as ``pid`` on ``bindings``."""
    if pid not in REGISTRY:
        raise UnknownProposition(pid)
    checker = REGISTRY[pid]
    inst = bindings if isinstance(bindings, Instance) else Instance(bindings)
    for key in checker.needs:
        inst[key]
    return checker.func(pid, inst)


_CONFIG_KEYS = {"builtin", "random", "seed", "ladder", "random_ladder", "propositions",
                "stress", "counterexamples", "settings"}


@dataclass
class SuiteReport:
    """Ordered checks plus per-status counts."""

    checks: list
    config: dict

    @property
    def counts(self):
        out = {s.value: 0 for s in Status}
        for c in self.checks:
            out[c.status.value] += 1
        return out

    @property
    def exit_status(self):
        return 2 if self.counts[Status.FALSIFIED.value] else 0

    def by_id(self, pid):
        return [c for c in self.checks if c.id == pid]

    def as_dict(self):
        return {"config": self.config, "counts": self.counts,
                "exit_status": self.exit_status,
                "checks": [c.as_dict() for c in self.checks]}


def _selected(ids):
    if ids is None:
        return list(PROPOSITION_IDS)
    out = []
    for pid in ids:
        out += [p for p in expand_id(pid) if p not in out]
    return out


def run_all(config=None):
    """Run the suite described by ``config``.

    Keys (all optional): ``builtin`` (bool), ``counterexamples`` (bool),
    ``random`` (instances per proposition), ``seed``, ``stress`` (bool),
    ``ladder`` (for named instances), ``random_ladder``, ``propositions``
    (ids to keep; base ids select both directions) and ``settings``.  An
    empty config runs nothing.  Random instance ``k`` of the ``i``-th
    proposition uses ``default_rng([seed, i, k])``, so reports do not depend
    on which other propositions are selected or on execution order.
    """
    from .instances import builtin_instances, counterexample_instances, random_bindings

    config = dict(config or {})
    unknown = set(config) - _CONFIG_KEYS
    if unknown:
        raise ValueError(f"unknown suite config keys: {sorted(unknown)}")
    settings = config.get("settings", DEFAULT_SETTINGS)
    ladder = as_ladder(config.get("ladder", (8, 16, 32, 64, 128)))
    rladder = as_ladder(config.get("random_ladder", (8, 16, 32, 64)))
    seed = int(config.get("seed", 0))
    count = int(config.get("random", 0))
    if count < 0 or seed < 0:
        raise ValueError("random count and seed must be nonnegative")
    keep = _selected(config.get("propositions"))

    checks = []
    named = []
    if config.get("builtin"):
        named += builtin_instances(ladder, settings)
    if config.get("counterexamples"):
        named += counterexample_instances(ladder, settings)
    checks += [run_check(pid, b) for pid, b in named if pid in keep]
    stress = bool(config.get("stress", False))
    for pid in keep:
        i = PROPOSITION_IDS.index(pid)
        for k in range(count):
            rng = np.random.default_rng([seed, i, k])
            checks.append(run_check(pid, random_bindings(pid, rng, rladder, settings, stress)))

    echo = {"builtin": bool(config.get("builtin", False)),
            "counterexamples": bool(config.get("counterexamples", False)),
            "random": count, "seed": seed, "stress": stress,
            "ladder": list(ladder.levels), "random_ladder": list(rladder.levels),
            "propositions": keep}
    return SuiteReport(checks, echo)
