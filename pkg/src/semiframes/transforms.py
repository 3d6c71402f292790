"""New sequences from old: operator images, perturbations and sums.

Every construction returns an ordinary :class:`SequenceFamily`, so results
can be classified, transformed again or summed.  The analysis operator of
each result factors as

=============  ===============================  ==================
mode           sequence                         analysis operator
=============  ===============================  ==================
IMAGE          ``{L f_n}``                      ``C L*``
IDENTITY_PLUS  ``{f_n + L f_n}``                ``C (I + L*)``
OPERATOR_SUM   ``{(L1 + L2) f_n}``              ``C (L1* + L2*)``
FAMILY_SUM     ``{f_n + g_n}``                  ``C1 + C2``
=============  ===============================  ==================
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .classification import classify
from .errors import InconclusiveLadder, NotBessel, ShapeError
from .ladder import DEFAULT_SETTINGS, Trend, as_ladder
from .operators import IdentityPlus, OperatorSpec, Sum, realize
from .sequences import (OperatorImage, PointwiseSum, SequenceFamily, assemble_triple,
                        materialize, sequence_from_operator)

__all__ = ["Mode", "TransformPlan", "apply_transform", "predicted_analysis",
           "sequence_from_operator", "SumHypotheses", "check_sum_hypotheses"]


class Mode(str, enum.Enum):
    IMAGE = "image"
    IDENTITY_PLUS = "identity-plus"
    OPERATOR_SUM = "operator-sum"
    FAMILY_SUM = "family-sum"


@dataclass(frozen=True)
class TransformPlan:
    base: SequenceFamily
    op: OperatorSpec = None
    mode: Mode = Mode.IMAGE
    second: object = None

    def __post_init__(self):
        object.__setattr__(self, "mode", Mode(self.mode))
        if self.mode is Mode.FAMILY_SUM:
            if not isinstance(self.second, SequenceFamily):
                raise TypeError("family-sum needs a second SequenceFamily")
        elif self.op is None:
            raise TypeError(f"{self.mode.value} needs an operator")
        if self.mode is Mode.OPERATOR_SUM and not isinstance(self.second, OperatorSpec):
            raise TypeError("operator-sum needs a second OperatorSpec")


def apply_transform(plan):
    """Build the family described by ``plan``."""
    if plan.mode is Mode.IMAGE:
        return OperatorImage(plan.base, plan.op)
    if plan.mode is Mode.IDENTITY_PLUS:
        return OperatorImage(plan.base, IdentityPlus(plan.op))
    if plan.mode is Mode.OPERATOR_SUM:
        return OperatorImage(plan.base, Sum(plan.op, plan.second))
    return PointwiseSum(plan.base, plan.second)


def predicted_analysis(plan, level):
    """Analysis operator of the result, computed from the factorization table."""
    c = assemble_triple(plan.base, level).analysis
    if plan.mode is Mode.FAMILY_SUM:
        c2 = assemble_triple(plan.second, level).analysis
        if c.shape != c2.shape:
            raise ShapeError(f"cannot add analysis operators {c.shape} and {c2.shape}")
        return c + c2
    dim = c.shape[1]
    ladj = realize(plan.op, dim).conj().T
    if plan.mode is Mode.IDENTITY_PLUS:
        ladj = np.eye(dim) + ladj
    elif plan.mode is Mode.OPERATOR_SUM:
        ladj = ladj + realize(plan.second, dim).conj().T
    return c @ ladj


@dataclass(frozen=True)
class SumHypotheses:
    """Lower bound of ``f``, Bessel bound of ``g`` and the guaranteed bound of ``f + g``."""

    alpha: float
    beta: float
    complete_sum: bool
    hypothesis: bool
    guarantee: float
    sum_lower_bound: float
    per_level_ok: bool
    holds: bool

    def as_dict(self):
        return dict(self.__dict__)


def _stable_last(traj, what):
    if traj.trend is Trend.INCONCLUSIVE:
        raise InconclusiveLadder(f"{what} trajectory is inconclusive; extend the ladder")
    return traj.last


def check_sum_hypotheses(f, g, ladder, settings=DEFAULT_SETTINGS):
    """Evaluate the lower-semi-frame-plus-Bessel sum estimate on ``(f, g)``.

    ``alpha`` and ``beta`` are the last-level lower bound of ``f`` and Bessel
    bound of ``g``.  When ``sqrt(alpha) > sqrt(beta)`` and ``{f_n + g_n}`` is
    complete the guaranteed lower bound is ``(sqrt(alpha) - sqrt(beta))^2``;
    ``holds`` records whether the sum meets it (to 1e-9) and
    ``per_level_ok`` whether the level-wise version holds on every rung.
    """
    ladder = as_ladder(ladder)
    nf, ng = materialize(f, ladder.levels[0]), materialize(g, ladder.levels[0])
    if nf.shape != ng.shape:
        raise ShapeError(f"families differ in shape: {nf.shape} vs {ng.shape}")
    vf, vg = classify(f, ladder, settings), classify(g, ladder, settings)
    if vg.upper.trend is Trend.DIVERGING:
        raise NotBessel(f"{g.describe()} has a diverging upper bound")
    alpha = _stable_last(vf.lower, "lower bound of f")
    beta = _stable_last(vg.upper, "Bessel bound of g")
    vs = classify(PointwiseSum(f, g), ladder, settings)
    complete = vs.flags["complete"]
    hyp = complete and math.sqrt(alpha) > math.sqrt(beta)
    guarantee = (math.sqrt(alpha) - math.sqrt(beta)) ** 2 if hyp else 0.0
    per_level = True
    for ef, eg, es in zip(vf.estimates, vg.estimates, vs.estimates):
        gap = math.sqrt(ef.lower_bound) - math.sqrt(eg.bessel_bound)
        if gap > 0 and es.lower_bound < gap**2 - 1e-9 * max(1.0, gap**2):
            per_level = False
    a_sum = vs.lower.last
    return SumHypotheses(alpha, beta, complete, hyp, guarantee, a_sum, per_level,
                         (not hyp) or a_sum >= guarantee - 1e-9)
