"""Sequence classes decided along a truncation ladder.

At each level the analysis operator ``C`` (``N x dim``) gives

* the lower frame bound ``A = sigma_min(C)^2`` (zero unless ``C`` is
  injective),
* the Bessel bound ``B = sigma_max(C)^2``,
* the Riesz-Fischer bound ``sigma_min(D)^2`` over coefficient space (zero
  unless ``C`` is onto).

Trajectories of these numbers are classified with the shared trend rule and
combined into the five class flags.  Flags are three-valued (``None`` when a
trajectory is inconclusive).
"""

import functools
from dataclasses import dataclass, field

from . import linalg
from .errors import EmptySpan
from .ladder import DEFAULT_SETTINGS, Trajectory, and3, as_ladder
from .sequences import assemble_triple

CLASS_NAMES = ("complete", "bessel", "frame", "lower_semi_frame", "riesz_fischer")


@dataclass(frozen=True)
class BoundsEstimate:
    level: int
    lower_bound: float
    bessel_bound: float
    rf_bound: float
    rank: int
    complete: bool
    surjective: bool
    dim: int
    count: int

    def as_dict(self):
        return dict(self.__dict__)


def bounds_from_analysis(analysis, level, settings=DEFAULT_SETTINGS):
    """Frame-type bounds of the sequence whose analysis matrix is given."""
    c = linalg.as_matrix(analysis)
    count, dim = c.shape
    s = linalg.singular_values(c)
    rank = linalg.numerical_rank((s, c.shape), settings.tol_abs)
    complete = rank == dim
    surjective = rank == count
    return BoundsEstimate(
        level=int(level),
        lower_bound=float(s[dim - 1] ** 2) if complete and dim else 0.0,
        bessel_bound=float(s[0] ** 2) if s.size else 0.0,
        rf_bound=float(s[count - 1] ** 2) if surjective and count else 0.0,
        rank=rank,
        complete=complete,
        surjective=surjective,
        dim=dim,
        count=count,
    )


def bounds_at(family, level, settings=DEFAULT_SETTINGS):
    return bounds_from_analysis(assemble_triple(family, level).analysis, level, settings)


@dataclass(frozen=True)
class LadderVerdict:
    """Trajectories of A, B and the Riesz-Fischer bound plus class flags.

    ``relative`` marks verdicts computed on the closed span of the sequence
    (lower semi-frame *sequence* semantics).
    """

    estimates: tuple
    lower: Trajectory
    upper: Trajectory
    rf: Trajectory
    flags: dict = field(compare=False)
    relative: bool = False

    @property
    def levels(self):
        return tuple(e.level for e in self.estimates)

    def __getattr__(self, name):
        if name in CLASS_NAMES:
            return self.flags[name]
        raise AttributeError(name)

    @property
    def inconclusive(self):
        return sorted(k for k, v in self.flags.items() if v is None)

    def as_dict(self):
        return {
            "relative": self.relative,
            "flags": dict(self.flags),
            "lower": self.lower.as_dict(),
            "upper": self.upper.as_dict(),
            "rf": self.rf.as_dict(),
            "rank": [e.rank for e in self.estimates],
            "dim": [e.dim for e in self.estimates],
        }


def _verdict(estimates, settings, relative=False):
    levels = [e.level for e in estimates]
    cfg = settings.trend
    lower = Trajectory.build("A", levels, [e.lower_bound for e in estimates], cfg)
    upper = Trajectory.build("B", levels, [e.bessel_bound for e in estimates], cfg)
    rf = Trajectory.build("rf", levels, [e.rf_bound for e in estimates], cfg)
    complete = all(e.complete for e in estimates)
    bessel = upper.bounded_above
    lsf = and3(complete, lower.bounded_below)
    flags = {
        "complete": complete,
        "bessel": bessel,
        "frame": and3(bessel, lsf),
        "lower_semi_frame": lsf,
        "riesz_fischer": and3(all(e.surjective for e in estimates), rf.bounded_below),
    }
    return LadderVerdict(tuple(estimates), lower, upper, rf, flags, relative)


@functools.lru_cache(maxsize=2048)
def _classify(family, ladder, settings):
    return _verdict([bounds_at(family, d, settings) for d in ladder], settings)


def classify(family, ladder, settings=DEFAULT_SETTINGS):
    """Classify ``family`` as complete / Bessel / frame / lower semi-frame / Riesz-Fischer."""
    return _classify(family, as_ladder(ladder), settings)


def compressed_analysis(family, level, settings=DEFAULT_SETTINGS):
    """Analysis operator restricted to ``span{f_n}``, in an orthonormal basis of it."""
    t = assemble_triple(family, level)
    basis = linalg.range_basis(t.synthesis, settings.tol_abs)
    if basis.shape[1] == 0:
        raise EmptySpan(f"{family.describe()} spans the zero subspace at level {level}")
    return t.analysis @ basis


@functools.lru_cache(maxsize=2048)
def _classify_as_sequence(family, ladder, settings):
    estimates = [bounds_from_analysis(compressed_analysis(family, d, settings), d, settings)
                 for d in ladder]
    return _verdict(estimates, settings, relative=True)


def classify_as_sequence(family, ladder, settings=DEFAULT_SETTINGS):
    """Classify ``family`` relative to the closure of its own span."""
    return _classify_as_sequence(family, as_ladder(ladder), settings)


def rf_check(family, ladder, settings=DEFAULT_SETTINGS):
    """Riesz-Fischer bounds and onto-ness of ``C`` per level."""
    v = classify(family, ladder, settings)
    return v.estimates, v.rf, v.flags["riesz_fischer"]
