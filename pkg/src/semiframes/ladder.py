"""Truncation ladders and the asymptotic trend classifier.

A property of an infinite-dimensional object ("the range is closed", "the
lower frame bound is positive") is read off from a scalar computed at each
rung of a :class:`TruncationLadder`.  :func:`classify_trend` turns that
trajectory into one of four verdicts; every module uses the same rule.

Class flags built from verdicts are three-valued: ``True``, ``False`` or
``None`` when the trajectory was :attr:`Trend.INCONCLUSIVE`.
"""

import enum
from dataclasses import dataclass, field

DEFAULT_LEVELS = (8, 16, 32, 64, 128)


@dataclass(frozen=True)
class TruncationLadder:
    """Strictly increasing dimensions standing in for a separable space."""

    levels: tuple = DEFAULT_LEVELS

    def __post_init__(self):
        levels = tuple(int(v) for v in self.levels)
        if len(levels) < 3:
            raise ValueError("a ladder needs at least 3 levels")
        if any(v < 2 for v in levels):
            raise ValueError("ladder levels must be >= 2")
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise ValueError(f"ladder levels must increase strictly: {levels}")
        object.__setattr__(self, "levels", levels)

    def __iter__(self):
        return iter(self.levels)

    def __len__(self):
        return len(self.levels)

    @classmethod
    def parse(cls, text):
        return cls(tuple(int(t) for t in text.split(",") if t.strip()))

    def __str__(self):
        return ",".join(map(str, self.levels))


def as_ladder(ladder):
    """Accept a :class:`TruncationLadder` or any iterable of levels."""
    return ladder if isinstance(ladder, TruncationLadder) else TruncationLadder(tuple(ladder))


class Trend(str, enum.Enum):
    STABLE = "STABLE"
    VANISHING = "VANISHING"
    DIVERGING = "DIVERGING"
    INCONCLUSIVE = "INCONCLUSIVE"


@dataclass(frozen=True)
class TrendConfig:
    retention: float = 0.5
    vanish_ratio: float = 0.9
    diverge_ratio: float = 1.1
    floor: float = 1e-6
    window: int = 3


@dataclass(frozen=True)
class Settings:
    """Numerical knobs shared by the whole pipeline."""

    tol_abs: float = None
    angle_tol: float = 1e-8
    trend: TrendConfig = field(default_factory=TrendConfig)


DEFAULT_SETTINGS = Settings()


def _ratio(prev, cur):
    if prev == 0:
        return 1.0 if cur == 0 else float("inf")
    return cur / prev


def classify_trend(values, cfg=None):
    """Classify a nonnegative trajectory sampled along a ladder.

    Rules are tried in order: VANISHING (last value below the floor, or a
    drop by at least ``vanish_ratio`` on each of the last ``window`` steps),
    DIVERGING (growth by ``diverge_ratio`` on each of those steps), STABLE
    (last value keeps ``retention`` of the running maximum), else
    INCONCLUSIVE.
    """
    cfg = cfg or TrendConfig()
    vals = [float(v) for v in values]
    if len(vals) < 2:
        raise ValueError("need at least two values to classify a trend")
    last = vals[-1]
    w = min(cfg.window, len(vals) - 1)
    ratios = [_ratio(a, b) for a, b in zip(vals[-w - 1:-1], vals[-w:])]
    if last < cfg.floor or all(r <= cfg.vanish_ratio for r in ratios):
        return Trend.VANISHING
    if all(r >= cfg.diverge_ratio for r in ratios):
        return Trend.DIVERGING
    if last >= cfg.retention * max(vals):
        return Trend.STABLE
    return Trend.INCONCLUSIVE


@dataclass(frozen=True)
class Trajectory:
    """A scalar sampled along a ladder together with its trend verdict."""

    name: str
    levels: tuple
    values: tuple
    trend: Trend

    @classmethod
    def build(cls, name, levels, values, cfg=None):
        values = tuple(float(v) for v in values)
        return cls(name, tuple(levels), values, classify_trend(values, cfg))

    @property
    def last(self):
        return self.values[-1]

    @property
    def bounded_below(self):
        """Bounded away from zero: True, False, or None when inconclusive."""
        return {Trend.STABLE: True, Trend.DIVERGING: True,
                Trend.VANISHING: False}.get(self.trend)

    @property
    def bounded_above(self):
        return {Trend.STABLE: True, Trend.VANISHING: True,
                Trend.DIVERGING: False}.get(self.trend)

    def as_dict(self):
        return {"name": self.name, "levels": list(self.levels),
                "values": list(self.values), "trend": self.trend.value}


def and3(*flags):
    """Kleene conjunction: False dominates, then None."""
    if any(f is False for f in flags):
        return False
    if any(f is None for f in flags):
        return None
    return True


def not3(flag):
    return None if flag is None else not flag
