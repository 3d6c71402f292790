"""Operators on a truncation ladder and their spectral diagnostics.

An :class:`OperatorSpec` describes a (possibly unbounded) operator on
``l2`` through its formal infinite matrix; :meth:`OperatorSpec.realize`
returns the leading ``d x d`` section.  Sums, adjoints and compositions are
taken section-wise, which is exact for the diagonal and banded operators
used here.

The reduced minimum modulus of a section is its smallest singular value
above the rank tolerance; a closed range corresponds to that value staying
bounded away from zero along the ladder.
"""

import functools
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import ShapeError, TruncationOverflow
from .formulas import Expr, Formula, as_int, evaluate
from .ladder import DEFAULT_SETTINGS, Trajectory, and3

_CACHE_SIZE = 1024


class OperatorSpec:
    """Base class.  Subclasses are frozen dataclasses and therefore hashable."""

    def realize(self, level):
        return realize(self, level)

    def _build(self, level):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    @property
    def adjoint(self):
        return Adjoint(self)

    def __str__(self):
        return self.describe()


@functools.lru_cache(maxsize=_CACHE_SIZE)
def _realize_cached(op, level):
    m = np.asarray(op._build(level), dtype=np.complex128)
    if m.shape != (level, level):
        raise ShapeError(f"{op.describe()} realized with shape {m.shape} at level {level}")
    m.flags.writeable = False
    return m


def realize(op, level):
    """Leading ``level x level`` section of ``op`` (read-only array)."""
    return _realize_cached(op, int(level))


def _weight(formula):
    return formula if isinstance(formula, Formula) else Expr(str(formula))


@dataclass(frozen=True)
class Identity(OperatorSpec):
    def _build(self, level):
        return np.eye(level)

    def describe(self):
        return "I"


@dataclass(frozen=True)
class Diagonal(OperatorSpec):
    """``L e_n = w(n) e_n``."""

    weight: Formula

    def __post_init__(self):
        object.__setattr__(self, "weight", _weight(self.weight))

    def _build(self, level):
        return np.diag(evaluate(self.weight, level))

    def describe(self):
        return f"diag({self.weight.text})"


@dataclass(frozen=True)
class PermutationWeighted(OperatorSpec):
    """``L e_n = w(n) e_sigma(n)`` for an injective index map ``sigma``."""

    index: Formula
    weight: Formula

    def __post_init__(self):
        object.__setattr__(self, "weight", _weight(self.weight))
        idx = self.index
        object.__setattr__(self, "index", idx if isinstance(idx, Formula) else Expr(str(idx)))

    def _build(self, level):
        m = np.zeros((level, level), dtype=np.complex128)
        w = evaluate(self.weight, level)
        seen = set()
        for n in range(1, level + 1):
            target = as_int(self.index.at(n), "index map value")
            if not 1 <= target <= level:
                raise TruncationOverflow(
                    f"index map sends {n} to {target}, outside level {level}")
            if target in seen:
                raise ValueError(f"index map {self.index.text} is not injective")
            seen.add(target)
            m[target - 1, n - 1] = w[n - 1]
        return m

    def describe(self):
        return f"perm({self.index.text}; {self.weight.text})"


@dataclass(frozen=True)
class Explicit(OperatorSpec):
    """A finite leading block followed by a diagonal tail.

    ``block`` is a k x k matrix (nested tuples); indices beyond k carry the
    diagonal weight ``tail`` (zero when omitted).  At levels below k the
    block is cut to its leading section.
    """

    block: tuple
    tail: Formula = None

    def __post_init__(self):
        arr = linalg.as_matrix(self.block)
        if arr.shape[0] != arr.shape[1]:
            raise ShapeError(f"explicit block must be square, got {arr.shape}")
        object.__setattr__(self, "block", tuple(tuple(complex(x) for x in row) for row in arr))
        if self.tail is not None:
            object.__setattr__(self, "tail", _weight(self.tail))

    @property
    def size(self):
        return len(self.block)

    def _build(self, level):
        k = self.size
        m = np.zeros((level, level), dtype=np.complex128)
        b = np.array(self.block, dtype=np.complex128).reshape(k, k)
        s = min(k, level)
        m[:s, :s] = b[:s, :s]
        if level > k and self.tail is not None:
            tail = evaluate(self.tail, level)
            idx = np.arange(k, level)
            m[idx, idx] = tail[k:]
        return m

    def describe(self):
        tail = f"; tail={self.tail.text}" if self.tail is not None else ""
        return f"explicit({self.size}x{self.size}{tail})"


@dataclass(frozen=True)
class Sum(OperatorSpec):
    left: OperatorSpec
    right: OperatorSpec

    def _build(self, level):
        return realize(self.left, level) + realize(self.right, level)

    def describe(self):
        return f"({self.left.describe()} + {self.right.describe()})"


@dataclass(frozen=True)
class IdentityPlus(OperatorSpec):
    """``I + L``."""

    op: OperatorSpec

    def _build(self, level):
        return np.eye(level) + realize(self.op, level)

    def describe(self):
        return f"(I + {self.op.describe()})"


@dataclass(frozen=True)
class Adjoint(OperatorSpec):
    op: OperatorSpec

    def _build(self, level):
        return realize(self.op, level).conj().T

    def describe(self):
        return f"{self.op.describe()}*"

    @property
    def adjoint(self):
        return self.op


@dataclass(frozen=True)
class Compose(OperatorSpec):
    """``left @ right`` (apply ``right`` first)."""

    left: OperatorSpec
    right: OperatorSpec

    def _build(self, level):
        return realize(self.left, level) @ realize(self.right, level)

    def describe(self):
        return f"{self.left.describe()}.{self.right.describe()}"


def example_3_8_operator():
    """``(x1, x2, x3, ...) -> (x1 + x2, 0, x3, x4, ...)``."""
    return Explicit(((1, 1), (0, 0)), tail=Expr("1"))


@dataclass(frozen=True)
class SpectralReport:
    level: int
    sigma_min: float
    sigma_max: float
    gamma: float
    rank: int
    injective: bool
    surjective: bool

    def as_dict(self):
        return dict(self.__dict__)


def matrix_report(matrix, level=None, settings=DEFAULT_SETTINGS):
    """Spectral summary of an arbitrary (possibly rectangular) matrix."""
    m = linalg.as_matrix(matrix)
    rows, cols = m.shape
    s = linalg.singular_values(m)
    rank = linalg.numerical_rank((s, m.shape), settings.tol_abs)
    gamma = float(s[rank - 1]) if rank else 0.0
    # a rectangular matrix has min(rows, cols) singular values; a wide one
    # always has a kernel, a tall one is only ever not onto
    sigma_min = float(s[-1]) if s.size and rows >= cols else 0.0
    return SpectralReport(
        level=int(level if level is not None else cols),
        sigma_min=sigma_min,
        sigma_max=float(s[0]) if s.size else 0.0,
        gamma=gamma,
        rank=rank,
        injective=rank == cols,
        surjective=rank == rows,
    )


@functools.lru_cache(maxsize=4 * _CACHE_SIZE)
def spectral_report(op, level, settings=DEFAULT_SETTINGS):
    """Singular-value summary of the section of ``op`` at ``level``."""
    return matrix_report(realize(op, level), level, settings)


def _ladder_levels(ladder):
    levels = tuple(ladder)
    if len(levels) < 3:
        raise ValueError("ladder diagnostics need at least 3 levels")
    return levels


def gamma_ladder(op, ladder, settings=DEFAULT_SETTINGS):
    """Reduced minimum modulus of ``op`` along the ladder, with its trend."""
    levels = _ladder_levels(ladder)
    values = [spectral_report(op, d, settings).gamma for d in levels]
    return Trajectory.build("gamma", levels, values, settings.trend)


def norm_ladder(op, ladder, settings=DEFAULT_SETTINGS):
    """Largest singular value along the ladder (bounded iff not DIVERGING)."""
    levels = _ladder_levels(ladder)
    values = [spectral_report(op, d, settings).sigma_max for d in levels]
    return Trajectory.build("norm", levels, values, settings.trend)


def injective_everywhere(op, ladder, settings=DEFAULT_SETTINGS):
    return all(spectral_report(op, d, settings).injective for d in ladder)


def surjective_everywhere(op, ladder, settings=DEFAULT_SETTINGS):
    return all(spectral_report(op, d, settings).surjective for d in ladder)


@dataclass(frozen=True)
class DensityDiagnostic:
    """Finite-section proxies for the range hypotheses on an operator L.

    ``range_dense``: L* injective at every level (``N(L*) = {0}``).
    ``adjoint_range_closed``: gamma(L*) bounded away from zero.
    ``adjoint_range_full``: L* onto at every level and its range closed.
    """

    range_dense: bool
    adjoint_range_closed: object
    adjoint_range_full: object
    gamma_adjoint: Trajectory = field(compare=False)

    def as_dict(self):
        return {"range_dense": self.range_dense,
                "adjoint_range_closed": self.adjoint_range_closed,
                "adjoint_range_full": self.adjoint_range_full,
                "gamma_adjoint": self.gamma_adjoint.as_dict()}


def density_diagnostic(op, ladder, settings=DEFAULT_SETTINGS):
    adj = Adjoint(op)
    levels = _ladder_levels(ladder)
    gamma_adj = gamma_ladder(adj, levels, settings)
    closed = gamma_adj.bounded_below
    return DensityDiagnostic(
        range_dense=injective_everywhere(adj, levels, settings),
        adjoint_range_closed=closed,
        adjoint_range_full=and3(surjective_everywhere(adj, levels, settings), closed),
        gamma_adjoint=gamma_adj,
    )
