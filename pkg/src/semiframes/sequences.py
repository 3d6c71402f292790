"""Sequence families and their analysis / synthesis / frame operators.

A :class:`SequenceFamily` generates ``{f_n}`` at any ladder level.  Symbolic
families use square truncation: at level ``d`` there are ``N = d`` vectors,
each living in a space whose dimension is given by the family's dimension
rule (``d`` unless stated otherwise).  :class:`Explicit` families are fixed
finite instances and ignore the level.

Conventions: inner products are linear in the first slot,
``<x, y> = sum_i x_i conj(y_i)``.  Materialized families are ``(N, dim)``
arrays whose row ``n`` is ``f_n``, so that

* analysis ``C = conj(V)`` maps ``f -> (<f, f_n>)_n``,
* synthesis ``D = V.T`` maps ``c -> sum_n c_n f_n`` and equals ``C^H``,
* frame operator ``S = D C = sum_n f_n f_n^H``.
"""

import functools
from dataclasses import dataclass

import numpy as np

from .errors import ShapeError, TruncationOverflow
from .formulas import Expr, Formula, as_int
from .operators import Adjoint, OperatorSpec, realize

_CACHE_SIZE = 1024


class SequenceFamily:
    """Base class; subclasses are frozen (hashable) dataclasses."""

    def materialize(self, level):
        return materialize(self, level)

    def _build(self, level):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def __str__(self):
        return self.describe()


@functools.lru_cache(maxsize=_CACHE_SIZE)
def _materialize_cached(family, level):
    v = np.asarray(family._build(level), dtype=np.complex128)
    if v.ndim != 2:
        raise ShapeError(f"{family.describe()} materialized with ndim={v.ndim}")
    v.flags.writeable = False
    return v


def materialize(family, level):
    """Vectors of ``family`` at ``level`` as a read-only ``(N, dim)`` array."""
    return _materialize_cached(family, int(level))


def _formula(value, var="n"):
    return value if isinstance(value, Formula) else Expr(str(value), var)


@dataclass(frozen=True)
class Explicit(SequenceFamily):
    """A fixed finite list of vectors (rows), independent of the level."""

    vectors: tuple

    def __post_init__(self):
        arr = np.asarray(self.vectors, dtype=np.complex128)
        if arr.ndim != 2:
            raise ShapeError("explicit family needs a list of equal-length vectors")
        if not np.all(np.isfinite(arr)):
            raise ValueError("explicit family has non-finite entries")
        object.__setattr__(self, "vectors", tuple(tuple(complex(x) for x in row) for row in arr))

    def _build(self, level):
        return np.array(self.vectors, dtype=np.complex128)

    def describe(self):
        n = len(self.vectors)
        dim = len(self.vectors[0]) if n else 0
        return f"explicit({n} vectors in C^{dim})"


@dataclass(frozen=True)
class WeightedBasis(SequenceFamily):
    """``f_n = w(n) e_sigma(n)`` in a space of dimension ``dim(d)``.

    Positions with zero weight contribute the zero vector and are exempt
    from the index map.  ``sigma`` must be injective on the support and stay
    inside ``1..dim(d)``.
    """

    weight: Formula
    index: Formula = Expr("n")
    dim: Formula = Expr("d", "d")

    def __post_init__(self):
        object.__setattr__(self, "weight", _formula(self.weight))
        object.__setattr__(self, "index", _formula(self.index))
        object.__setattr__(self, "dim", _formula(self.dim, "d"))

    def space_dim(self, level):
        dim = as_int(self.dim.at(level), "dimension rule")
        if dim < 0:
            raise ValueError(f"negative dimension {dim} at level {level}")
        return dim

    def _build(self, level):
        dim = self.space_dim(level)
        out = np.zeros((level, dim), dtype=np.complex128)
        seen = set()
        for n in range(1, level + 1):
            w = complex(self.weight.at(n))
            if w == 0:
                continue
            raw = self.index.at(n)
            if raw is None:
                raise ValueError(f"index map undefined at n={n} but weight is {w}")
            target = as_int(raw, "index map value")
            if not 1 <= target <= dim:
                raise TruncationOverflow(
                    f"index map sends {n} to {target}, outside dimension {dim} (level {level})")
            if target in seen:
                raise ValueError(f"index map {self.index.text} is not injective on the support")
            seen.add(target)
            out[n - 1, target - 1] = w
        return out

    def describe(self):
        parts = [f"w={self.weight.text}"]
        if self.index != Expr("n"):
            parts.append(f"index={self.index.text}")
        if self.dim != Expr("d", "d"):
            parts.append(f"dim={self.dim.text}")
        return "weighted(" + "; ".join(parts) + ")"


def standard_basis():
    """The orthonormal basis ``{e_n}``."""
    return WeightedBasis(Expr("1"))


@dataclass(frozen=True)
class OperatorImage(SequenceFamily):
    """``{L f_n}`` for a base family and an operator on its space."""

    base: SequenceFamily
    op: OperatorSpec

    def _build(self, level):
        v = materialize(self.base, level)
        lop = realize(self.op, v.shape[1])
        return v @ lop.T

    def describe(self):
        return f"{self.op.describe()}[{self.base.describe()}]"


@dataclass(frozen=True)
class PointwiseSum(SequenceFamily):
    """``{f_n + g_n}``."""

    left: SequenceFamily
    right: SequenceFamily

    def _build(self, level):
        a, b = materialize(self.left, level), materialize(self.right, level)
        if a.shape != b.shape:
            raise ShapeError(f"cannot add families of shapes {a.shape} and {b.shape}")
        return a + b

    def describe(self):
        return f"({self.left.describe()} + {self.right.describe()})"


@dataclass(frozen=True)
class DirectSum(SequenceFamily):
    """``{f_n (+) g_n}`` in ``H1 (+) H2``: coordinates are stacked."""

    left: SequenceFamily
    right: SequenceFamily

    def _build(self, level):
        a, b = materialize(self.left, level), materialize(self.right, level)
        if a.shape[0] != b.shape[0]:
            raise ShapeError(
                f"direct sum needs equal sequence lengths, got {a.shape[0]} and {b.shape[0]}")
        return np.hstack([a, b])

    def describe(self):
        return f"({self.left.describe()} (+) {self.right.describe()})"


def sequence_from_operator(op):
    """Family ``f_n = L* e_n``; its analysis operator is ``L`` itself."""
    return OperatorImage(standard_basis(), Adjoint(op))


@dataclass(frozen=True, eq=False)
class OperatorTriple:
    analysis: np.ndarray
    synthesis: np.ndarray
    frame_op: np.ndarray

    @property
    def count(self):
        return self.analysis.shape[0]

    @property
    def dim(self):
        return self.analysis.shape[1]


def assemble_triple(family, level):
    """Analysis, synthesis and frame operators of ``family`` at ``level``."""
    v = materialize(family, level)
    analysis = v.conj()
    synthesis = v.T
    return OperatorTriple(analysis, synthesis, synthesis @ analysis)


def transformed_triple(family, op, level):
    """Operators of ``{L f_n}`` computed as ``C L*``, ``L D`` and ``L S L*``."""
    t = assemble_triple(family, level)
    lop = realize(op, t.dim)
    if lop.shape != (t.dim, t.dim):
        raise ShapeError(f"operator of shape {lop.shape} cannot act on C^{t.dim}")
    ladj = lop.conj().T
    return OperatorTriple(t.analysis @ ladj, lop @ t.synthesis, lop @ t.frame_op @ ladj)
