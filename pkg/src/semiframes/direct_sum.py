"""Direct sums of sequences and the range-disjointness taxonomy.

For ``f`` in ``H1`` and ``g`` in ``H2`` with a common index set, the
analysis operator of ``{f_n (+) g_n}`` is the column block ``[C1 | C2]``, so
its range is ``R(C1) + R(C2)`` inside coefficient space.  How the two
ranges sit relative to each other (principal angles) decides which
properties pass to the direct sum.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import ShapeError
from .formulas import as_int
from .ladder import DEFAULT_SETTINGS, as_ladder
from .sequences import DirectSum, SequenceFamily, assemble_triple, materialize


def direct_sum(f, g):
    """``{f_n (+) g_n}``; both families must have the same length at every level."""
    return DirectSum(f, g)


@dataclass(frozen=True)
class DisjointnessReport:
    level: int
    count: int
    angles: tuple
    dim_r1: int
    dim_r2: int
    dim_intersection: int
    dim_sum: int
    orthogonality_defect: float
    strongly_complementary: bool
    complement: bool
    strongly_disjoint: bool
    disjoint: bool

    def as_dict(self):
        d = dict(self.__dict__)
        d["angles"] = list(self.angles)
        return d


def disjointness_at(f, g, level, settings=DEFAULT_SETTINGS):
    """Compare ``R(C1)`` and ``R(C2)`` inside coefficient space at one level."""
    c1 = assemble_triple(f, level).analysis
    c2 = assemble_triple(g, level).analysis
    if c1.shape[0] != c2.shape[0]:
        raise ShapeError(
            f"coefficient spaces differ: {c1.shape[0]} vs {c2.shape[0]} at level {level}")
    count = c1.shape[0]
    u1 = linalg.range_basis(c1, settings.tol_abs)
    u2 = linalg.range_basis(c2, settings.tol_abs)
    tol = settings.angle_tol
    angles = linalg.principal_angles(u1, u2, snap=tol)
    r1, r2 = u1.shape[1], u2.shape[1]
    k = int(np.count_nonzero(angles < tol))
    dim_sum = r1 + r2 - k
    defect = float(np.linalg.norm(u1.conj().T @ u2, 2)) if r1 and r2 else 0.0
    strongly = bool(np.all(np.abs(angles - math.pi / 2) <= tol))
    disjoint = k == 0
    complement = disjoint and dim_sum == count
    return DisjointnessReport(
        level=int(level), count=count, angles=tuple(float(a) for a in angles),
        dim_r1=r1, dim_r2=r2, dim_intersection=k, dim_sum=dim_sum,
        orthogonality_defect=defect,
        strongly_complementary=complement and strongly,
        complement=complement, strongly_disjoint=strongly, disjoint=disjoint)


def disjointness(f, g, ladder, settings=DEFAULT_SETTINGS):
    """One :class:`DisjointnessReport` per ladder level."""
    return [disjointness_at(f, g, d, settings) for d in as_ladder(ladder)]


def taxonomy(reports):
    """Taxonomy flags that hold at every level of a report list."""
    names = ("strongly_complementary", "complement", "strongly_disjoint", "disjoint")
    return {n: all(getattr(r, n) for r in reports) for n in names}


def embed_internal(family, level, left_index, right_index, ambient=None):
    """Vectors of a :class:`DirectSum` placed in one ambient space.

    Coordinate ``k`` of the left (right) summand is sent to ambient
    coordinate ``left_index(k)`` (``right_index(k)``), realising
    ``H1 (+) H2`` as an orthogonal decomposition ``K1 (+) K2`` of ``l2``.
    """
    if not isinstance(family, DirectSum):
        raise TypeError("embed_internal expects a DirectSum family")
    a = materialize(family.left, level)
    b = materialize(family.right, level)
    targets = [as_int(left_index.at(k), "left embedding") for k in range(1, a.shape[1] + 1)]
    targets += [as_int(right_index.at(k), "right embedding") for k in range(1, b.shape[1] + 1)]
    if len(set(targets)) != len(targets):
        raise ValueError("embeddings overlap; the two subspaces must be orthogonal")
    size = ambient if ambient is not None else max(targets, default=0)
    if targets and (min(targets) < 1 or max(targets) > size):
        raise ValueError(f"embedding targets fall outside 1..{size}")
    out = np.zeros((a.shape[0], size), dtype=np.complex128)
    out[:, np.asarray(targets, dtype=int) - 1] = np.hstack([a, b])
    return out


@dataclass(frozen=True)
class InternalSum(SequenceFamily):
    """``{f_n (+) g_n}`` realised inside ``l2 = K1 (+) K2`` by coordinate embeddings.

    The embeddings must fill the ambient coordinates ``1..dim1 + dim2``
    exactly, so the two coordinate subspaces are orthogonal complements.
    """

    left: SequenceFamily
    right: SequenceFamily
    left_index: object
    right_index: object

    def _build(self, level):
        fam = DirectSum(self.left, self.right)
        total = materialize(fam, level).shape[1]
        out = embed_internal(fam, level, self.left_index, self.right_index, ambient=total)
        return out

    def describe(self):
        return (f"internal({self.left.describe()} at {self.left_index.text}, "
                f"{self.right.describe()} at {self.right_index.text})")


def check_direct_sum_props(f, g, ladder, settings=DEFAULT_SETTINGS):
    """Run the direct-sum proposition checkers on ``(f, g)``.

    Returns ``(checks, consistent)``; ``consistent`` is False exactly when some
    check is FALSIFIED.
    """
    from .propositions import DIRECT_SUM_IDS, Status, run_check

    bindings = {"f": f, "g": g, "ladder": as_ladder(ladder), "settings": settings}
    checks = [run_check(pid, bindings) for pid in DIRECT_SUM_IDS]
    return checks, all(c.status is not Status.FALSIFIED for c in checks)
