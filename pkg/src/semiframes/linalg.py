"""Dense complex linear algebra used by every other module.

Everything here is a thin, validated layer over LAPACK (through numpy):
singular value decompositions, numerical rank, Hermitian spectra and
principal angles between subspaces.  All matrices are promoted to
``complex128``.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidBasis, InvalidMatrix

EPS = np.finfo(np.float64).eps

#: Angles below this many radians count as zero (shared subspace directions).
ANGLE_TOL = 1e-8


def as_matrix(a):
    """Return ``a`` as a 2-D complex128 array, rejecting non-finite entries."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise InvalidMatrix(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m)):
        raise InvalidMatrix("matrix has non-finite entries")
    return m


@dataclass(frozen=True, eq=False)
class SvdResult:
    """Thin SVD ``a = left @ diag(singular_values) @ right.conj().T``.

    ``right`` holds the right singular vectors as columns (not V^H).
    """

    singular_values: np.ndarray
    left: np.ndarray
    right: np.ndarray
    shape: tuple

    @property
    def sigma_max(self):
        return float(self.singular_values[0]) if self.singular_values.size else 0.0

    def reconstruct(self):
        return (self.left * self.singular_values) @ self.right.conj().T


def svd(a):
    """Thin SVD of ``a`` with singular values sorted descending."""
    m = as_matrix(a)
    rows, cols = m.shape
    if m.size == 0:
        k = min(rows, cols)
        return SvdResult(np.zeros(0), np.zeros((rows, k), complex),
                         np.zeros((cols, k), complex), m.shape)
    u, s, vh = np.linalg.svd(m, full_matrices=False)
    return SvdResult(s, u, vh.conj().T, m.shape)


def singular_values(a):
    """Singular values only (descending); cheaper than :func:`svd`."""
    m = as_matrix(a)
    if m.size == 0:
        return np.zeros(0)
    return np.linalg.svd(m, compute_uv=False)


def rank_tolerance(shape, sigma_max, tol_abs=None):
    """Cut-off below which a singular value counts as zero.

    The default is ``max(rows, cols) * eps * sigma_max``; ``tol_abs``
    replaces it outright.
    """
    if tol_abs is not None:
        return float(tol_abs)
    return max(shape) * EPS * float(sigma_max)


def numerical_rank(s, tol_abs=None):
    """Number of singular values above the rank tolerance.

    ``s`` may be an :class:`SvdResult` or a pair ``(values, shape)``.
    """
    if isinstance(s, SvdResult):
        values, shape = s.singular_values, s.shape
    else:
        values, shape = s
    if len(values) == 0:
        return 0
    tol = rank_tolerance(shape, values[0], tol_abs)
    return int(np.count_nonzero(values > tol))


def range_basis(a, tol_abs=None):
    """Orthonormal basis (as columns) of the column space of ``a``."""
    res = svd(a)
    r = numerical_rank(res, tol_abs)
    return res.left[:, :r]


def hermitian_eigs(a, atol=1e-10):
    """Eigenvalues of a Hermitian matrix, ascending.

    The Hermitian check is relative to the largest entry so that frame
    operators with large entries are not rejected for round-off.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise InvalidMatrix(f"Hermitian matrix must be square, got {m.shape}")
    if m.size == 0:
        return np.zeros(0)
    scale = max(1.0, float(np.max(np.abs(m))))
    if np.max(np.abs(m - m.conj().T)) > atol * scale:
        raise InvalidMatrix("matrix is not Hermitian")
    return np.linalg.eigvalsh(m)


def check_orthonormal(basis, atol=1e-8):
    b = as_matrix(basis)
    k = b.shape[1]
    if k and np.max(np.abs(b.conj().T @ b - np.eye(k))) > atol:
        raise InvalidBasis("basis columns are not orthonormal")
    return b


def principal_angles(u_basis, v_basis, snap=ANGLE_TOL):
    """Principal angles between ``span(u_basis)`` and ``span(v_basis)``.

    Both inputs must have orthonormal columns.  Returns ``min(p, q)``
    angles in ``[0, pi/2]``, ascending.  Cosines come from the singular
    values of ``U^H V``; angles up to pi/4 are recomputed from sines of the
    residual ``V - U U^H V`` (Bjorck-Golub), since arccos loses about half
    the digits near zero.  Angles below ``snap`` are returned as exactly 0.
    """
    u = check_orthonormal(u_basis)
    v = check_orthonormal(v_basis)
    if u.shape[0] != v.shape[0]:
        raise InvalidBasis(
            f"bases live in different spaces: {u.shape[0]} vs {v.shape[0]}")
    p, q = u.shape[1], v.shape[1]
    k = min(p, q)
    if k == 0:
        return np.zeros(0)
    cross = u.conj().T @ v
    cosines = np.clip(np.linalg.svd(cross, compute_uv=False)[:k], 0.0, 1.0)
    if p >= q:
        resid = v - u @ cross
    else:
        resid = u - v @ cross.conj().T
    sines = np.clip(np.linalg.svd(resid, compute_uv=False)[:k], 0.0, 1.0)[::-1]
    angles = np.where(cosines**2 >= 0.5, np.arcsin(sines), np.arccos(cosines))
    angles = np.sort(angles)
    angles[angles < snap] = 0.0
    return angles
