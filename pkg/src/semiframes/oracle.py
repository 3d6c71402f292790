"""Brute-force cross-checks of the spectral frame bounds.

The oracles never call an SVD or an eigensolver.  They evaluate the defining
inequalities directly on random unit vectors and then polish the best sample
by shifted power iteration, which only needs matrix-vector products and
keeps every iterate a genuine Rayleigh quotient.  Returned values are
therefore always upper bounds of the true minima (soundness), and the
polishing brings them within a few percent for small dimensions.

Sampling protocol (reproducible across implementations): a
``numpy.random.default_rng(seed)`` generator (PCG64) draws a real
``(samples, dim)`` standard-normal block and then the imaginary block; row
``i`` normalized is the ``i``-th sample.
"""

from dataclasses import dataclass

import numpy as np

from .sequences import materialize


@dataclass(frozen=True)
class OracleConfig:
    samples: int = 10_000
    seed: int = 0
    dim_cap: int = 8
    refine_steps: int = 400

    def __post_init__(self):
        if self.samples < 100:
            raise ValueError("oracle needs at least 100 samples")
        if self.dim_cap > 12:
            raise ValueError("dimension cap must be at most 12")
        if self.refine_steps < 0:
            raise ValueError("refine_steps must be nonnegative")


def unit_samples(dim, cfg):
    """``cfg.samples`` points on the complex unit sphere of ``C^dim``."""
    rng = np.random.default_rng(cfg.seed)
    re = rng.standard_normal((cfg.samples, dim))
    im = rng.standard_normal((cfg.samples, dim))
    z = re + 1j * im
    return z / np.linalg.norm(z, axis=1, keepdims=True)


def _min_quadratic(apply, dim, shift, cfg):
    """Minimum of ``<Q x, x>`` over unit ``x`` for PSD ``Q`` given as a matvec.

    ``shift`` must dominate the largest eigenvalue of ``Q``; power iteration
    on ``shift*I - Q`` then climbs toward the bottom eigenvector.
    """
    if dim == 0:
        return 0.0
    x = unit_samples(dim, cfg)
    q = np.einsum("ij,ij->i", x.conj(), apply(x.T).T).real
    best_i = int(np.argmin(q))
    best = float(q[best_i])
    v = x[best_i]
    for _ in range(cfg.refine_steps):
        w = shift * v - apply(v)
        nrm = np.linalg.norm(w)
        if nrm == 0:
            break
        v = w / nrm
        best = min(best, float(np.vdot(v, apply(v)).real))
    return max(best, 0.0)


def _check_level(v, level, cfg):
    if max(v.shape) > cfg.dim_cap:
        raise ValueError(f"level {level} gives a {v.shape} family, above the cap {cfg.dim_cap}")


def sampled_lower_bound(family, level, cfg=OracleConfig()):
    """``min sum_n |<f, f_n>|^2`` over sampled unit ``f``."""
    v = materialize(family, level)
    _check_level(v, level, cfg)
    c = v.conj()
    shift = float(np.sum(np.abs(v) ** 2))
    return _min_quadratic(lambda x: c.conj().T @ (c @ x), v.shape[1], shift, cfg)


def sampled_rf_bound(family, level, cfg=OracleConfig()):
    """``min ||sum_n c_n f_n||^2`` over sampled unit coefficient vectors ``c``."""
    v = materialize(family, level)
    _check_level(v, level, cfg)
    d = v.T
    shift = float(np.sum(np.abs(v) ** 2))
    return _min_quadratic(lambda x: d.conj().T @ (d @ x), v.shape[0], shift, cfg)
