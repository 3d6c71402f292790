import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from semiframes import ExplicitFamily, WeightedBasis, bounds_at, standard_basis
from semiframes.oracle import OracleConfig, sampled_lower_bound, sampled_rf_bound, unit_samples

from conftest import random_complex


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(samples=99)
    with pytest.raises(ValueError):
        OracleConfig(dim_cap=13)
    with pytest.raises(ValueError):
        sampled_lower_bound(standard_basis(), 9)


def test_samples_are_unit_and_reproducible():
    cfg = OracleConfig(samples=200, seed=5)
    x = unit_samples(4, cfg)
    assert np.allclose(np.linalg.norm(x, axis=1), 1.0)
    assert np.array_equal(x, unit_samples(4, cfg))
    # real block first, then imaginary block, from PCG64
    rng = np.random.default_rng(5)
    z = rng.standard_normal((200, 4)) + 1j * rng.standard_normal((200, 4))
    assert np.allclose(x, z / np.linalg.norm(z, axis=1, keepdims=True))


def test_lower_bound_examples():
    assert 1.0 - 1e-9 <= sampled_lower_bound(WeightedBasis("n"), 6) <= 1.05
    assert sampled_lower_bound(standard_basis(), 6) == pytest.approx(1.0, abs=1e-9)
    v = sampled_lower_bound(WeightedBasis("1/n"), 6)
    assert 1 / 36 - 1e-9 <= v <= 1.05 / 36


def test_rf_bound_examples():
    assert sampled_rf_bound(standard_basis(), 6) == pytest.approx(1.0, abs=1e-9)
    assert sampled_rf_bound(WeightedBasis("n"), 6) >= 1.0 - 1e-9
    dup = ExplicitFamily(((1, 0), (1, 0)))
    assert sampled_rf_bound(dup, 1) == pytest.approx(0.0, abs=1e-9)
    c = np.array([1, -1]) / np.sqrt(2)
    assert np.linalg.norm(dup.materialize(1).T @ c) == 0.0


@given(st.integers(0, 2**32 - 1), st.integers(1, 6), st.integers(1, 8))
def test_oracles_are_sound_and_tight(seed, d, n):
    rng = np.random.default_rng(seed)
    fam = ExplicitFamily(tuple(map(tuple, random_complex(rng, (n, d)))))
    est = bounds_at(fam, 1)
    cfg = OracleConfig(seed=seed % 1000)
    lo = sampled_lower_bound(fam, 1, cfg)
    rf = sampled_rf_bound(fam, 1, cfg)
    assert lo >= est.lower_bound - 1e-9
    assert rf >= est.rf_bound - 1e-9
    scale = est.bessel_bound
    assert lo <= est.lower_bound + 0.05 * max(est.lower_bound, 1e-3 * scale)
    assert rf <= est.rf_bound + 0.05 * max(est.rf_bound, 1e-3 * scale)
