import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from semiframes import (EmptySpan, ExplicitFamily, OperatorImage, Trend, WeightedBasis, bounds_at, classify,
                        classify_as_sequence, rf_check, standard_basis)
from semiframes import linalg
from semiframes.classification import CLASS_NAMES
from semiframes.operators import example_3_8_operator

from conftest import random_complex


def test_scaled_basis_is_lower_semi_frame_not_bessel(ladder):
    v = classify(WeightedBasis("n"), ladder)
    assert v.complete is True
    assert v.lower.values == (1.0,) * 5 and v.lower.trend is Trend.STABLE
    assert np.allclose(v.upper.values, [d * d for d in ladder])
    assert v.upper.trend is Trend.DIVERGING
    assert v.lower_semi_frame is True
    assert v.bessel is False and v.frame is False


def test_orthonormal_basis_is_frame(ladder):
    v = classify(standard_basis(), ladder)
    assert v.frame and v.bessel and v.lower_semi_frame and v.riesz_fischer
    assert set(v.lower.values) == {1.0} and set(v.upper.values) == {1.0}


def test_shrunk_basis_is_not_lower_semi_frame(ladder):
    v = classify(WeightedBasis("1/n"), ladder)
    assert np.allclose(v.lower.values, [1 / d**2 for d in ladder], rtol=1e-12)
    assert v.lower.trend is Trend.VANISHING
    assert v.lower_semi_frame is False
    assert v.bessel is True


def test_span_classification_of_example_3_8_image(ladder):
    # {L n e_n} = {e1, 2 e1, 3 e3, 4 e4, ...}
    img = OperatorImage(WeightedBasis("n"), example_3_8_operator())
    v = img.materialize(4)
    assert np.allclose(v[:, 0], [1, 2, 0, 0]) and not np.any(v[:, 1])
    seq = classify_as_sequence(img, ladder)
    assert seq.relative and seq.lower_semi_frame is True
    assert np.allclose(seq.lower.values, 5.0)
    assert classify(img, ladder).complete is False


def test_orthonormal_pair_in_larger_space_on_span():
    fam = ExplicitFamily(((1, 0, 0, 0), (0, 1, 0, 0)))
    v = classify_as_sequence(fam, (4, 8, 16))
    assert v.lower_semi_frame and set(v.lower.values) == {1.0}
    assert classify(fam, (4, 8, 16)).complete is False


def test_zero_family_has_empty_span():
    with pytest.raises(EmptySpan):
        classify_as_sequence(WeightedBasis("0"), (4, 8, 16))


def test_rf_check_examples(ladder):
    _, rf, flag = rf_check(standard_basis(), ladder)
    assert set(rf.values) == {1.0} and flag is True
    _, rf, flag = rf_check(WeightedBasis("n"), ladder)
    assert set(rf.values) == {1.0} and flag is True
    est, rf, flag = rf_check(ExplicitFamily(((1, 0), (0, 1), (1, 1))), (4, 8, 16))
    assert rf.values == (0.0, 0.0, 0.0) and flag is False
    assert not est[0].surjective


def _random_family(seed, n, d):
    rng = np.random.default_rng(seed)
    return ExplicitFamily(tuple(map(tuple, random_complex(rng, (n, d)))))


@given(st.integers(0, 2**32 - 1), st.integers(1, 8), st.integers(1, 6))
def test_bounds_agree_with_frame_operator_eigenvalues(seed, n, d):
    fam = _random_family(seed, n, d)
    est = bounds_at(fam, 1)
    v = fam.materialize(1)
    eig = np.linalg.eigvalsh(v.T @ v.conj())
    assert est.bessel_bound == pytest.approx(eig[-1], rel=1e-8)
    if est.complete:
        assert est.lower_bound == pytest.approx(eig[0], rel=1e-8)
    else:
        assert est.lower_bound == 0.0
    gram = np.linalg.eigvalsh(v.conj() @ v.T)
    if est.surjective:
        assert est.rf_bound == pytest.approx(gram[0], rel=1e-8)


@given(st.integers(0, 2**32 - 1), st.integers(1, 6), st.integers(1, 6))
def test_rf_inequality_and_its_equality_case(seed, n, d):
    fam = _random_family(seed, n, d)
    est = bounds_at(fam, 1)
    synth = fam.materialize(1).T
    rng = np.random.default_rng(seed + 1)
    for c in random_complex(rng, (20, n)):
        assert np.linalg.norm(synth @ c) ** 2 >= est.rf_bound * np.sum(abs(c) ** 2) - 1e-9
    if est.surjective:
        c = linalg.svd(synth).right[:, n - 1]
        assert np.linalg.norm(synth @ c) ** 2 == pytest.approx(est.rf_bound, rel=1e-8, abs=1e-12)


@pytest.mark.parametrize("weight", ["1", "n", "1/n", "n%2", "2-1/n", "(-1)^n*n"])
def test_frame_flag_is_bessel_and_lower(weight, ladder):
    v = classify(WeightedBasis(weight), ladder)
    assert set(v.flags) == set(CLASS_NAMES)
    frame = v.bessel and v.lower_semi_frame
    assert v.frame == frame
