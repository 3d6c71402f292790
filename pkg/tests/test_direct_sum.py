import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from semiframes import (ExplicitFamily, InternalSum, ShapeError, Status, WeightedBasis,
                        assemble_triple, check_direct_sum_props, classify, direct_sum,
                        disjointness, disjointness_at, embed_internal, materialize,
                        standard_basis, taxonomy)
from semiframes.formulas import Expr, Periodic
from semiframes.instances import even_odd_embeddings, even_odd_pair, scaled_basis


def test_even_odd_pair_is_strongly_complementary(ladder):
    f, g = even_odd_pair()
    reports = disjointness(f, g, ladder)
    for r in reports:
        assert np.allclose(r.angles, math.pi / 2, atol=1e-10)
        assert r.dim_intersection == 0 and r.dim_sum == r.count
    assert all(taxonomy(reports).values())


def test_even_odd_pair_internal_sum_is_scaled_basis(ladder):
    f, g = even_odd_pair()
    left, right = even_odd_embeddings()
    internal = InternalSum(f, g, left, right)
    for d in (8, 9, 16):
        assert np.allclose(materialize(internal, d), materialize(scaled_basis(), d))
    v = classify(direct_sum(f, g), ladder)
    assert v.lower_semi_frame is True and set(v.lower.values) == {1.0}


def test_analysis_is_block_concatenation(rng):
    f = WeightedBasis(Periodic((2.0, -0.5)))
    g = ExplicitFamily(tuple(map(tuple, rng.standard_normal((8, 3)))))
    t = assemble_triple(direct_sum(f, g), 8)
    c1, c2 = assemble_triple(f, 8).analysis, assemble_triple(g, 8).analysis
    assert np.array_equal(t.analysis, np.hstack([c1, c2]))
    x, y = rng.standard_normal(8), rng.standard_normal(3)
    xy = np.concatenate([x, y])
    assert np.vdot(xy, t.frame_op @ xy).real == pytest.approx(np.linalg.norm(c1 @ x + c2 @ y) ** 2)
    assert np.linalg.eigvalsh(t.frame_op)[0] >= -1e-10


def test_sum_with_zero_family():
    f = WeightedBasis("n")
    t = assemble_triple(direct_sum(f, WeightedBasis("0")), 4)
    assert np.array_equal(t.analysis, np.hstack([np.diag([1, 2, 3, 4]), np.zeros((4, 4))]))


def test_orthonormal_plus_orthonormal_rows_have_norm_sqrt2():
    v = materialize(direct_sum(standard_basis(), standard_basis()), 6)
    assert np.allclose(np.linalg.norm(v, axis=1), math.sqrt(2))


def test_length_mismatch():
    with pytest.raises(ShapeError):
        materialize(direct_sum(standard_basis(), ExplicitFamily(((1,),))), 4)
    with pytest.raises(ShapeError):
        disjointness_at(standard_basis(), ExplicitFamily(((1,),)), 4)


def test_same_family_is_not_disjoint():
    r = disjointness_at(WeightedBasis("n"), WeightedBasis("n"), 8)
    assert r.dim_intersection == r.dim_r1 == 8
    assert not r.disjoint and not r.strongly_disjoint


def test_quarter_turn_pair():
    # R(C1) = span{d1}, R(C2) = span{(d1 + d2)/sqrt2}
    f = ExplicitFamily(((1,), (0,)))
    g = ExplicitFamily(((1,), (1,)))
    r = disjointness_at(f, g, 1)
    assert r.angles[0] == pytest.approx(math.pi / 4)
    assert r.disjoint and not r.strongly_disjoint
    assert r.complement and not r.strongly_complementary


def test_embed_internal_validation():
    f, g = even_odd_pair()
    with pytest.raises(TypeError):
        embed_internal(f, 4, Expr("n"), Expr("n"))
    with pytest.raises(ValueError):
        embed_internal(direct_sum(f, g), 4, Expr("n"), Expr("n"))
    with pytest.raises(ValueError):
        embed_internal(direct_sum(f, g), 4, Expr("2*n"), Expr("2*n-1"), ambient=3)


def test_proposition_report_for_even_odd_pair(ladder):
    f, g = even_odd_pair()
    checks, consistent = check_direct_sum_props(f, g, ladder)
    assert consistent
    by_id = {c.id: c for c in checks}
    assert by_id["Prop-5.5.fwd"].status is Status.PASS
    assert by_id["Prop-5.5.rev"].status is Status.PASS


def test_riesz_fischer_summand_gives_riesz_fischer_sum(ladder):
    checks, _ = check_direct_sum_props(standard_basis(), WeightedBasis(Periodic((0.3, -1.0))),
                                       ladder)
    assert {c.id: c for c in checks}["Prop-5.8"].status is Status.PASS


def test_overlapping_ranges_gate_the_completeness_check(ladder):
    checks, consistent = check_direct_sum_props(standard_basis(), standard_basis(), ladder)
    by_id = {c.id: c for c in checks}
    assert by_id["Prop-5.2.fwd"].status is Status.NOT_APPLICABLE
    assert consistent


_periodic = st.lists(st.sampled_from([0.0, 0.25, -0.5, 1.0, 2.0, -4.0]), min_size=1, max_size=4)


@given(_periodic, _periodic)
def test_disjoint_pairs_follow_the_sum_rules(a, b):
    # f on odd slots and g on even slots make R(C1) and R(C2) orthogonal
    f = WeightedBasis(Periodic(tuple(x for v in a for x in (v, 0.0))), Expr("(n+1)/2"),
                      Expr("(d+1)//2", "d"))
    g = WeightedBasis(Periodic(tuple(x for v in b for x in (0.0, v))), Expr("n/2"),
                      Expr("d//2", "d"))
    ladder = (8, 16, 32)
    assert taxonomy(disjointness(f, g, ladder))["strongly_disjoint"]
    vf, vg = classify(f, ladder), classify(g, ladder)
    s = classify(direct_sum(f, g), ladder)
    assert s.complete == (vf.complete and vg.complete)
    assert s.lower_semi_frame == (vf.lower_semi_frame and vg.lower_semi_frame)
