"""Generator-image derivations, their product rule and bracket conditions."""

from fractions import Fraction

from trilie.core import UNIT, Element, bracket, idx
from trilie.derivations import (
    GEN_L,
    GEN_M,
    GEN_R,
    Derivation,
    apply_derivation,
    bracket_derivation_residual,
    expose_violation,
    gd_check,
    map_bracket_residual,
    product_leibniz_residual,
)
from trilie.sampling import rng_for, sample_element, sample_scalar
from trilie.scalars import Scalar


def d_unit_img_r() -> Derivation:
    return Derivation(UNIT, Element.zero(), Element.zero())


def d_scaling() -> Derivation:
    # images of the left multiplication by (L[0,1;0], L[1,0;0]); scales by -r
    return Derivation(
        Element.basis(GEN_R, Scalar(Fraction(-1, 2))), Element.zero(), Element.zero()
    )


def random_derivation(k: int) -> Derivation:
    rng = rng_for(50, "deriv", k)
    return Derivation(
        sample_element(rng, window=4, max_terms=2, full_field=True),
        sample_element(rng, window=4, max_terms=2, full_field=True),
        sample_element(rng, window=4, max_terms=2, full_field=True),
    )


def random_ad_derivation(k: int, max_terms: int = 2) -> tuple[Derivation, Element, Element]:
    rng = rng_for(51, "addv", k)
    u = sample_element(rng, window=4, max_terms=max_terms)
    v = sample_element(rng, window=4, max_terms=max_terms)
    return Derivation.from_ad(u, v), u, v


def test_apply_scales_r_shift():
    out = apply_derivation(d_unit_img_r(), Element.basis(idx(1, 2, 3)))
    assert out == Element.basis(idx(1, 2, "5/2"), Scalar(6))


def test_apply_kills_unit():
    for k in range(20):
        d = random_derivation(k)
        assert apply_derivation(d, UNIT).is_zero()


def test_scaling_derivation_action():
    d = d_scaling()
    target = idx(2, -1, "3/2")
    out = apply_derivation(d, Element.basis(target))
    assert out == Element.basis(target, Scalar(Fraction(-3, 2)))


def test_from_ad_matches_direct_bracket():
    for k in range(60):
        d, u, v = random_ad_derivation(k)
        rng = rng_for(52, "adapply", k)
        x = sample_element(rng, window=4, max_terms=2)
        assert apply_derivation(d, x) == bracket(u, v, x)


def test_apply_is_linear():
    for k in range(50):
        d = random_derivation(k)
        rng = rng_for(53, "lin", k)
        x = sample_element(rng, window=4, max_terms=2, full_field=True)
        y = sample_element(rng, window=4, max_terms=2, full_field=True)
        a = sample_scalar(rng, full_field=True)
        b = sample_scalar(rng, full_field=True)
        lhs = apply_derivation(d, x.scale(a) + y.scale(b))
        rhs = apply_derivation(d, x).scale(a) + apply_derivation(d, y).scale(b)
        assert lhs == rhs


def test_product_leibniz_residual_always_zero():
    for k in range(200):
        d = random_derivation(k)
        rng = rng_for(54, "leib", k)
        x = sample_element(rng, window=4, max_terms=2, full_field=True)
        y = sample_element(rng, window=4, max_terms=2, full_field=True)
        assert product_leibniz_residual(d, x, y).is_zero()


def test_product_leibniz_unit_and_zero():
    d = random_derivation(0)
    x = sample_element(rng_for(55, "lz", 0), window=4)
    assert product_leibniz_residual(d, UNIT, x).is_zero()
    assert product_leibniz_residual(Derivation.zero(), x, x).is_zero()


def test_gd_check_scaling_derivation_satisfied():
    report = gd_check(d_scaling())
    assert report.satisfied


def test_gd_check_unit_image_violated_at_origin():
    report = gd_check(d_unit_img_r())
    assert not report.satisfied
    family_one = [v for v in report.violations if v[0] == 0]
    assert any(
        frame == idx(0, 0, 0) and value == Scalar(Fraction(-1, 2))
        for _, frame, value in family_one
    )


def test_gd_check_zero_derivation():
    assert gd_check(Derivation.zero()).satisfied


def test_gd_check_ad_derivations_satisfied():
    for k in range(40):
        d, _, _ = random_ad_derivation(k)
        assert gd_check(d).satisfied


def test_documented_witness_triple_residual():
    d = d_unit_img_r()
    x = Element.basis(idx(0, 1, 0))
    y = Element.basis(idx(1, 0, 0))
    z = Element.basis(idx(0, 0, 1))
    residual = bracket_derivation_residual(d, x, y, z)
    assert residual == Element.basis(idx(0, 0, "1/2"), Scalar(-1))


def test_satisfying_derivations_have_zero_residuals():
    for k in range(60):
        d, _, _ = random_ad_derivation(k)
        rng = rng_for(56, "resid", k)
        x = sample_element(rng, window=4, max_terms=2)
        y = sample_element(rng, window=4, max_terms=2)
        z = sample_element(rng, window=4, max_terms=2)
        assert bracket_derivation_residual(d, x, y, z).is_zero()


def test_combinations_of_ad_derivations_satisfy():
    for k in range(20):
        d1, _, _ = random_ad_derivation(2 * k)
        d2, _, _ = random_ad_derivation(2 * k + 1)
        rng = rng_for(57, "combo", k)
        d = d1.scaled(sample_scalar(rng)).plus(d2.scaled(sample_scalar(rng)))
        assert gd_check(d).satisfied
        x = sample_element(rng, window=3, max_terms=2)
        y = sample_element(rng, window=3, max_terms=2)
        z = sample_element(rng, window=3, max_terms=2)
        assert bracket_derivation_residual(d, x, y, z).is_zero()


def test_violating_derivations_expose_nonzero_residual():
    exposed = 0
    for k in range(40):
        d = random_derivation(k)
        report = gd_check(d)
        if report.satisfied:
            continue
        found = expose_violation(d)
        assert found is not None
        triple, residual = found
        assert len(triple) == 3 and not residual.is_zero()
        exposed += 1
    assert exposed > 10


def test_ad_raw_map_is_bracket_derivation():
    for k in range(100):
        rng = rng_for(58, "rawad", k)
        u = sample_element(rng, window=4, max_terms=2)
        v = sample_element(rng, window=4, max_terms=2)
        x = sample_element(rng, window=4, max_terms=2)
        y = sample_element(rng, window=4, max_terms=2)
        z = sample_element(rng, window=4, max_terms=2)
        residual = map_bracket_residual(lambda e: bracket(u, v, e), x, y, z)
        assert residual.is_zero()


def test_generator_indices():
    assert GEN_R == idx(0, 0, "1/2")
    assert GEN_L == idx("1/2", 0, 0)
    assert GEN_M == idx(0, "1/2", 0)
