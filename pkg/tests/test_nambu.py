"""Monomial calculus and the determinant cross-check."""

from fractions import Fraction

from trilie.core import Element, basis_range, bracket, idx
from trilie.nambu import (
    Monomial,
    MonomialCombo,
    chi,
    chi_check,
    jacobian_agreement_scan,
    jacobian_bracket,
    mono_mul,
    monomial_of,
    partial,
)
from trilie.sampling import rng_for, sample_index
from trilie.scalars import ONE, Scalar


def mono(l, m, r):
    return monomial_of(idx(l, m, r))


def test_partial_power_rule():
    assert partial("y", (ONE, mono(2, 0, 0))) == (Scalar(2), mono(1, 0, 0))


def test_partial_exponential_rule():
    got = partial("x", (ONE, mono("1/2", 1, "3/2")))
    assert got == (Scalar(Fraction(3, 2)), mono("1/2", 1, "3/2"))


def test_partial_kills_zero_exponent():
    assert partial("z", (ONE, mono(1, 0, 1))) is None


def test_jacobian_known_value():
    out = jacobian_bracket((ONE, mono(0, 1, 1)), (ONE, mono(0, 1, 3)), (ONE, mono(1, 0, -2)))
    assert out == MonomialCombo([(mono(0, 1, 2), Scalar(2))])


def test_jacobian_repeated_argument_vanishes():
    t = (ONE, mono(1, "1/2", -2))
    assert jacobian_bracket(t, t, (ONE, mono(0, 1, 1))).is_zero()


def test_jacobian_matches_core_on_quarter_case():
    out = jacobian_bracket((ONE, mono(1, 0, "1/2")), (ONE, mono(0, "1/2", 0)), (ONE, mono(1, 1, 1)))
    assert out == MonomialCombo([(mono(1, "1/2", "3/2"), Scalar(Fraction(1, 4)))])


def test_chi_check_exhaustive_tiny_window():
    for a1 in basis_range(1):
        for a2 in basis_range(1):
            for a3 in basis_range(1):
                assert chi_check(a1, a2, a3)


def test_chi_check_with_unit_index():
    assert chi_check(idx(0, 0, 0), idx(1, -1, "3/2"), idx(0, 2, 1))
    jac = jacobian_bracket(
        (ONE, mono(0, 0, 0)), (ONE, mono(1, -1, "3/2")), (ONE, mono(0, 2, 1))
    )
    assert jac.is_zero()


def test_chi_check_random_window():
    for k in range(1000):
        rng = rng_for(20, "chi", k)
        assert chi_check(sample_index(rng), sample_index(rng), sample_index(rng))


def test_chi_is_linear_on_brackets():
    for k in range(100):
        rng = rng_for(21, "chilin", k)
        a1, a2, a3 = (sample_index(rng) for _ in range(3))
        jac = jacobian_bracket(
            (ONE, monomial_of(a1)), (ONE, monomial_of(a2)), (ONE, monomial_of(a3))
        )
        img = chi(bracket(Element.basis(a1), Element.basis(a2), Element.basis(a3)))
        assert jac == img


def test_mono_mul_exponent_addition():
    assert mono_mul(mono("1/2", -1, 1), mono("1/2", 1, "-1/2")) == mono(1, 0, "1/2")


def test_scan_small_window_with_spot_checks():
    checked = jacobian_agreement_scan(2, spot_check_stride=997)
    assert checked == (2 * 2 + 1) ** 9


def test_monomial_pretty_printer():
    assert str(mono("1/2", 0, -2)) == "y^{1/2} e^{-2 x}"
    assert str(mono(0, 0, 0)) == "1"
    assert str(Monomial(idx(0, 1, 1).l, idx(0, 1, 1).m, idx(0, 1, 1).r)) == "z^{1} e^{1 x}"
