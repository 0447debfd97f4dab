"""Center, reachability certificates, H, weights and generator words."""

import pytest

from trilie.core import UNIT, Element, HalfInt, bracket, idx
from trilie.sampling import rng_for, sample_index
from trilie.scalars import Scalar
from trilie.structure import (
    EXCLUDED_TARGET,
    GENERATORS,
    Coset,
    GeneratorWord,
    ReachError,
    bracket_misses_excluded_index,
    central_witness,
    certificate_lands_on_target,
    decompose,
    h_closure_checks,
    in_H,
    is_central,
    reach,
    reduce_support,
    replay_certificate,
    weight_check,
    weight_of,
)


def test_unit_is_central():
    assert is_central(UNIT)
    assert is_central(Element.zero())
    assert central_witness(UNIT) is None


def test_non_central_basis_vector_has_witness():
    x = Element.basis(idx(1, 1, 0))
    assert not is_central(x)
    pair = central_witness(x)
    assert pair is not None
    assert bracket(x, Element.basis(pair[0]), Element.basis(pair[1]))


def test_every_nonunit_window_vector_noncentral():
    for k in range(100):
        rng = rng_for(40, "central", k)
        index = sample_index(rng, window=6)
        if index == idx(0, 0, 0):
            continue
        assert not is_central(Element.basis(index))


def test_coset_drops_unit_coefficient():
    u = Coset(UNIT.scale(Scalar(5)) + Element.basis(idx(1, 0, 0)))
    assert u.support_size() == 1
    assert Coset(UNIT.scale(Scalar(3))).is_zero()


def test_reach_trivial():
    cert = reach(idx(1, 0, 0), idx(1, 0, 0))
    assert cert.steps == []
    assert certificate_lands_on_target(cert)


def test_reach_single_step():
    cert = reach(idx(2, 0, 1), idx(0, 1, 0))
    assert len(cert.steps) == 1
    assert certificate_lands_on_target(cert)
    assert all(det for det in cert.determinants)


def test_reach_proportional_case_two_steps():
    # nu-shifted target (3,3,0) is parallel to the source index (1,1,0)
    cert = reach(idx(1, 1, 0), idx(2, 2, 0))
    assert len(cert.steps) == 2
    assert certificate_lands_on_target(cert)


def test_reach_random_pairs_replay():
    done = 0
    k = 0
    while done < 60:
        rng = rng_for(41, "reach", k)
        k += 1
        source = sample_index(rng, window=6)
        target = sample_index(rng, window=6)
        if source == idx(0, 0, 0) or target in (idx(0, 0, 0), EXCLUDED_TARGET):
            continue
        cert = reach(source, target)
        assert certificate_lands_on_target(cert), (source, target)
        done += 1


def test_reach_refuses_excluded_target():
    with pytest.raises(ReachError):
        reach(idx(1, 0, 0), EXCLUDED_TARGET)


def test_reach_refuses_central_endpoints():
    with pytest.raises(ValueError):
        reach(idx(0, 0, 0), idx(1, 0, 0))
    with pytest.raises(ValueError):
        reach(idx(1, 0, 0), idx(0, 0, 0))


def test_excluded_target_is_structurally_unreachable():
    # exhaustive over a window: no bracket output touches L[-1,-1;0]
    assert bracket_misses_excluded_index(2)


def test_reduce_support_two_terms():
    u = Coset(Element.basis(idx(1, 0, 1)) + Element.basis(idx(0, 1, 2)))
    step = reduce_support(u)
    assert step.result.support_size() == 1
    assert not step.result.is_zero()


def test_reduce_support_three_terms():
    u = Coset(
        Element.basis(idx(1, 0, 1))
        + Element.basis(idx(0, 1, 2))
        + Element.basis(idx(2, -1, 0))
    )
    step = reduce_support(u)
    assert 1 <= step.result.support_size() <= 2


def test_reduce_support_single_term_rejected():
    with pytest.raises(ValueError):
        reduce_support(Coset.of_basis(idx(1, 0, 0)))


def test_reduce_support_parallel_r_axis():
    # both support vectors lie on the r-axis: needs the translation fallback
    u = Coset(Element.basis(idx(0, 0, 1)) + Element.basis(idx(0, 0, 2)))
    step = reduce_support(u)
    assert step.result.support_size() == 1
    assert len(step.pairs) == 2


def test_reduce_support_inside_H():
    u = Coset(Element.basis(idx(1, 1, 0)) + Element.basis(idx(2, 2, 5)))
    step = reduce_support(u)
    assert step.result.support_size() == 1


def test_reduce_support_chain_terminates():
    for k in range(40):
        rng = rng_for(42, "reduce", k)
        n_terms = rng.randint(2, 4)
        terms = {}
        while len(terms) < n_terms:
            key = sample_index(rng, window=4)
            if key != idx(0, 0, 0):
                terms[key] = Scalar(rng.randint(1, 5))
        u = Coset(Element(terms))
        calls = 0
        while u.support_size() > 1:
            step = reduce_support(u)
            assert step.result.support_size() < u.support_size()
            u = step.result
            calls += 1
        assert calls <= n_terms - 1


def test_in_H():
    assert in_H(Element.basis(idx("3/2", "3/2", -2)))
    assert in_H(UNIT)
    assert not in_H(Element.basis(idx(1, 0, 0)))


def test_h_closure_window_one():
    report = h_closure_checks(1)
    assert report.passed
    assert report.products_checked == 25 ** 2
    assert report.triples_checked == 25 ** 3
    # witnesses produced for every non-H vector in the window
    assert len(report.witnesses) == 5 * 5 * 5 - 5 * 5


def test_weight_known_value():
    assert weight_of(HalfInt(2), HalfInt(1), idx("1/2", "5/2", 3)) == Scalar(4)


def test_weight_zero_cases():
    assert weight_of(HalfInt(0), HalfInt(3), idx(1, 7, 2)) == Scalar(0)
    assert weight_of(HalfInt(1), HalfInt(0), idx(2, 2, -1)) == Scalar(0)


def test_weight_matches_bracket_and_ignores_i():
    for k in range(150):
        rng = rng_for(43, "weight", k)
        t = HalfInt.from_twice(rng.randint(-8, 8))
        index = sample_index(rng)
        values = set()
        for _ in range(3):
            i = HalfInt.from_twice(rng.randint(-8, 8))
            assert weight_check(t, i, index)
            values.add(weight_of(t, i, index))
        assert len(values) == 1


def test_weight_partition():
    # every basis vector lies in exactly one eigenspace: eigenvalue t*(m-l)
    t = HalfInt(2)
    for k in range(50):
        rng = rng_for(44, "wpart", k)
        index = sample_index(rng, window=6)
        expected = Scalar.rational(
            t.as_fraction() * (index.m.as_fraction() - index.l.as_fraction())
        )
        assert weight_of(t, HalfInt(1), index) == expected


def test_generators_tuple():
    assert GENERATORS[0] == idx(0, 0, -1)
    assert GENERATORS[3] == idx(0, 0, "1/2")


def test_decompose_positive_integer_axis():
    word = decompose(idx(1, 0, 0))
    assert word.exponents == (0, 0, 0, 0, 2, 0)
    assert word.evaluate() == Element.basis(idx(1, 0, 0))


def test_decompose_negative_half_axis():
    word = decompose(idx("-3/2", 0, 0))
    assert word.exponents == (0, 3, 0, 0, 3, 0)
    assert word.evaluate() == Element.basis(idx("-3/2", 0, 0))


def test_decompose_unit_is_empty_word():
    word = decompose(idx(0, 0, 0))
    assert word.exponents == (0, 0, 0, 0, 0, 0)
    assert word.evaluate() == UNIT


def test_nonempty_unit_factorization():
    # (L[0,0;-1]) * (L[0,0;1/2])^2 multiplies out to the unit
    word = GeneratorWord((1, 0, 0, 2, 0, 0))
    assert word.evaluate_by_products() == UNIT


def test_decompose_roundtrip_window():
    for k in range(300):
        rng = rng_for(45, "word", k)
        index = sample_index(rng, window=6)
        word = decompose(index)
        assert word.evaluate() == Element.basis(index)
        assert word.evaluate_by_products() == Element.basis(index)


def test_word_to_dict_names_generators():
    word = decompose(idx(0, "1/2", -1))
    assert word.to_dict() == {"L[0,0;-1]": 1, "L[0,1/2;0]": 1}
