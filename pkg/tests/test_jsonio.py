"""Round trips for the JSON encodings."""

from fractions import Fraction

from trilie.core import Element, idx
from trilie.derivations import Derivation
from trilie.jsonio import (
    certificate_from_json,
    certificate_to_json,
    derivation_from_json,
    derivation_to_json,
    dumps,
    element_from_json,
    element_to_json,
    frac_str,
    scalar_from_json,
    scalar_to_json,
)
from trilie.sampling import rng_for, sample_element
from trilie.scalars import Scalar
from trilie.structure import certificate_lands_on_target, reach


def test_frac_str():
    assert frac_str(Fraction(3, 2)) == "3/2"
    assert frac_str(Fraction(-4, 2)) == "-2"


def test_scalar_roundtrip():
    s = Scalar(Fraction(1, 2), -3, Fraction(7, 5), 0)
    assert scalar_from_json(scalar_to_json(s)) == s


def test_element_roundtrip():
    for k in range(50):
        x = sample_element(rng_for(60, "json", k), full_field=True)
        assert element_from_json(element_to_json(x)) == x


def test_element_json_shape():
    x = Element.basis(idx("1/2", -1, 2), Scalar(Fraction(1, 3), 1))
    obj = element_to_json(x)
    assert obj == {
        "terms": [
            {
                "l": "1/2",
                "m": "-1",
                "r": "2",
                "c": {"c1": "1/3", "ci": "1", "cs": "0", "cis": "0"},
            }
        ]
    }


def test_derivation_roundtrip():
    rng = rng_for(61, "djson", 0)
    d = Derivation(
        sample_element(rng, max_terms=2),
        sample_element(rng, max_terms=2),
        sample_element(rng, max_terms=2),
    )
    assert derivation_from_json(derivation_to_json(d)) == d


def test_certificate_roundtrip_and_replay():
    cert = reach(idx(2, 0, 1), idx(0, 1, 0))
    back = certificate_from_json(certificate_to_json(cert))
    assert back.source == cert.source and back.target == cert.target
    assert back.steps == cert.steps
    assert certificate_lands_on_target(back)


def test_dumps_deterministic():
    a = dumps({"b": 1, "a": [2, 3]})
    b = dumps({"a": [2, 3], "b": 1})
    assert a == b
