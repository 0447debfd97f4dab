"""JSON encodings shared by the command line tools and the certificates.

Half-integers serialize as "k" or "k/2" in lowest terms; rationals as
"p" or "p/q"; an element is a list of term records sorted by index so the
emitted text is deterministic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .core import BasisIndex, Element, HalfInt
from .derivations import Derivation
from .scalars import Scalar
from .structure import ReachCertificate


def frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def frac_from_str(text: str) -> Fraction:
    return Fraction(text)


def scalar_to_json(s: Scalar) -> dict:
    return {
        "c1": frac_str(s.c1),
        "ci": frac_str(s.ci),
        "cs": frac_str(s.cs),
        "cis": frac_str(s.cis),
    }


def scalar_from_json(obj: dict) -> Scalar:
    return Scalar(
        frac_from_str(obj.get("c1", "0")),
        frac_from_str(obj.get("ci", "0")),
        frac_from_str(obj.get("cs", "0")),
        frac_from_str(obj.get("cis", "0")),
    )


def index_to_json(index: BasisIndex) -> dict:
    return {"l": str(index.l), "m": str(index.m), "r": str(index.r)}


def index_from_json(obj: dict) -> BasisIndex:
    return BasisIndex(HalfInt(obj["l"]), HalfInt(obj["m"]), HalfInt(obj["r"]))


def element_to_json(x: Element) -> dict:
    terms = []
    for key, coeff in x.sorted_terms():
        record = index_to_json(key)
        record["c"] = scalar_to_json(coeff)
        terms.append(record)
    return {"terms": terms}


def element_from_json(obj: dict) -> Element:
    return Element(
        (index_from_json(record), scalar_from_json(record["c"])) for record in obj["terms"]
    )


def derivation_to_json(d: Derivation) -> dict:
    return {
        "img_r": element_to_json(d.img_r),
        "img_l": element_to_json(d.img_l),
        "img_m": element_to_json(d.img_m),
    }


def derivation_from_json(obj: dict) -> Derivation:
    return Derivation(
        element_from_json(obj["img_r"]),
        element_from_json(obj["img_l"]),
        element_from_json(obj["img_m"]),
    )


def certificate_to_json(cert: ReachCertificate) -> dict:
    return {
        "source": index_to_json(cert.source),
        "target": index_to_json(cert.target),
        "steps": [
            {"a": element_to_json(a), "b": element_to_json(b)} for a, b in cert.steps
        ],
        "determinants": [scalar_to_json(det) for det in cert.determinants],
    }


def certificate_from_json(obj: dict) -> ReachCertificate:
    return ReachCertificate(
        index_from_json(obj["source"]),
        index_from_json(obj["target"]),
        [(element_from_json(s["a"]), element_from_json(s["b"])) for s in obj["steps"]],
        [scalar_from_json(s) for s in obj.get("determinants", ())],
    )


def dumps(obj: dict) -> str:
    """Deterministic rendering used for every report on stdout."""
    return json.dumps(obj, indent=2, sort_keys=True)
