"""Derivations of the algebra, determined by three generator images.

A product derivation is pinned by where it sends the three half-step
generators L[0,0;1/2], L[1/2,0;0], L[0,1/2;0]:

    d(L[l,m;r]) = 2r*L[l,m;r-1/2]*d(L[0,0;1/2])
                + 2l*L[l-1/2,m;r]*d(L[1/2,0;0])
                + 2m*L[l,m-1/2;r]*d(L[0,1/2;0])

Such a map is additionally a derivation of the 3-bracket exactly when
three families of per-index linear conditions hold; `gd_check` evaluates
them over the finite support closure of the images.  Each condition ties
coefficients of the three images at half-step-shifted indices, with each
coefficient weighted by (its own r) - 1/2, (its own l) + 1/2 or
(its own m) + 1/2 respectively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .core import BasisIndex, Element, HalfInt, bracket, idx
from .scalars import Scalar

HALF = HalfInt("1/2")

#: generator triple whose images determine a derivation
GEN_R = idx(0, 0, "1/2")
GEN_L = idx("1/2", 0, 0)
GEN_M = idx(0, "1/2", 0)


@dataclass(frozen=True)
class Derivation:
    """Images of (GEN_R, GEN_L, GEN_M) under a product derivation."""

    img_r: Element
    img_l: Element
    img_m: Element

    @classmethod
    def zero(cls) -> Derivation:
        return cls(Element.zero(), Element.zero(), Element.zero())

    @classmethod
    def from_ad(cls, u: Element, v: Element) -> Derivation:
        """The left multiplication z -> [u, v, z], as a generator-image triple."""
        return cls(
            bracket(u, v, Element.basis(GEN_R)),
            bracket(u, v, Element.basis(GEN_L)),
            bracket(u, v, Element.basis(GEN_M)),
        )

    def scaled(self, factor: Scalar) -> Derivation:
        return Derivation(self.img_r.scale(factor), self.img_l.scale(factor), self.img_m.scale(factor))

    def plus(self, other: Derivation) -> Derivation:
        return Derivation(
            self.img_r + other.img_r, self.img_l + other.img_l, self.img_m + other.img_m
        )


def apply_derivation(d: Derivation, x: Element) -> Element:
    out = Element.zero()
    for key, coeff in x.terms.items():
        r2, l2, m2 = key.r.twice, key.l.twice, key.m.twice
        if r2 and d.img_r:
            shifted = Element.basis(
                BasisIndex(key.l, key.m, HalfInt.from_twice(r2 - 1)), coeff * r2
            )
            out = out + shifted * d.img_r
        if l2 and d.img_l:
            shifted = Element.basis(
                BasisIndex(HalfInt.from_twice(l2 - 1), key.m, key.r), coeff * l2
            )
            out = out + shifted * d.img_l
        if m2 and d.img_m:
            shifted = Element.basis(
                BasisIndex(key.l, HalfInt.from_twice(m2 - 1), key.r), coeff * m2
            )
            out = out + shifted * d.img_m
    return out


def product_leibniz_residual(d: Derivation, x: Element, y: Element) -> Element:
    """d(x*y) - d(x)*y - x*d(y); identically zero for every generator-image triple."""
    return apply_derivation(d, x * y) - apply_derivation(d, x) * y - x * apply_derivation(d, y)


# ---------------------------------------------------------------------------
# bracket-derivation conditions
# ---------------------------------------------------------------------------

# per family: how the frame index maps to each image's own argument
# (l shift, m shift, r shift) in doubled units
_FAMILY_SHIFTS = (
    # family 1: conditions from triples led by GEN_R
    (((0, 0, 0), (1, 0, -1), (0, 1, -1))),
    # family 2: led by GEN_L
    (((-1, 0, 1), (0, 0, 0), (-1, 1, 0))),
    # family 3: led by GEN_M
    (((0, -1, 1), (1, -1, 0), (0, 0, 0))),
)


def _shift(frame: BasisIndex, delta: tuple[int, int, int]) -> BasisIndex:
    return BasisIndex(
        HalfInt.from_twice(frame.l.twice + delta[0]),
        HalfInt.from_twice(frame.m.twice + delta[1]),
        HalfInt.from_twice(frame.r.twice + delta[2]),
    )


def _unshift(key: BasisIndex, delta: tuple[int, int, int]) -> BasisIndex:
    return BasisIndex(
        HalfInt.from_twice(key.l.twice - delta[0]),
        HalfInt.from_twice(key.m.twice - delta[1]),
        HalfInt.from_twice(key.r.twice - delta[2]),
    )


def _condition_value(d: Derivation, family: int, frame: BasisIndex) -> Scalar:
    shifts = _FAMILY_SHIFTS[family]
    a1 = _shift(frame, shifts[0])
    a2 = _shift(frame, shifts[1])
    a3 = _shift(frame, shifts[2])
    total = Scalar(0)
    c1 = d.img_r.terms.get(a1)
    if c1 is not None:
        total = total + c1 * (a1.r.as_fraction() - Fraction(1, 2))
    c2 = d.img_l.terms.get(a2)
    if c2 is not None:
        total = total + c2 * (a2.l.as_fraction() + Fraction(1, 2))
    c3 = d.img_m.terms.get(a3)
    if c3 is not None:
        total = total + c3 * (a3.m.as_fraction() + Fraction(1, 2))
    return total


@dataclass
class GdReport:
    satisfied: bool
    violations: list = field(default_factory=list)  # (family, frame, value)

    def to_dict(self) -> dict:
        return {
            "satisfied": self.satisfied,
            "violated_conditions": [
                {"family": fam + 1, "at": str(frame), "value": str(value)}
                for fam, frame, value in self.violations
            ],
        }


def gd_check(d: Derivation) -> GdReport:
    """Evaluate all three condition families over the images' support closure."""
    violations = []
    for family, shifts in enumerate(_FAMILY_SHIFTS):
        frames: set[BasisIndex] = set()
        for image, delta in zip((d.img_r, d.img_l, d.img_m), shifts):
            frames.update(_unshift(key, delta) for key in image.terms)
        for frame in sorted(frames, key=lambda k: (k.l.twice, k.m.twice, k.r.twice)):
            value = _condition_value(d, family, frame)
            if value:
                violations.append((family, frame, value))
    return GdReport(not violations, violations)


def bracket_derivation_residual(d: Derivation, x: Element, y: Element, z: Element) -> Element:
    return map_bracket_residual(lambda e: apply_derivation(d, e), x, y, z)


def map_bracket_residual(
    fn: Callable[[Element], Element], x: Element, y: Element, z: Element
) -> Element:
    """Defect of fn as a bracket derivation on one triple."""
    return fn(bracket(x, y, z)) - (
        bracket(fn(x), y, z) + bracket(x, fn(y), z) + bracket(x, y, fn(z))
    )


#: for each family, a triple on which any violated condition shows up as a
#: nonzero residual (the leading 2x2 minor attached to the family equals 1,
#: and distinct condition frames land on distinct output indices)
EXPOSURE_TRIPLES = (
    (GEN_R, idx(1, 0, 0), idx(0, 1, 0)),
    (GEN_L, idx(0, 0, 1), idx(0, 1, 0)),
    (GEN_M, idx(0, 0, 1), idx(1, 0, 0)),
)


def expose_violation(d: Derivation) -> Optional[tuple[tuple[BasisIndex, BasisIndex, BasisIndex], Element]]:
    """A concrete triple with nonzero residual for a derivation failing gd_check."""
    report = gd_check(d)
    if report.satisfied:
        return None
    families = {fam for fam, _, _ in report.violations}
    for family in sorted(families):
        lead, b2, b3 = EXPOSURE_TRIPLES[family]
        residual = bracket_derivation_residual(
            d, Element.basis(lead), Element.basis(b2), Element.basis(b3)
        )
        if residual:
            return (lead, b2, b3), residual
    return None
