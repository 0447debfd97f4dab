"""Exact arithmetic in the quartic field Q(i, s2) = Q + Q*i + Q*s2 + Q*i*s2.

Here i**2 = -1 and s2**2 = 2, and the two radicals commute.  Every
coefficient appearing anywhere in the package lives in this one field:
the structure constants are rational, the Virasoro-Witt embedding needs
i, and the two square-root-scaled embeddings need s2.  Components are
`fractions.Fraction`, so equality is structural and exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class Scalar:
    """A field element c1 + ci*i + cs*s2 + cis*i*s2 with rational components."""

    __slots__ = ("c1", "ci", "cs", "cis")

    def __init__(
        self,
        c1: RationalLike = 0,
        ci: RationalLike = 0,
        cs: RationalLike = 0,
        cis: RationalLike = 0,
    ) -> None:
        self.c1 = _frac(c1)
        self.ci = _frac(ci)
        self.cs = _frac(cs)
        self.cis = _frac(cis)

    @classmethod
    def rational(cls, x: RationalLike) -> Scalar:
        return cls(x, 0, 0, 0)

    def __repr__(self) -> str:
        return f"Scalar({self.c1!r}, {self.ci!r}, {self.cs!r}, {self.cis!r})"

    def __str__(self) -> str:
        parts: list[tuple[Fraction, str]] = []
        for coeff, sym in ((self.c1, ""), (self.ci, "i"), (self.cs, "s2"), (self.cis, "i*s2")):
            if coeff != 0:
                parts.append((coeff, sym))
        if not parts:
            return "0"
        out: list[str] = []
        for k, (coeff, sym) in enumerate(parts):
            mag = -coeff if coeff < 0 else coeff
            if sym == "":
                body = str(mag)
            elif mag == 1:
                body = sym
            else:
                body = f"{mag}*{sym}"
            if k == 0:
                out.append(body if coeff > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(out)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return (
                self.c1 == other.c1
                and self.ci == other.ci
                and self.cs == other.cs
                and self.cis == other.cis
            )
        if isinstance(other, (int, Fraction)):
            return self.ci == 0 and self.cs == 0 and self.cis == 0 and self.c1 == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.c1, self.ci, self.cs, self.cis))

    def __bool__(self) -> bool:
        return bool(self.c1 or self.ci or self.cs or self.cis)

    def is_zero(self) -> bool:
        return not self

    def is_rational(self) -> bool:
        return not (self.ci or self.cs or self.cis)

    def __add__(self, other: Scalar | RationalLike) -> Scalar:
        if isinstance(other, (int, Fraction)):
            return Scalar(self.c1 + other, self.ci, self.cs, self.cis)
        if isinstance(other, Scalar):
            return Scalar(
                self.c1 + other.c1,
                self.ci + other.ci,
                self.cs + other.cs,
                self.cis + other.cis,
            )
        return NotImplemented

    def __radd__(self, other: Scalar | RationalLike) -> Scalar:
        return self + other

    def __neg__(self) -> Scalar:
        return Scalar(-self.c1, -self.ci, -self.cs, -self.cis)

    def __sub__(self, other: Scalar | RationalLike) -> Scalar:
        return self + (-other if isinstance(other, Scalar) else Scalar.rational(-other))

    def __rsub__(self, other: Scalar | RationalLike) -> Scalar:
        return (-self) + other

    def __mul__(self, other: Scalar | RationalLike) -> Scalar:
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return ZERO
            return Scalar(self.c1 * other, self.ci * other, self.cs * other, self.cis * other)
        if isinstance(other, Scalar):
            a1, a2, a3, a4 = self.c1, self.ci, self.cs, self.cis
            b1, b2, b3, b4 = other.c1, other.ci, other.cs, other.cis
            # common fast paths: one factor purely rational / both Gaussian
            if not (a2 or a3 or a4):
                return other * a1 if a1 else ZERO
            if not (b2 or b3 or b4):
                return self * b1 if b1 else ZERO
            if not (a3 or a4 or b3 or b4):
                return Scalar(a1 * b1 - a2 * b2, a1 * b2 + a2 * b1, 0, 0)
            return Scalar(
                a1 * b1 - a2 * b2 + 2 * (a3 * b3 - a4 * b4),
                a1 * b2 + a2 * b1 + 2 * (a3 * b4 + a4 * b3),
                a1 * b3 + a3 * b1 - a2 * b4 - a4 * b2,
                a1 * b4 + a4 * b1 + a2 * b3 + a3 * b2,
            )
        return NotImplemented

    def __rmul__(self, other: Scalar | RationalLike) -> Scalar:
        return self * other

    def conj_i(self) -> Scalar:
        """Conjugate flipping the sign of i."""
        return Scalar(self.c1, -self.ci, self.cs, -self.cis)

    def conj_s2(self) -> Scalar:
        """Conjugate flipping the sign of s2."""
        return Scalar(self.c1, self.ci, -self.cs, -self.cis)

    def inverse(self) -> Scalar:
        """Multiplicative inverse, rationalizing the s2 layer, then the i layer."""
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        # a = x + y*s2 with x, y in Q(i); a * conj_s2(a) = x^2 - 2 y^2 in Q(i)
        w = self * self.conj_s2()
        # w = u + v*i in Q(i); w * conj_i(w) = u^2 + v^2 in Q
        norm = w.c1 * w.c1 + w.ci * w.ci
        return self.conj_s2() * w.conj_i() * (Fraction(1) / norm)

    def __truediv__(self, other: Scalar | RationalLike) -> Scalar:
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, Scalar):
            return self * other.inverse()
        return NotImplemented


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
SQRT2 = Scalar(0, 0, 1)
