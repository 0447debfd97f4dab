"""The unital ternary Lie-Poisson algebra on the half-integer lattice.

Basis vectors L[l,m;r] are indexed by triples of half-integers.  The
commutative product adds indices componentwise, the unit is L[0,0;0],
and the 3-bracket of basis vectors is

    [L[a1], L[a2], L[a3]] = M(a1,a2,a3) * L[l1+l2+l3-1, m1+m2+m3-1; r1+r2+r3]

where M is the determinant with rows (r1,r2,r3), (l1,l2,l3), (m1,m2,m3).
Elements are finite linear combinations with `Scalar` coefficients and
prune zeros eagerly, so structural equality is mathematical equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, NamedTuple, Union

from .scalars import ONE, Scalar

HalfLike = Union["HalfInt", int, Fraction, str]


class HalfInt:
    """An element of Z + (1/2)Z, stored as its doubled integer value."""

    __slots__ = ("twice",)

    def __init__(self, value: HalfLike) -> None:
        if isinstance(value, HalfInt):
            self.twice = value.twice
        elif isinstance(value, int):
            self.twice = 2 * value
        elif isinstance(value, Fraction):
            if value.denominator not in (1, 2):
                raise ValueError(f"{value} is not a half-integer")
            self.twice = int(value * 2)
        elif isinstance(value, str):
            self.twice = _parse_half(value)
        else:
            raise TypeError(f"cannot build HalfInt from {value!r}")

    @classmethod
    def from_twice(cls, twice: int) -> HalfInt:
        out = object.__new__(cls)
        out.twice = twice
        return out

    def as_fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def __repr__(self) -> str:
        return f"HalfInt({str(self)!r})"

    def __str__(self) -> str:
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, int):
            return self.twice == 2 * other
        if isinstance(other, Fraction):
            return self.as_fraction() == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.as_fraction())

    def __lt__(self, other: HalfInt) -> bool:
        return self.twice < other.twice

    def __le__(self, other: HalfInt) -> bool:
        return self.twice <= other.twice

    def __neg__(self) -> HalfInt:
        return HalfInt.from_twice(-self.twice)

    def __add__(self, other: HalfInt | int) -> HalfInt:
        if isinstance(other, HalfInt):
            return HalfInt.from_twice(self.twice + other.twice)
        if isinstance(other, int):
            return HalfInt.from_twice(self.twice + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: HalfInt | int) -> HalfInt:
        return self + (-other)

    def __mul__(self, other: int) -> HalfInt:
        if isinstance(other, int):
            return HalfInt.from_twice(self.twice * other)
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.twice != 0


def _parse_half(text: str) -> int:
    """Doubled value of a literal like '3', '-2' or '5/2' (denominator 2 only)."""
    body = text.strip()
    if "/" in body:
        num, _, den = body.partition("/")
        if den.strip() != "2":
            raise ValueError(f"half-integer literal must have denominator 2: {text!r}")
        return int(num)
    return 2 * int(body)


def half(value: HalfLike) -> HalfInt:
    return value if isinstance(value, HalfInt) else HalfInt(value)


class BasisIndex(NamedTuple):
    """A basis label (l, m, r); ordering is lexicographic on doubled values."""

    l: HalfInt
    m: HalfInt
    r: HalfInt

    def __str__(self) -> str:
        return f"L[{self.l},{self.m};{self.r}]"

    def shift(self, other: BasisIndex) -> BasisIndex:
        return BasisIndex(self.l + other.l, self.m + other.m, self.r + other.r)


def idx(l: HalfLike, m: HalfLike, r: HalfLike) -> BasisIndex:
    return BasisIndex(half(l), half(m), half(r))


#: the shift nu = (1, 1, 0) subtracted from the bracket's output lower indices
NU = idx(1, 1, 0)

UNIT_INDEX = idx(0, 0, 0)


def det_m(a1: BasisIndex, a2: BasisIndex, a3: BasisIndex) -> Scalar:
    """Structure determinant with rows (r1,r2,r3), (l1,l2,l3), (m1,m2,m3).

    Expanded by cofactors along the first row.  Works on doubled integer
    values, so the result is an exact rational (doubled determinant / 8).
    """
    return Scalar.rational(Fraction(_det_m_doubled(a1, a2, a3), 8))


def _det_m_doubled(a1: BasisIndex, a2: BasisIndex, a3: BasisIndex) -> int:
    l1, m1, r1 = a1.l.twice, a1.m.twice, a1.r.twice
    l2, m2, r2 = a2.l.twice, a2.m.twice, a2.r.twice
    l3, m3, r3 = a3.l.twice, a3.m.twice, a3.r.twice
    return (
        r1 * (l2 * m3 - l3 * m2)
        - r2 * (l1 * m3 - l3 * m1)
        + r3 * (l1 * m2 - l2 * m1)
    )


class Element:
    """A finite linear combination of basis vectors (zero coefficients pruned)."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[BasisIndex, Scalar] | Iterable[tuple[BasisIndex, Scalar]] = ()) -> None:
        data: dict[BasisIndex, Scalar] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for key, coeff in items:
            if not coeff:
                continue
            prev = data.get(key)
            total = coeff if prev is None else prev + coeff
            if total:
                data[key] = total
            elif prev is not None:
                del data[key]
        self.terms = data

    @classmethod
    def basis(cls, index: BasisIndex, coeff: Scalar = ONE) -> Element:
        out = object.__new__(cls)
        out.terms = {index: coeff} if coeff else {}
        return out

    @classmethod
    def zero(cls) -> Element:
        out = object.__new__(cls)
        out.terms = {}
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Element):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def support(self) -> set[BasisIndex]:
        return set(self.terms)

    def sorted_terms(self) -> list[tuple[BasisIndex, Scalar]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0].l.twice, kv[0].m.twice, kv[0].r.twice))

    def leading_index(self) -> BasisIndex:
        """Lexicographically smallest supported index (element must be nonzero)."""
        if not self.terms:
            raise ValueError("zero element has no leading index")
        return min(self.terms, key=lambda k: (k.l.twice, k.m.twice, k.r.twice))

    def coeff(self, index: BasisIndex) -> Scalar:
        return self.terms.get(index, Scalar(0))

    def __add__(self, other: Element) -> Element:
        if not isinstance(other, Element):
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        data = dict(self.terms)
        for key, coeff in other.terms.items():
            prev = data.get(key)
            total = coeff if prev is None else prev + coeff
            if total:
                data[key] = total
            elif prev is not None:
                del data[key]
        out = object.__new__(Element)
        out.terms = data
        return out

    def __neg__(self) -> Element:
        out = object.__new__(Element)
        out.terms = {key: -coeff for key, coeff in self.terms.items()}
        return out

    def __sub__(self, other: Element) -> Element:
        return self + (-other)

    def scale(self, factor: Scalar | int | Fraction) -> Element:
        if isinstance(factor, (int, Fraction)):
            factor = Scalar.rational(factor)
        if not factor:
            return Element.zero()
        out = object.__new__(Element)
        out.terms = {key: coeff * factor for key, coeff in self.terms.items()}
        return out

    def __rmul__(self, factor: Scalar | int | Fraction) -> Element:
        return self.scale(factor)

    def __mul__(self, other: Element | Scalar | int | Fraction) -> Element:
        """Commutative product; on the basis it adds all three indices."""
        if isinstance(other, (Scalar, int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Element):
            return NotImplemented
        data: dict[BasisIndex, Scalar] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                key = ka.shift(kb)
                coeff = ca * cb
                prev = data.get(key)
                total = coeff if prev is None else prev + coeff
                if total:
                    data[key] = total
                elif prev is not None:
                    del data[key]
        out = object.__new__(Element)
        out.terms = data
        return out

    def __repr__(self) -> str:
        return f"Element({str(self)})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        chunks: list[str] = []
        for key, coeff in self.sorted_terms():
            if coeff == ONE:
                body = str(key)
            elif coeff.is_rational() and coeff.ci == 0:
                body = f"{coeff.c1}*{key}" if coeff.c1 > 0 else f"({coeff.c1})*{key}"
            else:
                body = f"({coeff})*{key}"
            chunks.append(body)
        return " + ".join(chunks)


UNIT = Element.basis(UNIT_INDEX)


def mul(x: Element, y: Element) -> Element:
    return x * y


def bracket(x: Element, y: Element, z: Element) -> Element:
    """Trilinear extension of the basis 3-bracket."""
    data: dict[BasisIndex, Scalar] = {}
    for ka, ca in x.terms.items():
        for kb, cb in y.terms.items():
            cab = ca * cb
            for kc, cc in z.terms.items():
                det8 = _det_m_doubled(ka, kb, kc)
                if det8 == 0:
                    continue
                key = BasisIndex(
                    HalfInt.from_twice(ka.l.twice + kb.l.twice + kc.l.twice - 2),
                    HalfInt.from_twice(ka.m.twice + kb.m.twice + kc.m.twice - 2),
                    HalfInt.from_twice(ka.r.twice + kb.r.twice + kc.r.twice),
                )
                coeff = cab * cc * Fraction(det8, 8)
                prev = data.get(key)
                total = coeff if prev is None else prev + coeff
                if total:
                    data[key] = total
                elif prev is not None:
                    del data[key]
    out = object.__new__(Element)
    out.terms = data
    return out


def ad(x: Element, y: Element) -> Callable[[Element], Element]:
    """Left multiplication z -> [x, y, z]."""

    def act(z: Element) -> Element:
        return bracket(x, y, z)

    return act


def fi_residual(x1: Element, x2: Element, x3: Element, y2: Element, y3: Element) -> Element:
    """Fundamental-identity defect; the zero element iff the identity holds here."""
    lhs = bracket(bracket(x1, x2, x3), y2, y3)
    rhs = (
        bracket(bracket(x1, y2, y3), x2, x3)
        + bracket(x1, bracket(x2, y2, y3), x3)
        + bracket(x1, x2, bracket(x3, y2, y3))
    )
    return lhs - rhs


def leibniz_residual(x1: Element, x2: Element, y2: Element, y3: Element) -> Element:
    """Defect of the product rule [x1*x2, y2, y3] = [x1,y2,y3]*x2 + x1*[x2,y2,y3]."""
    return bracket(x1 * x2, y2, y3) - bracket(x1, y2, y3) * x2 - x1 * bracket(x2, y2, y3)


def basis_range(max_doubled_abs: int) -> Iterator[BasisIndex]:
    """All basis indices whose doubled components lie in [-bound, bound]."""
    span = range(-max_doubled_abs, max_doubled_abs + 1)
    for lt in span:
        for mt in span:
            for rt in span:
                yield BasisIndex(HalfInt.from_twice(lt), HalfInt.from_twice(mt), HalfInt.from_twice(rt))
