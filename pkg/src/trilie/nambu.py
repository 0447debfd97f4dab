"""Jacobian-determinant realization of the lattice algebra.

A basis vector L[l,m;r] corresponds to the symbolic monomial
X[l,m;r] = y^l z^m e^(r x).  The ternary operation on monomials is the
Jacobian of the three arguments with respect to (x, y, z), expanded here
by the full 6-term permutation rule.  The core module expands the same
determinant by cofactors, so agreement of the two modules is a genuine
cross-check rather than a tautology.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional

import numpy as np

from .core import BasisIndex, Element, HalfInt, basis_range, bracket
from .scalars import ONE, Scalar

_AXES = ("x", "y", "z")

#: column permutations with signs, driving the determinant expansion
_PERMS = (
    ((0, 1, 2), 1),
    ((1, 2, 0), 1),
    ((2, 0, 1), 1),
    ((0, 2, 1), -1),
    ((2, 1, 0), -1),
    ((1, 0, 2), -1),
)


class Monomial(NamedTuple):
    """Exponents of y^l z^m e^(r x)."""

    l: HalfInt
    m: HalfInt
    r: HalfInt

    def __str__(self) -> str:
        factors = []
        if self.l:
            factors.append(f"y^{{{self.l}}}")
        if self.m:
            factors.append(f"z^{{{self.m}}}")
        if self.r:
            factors.append(f"e^{{{self.r} x}}")
        return " ".join(factors) if factors else "1"


ScaledMonomial = tuple[Scalar, Monomial]


def monomial_of(index: BasisIndex) -> Monomial:
    return Monomial(index.l, index.m, index.r)


def partial(axis: str, term: ScaledMonomial) -> Optional[ScaledMonomial]:
    """Derivative of a scaled monomial along x, y or z; None when it vanishes."""
    coeff, mono = term
    if axis == "x":
        if not mono.r:
            return None
        return coeff * mono.r.as_fraction(), mono
    if axis == "y":
        if not mono.l:
            return None
        return coeff * mono.l.as_fraction(), Monomial(mono.l - HalfInt(1), mono.m, mono.r)
    if axis == "z":
        if not mono.m:
            return None
        return coeff * mono.m.as_fraction(), Monomial(mono.l, mono.m - HalfInt(1), mono.r)
    raise ValueError(f"unknown axis {axis!r}")


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return Monomial(a.l + b.l, a.m + b.m, a.r + b.r)


class MonomialCombo:
    """Finite linear combination of monomials, zero coefficients pruned."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[Monomial, Scalar]] = ()) -> None:
        data: dict[Monomial, Scalar] = {}
        for key, coeff in terms:
            if not coeff:
                continue
            prev = data.get(key)
            total = coeff if prev is None else prev + coeff
            if total:
                data[key] = total
            elif prev is not None:
                del data[key]
        self.terms = data

    def __eq__(self, other: object) -> bool:
        if isinstance(other, MonomialCombo):
            return self.terms == other.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (k.l.twice, k.m.twice, k.r.twice))
        return " + ".join(f"({self.terms[k]})*{k}" for k in keys)

    __repr__ = __str__


def jacobian_bracket(t1: ScaledMonomial, t2: ScaledMonomial, t3: ScaledMonomial) -> MonomialCombo:
    """Jacobian of three scaled monomials, expanded permutation by permutation."""
    cols = (t1, t2, t3)
    grid = [[partial(axis, col) for col in cols] for axis in _AXES]
    out: list[tuple[Monomial, Scalar]] = []
    for perm, sign in _PERMS:
        a = grid[0][perm[0]]
        b = grid[1][perm[1]]
        c = grid[2][perm[2]]
        if a is None or b is None or c is None:
            continue
        coeff = a[0] * b[0] * c[0]
        if sign < 0:
            coeff = -coeff
        out.append((mono_mul(mono_mul(a[1], b[1]), c[1]), coeff))
    return MonomialCombo(out)


def chi(x: Element) -> MonomialCombo:
    """Index-preserving map from the lattice algebra onto monomials."""
    return MonomialCombo((monomial_of(key), coeff) for key, coeff in x.terms.items())


def chi_check(a1: BasisIndex, a2: BasisIndex, a3: BasisIndex) -> bool:
    """True iff both the bracket and the product agree through chi on this triple."""
    jac = jacobian_bracket(
        (ONE, monomial_of(a1)), (ONE, monomial_of(a2)), (ONE, monomial_of(a3))
    )
    img = chi(bracket(Element.basis(a1), Element.basis(a2), Element.basis(a3)))
    if jac != img:
        return False
    prod = mono_mul(monomial_of(a1), monomial_of(a2))
    return prod == monomial_of(a1.shift(a2))


def jacobian_agreement_scan(max_doubled_abs: int, spot_check_stride: int = 0) -> int:
    """Exhaustively compare the two determinant expansions over a window.

    Runs on doubled integer values (both dets then carry the same 1/8), with
    the cofactor and permutation formulas written out separately.  Returns
    the number of triples checked; raises AssertionError on any disagreement.
    With spot_check_stride > 0, every stride-th triple is also pushed through
    the symbolic chi_check to tie this scan to the monomial machinery.
    """
    span = np.arange(-max_doubled_abs, max_doubled_abs + 1, dtype=np.int64)
    n = span.size
    # doubled (l, m, r) for each of the n**3 basis indices
    ls = np.repeat(span, n * n)
    ms = np.tile(np.repeat(span, n), n)
    rs = np.tile(span, n * n)
    count = n ** 3
    checked = 0
    # slab over the first argument; broadcast the remaining two
    l2 = ls[:, None]
    m2 = ms[:, None]
    r2 = rs[:, None]
    l3 = ls[None, :]
    m3 = ms[None, :]
    r3 = rs[None, :]
    minor23 = l2 * m3 - l3 * m2
    for i in range(count):
        l1, m1, r1 = int(ls[i]), int(ms[i]), int(rs[i])
        cof = r1 * minor23 - r2 * (l1 * m3 - l3 * m1) + r3 * (l1 * m2 - l2 * m1)
        perm = (
            r1 * l2 * m3
            + r2 * l3 * m1
            + r3 * l1 * m2
            - r1 * l3 * m2
            - r3 * l2 * m1
            - r2 * l1 * m3
        )
        if not np.array_equal(cof, perm):
            bad = np.argwhere(cof != perm)[0]
            raise AssertionError(
                f"determinant expansions disagree at doubled indices "
                f"({l1},{m1},{r1}) x {bad}"
            )
        checked += count * count
    if spot_check_stride > 0:
        indices = list(basis_range(max_doubled_abs))
        total = len(indices) ** 3
        for flat in range(0, total, spot_check_stride):
            i1, rest = divmod(flat, len(indices) ** 2)
            i2, i3 = divmod(rest, len(indices))
            if not chi_check(indices[i1], indices[i2], indices[i3]):
                raise AssertionError(f"chi_check failed at {indices[i1]}, {indices[i2]}, {indices[i3]}")
    return checked
