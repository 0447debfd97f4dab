"""Structure theory at finite scale: center, quotient reachability, the
abelian subalgebra H, weight spaces, and the six-generator decomposition.

Reachability works in the quotient by the central line F*L[0,0;0]: a
certificate is a short list of bracket steps whose replay carries a source
coset onto a nonzero multiple of a target coset.  The constructions follow
a two-case pattern: a single bracket step works whenever the source index
and the nu-shifted target index are linearly independent; otherwise an
intermediate index is inserted.

One target is excluded for a structural reason: the bracket can never
output L[-1,-1;0], because landing there forces the three argument index
columns to sum to zero, which kills the determinant.  `reach` raises
`ReachError` for that target (see `bracket_misses_excluded_index`).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iter_product
from typing import Iterator, Optional

import numpy as np

from .core import (
    UNIT_INDEX,
    BasisIndex,
    Element,
    HalfInt,
    ad,
    bracket,
    idx,
)
from .scalars import ONE, Scalar

#: ordered minimal generator list; axis k uses generators (k, k+3)
GENERATORS: tuple[BasisIndex, ...] = (
    idx(0, 0, -1),
    idx(-1, 0, 0),
    idx(0, -1, 0),
    idx(0, 0, "1/2"),
    idx("1/2", 0, 0),
    idx(0, "1/2", 0),
)

#: the single basis coset no bracket output can touch
EXCLUDED_TARGET = idx(-1, -1, 0)


class ReachError(Exception):
    """No certificate exists (or the bounded search was exhausted)."""


class Coset(object):
    """An element of the quotient by the central line, canonically represented."""

    __slots__ = ("rep",)

    def __init__(self, x: Element) -> None:
        terms = dict(x.terms)
        terms.pop(UNIT_INDEX, None)
        rep = object.__new__(Element)
        rep.terms = terms
        self.rep = rep

    @classmethod
    def of_basis(cls, index: BasisIndex) -> Coset:
        return cls(Element.basis(index))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Coset):
            return self.rep == other.rep
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.rep)

    def is_zero(self) -> bool:
        return not self.rep

    def support_size(self) -> int:
        return len(self.rep)

    def __str__(self) -> str:
        return f"{self.rep} + C0"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# center
# ---------------------------------------------------------------------------


def central_witness(x: Element, window: int = 2) -> Optional[tuple[BasisIndex, BasisIndex]]:
    """A basis pair whose bracket with x is nonzero, or None if none exists.

    For x outside the central line one of three coordinate-reading pairs
    always works; the window argument only widens the fallback search.
    """
    candidates = [
        (idx(1, 0, 0), idx(0, 1, 0)),   # reads the r component
        (idx(0, 1, 0), idx(0, 0, 1)),   # reads the l component
        (idx(0, 0, 1), idx(1, 0, 0)),   # reads the m component
    ]
    for e1, e2 in candidates:
        if bracket(x, Element.basis(e1), Element.basis(e2)):
            return e1, e2
    span = [HalfInt.from_twice(t) for t in range(-window, window + 1)]
    for l1, m1, r1, l2, m2, r2 in iter_product(span, repeat=6):
        e1, e2 = BasisIndex(l1, m1, r1), BasisIndex(l2, m2, r2)
        if bracket(x, Element.basis(e1), Element.basis(e2)):
            return e1, e2
    return None


def is_central(x: Element, window: int = 2) -> bool:
    """True iff x lies on the central line; verified against a window of pairs."""
    in_unit_span = all(key == UNIT_INDEX for key in x.terms)
    if in_unit_span:
        return True
    return central_witness(x, window) is None


# ---------------------------------------------------------------------------
# reachability certificates
# ---------------------------------------------------------------------------


@dataclass
class ReachCertificate:
    source: BasisIndex
    target: BasisIndex
    steps: list[tuple[Element, Element]] = field(default_factory=list)
    determinants: list[Scalar] = field(default_factory=list)


def _vec(index: BasisIndex) -> tuple[int, int, int]:
    """Doubled (r, l, m) coordinates, matching the determinant's row order."""
    return (index.r.twice, index.l.twice, index.m.twice)


def _shifted_target_vec(target: BasisIndex) -> tuple[int, int, int]:
    return (target.r.twice, target.l.twice + 2, target.m.twice + 2)


def _parallel(u: tuple[int, int, int], v: tuple[int, int, int]) -> bool:
    """Linear dependence over the rationals (cross product zero)."""
    return (
        u[1] * v[2] - u[2] * v[1] == 0
        and u[2] * v[0] - u[0] * v[2] == 0
        and u[0] * v[1] - u[1] * v[0] == 0
    )


def _shells(bound: int) -> Iterator[tuple[int, int, int]]:
    """Doubled triples ordered by max-norm shell, then lexicographically."""
    for radius in range(bound + 1):
        for a in range(-radius, radius + 1):
            for s in range(-radius, radius + 1):
                for t in range(-radius, radius + 1):
                    if max(abs(a), abs(s), abs(t)) == radius:
                        yield (a, s, t)


def _one_step(source: BasisIndex, target: BasisIndex, bound: int) -> tuple[Element, Element, Scalar]:
    """Bracket pair carrying L[source]+C0 onto a nonzero multiple of L[target]+C0."""
    v1 = _vec(source)
    w = _shifted_target_vec(target)
    l1, m1, r1 = source.l.twice, source.m.twice, source.r.twice
    lt, mt, rt = target.l.twice, target.m.twice, target.r.twice
    for a, s, t in _shells(bound):
        # determinant of columns (v1, (a,s,t), w) in (r,l,m) coordinates
        det = (
            v1[0] * (s * w[2] - t * w[1])
            - v1[1] * (a * w[2] - t * w[0])
            + v1[2] * (a * w[1] - s * w[0])
        )
        if det == 0:
            continue
        second = BasisIndex(
            HalfInt.from_twice(l1 + s), HalfInt.from_twice(m1 + t), HalfInt.from_twice(r1 + a)
        )
        third = BasisIndex(
            HalfInt.from_twice(lt - 2 * l1 - s + 2),
            HalfInt.from_twice(mt - 2 * m1 - t + 2),
            HalfInt.from_twice(rt - 2 * r1 - a),
        )
        return Element.basis(second), Element.basis(third), Scalar.rational(Fraction(det, 8))
    raise ReachError(f"no step from {source} to {target} within doubled bound {bound}")


def reach(source: BasisIndex, target: BasisIndex, bound: int = 6) -> ReachCertificate:
    """Certificate carrying the source coset onto a nonzero multiple of the target.

    Single step when the source index is independent of the nu-shifted
    target; otherwise an intermediate index is inserted and two steps are
    chained.  The one basis coset outside every bracket's image is refused.
    """
    if source == UNIT_INDEX or target == UNIT_INDEX:
        raise ValueError("source and target must lie outside the central line")
    if target == EXCLUDED_TARGET:
        raise ReachError(
            "no bracket output contains L[-1,-1;0]: its nu-shift is the zero "
            "vector, so the structure determinant vanishes for every argument pair"
        )
    cert = ReachCertificate(source, target)
    if source == target:
        return cert
    v1 = _vec(source)
    w = _shifted_target_vec(target)
    if not _parallel(v1, w):
        e2, e3, det = _one_step(source, target, bound)
        cert.steps.append((e2, e3))
        cert.determinants.append(det)
        return cert
    middle = _intermediate_index(v1, w, bound)
    first = _one_step(source, middle, bound)
    second = _one_step(middle, target, bound)
    cert.steps.extend([(first[0], first[1]), (second[0], second[1])])
    cert.determinants.extend([first[2], second[2]])
    return cert


def _intermediate_index(v1: tuple[int, int, int], w: tuple[int, int, int], bound: int) -> BasisIndex:
    """Index reachable from the source in one step and able to reach the target."""
    for rt, lt, mt in _shells(bound):
        cand = BasisIndex(HalfInt.from_twice(lt), HalfInt.from_twice(mt), HalfInt.from_twice(rt))
        if cand == UNIT_INDEX:
            continue
        vc = _vec(cand)
        wc = _shifted_target_vec(cand)
        if not _parallel(v1, wc) and not _parallel(vc, w):
            return cand
    raise ReachError("no intermediate index found; widen the search bound")


def replay_certificate(cert: ReachCertificate) -> Coset:
    """Independent replay: fold the steps over the source coset."""
    current = Coset.of_basis(cert.source)
    for e2, e3 in cert.steps:
        current = Coset(bracket(current.rep, e2, e3))
    return current


def certificate_lands_on_target(cert: ReachCertificate) -> bool:
    final = replay_certificate(cert)
    if final.support_size() != 1:
        return False
    (key, coeff), = final.rep.terms.items()
    return key == cert.target and bool(coeff)


def bracket_misses_excluded_index(window: int = 2) -> bool:
    """Every basis-triple bracket over the window avoids L[-1,-1;0] (and the
    obstruction is structural: the argument columns would sum to zero)."""
    span = [HalfInt.from_twice(t) for t in range(-window, window + 1)]
    target = EXCLUDED_TARGET
    for l1, m1, r1 in iter_product(span, repeat=3):
        a1 = BasisIndex(l1, m1, r1)
        for l2, m2, r2 in iter_product(span, repeat=3):
            a2 = BasisIndex(l2, m2, r2)
            a3 = BasisIndex(
                HalfInt.from_twice(target.l.twice - a1.l.twice - a2.l.twice + 2),
                HalfInt.from_twice(target.m.twice - a1.m.twice - a2.m.twice + 2),
                HalfInt.from_twice(target.r.twice - a1.r.twice - a2.r.twice),
            )
            out = bracket(Element.basis(a1), Element.basis(a2), Element.basis(a3))
            if target in out.terms:
                return False
    return True


# ---------------------------------------------------------------------------
# support reduction
# ---------------------------------------------------------------------------


@dataclass
class ReductionStep:
    pairs: list[tuple[Element, Element]]
    result: Coset


def _coset_bracket(u: Coset, b2: BasisIndex, b3: BasisIndex) -> Coset:
    return Coset(bracket(u.rep, Element.basis(b2), Element.basis(b3)))


def reduce_support(u: Coset, bound: int = 6) -> ReductionStep:
    """Strictly shrink the support of a multi-term coset with bracket steps.

    First tries the pivot-shaped pair (L[lp,mp;rp], L[1-lp,1-mp;r0]); when
    every pivot fails (all support index vectors pairwise parallel, e.g.
    support inside the abelian subalgebra H) a translation step moves the
    support off the common line and a separating step finishes.
    """
    size = u.support_size()
    if size < 2:
        raise ValueError("reduce_support needs a coset with at least two terms")
    step = _proof_pair_step(u, bound)
    if step is not None:
        return ReductionStep([step], _coset_bracket(u, *step))
    step = _separating_step(u, bound)
    if step is not None:
        return ReductionStep([step], _coset_bracket(u, *step))
    # all support vectors pairwise parallel: translate off the line first
    translate = _translation_step(u, bound)
    if translate is None:
        raise ReachError("support reduction search exhausted; widen the bound")
    moved = _coset_bracket(u, *translate)
    second = _separating_step(moved, bound)
    if second is None:
        raise ReachError("support reduction search exhausted after translation")
    return ReductionStep([translate, second], _coset_bracket(moved, *second))


def _support_vectors(u: Coset) -> list[tuple[BasisIndex, tuple[int, int, int]]]:
    return [(key, _vec(key)) for key in u.rep.terms]


def _proof_pair_step(u: Coset, bound: int) -> Optional[tuple[BasisIndex, BasisIndex]]:
    size = u.support_size()
    keys = sorted(u.rep.terms, key=lambda k: (k.l.twice, k.m.twice, k.r.twice))
    for pivot in keys:
        others = [k for k in keys if k != pivot]
        partner_l = HalfInt.from_twice(2 - pivot.l.twice)
        partner_m = HalfInt.from_twice(2 - pivot.m.twice)
        for radius in range(1, bound + 1):
            for r0_twice in (radius, -radius):
                r0 = HalfInt.from_twice(r0_twice)
                if any((k.r + pivot.r + r0).twice == 0 for k in others):
                    continue
                b3 = BasisIndex(partner_l, partner_m, r0)
                out = _coset_bracket(u, pivot, b3)
                if out and out.support_size() < size:
                    return pivot, b3
    return None


def _separating_step(u: Coset, bound: int) -> Optional[tuple[BasisIndex, BasisIndex]]:
    """Pair (L[a_i], L[b3]) killing term i while keeping a non-parallel term j."""
    size = u.support_size()
    vectors = _support_vectors(u)
    for key_i, vec_i in vectors:
        for rt, lt, mt in _shells(bound):
            b3 = BasisIndex(HalfInt.from_twice(lt), HalfInt.from_twice(mt), HalfInt.from_twice(rt))
            out = _coset_bracket(u, key_i, b3)
            if out and out.support_size() < size:
                return key_i, b3
    return None


def _translation_step(u: Coset, bound: int) -> Optional[tuple[BasisIndex, BasisIndex]]:
    """Pair keeping every term alive while moving the support off its line."""
    size = u.support_size()
    for r2, l2, m2 in _shells(min(bound, 2)):
        b2 = BasisIndex(HalfInt.from_twice(l2), HalfInt.from_twice(m2), HalfInt.from_twice(r2))
        for r3, l3, m3 in _shells(bound):
            b3 = BasisIndex(HalfInt.from_twice(l3), HalfInt.from_twice(m3), HalfInt.from_twice(r3))
            out = _coset_bracket(u, b2, b3)
            if out.support_size() != size:
                continue
            vecs = [v for _, v in _support_vectors(out)]
            if any(not _parallel(vecs[0], v) for v in vecs[1:]):
                return b2, b3
    return None


# ---------------------------------------------------------------------------
# the abelian subalgebra H and weight spaces
# ---------------------------------------------------------------------------


def in_H(x: Element) -> bool:
    """True iff every supported index has equal first and second components."""
    return all(key.l == key.m for key in x.terms)


def _det3(r1, r2, r3, l1, l2, l3, m1, m2, m3):
    """Structure determinant, broadcastable over array arguments."""
    return r1 * (l2 * m3 - l3 * m2) - r2 * (l1 * m3 - l3 * m1) + r3 * (l1 * m2 - l2 * m1)


@dataclass
class HClosureReport:
    window: int
    products_checked: int
    triples_checked: int
    witnesses: dict
    passed: bool

    def to_dict(self) -> dict:
        return {
            "window": self.window,
            "products_checked": self.products_checked,
            "triples_checked": self.triples_checked,
            "non_membership_witnesses": len(self.witnesses),
            "passed": self.passed,
        }


def h_closure_checks(window: int, spot_checks: int = 200) -> HClosureReport:
    """Window verification that H is a subalgebra with vanishing triple bracket,
    plus membership biconditionals with explicit witnesses off H."""
    span = list(range(-window * 2, window * 2 + 1))
    h_indices = [idx(HalfInt.from_twice(i), HalfInt.from_twice(i), HalfInt.from_twice(t))
                 for i in span for t in span]
    passed = True

    products = 0
    for a in h_indices:
        for b in h_indices:
            out = Element.basis(a) * Element.basis(b)
            products += 1
            if not in_H(out):
                passed = False

    # vanishing of [H, H, H]: vectorized structure determinant over all triples
    iv = np.array([a.l.twice for a in h_indices], dtype=np.int64)
    tv = np.array([a.r.twice for a in h_indices], dtype=np.int64)
    n = len(h_indices)
    triples = 0
    for k in range(n):
        det = _det3(
            int(tv[k]), tv[:, None], tv[None, :],
            int(iv[k]), iv[:, None], iv[None, :],
            int(iv[k]), iv[:, None], iv[None, :],
        )
        if np.any(det != 0):
            passed = False
        triples += n * n
    # tie the vectorized scan to the symbolic bracket on a deterministic sample
    stride = max(1, (n ** 3) // max(spot_checks, 1))
    for flat in range(0, n ** 3, stride):
        k1, rest = divmod(flat, n * n)
        k2, k3 = divmod(rest, n)
        out = bracket(
            Element.basis(h_indices[k1]), Element.basis(h_indices[k2]), Element.basis(h_indices[k3])
        )
        if not out.is_zero():
            passed = False

    # membership biconditionals: every non-H vector in the window gets witnesses
    witnesses: dict = {}
    lattice = [HalfInt.from_twice(t) for t in span]
    probe = (idx(0, 0, 1), idx(1, 1, 0))
    for l in lattice:
        for m in lattice:
            if l == m:
                continue
            for r in lattice:
                x = idx(l, m, r)
                br = bracket(Element.basis(x), Element.basis(probe[0]), Element.basis(probe[1]))
                prod = Element.basis(x) * Element.basis(idx(1, 1, 0))
                if br.is_zero() or in_H(br) or in_H(prod):
                    passed = False
                else:
                    witnesses[str(x)] = {
                        "bracket_pair": [str(probe[0]), str(probe[1])],
                        "bracket_lands_on": str(br),
                        "product_with": str(idx(1, 1, 0)),
                    }
    return HClosureReport(window, products, triples, witnesses, passed)


def weight_of(t: HalfInt, i: HalfInt, index: BasisIndex) -> Scalar:
    """Eigenvalue t*(m - l) of the diagonal left multiplication on L[l,m;r]."""
    return Scalar.rational(
        t.as_fraction() * (index.m.as_fraction() - index.l.as_fraction())
    )


def weight_check(t: HalfInt, i: HalfInt, index: BasisIndex) -> bool:
    """The direct bracket computation agrees with the closed-form eigenvalue."""
    left = Element.basis(idx(i, i, t))
    right = Element.basis(idx(HalfInt(1) - i, HalfInt(1) - i, -t))
    got = ad(left, right)(Element.basis(index))
    expected = Element.basis(index, weight_of(t, i, index))
    return got == expected


# ---------------------------------------------------------------------------
# generator decomposition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GeneratorWord:
    """Multiplicities over the six-generator list; evaluates to one basis vector."""

    exponents: tuple[int, int, int, int, int, int]

    def evaluate(self) -> Element:
        lt = mt = rt = 0
        for power, gen in zip(self.exponents, GENERATORS):
            lt += power * gen.l.twice
            mt += power * gen.m.twice
            rt += power * gen.r.twice
        return Element.basis(
            BasisIndex(HalfInt.from_twice(lt), HalfInt.from_twice(mt), HalfInt.from_twice(rt))
        )

    def evaluate_by_products(self) -> Element:
        """Slow evaluation by actual repeated multiplication."""
        out = Element.basis(UNIT_INDEX)
        for power, gen in zip(self.exponents, GENERATORS):
            for _ in range(power):
                out = out * Element.basis(gen)
        return out

    def to_dict(self) -> dict:
        return {
            str(gen): power for gen, power in zip(GENERATORS, self.exponents) if power
        }


def _axis_exponents(v: HalfInt) -> tuple[int, int]:
    """(negative-generator power, half-generator power) for one axis value."""
    if v.twice == 0:
        return 0, 0
    if v.twice > 0:
        return 0, v.twice
    if v.twice % 2 == 0:
        return -v.twice // 2, 0
    return -v.twice, -v.twice


def decompose(index: BasisIndex) -> GeneratorWord:
    """Write L[l,m;r] as a product of non-negative generator powers."""
    neg_r, half_r = _axis_exponents(index.r)
    neg_l, half_l = _axis_exponents(index.l)
    neg_m, half_m = _axis_exponents(index.m)
    return GeneratorWord((neg_r, neg_l, neg_m, half_r, half_l, half_m))
