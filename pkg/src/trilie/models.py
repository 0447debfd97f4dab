"""Standalone realizations of four classical ternary Lie algebras.

Each model lives on a free module over its own tagged integer basis:

  * QR model ("W3"): basis Q_n, R_n with a scalar parameter z; a ternary
    Lie algebra exactly at z = 2i and z = -2i.
  * ST model ("AWD"): basis S_r, T_r.
  * U model ("AW"): basis U_n with parity-signed determinant constants.
  * W model ("WINF"): doubly indexed basis W_m^r.

The defining relations fix one representative argument order per family;
all other orders are obtained by sign extension, so every bracket here is
fully skew-symmetric by construction.
"""

from __future__ import annotations

from typing import Callable, Iterable, Iterator, Optional

from .scalars import ONE, Scalar

Key = tuple
BasisBracket = Callable[[Key, Key, Key], list[tuple[Key, Scalar]]]


class ModelElement:
    """Linear combination over a tagged basis; zero coefficients pruned."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple[Key, Scalar]] | dict[Key, Scalar] = ()) -> None:
        data: dict[Key, Scalar] = {}
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
    def basis(cls, key: Key, coeff: Scalar = ONE) -> ModelElement:
        return cls([(key, coeff)])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ModelElement):
            return self.terms == other.terms
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: ModelElement) -> ModelElement:
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            prev = out.get(key)
            total = coeff if prev is None else prev + coeff
            if total:
                out[key] = total
            elif prev is not None:
                del out[key]
        fresh = object.__new__(type(self))
        fresh.terms = out
        return fresh

    def __neg__(self) -> ModelElement:
        fresh = object.__new__(type(self))
        fresh.terms = {k: -c for k, c in self.terms.items()}
        return fresh

    def __sub__(self, other: ModelElement) -> ModelElement:
        return self + (-other)

    def scale(self, factor: Scalar) -> ModelElement:
        if not factor:
            fresh = object.__new__(type(self))
            fresh.terms = {}
            return fresh
        fresh = object.__new__(type(self))
        fresh.terms = {k: c * factor for k, c in self.terms.items()}
        return fresh

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*{k}" for k, c in sorted(self.terms.items()))

    __repr__ = __str__


def _sort_by_tag(args: tuple[Key, Key, Key], order: dict[str, int]) -> tuple[list[Key], int]:
    """Stable tag sort of three keys; returns (sorted keys, permutation sign)."""
    keys = list(args)
    sign = 1
    for i in range(2):
        for j in range(2 - i):
            if order[keys[j][0]] > order[keys[j + 1][0]]:
                keys[j], keys[j + 1] = keys[j + 1], keys[j]
                sign = -sign
    return keys, sign


# ---------------------------------------------------------------------------
# QR model (parameterized by z)
# ---------------------------------------------------------------------------

_QR_ORDER = {"Q": 0, "R": 1}


def qr_basis_bracket(a: Key, b: Key, c: Key, z: Scalar) -> list[tuple[Key, Scalar]]:
    keys, sign = _sort_by_tag((a, b, c), _QR_ORDER)
    tags = "".join(k[0] for k in keys)
    n1, n2, n3 = keys[0][1], keys[1][1], keys[2][1]
    total = n1 + n2 + n3
    if tags == "QQQ":
        coeff = (n1 - n2) * (n2 - n3) * (n1 - n3)
        return [(("R", total), Scalar(sign * coeff))] if coeff else []
    if tags == "QQR":
        diff = n1 - n2
        if diff == 0:
            return []
        out = [(("Q", total), Scalar(sign * diff))]
        zk = z * (sign * diff * n3)
        if zk:
            out.append((("R", total), zk))
        return out
    if tags == "QRR":
        coeff = n3 - n2
        return [(("R", total), Scalar(sign * coeff))] if coeff else []
    return []


class W3Element(ModelElement):
    """QR-model element together with its structure parameter z."""

    __slots__ = ("z",)

    def __init__(self, terms=(), z: Scalar = Scalar(0)) -> None:
        super().__init__(terms)
        self.z = z

    @classmethod
    def basis_z(cls, key: Key, z: Scalar, coeff: Scalar = ONE) -> W3Element:
        out = cls([(key, coeff)], z=z)
        return out


def w3_bracket(x: W3Element, y: W3Element, w: W3Element) -> W3Element:
    """Trilinear QR bracket; all three arguments must carry the same z."""
    if x.z != y.z or y.z != w.z:
        raise ValueError("mismatched z parameters")
    out: dict[Key, Scalar] = {}
    for ka, ca in x.terms.items():
        for kb, cb in y.terms.items():
            cab = ca * cb
            for kc, cc in w.terms.items():
                factor = cab * cc
                for key, coeff in qr_basis_bracket(ka, kb, kc, x.z):
                    value = coeff * factor
                    prev = out.get(key)
                    total = value if prev is None else prev + value
                    if total:
                        out[key] = total
                    elif prev is not None:
                        del out[key]
    result = W3Element((), z=x.z)
    result.terms = out
    return result


# ---------------------------------------------------------------------------
# ST model
# ---------------------------------------------------------------------------

_ST_ORDER = {"S": 0, "T": 1}


def st_basis_bracket(a: Key, b: Key, c: Key) -> list[tuple[Key, Scalar]]:
    keys, sign = _sort_by_tag((a, b, c), _ST_ORDER)
    tags = "".join(k[0] for k in keys)
    n1, n2, n3 = keys[0][1], keys[1][1], keys[2][1]
    if tags == "SST":
        coeff = n2 - n1
        return [(("S", n1 + n2 - n3), Scalar(sign * coeff))] if coeff else []
    if tags == "STT":
        coeff = n3 - n2
        return [(("T", n2 + n3 - n1), Scalar(sign * coeff))] if coeff else []
    return []


# ---------------------------------------------------------------------------
# U model
# ---------------------------------------------------------------------------


def _parity(n: int) -> int:
    return 1 if n % 2 == 0 else -1


def u_basis_bracket(a: Key, b: Key, c: Key) -> list[tuple[Key, Scalar]]:
    l, m, n = a[1], b[1], c[1]
    pl, pm, pn = _parity(l), _parity(m), _parity(n)
    det = pl * (n - m) - pm * (n - l) + pn * (m - l)
    if det == 0:
        return []
    return [(("U", l + m + n - 1), Scalar(det))]


# ---------------------------------------------------------------------------
# W model
# ---------------------------------------------------------------------------


def w_basis_bracket(a: Key, b: Key, c: Key) -> list[tuple[Key, Scalar]]:
    m1, r1 = a[1], a[2]
    m2, r2 = b[1], b[2]
    m3, r3 = c[1], c[2]
    det = (m2 * r3 - m3 * r2) - (m1 * r3 - m3 * r1) + (m1 * r2 - m2 * r1)
    if det == 0:
        return []
    return [(("W", m1 + m2 + m3 + 1, r1 + r2 + r3), Scalar(det))]


def awd_bracket(x: ModelElement, y: ModelElement, z: ModelElement) -> ModelElement:
    return _trilinear(st_basis_bracket, x, y, z)


def aw_bracket(x: ModelElement, y: ModelElement, z: ModelElement) -> ModelElement:
    return _trilinear(u_basis_bracket, x, y, z)


def winf_bracket(x: ModelElement, y: ModelElement, z: ModelElement) -> ModelElement:
    return _trilinear(w_basis_bracket, x, y, z)


def _trilinear(basis_bracket: BasisBracket, x: ModelElement, y: ModelElement, z: ModelElement) -> ModelElement:
    out: dict[Key, Scalar] = {}
    for ka, ca in x.terms.items():
        for kb, cb in y.terms.items():
            cab = ca * cb
            for kc, cc in z.terms.items():
                factor = cab * cc
                for key, coeff in basis_bracket(ka, kb, kc):
                    value = coeff * factor
                    prev = out.get(key)
                    total = value if prev is None else prev + value
                    if total:
                        out[key] = total
                    elif prev is not None:
                        del out[key]
    return ModelElement(out)


# ---------------------------------------------------------------------------
# fundamental-identity scans
# ---------------------------------------------------------------------------


def basis_keys(name: str, window: int) -> list[Key]:
    span = range(-window, window + 1)
    if name == "W3":
        return [("Q", n) for n in span] + [("R", n) for n in span]
    if name == "AWD":
        return [("S", n) for n in span] + [("T", n) for n in span]
    if name == "AW":
        return [("U", n) for n in span]
    if name == "WINF":
        return [("W", m, r) for m in span for r in span]
    raise ValueError(f"unknown model {name!r}")


def model_basis_bracket(name: str, z: Optional[Scalar] = None) -> BasisBracket:
    if name == "W3":
        if z is None:
            raise ValueError("the QR model needs a z parameter")
        return lambda a, b, c: qr_basis_bracket(a, b, c, z)
    if name == "AWD":
        return st_basis_bracket
    if name == "AW":
        return u_basis_bracket
    if name == "WINF":
        return w_basis_bracket
    raise ValueError(f"unknown model {name!r}")


def _accumulate(target: dict[Key, Scalar], items: Iterable[tuple[Key, Scalar]], factor: Scalar) -> None:
    for key, coeff in items:
        value = coeff * factor
        prev = target.get(key)
        total = value if prev is None else prev + value
        if total:
            target[key] = total
        elif prev is not None:
            del target[key]


def fi_residual_keys(
    brk: BasisBracket, a1: Key, a2: Key, a3: Key, b1: Key, b2: Key
) -> dict[Key, Scalar]:
    """Fundamental-identity defect on a basis quintuple, as a coefficient dict."""
    residual: dict[Key, Scalar] = {}
    for key, coeff in brk(a1, a2, a3):
        _accumulate(residual, brk(key, b1, b2), coeff)
    neg = Scalar(-1)
    for key, coeff in brk(a1, b1, b2):
        _accumulate(residual, brk(key, a2, a3), coeff * neg)
    for key, coeff in brk(a2, b1, b2):
        _accumulate(residual, brk(a1, key, a3), coeff * neg)
    for key, coeff in brk(a3, b1, b2):
        _accumulate(residual, brk(a1, a2, key), coeff * neg)
    return residual


def fi_scan(brk: BasisBracket, keys: list[Key]) -> Optional[tuple[Key, Key, Key, Key, Key]]:
    """First basis quintuple violating the fundamental identity, if any.

    The basis bracket is pure, so results are memoized across the scan.
    """
    cache: dict[tuple[Key, Key, Key], list[tuple[Key, Scalar]]] = {}

    def cached(a: Key, b: Key, c: Key) -> list[tuple[Key, Scalar]]:
        key = (a, b, c)
        hit = cache.get(key)
        if hit is None:
            hit = cache[key] = brk(a, b, c)
        return hit

    for quintuple in _quintuples(keys):
        if fi_residual_keys(cached, *quintuple):
            return quintuple
    return None


def _quintuples(keys: list[Key]) -> Iterator[tuple[Key, Key, Key, Key, Key]]:
    for a1 in keys:
        for a2 in keys:
            for a3 in keys:
                for b1 in keys:
                    for b2 in keys:
                        yield (a1, a2, a3, b1, b2)


def w3_fi_scan(z: Scalar, window: int) -> Optional[tuple[Key, Key, Key, Key, Key]]:
    """Exhaustive QR-model identity scan; None means no violation in the window."""
    return fi_scan(model_basis_bracket("W3", z), basis_keys("W3", window))
