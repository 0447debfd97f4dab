"""Seeded verification campaigns behind the `verify` command.

Each sample is generated from (seed, campaign label, sample index), and
results are merged in index order, so a campaign's report is identical no
matter how many workers split the index range.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import permutations
from typing import Callable

from .core import Element, bracket, fi_residual, leibniz_residual, UNIT
from .nambu import chi, jacobian_bracket, monomial_of
from .sampling import rng_for, sample_element, sample_index
from .scalars import ONE

_PERM_SIGNS = [
    (perm, (-1) ** sum(1 for i in range(3) for j in range(i + 1, 3) if perm[i] > perm[j]))
    for perm in permutations(range(3))
]


def _run_samples(
    check_one: Callable[[int], list[dict]], samples: int, workers: int
) -> list[dict]:
    """Run per-sample checks over an index range, merging in index order."""
    if workers <= 1:
        violations: list[dict] = []
        for k in range(samples):
            violations.extend(check_one(k))
        return violations
    chunk = max(1, samples // (workers * 4))
    ranges = [range(start, min(start + chunk, samples)) for start in range(0, samples, chunk)]

    def run_chunk(rng: range) -> list[dict]:
        out: list[dict] = []
        for k in rng:
            out.extend(check_one(k))
        return out

    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(run_chunk, ranges))
    merged: list[dict] = []
    for part in results:
        merged.extend(part)
    return merged


def _report(check: str, seed: int, samples: int, window: int, violations: list[dict]) -> dict:
    return {
        "check": check,
        "seed": seed,
        "samples": samples,
        "window": window,
        "violations": violations,
        "passed": not violations,
    }


def verify_fi(seed: int, samples: int, window: int, workers: int = 1) -> dict:
    def check_one(k: int) -> list[dict]:
        rng = rng_for(seed, "fi", k)
        args = [Element.basis(sample_index(rng, window)) for _ in range(5)]
        residual = fi_residual(*args)
        if residual.is_zero():
            return []
        return [{"sample": k, "args": [str(a) for a in args], "residual": str(residual)}]

    return _report("fi", seed, samples, window, _run_samples(check_one, samples, workers))


def verify_leibniz(seed: int, samples: int, window: int, workers: int = 1) -> dict:
    def check_one(k: int) -> list[dict]:
        rng = rng_for(seed, "leibniz", k)
        args = [Element.basis(sample_index(rng, window)) for _ in range(4)]
        residual = leibniz_residual(*args)
        if residual.is_zero():
            return []
        return [{"sample": k, "args": [str(a) for a in args], "residual": str(residual)}]

    return _report("leibniz", seed, samples, window, _run_samples(check_one, samples, workers))


def verify_skew(seed: int, samples: int, window: int, workers: int = 1) -> dict:
    def check_one(k: int) -> list[dict]:
        rng = rng_for(seed, "skew", k)
        args = [Element.basis(sample_index(rng, window)) for _ in range(3)]
        base = bracket(*args)
        for perm, sign in _PERM_SIGNS:
            got = bracket(args[perm[0]], args[perm[1]], args[perm[2]])
            expected = base if sign == 1 else -base
            if got != expected:
                return [
                    {
                        "sample": k,
                        "args": [str(a) for a in args],
                        "permutation": list(perm),
                        "got": str(got),
                        "expected": str(expected),
                    }
                ]
        return []

    return _report("skew", seed, samples, window, _run_samples(check_one, samples, workers))


def verify_nambu(seed: int, samples: int, window: int, workers: int = 1) -> dict:
    def check_one(k: int) -> list[dict]:
        rng = rng_for(seed, "nambu", k)
        triple = [sample_index(rng, window) for _ in range(3)]
        jac = jacobian_bracket(*((ONE, monomial_of(a)) for a in triple))
        img = chi(bracket(*(Element.basis(a) for a in triple)))
        if jac == img:
            return []
        return [
            {
                "sample": k,
                "args": [str(a) for a in triple],
                "jacobian": str(jac),
                "bracket_image": str(img),
            }
        ]

    return _report("nambu", seed, samples, window, _run_samples(check_one, samples, workers))


def verify_product(seed: int, samples: int, window: int, workers: int = 1) -> dict:
    def check_one(k: int) -> list[dict]:
        rng = rng_for(seed, "product", k)
        x = sample_element(rng, window, max_terms=2, full_field=True)
        y = sample_element(rng, window, max_terms=2, full_field=True)
        z = sample_element(rng, window, max_terms=2, full_field=True)
        bad = []
        if x * y != y * x:
            bad.append("commutativity")
        if (x * y) * z != x * (y * z):
            bad.append("associativity")
        if UNIT * x != x:
            bad.append("unit")
        if not bad:
            return []
        return [{"sample": k, "failed": bad, "args": [str(x), str(y), str(z)]}]

    return _report("product", seed, samples, window, _run_samples(check_one, samples, workers))


_CAMPAIGNS = {
    "fi": verify_fi,
    "leibniz": verify_leibniz,
    "skew": verify_skew,
    "nambu": verify_nambu,
    "product": verify_product,
}


def verify_poisson_all(seed: int, samples: int, window: int, workers: int = 1) -> dict:
    reports = {
        name: fn(seed, samples, window, workers) for name, fn in sorted(_CAMPAIGNS.items())
    }
    return {
        "check": "poisson-all",
        "seed": seed,
        "samples": samples,
        "window": window,
        "reports": reports,
        "passed": all(rep["passed"] for rep in reports.values()),
    }


def run_campaign(name: str, seed: int, samples: int, window: int, workers: int = 1) -> dict:
    if name == "poisson-all":
        return verify_poisson_all(seed, samples, window, workers)
    if name not in _CAMPAIGNS:
        raise ValueError(f"unknown campaign {name!r}")
    return _CAMPAIGNS[name](seed, samples, window, workers)
