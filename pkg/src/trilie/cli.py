"""Command line front end.

Exit codes: 0 when every check passes, 1 when a mathematical violation was
found (a witness is always included in the report), 2 on usage or parse
errors.  All reports are JSON on stdout; the TRILIE_SEED environment
variable overrides --seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import jsonio
from .core import Element, HalfInt, idx
from .derivations import bracket_derivation_residual, gd_check
from .embeddings import EmbeddingSpec, default_spec, hom_check, resolve_conventions
from .expr import EvalError, ParseError, evaluate_text, parse, print_expr
from .models import w3_fi_scan
from .sampling import rng_for, sample_element
from .scalars import Scalar
from .structure import (
    Coset,
    ReachError,
    certificate_lands_on_target,
    decompose,
    h_closure_checks,
    reach,
    reduce_support,
    replay_certificate,
    weight_check,
    weight_of,
)
from .verify import run_campaign

PASS, VIOLATION, USAGE = 0, 1, 2


def _emit(payload: dict) -> None:
    print(jsonio.dumps(payload))


def _seed(args: argparse.Namespace) -> int:
    env = os.environ.get("TRILIE_SEED")
    return int(env) if env else args.seed


def _parse_scalar(text: str) -> Scalar:
    value = evaluate_text(text)
    if not isinstance(value, Scalar):
        raise EvalError(f"{text!r} is not a scalar expression")
    return value


def cmd_eval(args: argparse.Namespace) -> int:
    tree = parse(args.expression)
    value = evaluate_text(args.expression)
    payload: dict = {"input": print_expr(tree), "text": str(value)}
    if isinstance(value, Element):
        payload["kind"] = "element"
        payload["value"] = jsonio.element_to_json(value)
    else:
        payload["kind"] = "scalar"
        payload["value"] = jsonio.scalar_to_json(value)
    _emit(payload)
    return PASS


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_campaign(args.campaign, _seed(args), args.samples, args.window, args.workers)
    _emit(report)
    return PASS if report["passed"] else VIOLATION


def cmd_model_scan(args: argparse.Namespace) -> int:
    z = _parse_scalar(args.z)
    witness = w3_fi_scan(z, args.window)
    payload = {
        "check": "model-scan",
        "model": args.model,
        "z": str(z),
        "window": args.window,
        "violation": [str(k) for k in witness] if witness else None,
        "passed": witness is None,
    }
    _emit(payload)
    return PASS if witness is None else VIOLATION


_EMBED_NAMES = {"w3": "W3", "awd": "AWD", "aw": "AW", "winf": "WINF"}


def cmd_embed(args: argparse.Namespace) -> int:
    name = _EMBED_NAMES[args.model]
    if args.action == "resolve":
        report = resolve_conventions(name, args.window)
        _emit(report.to_dict())
        return PASS if report.certified else VIOLATION
    if name == "WINF" and args.offset is not None:
        spec = EmbeddingSpec("WINF", offset=HalfInt(args.offset))
    elif name == "W3" and args.z is not None:
        spec = default_spec("W3", _parse_scalar(args.z))
    else:
        spec = default_spec(name)
    report = hom_check(spec, args.window)
    _emit(report.to_dict())
    return PASS if report.passed else VIOLATION


def cmd_structure(args: argparse.Namespace) -> int:
    if args.tool == "reach":
        source = idx(args.args[0], args.args[1], args.args[2])
        target = idx(args.args[3], args.args[4], args.args[5])
        cert = reach(source, target)
        landed = certificate_lands_on_target(cert)
        payload = {
            "tool": "reach",
            "certificate": jsonio.certificate_to_json(cert),
            "replay": str(replay_certificate(cert)),
            "landed": landed,
        }
        _emit(payload)
        return PASS if landed else VIOLATION
    if args.tool == "reduce":
        with open(args.input, encoding="utf-8") as fh:
            u = Coset(jsonio.element_from_json(json.load(fh)))
        before = u.support_size()
        step = reduce_support(u)
        payload = {
            "tool": "reduce",
            "support_before": before,
            "support_after": step.result.support_size(),
            "pairs": [
                {"a": jsonio.element_to_json(a), "b": jsonio.element_to_json(b)}
                for a, b in step.pairs
            ],
            "result": jsonio.element_to_json(step.result.rep),
        }
        _emit(payload)
        return PASS if step.result.support_size() < before else VIOLATION
    if args.tool == "decompose":
        index = idx(args.args[0], args.args[1], args.args[2])
        word = decompose(index)
        payload = {
            "tool": "decompose",
            "index": str(index),
            "word": word.to_dict(),
            "roundtrip": word.evaluate() == Element.basis(index),
        }
        _emit(payload)
        return PASS if payload["roundtrip"] else VIOLATION
    if args.tool == "weights":
        t, i = HalfInt(args.args[0]), HalfInt(args.args[1])
        index = idx(args.args[2], args.args[3], args.args[4])
        payload = {
            "tool": "weights",
            "t": str(t),
            "i": str(i),
            "index": str(index),
            "weight": str(weight_of(t, i, index)),
            "matches_bracket": weight_check(t, i, index),
        }
        _emit(payload)
        return PASS if payload["matches_bracket"] else VIOLATION
    if args.tool == "h-check":
        report = h_closure_checks(args.window)
        _emit(report.to_dict())
        return PASS if report.passed else VIOLATION
    raise ValueError(f"unknown structure tool {args.tool!r}")


def cmd_derivation(args: argparse.Namespace) -> int:
    with open(args.input, encoding="utf-8") as fh:
        d = jsonio.derivation_from_json(json.load(fh))
    if args.action == "check-gd":
        report = gd_check(d)
        _emit(report.to_dict())
        return PASS if report.satisfied else VIOLATION
    # residual campaign over seeded random triples
    seed = _seed(args)
    violations = []
    for k in range(args.samples):
        rng = rng_for(seed, "derivation-residual", k)
        x = sample_element(rng, args.window, max_terms=2)
        y = sample_element(rng, args.window, max_terms=2)
        z = sample_element(rng, args.window, max_terms=2)
        residual = bracket_derivation_residual(d, x, y, z)
        if not residual.is_zero():
            violations.append(
                {"sample": k, "args": [str(x), str(y), str(z)], "residual": str(residual)}
            )
    payload = {
        "check": "derivation-residual",
        "seed": seed,
        "samples": args.samples,
        "window": args.window,
        "violations": violations,
        "passed": not violations,
    }
    _emit(payload)
    return PASS if not violations else VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trilie",
        description="Exact checks for the half-integer lattice 3-Lie Poisson algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="parse and evaluate an expression")
    p_eval.add_argument("expression")
    p_eval.set_defaults(fn=cmd_eval)

    p_verify = sub.add_parser("verify", help="run a seeded identity campaign")
    p_verify.add_argument(
        "campaign", choices=["fi", "leibniz", "skew", "nambu", "product", "poisson-all"]
    )
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--samples", type=int, default=500)
    p_verify.add_argument("--window", type=int, default=8, help="doubled index bound")
    p_verify.add_argument("--workers", type=int, default=1)
    p_verify.set_defaults(fn=cmd_verify)

    p_scan = sub.add_parser("model-scan", help="exhaustive identity scan of a model algebra")
    p_scan.add_argument("model", choices=["w3"])
    p_scan.add_argument("--z", required=True, help="scalar expression, e.g. '2*i'")
    p_scan.add_argument("--window", type=int, default=2)
    p_scan.set_defaults(fn=cmd_model_scan)

    p_embed = sub.add_parser("embed", help="check or resolve an embedding")
    p_embed.add_argument("model", choices=["w3", "awd", "aw", "winf"])
    p_embed.add_argument("action", choices=["check", "resolve"])
    p_embed.add_argument("--window", type=int, default=2)
    p_embed.add_argument("--offset", help="lower-index offset for the winf map, e.g. '1/2'")
    p_embed.add_argument("--z", help="model parameter for the w3 map")
    p_embed.set_defaults(fn=cmd_embed)

    p_struct = sub.add_parser("structure", help="structure-theory tools")
    p_struct.add_argument(
        "tool", choices=["reach", "reduce", "decompose", "weights", "h-check"]
    )
    p_struct.add_argument("args", nargs="*", help="half-integer arguments")
    p_struct.add_argument("--input", help="element JSON file (reduce)")
    p_struct.add_argument("--window", type=int, default=2)
    p_struct.set_defaults(fn=cmd_structure)

    p_deriv = sub.add_parser("derivation", help="derivation condition checks")
    p_deriv.add_argument("action", choices=["check-gd", "residual"])
    p_deriv.add_argument("--input", required=True, help="derivation JSON file")
    p_deriv.add_argument("--seed", type=int, default=0)
    p_deriv.add_argument("--samples", type=int, default=200)
    p_deriv.add_argument("--window", type=int, default=6)
    p_deriv.set_defaults(fn=cmd_derivation)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else PASS
    try:
        return args.fn(args)
    except (ParseError, EvalError) as exc:
        _emit({"error": str(exc)})
        return USAGE
    except ReachError as exc:
        _emit({"error": str(exc), "kind": "no-certificate"})
        return VIOLATION
    except (ValueError, OSError, KeyError, IndexError) as exc:
        _emit({"error": str(exc)})
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
