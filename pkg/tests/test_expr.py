"""Parsing, printing and evaluating algebra expressions."""

from fractions import Fraction

import pytest

from trilie.core import Element, idx
from trilie.expr import (
    AdApply,
    Add,
    Basis,
    Bracket,
    EvalError,
    Mul,
    Neg,
    ParseError,
    ScalarLit,
    Sub,
    evaluate,
    evaluate_text,
    parse,
    print_expr,
)
from trilie.scalars import I, Scalar


def test_parse_basis_literal():
    assert parse("L[0,1;1]") == Basis(idx(0, 1, 1))


def test_parse_halves():
    assert parse("L[1/2,-3/2;-2]") == Basis(idx("1/2", "-3/2", -2))


def test_parse_bracket_node():
    node = parse("[L[0,1;1], L[0,1;3], L[1,0;-2]]")
    assert isinstance(node, Bracket)
    assert evaluate(node) == Element.basis(idx(0, 1, 2), Scalar(2))


def test_parse_ad_node():
    node = parse("ad(L[1,1;2], L[0,0;-2])(L[1/2,5/2;3])")
    assert isinstance(node, AdApply)
    assert evaluate(node) == Element.basis(idx("1/2", "5/2", 3), Scalar(4))


def test_scalar_times_basis_product():
    out = evaluate_text("(1/2 + i)*L[1/2,0;0] * L[0,1/2;0]")
    assert out == Element.basis(idx("1/2", "1/2", 0), Scalar(Fraction(1, 2), 1))


def test_precedence_and_unary_minus():
    assert parse("-2*L[0,0;1]") == Mul(Neg(ScalarLit(Scalar(2))), Basis(idx(0, 0, 1)))
    assert evaluate_text("-2*L[0,0;1]") == Element.basis(idx(0, 0, 1), Scalar(-2))


def test_sum_left_associative():
    node = parse("1 + 2 - 3")
    assert node == Sub(Add(ScalarLit(Scalar(1)), ScalarLit(Scalar(2))), ScalarLit(Scalar(3)))
    assert evaluate(node) == Scalar(0)


def test_scalar_symbols():
    assert evaluate_text("i*i") == Scalar(-1)
    assert evaluate_text("s2*s2") == Scalar(2)
    assert evaluate_text("2*i*s2") == Scalar(0, 0, 0, 2)


def test_parse_error_position_and_expected():
    with pytest.raises(ParseError) as err:
        parse("L[0,1;1] +")
    assert err.value.line == 1
    assert err.value.col == 11

    with pytest.raises(ParseError) as err:
        parse("L[1/3,0;0]")
    assert err.value.expected == ("2",)


def test_trailing_input_rejected():
    with pytest.raises(ParseError):
        parse("L[0,0;0] L[0,0;0]")


def test_eval_type_errors():
    with pytest.raises(EvalError):
        evaluate_text("[1, L[0,0;1], L[0,1;0]]")
    with pytest.raises(EvalError):
        evaluate_text("1 + L[0,0;1]")


def test_print_parse_roundtrip_corpus():
    corpus = [
        "L[0,1;1]",
        "L[1/2,-3/2;-2]",
        "1/2",
        "i",
        "s2",
        "-i",
        "2*i*s2",
        "1 + 2*i",
        "[L[0,1;1], L[0,1;3], L[1,0;-2]]",
        "ad(L[1,1;2], L[0,0;-2])(L[1/2,5/2;3])",
        "(1/2 + i)*L[1/2,0;0]",
        "L[1,0;0] + L[0,1;0]",
        "L[1,0;0] - L[0,1;0]",
        "-L[1,0;0]",
        "(L[1,0;0] + L[0,1;0])*(L[1,0;0] + L[0,1;0])",
        "[L[1,0;0]*L[0,1;0], L[0,0;1], L[1,1;1]]",
        "ad(L[0,1;0], L[1,0;0])(L[2,3;1/2])",
        "3/4*L[0,0;-1]",
        "[L[1,0;1/2], L[0,1/2;0], L[1,1;1]]",
        "1 - s2",
    ]
    for src in corpus:
        tree = parse(src)
        printed = print_expr(tree)
        assert parse(printed) == tree, (src, printed)


def test_element_text_reparses_to_same_value():
    x = evaluate_text("(1/2 + i)*L[1/2,0;0] + L[0,1;1] - 2*L[0,0;0]")
    assert evaluate_text(str(x)) == x


def test_zero_element_prints_as_zero():
    out = evaluate_text("L[0,1;1] - L[0,1;1]")
    assert str(out) == "0"
