from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracle
from strategies import POOL, rational_lists, tables
from pseudoboolean import (ArityError, ExpressionSyntaxError, FunctionTable, MultilinearPolynomial,
                           degree, delta, formal_derivative, parse_expression, poly_from_table,
                           pretty_print, table_from_expression, to_table)
from pseudoboolean.families import parity


def coef(p):
    return {tuple(sorted(S)): c for S, c in p.terms().items()}


def test_poly_from_table_examples():
    assert coef(poly_from_table(FunctionTable([0, 1, 1, 0]))) == {(1,): 1, (2,): 1, (1, 2): -2}
    assert coef(poly_from_table(FunctionTable.constant(3, "5/2"))) == {(): Fraction(5, 2)}
    assert coef(poly_from_table(FunctionTable([1, 2, 4, 3]))) == {(): 1, (1,): 1, (2,): 3, (1, 2): -2}


def test_to_table_examples():
    p = MultilinearPolynomial.from_terms({frozenset(): 1, frozenset({1}): 1, frozenset({2}): 3,
                                          frozenset({1, 2}): -2})
    assert to_table(p) == FunctionTable([1, 2, 4, 3])
    assert to_table(MultilinearPolynomial.from_terms({}, arity=2)) == FunctionTable.constant(2, 0)
    f = to_table(parse_expression("x1 - x1*x2 + x2*x3"))
    assert f(1, 1, 1) == 1 and f(0, 1, 1) == 1 and f(1, 1, 0) == 0


def test_parse_examples():
    assert coef(parse_expression("x1 - x1*x2 + x2*x3")) == {(1,): 1, (1, 2): -1, (2, 3): 1}
    zero = parse_expression("0")
    assert zero.arity == 0 and coef(zero) == {}
    assert coef(parse_expression("1 - x1 - x2 + 2*x1*x2")) == {(): 1, (1,): -1, (2,): -1, (1, 2): 2}


def test_parse_expands_and_reduces():
    # x1 * x1 = x1 on {0,1}; products of sums expand
    assert coef(parse_expression("x1*x1")) == {(1,): 1}
    assert coef(parse_expression("(x1 + x2)*(x1 - x2)")) == {(1,): 1, (2,): -1}
    assert coef(parse_expression("3/4*x2 + 0.5 - -x1")) == {(): Fraction(1, 2), (1,): 1, (2,): Fraction(3, 4)}
    assert parse_expression("x2", arity=4).arity == 4


@pytest.mark.parametrize("text, pos", [("x1 +* x2", 4), ("", 0), ("x1 + (x2", 8),
                                       ("x1 x2", 3), ("x1 $ 2", 3), ("2 +", 3)])
def test_parse_errors_report_positions(text, pos):
    with pytest.raises(ExpressionSyntaxError) as err:
        parse_expression(text)
    assert err.value.position == pos


def test_parse_rejects_bad_indices():
    for text in ("x0", "x21"):
        with pytest.raises(ExpressionSyntaxError):
            parse_expression(text)
    with pytest.raises(ArityError):
        parse_expression("x3", arity=2)


def test_formal_derivative_examples():
    p = parse_expression("x1 - x1*x2 + x2*x3")
    assert coef(formal_derivative(p, 2)) == {(1,): -1, (3,): 1}
    xor = parse_expression("x1 + x2 - 2*x1*x2")
    assert coef(formal_derivative(xor, 1)) == {(): 1, (2,): -2}
    assert coef(formal_derivative(parse_expression("7", arity=2), 1)) == {}
    with pytest.raises(ArityError):
        formal_derivative(xor, 3)


def test_degree_examples():
    assert degree(parse_expression("x1 - x1*x2 + x2*x3")) == 2
    assert degree(parse_expression("0", arity=3)) == 0
    for n in range(1, 7):
        assert degree(poly_from_table(parity(n))) == n


def test_pretty_print():
    assert pretty_print(parse_expression("x2*x3 + x1 - x2*x1")) == "x1 - x1*x2 + x2*x3"
    assert pretty_print(parse_expression("0")) == "0"
    assert pretty_print(parse_expression("-1/2*x1 + 3")) == "3 - 1/2*x1"


@given(tables(max_n=4))
def test_mobius_matches_inclusion_exclusion(f):
    n, g = oracle.from_values(f.values)
    expected = {S: c for S, c in oracle.mobius(n, g).items() if c != 0}
    assert coef(poly_from_table(f)) == expected


@st.composite
def polynomials(draw, max_n=5):
    n = draw(st.integers(0, max_n))
    vals = draw(rational_lists(1 << n, zero_weight=len(POOL)))
    return MultilinearPolynomial(vals, arity=n)


@st.composite
def round_trip_cases(draw, max_n=5):
    # a dense table and a sparse polynomial of the same arity, plus an index
    n = draw(st.integers(0, max_n))
    f = FunctionTable(draw(rational_lists(1 << n)), arity=n)
    p = MultilinearPolynomial(draw(rational_lists(1 << n, zero_weight=len(POOL))), arity=n)
    k = draw(st.integers(1, n)) if n else None
    return f, p, k


@settings(max_examples=1000)
@given(round_trip_cases())
def test_mobius_derivative_and_parser_round_trips(case):
    f, p, k = case
    q = poly_from_table(f)
    assert to_table(q) == f
    assert poly_from_table(to_table(p)) == p
    if k is not None:
        assert to_table(formal_derivative(q, k)) == delta(f, k)
        assert to_table(formal_derivative(p, k)) == delta(to_table(p), k)
    assert parse_expression(pretty_print(p), arity=p.arity) == p
    assert parse_expression(pretty_print(q), arity=q.arity) == q


@given(polynomials(max_n=4))
def test_expression_table_matches_evaluation(p):
    f = table_from_expression(pretty_print(p), arity=p.arity)
    terms = {tuple(sorted(S)): c for S, c in p.terms().items()}
    for x in oracle.cube(p.arity):
        assert f[oracle.index(x)] == oracle.evaluate_polynomial(terms, x)
