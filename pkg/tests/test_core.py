from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

import oracle
from strategies import rationals, tables
from pseudoboolean import (ArityError, FunctionTable, Point, affine_transform, essential_variables,
                           evaluate, is_boolean, negate_variables, section, sections_of_arity,
                           table_from_expression, to_rational, with_assignment)
from pseudoboolean.core import mask_of, members

F = FunctionTable([1, 2, 4, 3])
EXAMPLE = table_from_expression("x1 - x1*x2 + x2*x3")


def test_evaluate_examples():
    assert evaluate(F, Point.of(1, 0)) == 2
    assert evaluate(F, (0, 1)) == 4
    assert evaluate(FunctionTable.constant(3, 0), (1, 0, 1)) == 0
    assert evaluate(EXAMPLE, (1, 1, 1)) == 1


def test_evaluate_arity_mismatch():
    with pytest.raises(ArityError):
        evaluate(F, (1, 0, 1))


def test_with_assignment():
    assert with_assignment(Point.of(0, 1, 1), 1, 1) == Point.of(1, 1, 1)
    assert with_assignment(Point.of(1, 0), 2, 0) == Point.of(1, 0)
    assert with_assignment(Point.of(0, 0, 0), 2, 1) == Point.of(0, 1, 0)
    with pytest.raises(ArityError):
        with_assignment(Point.of(0, 0), 3, 1)


def test_point_conventions():
    x = Point.of(1, 0, 1)
    assert x.bits == 0b101
    assert (x[1], x[2], x[3]) == (1, 0, 1)
    assert x.weight == 2
    assert str(x) == "(1,0,1)"
    with pytest.raises(ArityError):
        Point(2, 4)
    with pytest.raises(ValueError):
        Point.of(2)


def test_section_examples():
    g = section(EXAMPLE, {1, 2}, (0, 0, 1))
    assert g.values == tuple(map(Fraction, [0, 1, 1, 1]))
    assert section(EXAMPLE, {1, 2, 3}, 5) == EXAMPLE
    xor3 = FunctionTable.from_function(3, lambda x: sum(x) % 2)
    assert section(xor3, {1, 2}, (0, 0, 0)) == FunctionTable([0, 1, 1, 0])


def test_section_reindexes_ascending():
    # keeping {1, 3} of f(x1, x2, x3) = x1 + 2*x3 gives g(y1, y2) = y1 + 2*y2
    f = table_from_expression("x1 + 2*x3")
    assert section(f, [3, 1], (0, 1, 0)) == table_from_expression("x1 + 2*x2")


def test_sections_of_arity_counts():
    assert len(list(sections_of_arity(EXAMPLE, 2))) == 6
    only = list(sections_of_arity(F, 2))
    assert len(only) == 1 and only[0][2] == F
    assert len(list(sections_of_arity(FunctionTable.constant(4, 1), 1))) == 32
    with pytest.raises(ArityError):
        list(sections_of_arity(F, 3))
    with pytest.raises(ArityError):
        list(sections_of_arity(F, 0))


def test_negate_and_affine_examples():
    xor = FunctionTable([0, 1, 1, 0])
    assert negate_variables(xor, []) == xor
    assert negate_variables(xor, {1}) == FunctionTable([1, 0, 0, 1])
    assert affine_transform(F, 1, 0) == F
    assert affine_transform(F, 2, 1) == FunctionTable([3, 5, 9, 7])


def test_essential_and_boolean():
    assert essential_variables(FunctionTable.constant(3, 7)) == frozenset()
    assert essential_variables(EXAMPLE) == {1, 2, 3}
    assert essential_variables(table_from_expression("x2", arity=3)) == {2}
    assert is_boolean(FunctionTable([0, 1, 1, 0]))
    assert not is_boolean(F)
    assert is_boolean(FunctionTable([1]))
    assert not is_boolean(FunctionTable(["1/2", 0]))


def test_table_construction_and_errors():
    with pytest.raises(ArityError):
        FunctionTable([1, 2, 3])
    with pytest.raises(ArityError):
        FunctionTable([1, 2], arity=2)
    with pytest.raises(ArityError):
        FunctionTable.constant(21, 0)
    assert FunctionTable([0.5, "1/3", Fraction(2, 7), "0.25"]).values == (
        Fraction(1, 2), Fraction(1, 3), Fraction(2, 7), Fraction(1, 4))
    assert to_rational(0.1) == Fraction(0.1)          # exact binary value, not 1/10
    assert F(1, 0) == 2 and F((0, 1)) == 4
    assert F <= FunctionTable([1, 2, 5, 3]) and not F <= FunctionTable([0, 9, 9, 9])


def test_tables_are_immutable():
    with pytest.raises(ValueError):
        F.numerators[0] = 9


def test_big_numerators_stay_exact():
    big = 10 ** 30
    f = FunctionTable([big, big + 1, -big, Fraction(1, 3)])
    assert f.numerators.dtype == object
    assert f[1] == big + 1 and f[3] == Fraction(1, 3)


def test_mask_helpers():
    assert mask_of([1, 3], 3) == 0b101
    assert members(0b101) == [1, 3]
    with pytest.raises(TypeError):
        mask_of(3, 3)
    with pytest.raises(ArityError):
        mask_of([4], 3)


@given(tables(max_n=4), st.data())
def test_evaluate_matches_oracle_indexing(f, data):
    n, g = oracle.from_values(f.values)
    x = data.draw(st.tuples(*[st.integers(0, 1)] * n))
    assert evaluate(f, x) == g[x]


@given(tables(min_n=1, max_n=4), st.data())
def test_section_matches_substitution(f, data):
    n, g = oracle.from_values(f.values)
    S = sorted(data.draw(st.sets(st.integers(1, n), min_size=1)))
    a = data.draw(st.tuples(*[st.integers(0, 1)] * n))
    sec = section(f, S, a)
    for y in oracle.cube(len(S)):
        x = list(a)
        for i, v in zip(S, y):
            x[i - 1] = v
        assert sec[oracle.index(y)] == g[tuple(x)]


@given(tables(max_n=4), st.data())
def test_negation_is_an_involution(f, data):
    S = data.draw(st.sets(st.integers(1, f.arity))) if f.arity else set()
    g = negate_variables(f, S)
    assert negate_variables(g, S) == f
    assert sorted(g.values) == sorted(f.values)


@given(tables(max_n=4), rationals, rationals)
def test_affine_pointwise(f, a, b):
    g = affine_transform(f, a, b)
    assert all(gv == a * fv + b for gv, fv in zip(g.values, f.values))


@given(tables(max_n=4))
def test_essential_variables_by_definition(f):
    n, g = oracle.from_values(f.values)
    expected = {k for k in range(1, n + 1) if any(v != 0 for v in oracle.delta(g, k).values())}
    assert essential_variables(f) == expected


@given(tables(max_n=5))
def test_equality_and_hash_follow_values(f):
    g = FunctionTable(list(f.values), arity=f.arity)
    assert g == f and hash(g) == hash(f)
    assert np.array_equal(FunctionTable._from_scaled(f.arity, f.numerators * 6, f.denominator * 6).numerators,
                          f.numerators)
