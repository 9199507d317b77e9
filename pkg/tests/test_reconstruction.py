from fractions import Fraction

import pytest
from hypothesis import given, settings

import oracle
from strategies import tables
from pseudoboolean import (ArityError, DerivativeProfile, FunctionTable, Inconsistent, ParityPair,
                           Unique, profile_of, reconstruct, verify_profile)
from pseudoboolean.families import boolean_tables, parity


def test_parity_is_ambiguous():
    res = reconstruct(profile_of(parity(3)))
    assert res == ParityPair(Fraction(0), Fraction(1))
    even, odd = res.tables(3)
    assert even == parity(3) and odd == parity(3, 1, 0)
    assert profile_of(even) == profile_of(odd)


def test_constant_is_unique():
    c = FunctionTable.constant(3, 5)
    assert reconstruct(profile_of(c)) == Unique(c)


def test_all_ternary_boolean():
    kinds = {"unique": 0, "pair": 0}
    for row in boolean_tables(3):
        f = FunctionTable(row.tolist(), arity=3)
        res = reconstruct(profile_of(f))
        if isinstance(res, Unique):
            assert res.table == f
            kinds["unique"] += 1
        else:
            assert isinstance(res, ParityPair) and f in res.tables(3)
            kinds["pair"] += 1
    assert kinds == {"unique": 254, "pair": 2}


def test_parity_pair_is_canonical():
    res = reconstruct(profile_of(parity(2, 7, "-1/2")))
    assert res == ParityPair(Fraction(-1, 2), Fraction(7))


def test_meet_above_join_is_inconsistent():
    p = profile_of(FunctionTable([1, 2, 4, 3]))
    bad = DerivativeProfile(2, (p.join[0], p.meet[1]), (p.meet[0], p.join[1]))
    res = reconstruct(bad)
    assert isinstance(res, Inconsistent) and res.reason == "invariant" and res.k == 1
    assert not verify_profile(FunctionTable([1, 2, 4, 3]), bad)


def test_derivative_depending_on_own_variable():
    p = profile_of(FunctionTable([1, 2, 4, 3]))
    wrong = FunctionTable([0, 1, 3, 3])      # depends on x1
    res = reconstruct(DerivativeProfile(2, (wrong, p.meet[1]), p.join))
    assert isinstance(res, Inconsistent) and res.reason == "invariant"


def test_propagation_conflict():
    # each edge pair is individually fine, but no table has all of them
    n = 2
    meet1 = FunctionTable([0, 0, 5, 5])
    join1 = FunctionTable([1, 1, 6, 6])
    meet2 = FunctionTable([0, 1, 0, 1])
    join2 = FunctionTable([9, 9, 9, 9], arity=n)
    res = reconstruct(DerivativeProfile(n, (meet1, meet2), (join1, join2)))
    assert isinstance(res, Inconsistent) and res.reason in ("propagation", "verification")


def test_profile_shape_errors():
    p = profile_of(FunctionTable([1, 2, 4, 3]))
    with pytest.raises(ArityError):
        DerivativeProfile(2, p.meet[:1], p.join)
    with pytest.raises(ArityError):
        DerivativeProfile(2, (p.meet[0], FunctionTable([1, 1])), p.join)
    with pytest.raises(ArityError):
        reconstruct(DerivativeProfile(0, (), ()))
    with pytest.raises(ArityError):
        verify_profile(FunctionTable([1, 2]), p)


@settings(max_examples=500)
@given(tables(min_n=1, max_n=5))
def test_round_trip(f):
    res = reconstruct(profile_of(f))
    if isinstance(res, Unique):
        assert res.table == f
    else:
        assert isinstance(res, ParityPair)
        assert res.u < res.v and f in res.tables(f.arity)
    assert verify_profile(f, profile_of(f))


@given(tables(min_n=1, max_n=4))
def test_profile_matches_oracle(f):
    n, g = oracle.from_values(f.values)
    meets, joins = oracle.profile(g, n)
    p = profile_of(f)
    assert [t.values for t in p.meet] == [tuple(oracle.to_values(n, m)) for m in meets]
    assert [t.values for t in p.join] == [tuple(oracle.to_values(n, j)) for j in joins]
