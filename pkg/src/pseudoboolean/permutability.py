"""Permutability of lattice derivatives.

f has p-permutable lattice derivatives when, for every p variables and any
choice of meet or join derivative for each of them, the composite does not
depend on the order of application.

Same-kind derivatives commute, each derivative is order preserving, and a
join applied after a meet is pointwise below the meet applied after the
join.  So for a fixed split of K into meet variables M and join variables J,
every ordering lies between "all meets innermost" (the least) and "all joins
innermost" (the greatest).  The fast check compares only these two; the
brute-force enumeration over all p! orderings is kept alongside as a
cross-check.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

import numpy as np

from . import _kernels as K
from .calculus import Kind, apply_sequence, join_op, meet_op
from .core import ArityError, Point

FAST_MAX_P = 12
BRUTE_MAX_P = 7


@dataclass(frozen=True)
class PermutabilityCounterexample:
    """Two orderings of the same operators giving different values at ``point``.

    Orderings are written left to right and applied right to left.
    """

    subset: tuple
    meets: tuple
    joins: tuple
    first: tuple
    second: tuple
    point: Point
    first_value: Fraction
    second_value: Fraction

    def as_dict(self):
        return {"subset": list(self.subset), "meets": list(self.meets), "joins": list(self.joins),
                "first": " ".join(map(str, self.first)), "second": " ".join(map(str, self.second)),
                "point": list(self.point.to_tuple()),
                "first_value": str(self.first_value), "second_value": str(self.second_value)}


@dataclass(frozen=True)
class PermutabilityReport:
    max_p: int
    counterexample: PermutabilityCounterexample | None


def _check_p(f, p, cap):
    if not 1 <= p <= f.arity:
        raise ArityError(f"p={p} out of range 1..{f.arity}")
    if p > cap:
        raise ValueError(f"p={p} exceeds the supported maximum {cap}")


def _extremal_orderings(meets, joins):
    # written left to right, applied right to left
    least = tuple(join_op(k) for k in joins) + tuple(meet_op(k) for k in meets)
    greatest = tuple(meet_op(k) for k in meets) + tuple(join_op(k) for k in joins)
    return least, greatest


def _first_difference(f, K_, meets, joins, first, second):
    g1 = apply_sequence(f, first)
    g2 = apply_sequence(f, second)
    diff = np.flatnonzero(g1.numerators * g2.denominator != g2.numerators * g1.denominator)
    x = int(diff[0])
    return PermutabilityCounterexample(tuple(K_), tuple(meets), tuple(joins), tuple(first),
                                       tuple(second), Point(f.arity, x), g1[x], g2[x])


def permutability_counterexample(f, p):
    """First (subset, split) whose extremal orderings differ, or None."""
    _check_p(f, p, FAST_MAX_P)
    if p == 1:
        return None
    n = f.arity
    if not K.permutability_violations(f.numerators, n, p):
        return None
    c = K.cube(f.numerators, n)
    for K_ in combinations(range(1, n + 1), p):
        for meets, joins in K.mixed_splits(K_):
            least = K.reduce_cube(c, n, meets, joins, joins_first=False)
            most = K.reduce_cube(c, n, meets, joins, joins_first=True)
            if np.any(least != most):
                lo, hi = _extremal_orderings(meets, joins)
                return _first_difference(f, K_, meets, joins, lo, hi)
    return None


def has_p_permutable_derivatives(f, p):
    return permutability_counterexample(f, p) is None


def max_permutability_degree(f):
    """Largest p such that f has p-permutable lattice derivatives."""
    n = f.arity
    if n <= 1:
        return PermutabilityReport(n, None)
    for p in range(2, n + 1):
        if p > FAST_MAX_P:
            raise ValueError(f"permutability beyond p={FAST_MAX_P} is not supported")
        if K.permutability_violations(f.numerators, n, p):
            return PermutabilityReport(p - 1, permutability_counterexample(f, p))
    return PermutabilityReport(n, None)


def brute_force_counterexample(f, p):
    """Enumerate every operator choice and every ordering (p! of them)."""
    _check_p(f, p, BRUTE_MAX_P)
    n = f.arity
    for K_ in combinations(range(1, n + 1), p):
        for kinds in product((Kind.MEET, Kind.JOIN), repeat=p):
            ops = [meet_op(k) if kind is Kind.MEET else join_op(k) for k, kind in zip(K_, kinds)]
            ref = apply_sequence(f, ops)
            for perm in permutations(ops):
                if apply_sequence(f, perm) != ref:
                    meets = tuple(o.index for o in ops if o.kind is Kind.MEET)
                    joins = tuple(o.index for o in ops if o.kind is Kind.JOIN)
                    return _first_difference(f, K_, meets, joins, tuple(ops), perm)
    return None


def has_p_permutable_derivatives_brute(f, p):
    return brute_force_counterexample(f, p) is None


def batch_permutability_degrees(values, n):
    return K.permutability_degrees(np.asarray(values), n)


def batch_has_p_permutable(values, n, p):
    return ~K.permutability_violations(np.asarray(values), n, p)


def batch_has_p_permutable_brute(values, n, p):
    """All p! orderings for every operator choice, sharing common inner prefixes."""
    values = np.asarray(values)
    ok = np.ones(values.shape[0], dtype=bool)
    if p <= 1:
        return ok
    live = np.arange(values.shape[0])       # rows not yet refuted
    for K_ in combinations(range(1, n + 1), p):
        for kinds in product((Kind.MEET, Kind.JOIN), repeat=p):
            if not live.size:
                return ok
            results = []

            def walk(a, remaining):
                if not remaining:
                    results.append(a)
                    return
                for i, (k, kind) in enumerate(remaining):
                    step = K.meet if kind is Kind.MEET else K.join
                    walk(step(a, n, k), remaining[:i] + remaining[i + 1:])

            walk(values[live], list(zip(K_, kinds)))
            same = np.all(np.stack(results) == results[0], axis=(0, 2))
            ok[live[~same]] = False
            live = live[same]
    return ok


def binary_2permutability_condition(f):
    """Check every binary section against the coefficient criterion
    a1*a12 >= 0  or  a2*a12 >= 0  or  |a12| <= max(|a1|, |a2|).

    Returns ``(holds, violating_sections)``.
    """
    from .monotonicity import BinarySection, binary_sections
    bad = []
    for j, k, base, g00, g10, g01, g11 in binary_sections(f):
        a1 = g10 - g00
        a2 = g01 - g00
        a12 = g11 - g10 - g01 + g00
        if a1 * a12 >= 0 or a2 * a12 >= 0 or abs(a12) <= max(abs(a1), abs(a2)):
            continue
        bad.append(BinarySection(j, k, base, "non-permutable", g00, a1, a2, a12))
    return not bad, bad
