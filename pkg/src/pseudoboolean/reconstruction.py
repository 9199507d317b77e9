"""Recovering a function from all of its meet and join derivatives.

The pair (meet_k f(x), join_k f(x)) is the unordered pair of values at the
two endpoints of the k-edge through x.  Knowing the value at one vertex then
fixes every other vertex, because the cube is connected.  An anchor exists
whenever some edge has equal endpoints, or some vertex meets two edges
carrying different pairs.  Otherwise every edge carries the same pair {u, v},
f alternates between u and v with the parity of |x|, and the profile cannot
tell f from its swap.
"""
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from . import _kernels as K
from .core import ArityError, FunctionTable, Point


@dataclass(frozen=True)
class DerivativeProfile:
    """Meet and join derivative tables for every variable k = 1..n."""

    arity: int
    meet: tuple
    join: tuple

    def __post_init__(self):
        if len(self.meet) != self.arity or len(self.join) != self.arity:
            raise ArityError("a profile needs one meet and one join table per variable")
        for t in self.meet + self.join:
            if t.arity != self.arity:
                raise ArityError(f"profile table of arity {t.arity} in a profile of arity {self.arity}")


@dataclass(frozen=True)
class Unique:
    table: FunctionTable


@dataclass(frozen=True)
class ParityPair:
    """f(x) = u when |x| is even and v when odd, or the same with u and v swapped."""

    u: Fraction
    v: Fraction

    def tables(self, n):
        even = FunctionTable.from_function(n, lambda x: self.u if sum(x) % 2 == 0 else self.v)
        odd = FunctionTable.from_function(n, lambda x: self.v if sum(x) % 2 == 0 else self.u)
        return even, odd


@dataclass(frozen=True)
class Inconsistent:
    """No function has this profile.

    ``reason`` is one of ``"invariant"`` (meet above join, or a table depending
    on its own variable), ``"propagation"`` (two edge pairs disagree about a
    vertex) or ``"verification"`` (the rebuilt table has a different profile).
    """

    reason: str
    k: int | None = None
    point: Point | None = None
    detail: str = ""


def profile_of(f):
    n = f.arity
    meets, joins = K.all_meets_joins(f.numerators, n)
    den = f.denominator
    return DerivativeProfile(n, tuple(FunctionTable._from_scaled(n, m, den) for m in meets),
                             tuple(FunctionTable._from_scaled(n, j, den) for j in joins))


def verify_profile(f, profile):
    if f.arity != profile.arity:
        raise ArityError(f"arity mismatch: {f.arity} vs {profile.arity}")
    return profile_of(f) == profile


def _scaled(profile):
    """Meet and join tables as (n, 2**n) integer arrays over one common denominator."""
    tables = profile.meet + profile.join
    den = lcm(*(t.denominator for t in tables), 1)
    big = any(t.numerators.dtype == object for t in tables) or den >= 1 << 40
    dtype = object if big else np.int64
    rows = [t.numerators.astype(dtype) * (den // t.denominator) for t in tables]
    n = profile.arity
    return den, np.array(rows[:n], dtype=dtype), np.array(rows[n:], dtype=dtype)


def _first(mask):
    k, x = np.argwhere(mask)[0]
    return int(k) + 1, int(x)


def reconstruct(profile):
    """Return :class:`Unique`, :class:`ParityPair` or :class:`Inconsistent`."""
    n = profile.arity
    if n == 0:
        raise ArityError("a profile of arity 0 carries no information")
    den, meets, joins = _scaled(profile)
    size = 1 << n

    # invariants: meet <= join, and both tables ignore their own variable
    partner = K.partners(n)
    rows = np.arange(n)[:, None]
    if (meets > joins).any():
        k, x = _first(meets > joins)
        return Inconsistent("invariant", k, Point(n, x), "meet above join")
    moved = (meets != meets[rows, partner]) | (joins != joins[rows, partner])
    if moved.any():
        k, x = _first(moved)
        x &= ~(1 << (k - 1))
        return Inconsistent("invariant", k, Point(n, x), f"derivative depends on variable {k}")

    lo_t, hi_t = meets.tolist(), joins.tolist()
    anchor = None
    flat = np.argwhere(meets == joins)
    if flat.size:
        k, x = flat[0]
        anchor = (int(x), lo_t[k][x])
    else:
        # a vertex whose incident edges carry different pairs
        differs = (meets != meets[:1]) | (joins != joins[:1])
        if differs.any():
            x, col = (int(v) for v in np.argwhere(differs.T)[0])
            k = col + 1
            first, other = (lo_t[0][x], hi_t[0][x]), (lo_t[k - 1][x], hi_t[k - 1][x])
            common = set(first) & set(other)
            if not common:
                return Inconsistent("propagation", k, Point(n, x), "incident edges share no value")
            anchor = (x, common.pop())
    if anchor is None:
        result = ParityPair(Fraction(lo_t[0][0], den), Fraction(hi_t[0][0], den))
        even, _ = result.tables(n)
        if not verify_profile(even, profile):
            return Inconsistent("verification", detail="parity candidate does not reproduce the profile")
        return result

    values = [None] * size
    start, val = anchor
    values[start] = val
    queue = deque([start])
    while queue:
        x = queue.popleft()
        vx = values[x]
        for k in range(1, n + 1):
            lo, hi = lo_t[k - 1][x], hi_t[k - 1][x]
            if vx != lo and vx != hi:
                return Inconsistent("propagation", k, Point(n, x),
                                    "vertex value is not on its edge")
            y = x ^ (1 << (k - 1))
            vy = hi if vx == lo else lo
            if values[y] is None:
                values[y] = vy
                queue.append(y)
            elif values[y] != vy:
                return Inconsistent("propagation", k, Point(n, x),
                                    "edge forces two values at one vertex")
    rebuilt = np.array(values, dtype=meets.dtype)
    m2, j2 = K.all_meets_joins(rebuilt, n)
    if not (np.array_equal(m2, meets) and np.array_equal(j2, joins)):
        return Inconsistent("verification", detail="rebuilt table does not reproduce the profile")
    return Unique(FunctionTable._from_scaled(n, rebuilt, den))
