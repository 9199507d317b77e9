"""Symmetric functions as value sequences.

A symmetric f of arity n is the sequence alpha_0..alpha_n with
f(x) = alpha_{|x|}.  Here, unlike in the table-level calculus, lattice
derivatives drop the inessential variable: the meet and join sequences have
length n (arity n - 1).
"""
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels as K
from .core import ArityError, FunctionTable, check_arity, to_rational


@dataclass(frozen=True)
class SymmetricSequence:
    alpha: tuple

    def __post_init__(self):
        vals = tuple(to_rational(a) for a in self.alpha)
        if not vals:
            raise ValueError("a symmetric sequence needs at least one value")
        object.__setattr__(self, "alpha", vals)

    @property
    def n(self):
        return len(self.alpha) - 1

    def __str__(self):
        return ",".join(str(a) for a in self.alpha)


def parse_sequence(text):
    return SymmetricSequence(tuple(part for part in text.replace(" ", "").split(",") if part))


def detect_symmetric(f):
    """The sequence of f if f(x) depends only on |x|, else None."""
    n = f.arity
    w = K.popcounts(1 << n)
    alpha = []
    for m in range(n + 1):
        vals = f.numerators[w == m]
        if np.any(vals != vals[0]):
            return None
        alpha.append(Fraction(int(vals[0]), f.denominator))
    return SymmetricSequence(tuple(alpha))


def seq_to_function(s):
    check_arity(s.n)
    w = K.popcounts(1 << s.n)
    return FunctionTable([s.alpha[i] for i in w], arity=s.n)


def _check_nonempty(s):
    if s.n < 1:
        raise ArityError("derivative of an arity-0 sequence")


def seq_meet(s):
    _check_nonempty(s)
    a = s.alpha
    return SymmetricSequence(tuple(min(a[i], a[i + 1]) for i in range(s.n)))


def seq_join(s):
    _check_nonempty(s)
    a = s.alpha
    return SymmetricSequence(tuple(max(a[i], a[i + 1]) for i in range(s.n)))


def seq_local_monotonicity_degree(s):
    """Largest p such that every window of p + 1 consecutive entries is monotone.

    A window fails exactly when it holds a strict rise and a strict fall, so
    the degree is the smallest gap between consecutive opposite-signed steps
    (capped at n).
    """
    _check_nonempty(s)
    a = s.alpha
    best = s.n
    last = None                       # (position, sign) of the last strict step
    for i in range(s.n):
        step = (a[i + 1] > a[i]) - (a[i + 1] < a[i])
        if step == 0:
            continue
        if last is not None and last[1] != step:
            best = min(best, i - last[0])
        last = (i, step)
    return best


def _apply_seq(s, kinds):
    # kinds written left to right, applied right to left
    for kind in reversed(kinds):
        s = seq_meet(s) if kind == "meet" else seq_join(s)
    return s


def seq_has_p_permutable(s, p):
    """Sequence-level permutability check.

    All variables look alike, so it is enough to compare, for each count m of
    meets (0 < m < p), joins applied after all meets against meets applied
    after all joins.
    """
    if not 1 <= p <= s.n:
        raise ArityError(f"p={p} out of range 1..{s.n}")
    for m in range(1, p):
        j = p - m
        least = _apply_seq(s, ["join"] * j + ["meet"] * m)
        most = _apply_seq(s, ["meet"] * m + ["join"] * j)
        if least != most:
            return False
    return True


def seq_permutability_degree(s):
    _check_nonempty(s)
    deg = 1
    for p in range(2, s.n + 1):
        if not seq_has_p_permutable(s, p):
            break
        deg = p
    return deg


def staircase(p):
    """0,0, p ones, p zeros, 1,1: exactly p-locally monotone, arity 2p + 3."""
    if p < 2:
        raise ValueError("the staircase family starts at p = 2")
    return SymmetricSequence((0, 0) + (1,) * p + (0,) * p + (1, 1))
