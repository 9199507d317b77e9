"""Monotone functions as pseudo-polynomial functions.

A monotone f with min a < max b factors as p'(phi_1(x_1), ..., phi_n(x_n)):
each phi_i maps {0,1} onto {a,b} (increasing where f is isotone in x_i,
decreasing where antitone), and p' is the lattice polynomial

    p'(y) = max over S of ( c_S  min  min_{i in S} y_i ),

with c_S the value of f at the point that phi sends to (b on S, a elsewhere).
"""
import enum
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import _kernels as K
from .core import Point, members
from .monotonicity import VariableMonotonicity, is_monotone, variable_monotonicity


class Orientation(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"


@dataclass(frozen=True)
class PseudoPolynomialDecomposition:
    arity: int
    a: Fraction
    b: Fraction
    orientations: tuple
    coefficients: tuple          # c_S indexed by subset mask

    def phi(self, i, bit):
        inc = self.orientations[i - 1] is Orientation.INCREASING
        return (self.b if bit else self.a) if inc else (self.a if bit else self.b)

    def lattice_polynomial(self, y):
        """Evaluate p'(y) for y in [a, b]^n."""
        best = None
        for m, c in enumerate(self.coefficients):
            term = c
            for i in members(m):
                term = min(term, y[i - 1])
            best = term if best is None else max(best, term)
        return best

    def as_dict(self):
        return {
            "min": str(self.a), "max": str(self.b),
            "orientations": [o.value for o in self.orientations],
            "coefficients": {"{" + ",".join(map(str, members(m))) + "}": str(c)
                             for m, c in enumerate(self.coefficients)},
        }


def decompose(f):
    """The decomposition of a monotone f, or None when f is not monotone."""
    if not is_monotone(f):
        return None
    n = f.arity
    vals = f.values
    a, b = min(vals), max(vals)
    orient = tuple(
        Orientation.DECREASING
        if variable_monotonicity(f, i) is VariableMonotonicity.ANTITONE
        else Orientation.INCREASING
        for i in range(1, n + 1))
    if a == b:
        coef = tuple([a] * (1 << n))
    else:
        # phi(x) = (b on S, a elsewhere) at x_i = 1 for increasing i in S,
        # x_i = 0 for decreasing i in S
        dec = sum(1 << i for i in range(n) if orient[i] is Orientation.DECREASING)
        coef = tuple(vals[m ^ dec] for m in range(1 << n))
    d = PseudoPolynomialDecomposition(n, a, b, orient, coef)
    _verify(d, f)
    return d


def _verify(d, f):
    """Check p'(phi(x)) = f(x) on every corner.

    On the corner that is b exactly on T, p' equals the max of c_S over
    S contained in T (every other term is cut down to a <= c_S), which is a
    subset-max transform of the coefficients.
    """
    n = d.arity
    den = f.denominator
    c = np.array([int(v * den) for v in d.coefficients], dtype=f.numerators.dtype)
    c = K.cube(c, n)
    for k in range(1, n + 1):
        ax = c.ndim - k
        hi = [slice(None)] * c.ndim
        hi[ax] = 1
        c[tuple(hi)] = np.maximum(np.take(c, 0, axis=ax), np.take(c, 1, axis=ax))
    corner = K.flat(c, n)
    dec = sum(1 << i for i in range(n) if d.orientations[i] is Orientation.DECREASING)
    idx = np.arange(1 << n) ^ dec
    bad = np.flatnonzero(corner[idx] != f.numerators)
    if bad.size:
        raise AssertionError(f"decomposition does not reproduce f at {Point(n, int(bad[0]))}")


def evaluate_decomposition(d, x):
    if not isinstance(x, Point):
        x = Point.of(*x)
    if x.arity != d.arity:
        raise ValueError(f"point of arity {x.arity} for a decomposition of arity {d.arity}")
    y = [d.phi(i, x[i]) for i in range(1, d.arity + 1)]
    return d.lattice_polynomial(y)
