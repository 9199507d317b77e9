"""Monotonicity, p-local monotonicity and forbidden binary sections.

f is p-locally monotone when no partial derivative Delta_k f changes sign
between two points that differ in fewer than p coordinates other than k.
Two deciders are provided: a section scan (default) that tracks the min and
max of Delta_k over every (p-1)-dimensional face, and a direct pairwise
definition scan kept as an independent cross-check.
"""
import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import _kernels as K
from .core import ArityError, Point, check_index, is_boolean


class VariableMonotonicity(enum.Enum):
    ISOTONE = "isotone"
    ANTITONE = "antitone"
    CONSTANT = "constant"
    NEITHER = "neither"


@dataclass(frozen=True)
class Witness:
    """Points x, y with Delta_k f(x) * Delta_k f(y) < 0.

    Both points have x_k = y_k = 0; ``distance`` counts the other coordinates
    in which they differ.
    """

    k: int
    x: Point
    y: Point
    delta_x: object
    delta_y: object

    @property
    def distance(self):
        return bin((self.x.bits ^ self.y.bits) & ~(1 << (self.k - 1))).count("1")

    def as_dict(self):
        return {"k": self.k, "x": list(self.x.to_tuple()), "y": list(self.y.to_tuple()),
                "delta_x": str(self.delta_x), "delta_y": str(self.delta_y)}


@dataclass(frozen=True)
class LocalMonotonicityReport:
    degree: int
    witness: Witness | None

    @property
    def monotone(self):
        return self.witness is None


def _deltas(f, k):
    """Delta_k f as a flat array indexed by points with x_k = 0 (others in place)."""
    lo, hi = K.halves(f.numerators, f.arity, k)
    return hi - lo


def variable_monotonicity(f, k):
    check_index(k, f.arity)
    d = _deltas(f, k)
    up = bool(np.all(d >= 0))
    down = bool(np.all(d <= 0))
    if up and down:
        return VariableMonotonicity.CONSTANT
    if up:
        return VariableMonotonicity.ISOTONE
    if down:
        return VariableMonotonicity.ANTITONE
    return VariableMonotonicity.NEITHER


def is_monotone(f):
    return all(variable_monotonicity(f, k) is not VariableMonotonicity.NEITHER
               for k in range(1, f.arity + 1))


def _check_p(f, p):
    if f.arity == 0 and p == 0:
        return
    if not 1 <= p <= f.arity:
        raise ArityError(f"p={p} out of range 1..{f.arity}")


def _point_from_reduced(n, k, reduced):
    """Re-insert a zero k-th bit into an (n-1)-bit index."""
    low = reduced & ((1 << (k - 1)) - 1)
    high = reduced >> (k - 1)
    return Point(n, low | (high << k))


def _section_scan_witness(f, p):
    n = f.arity
    den = f.denominator
    for k in range(1, n + 1):
        d = _deltas(f, k)                     # cube over the n-1 other variables
        flat_d = d.reshape(-1)
        others = [i for i in range(1, n + 1) if i != k]
        # bit position of variable i inside the reduced index
        rbit = {i: (i - 1 if i < k else i - 2) for i in others}
        for S in combinations(others, p - 1):
            axes = tuple(d.ndim - 1 - rbit[i] for i in S)
            mn = d.min(axis=axes)
            mx = d.max(axis=axes)
            hit = (mn < 0) & (mx > 0)
            if not np.any(hit):
                continue
            # first offending face in index order, then its extreme points
            smask = sum(1 << rbit[i] for i in S)
            base_cands = np.flatnonzero(np.asarray(hit).reshape(-1))
            rest_bits = [b for b in range(n - 1) if not smask >> b & 1]
            face_code = int(base_cands[0])
            base = 0
            # hit is laid out over the remaining axes in cube order (high bit first)
            for j, b in enumerate(rest_bits):
                if face_code >> j & 1:
                    base |= 1 << b
            sub = [base | s for s in _submasks(smask)]
            vals = [flat_d[i] for i in sub]
            ix = min(range(len(sub)), key=lambda t: (vals[t], sub[t]))
            iy = max(range(len(sub)), key=lambda t: (vals[t], -sub[t]))
            return Witness(k, _point_from_reduced(n, k, sub[ix]),
                           _point_from_reduced(n, k, sub[iy]),
                           Fraction(int(vals[ix]), den), Fraction(int(vals[iy]), den))
    return None


def _submasks(mask):
    s = 0
    out = []
    while True:
        out.append(s)
        if s == mask:
            return out
        s = (s - mask) & mask


def _definition_scan_witness(f, p):
    """Pairwise scan straight from the definition, using only bit arithmetic."""
    n = f.arity
    vals = [int(v) for v in f.numerators]
    size = 1 << n
    for k in range(1, n + 1):
        bit = 1 << (k - 1)
        pts = [x for x in range(size) if not x & bit]
        d = {x: vals[x | bit] - vals[x] for x in pts}
        for x in pts:
            if d[x] >= 0:
                continue
            for y in pts:
                if d[y] > 0 and bin(x ^ y).count("1") < p:
                    return Witness(k, Point(n, x), Point(n, y),
                                   Fraction(d[x], f.denominator), Fraction(d[y], f.denominator))
    return None


def local_monotonicity_witness(f, p, method="sections"):
    """A violation of p-local monotonicity, or None if f is p-locally monotone."""
    _check_p(f, p)
    if p <= 1:
        return None
    if method == "sections":
        return _section_scan_witness(f, p)
    if method == "definition":
        return _definition_scan_witness(f, p)
    raise ValueError(f"unknown method {method!r}")


def is_p_locally_monotone(f, p, method="sections"):
    return local_monotonicity_witness(f, p, method) is None


def local_monotonicity_degree(f):
    """Largest p with f p-locally monotone (n for monotone f) plus a witness
    against (degree + 1)-local monotonicity when degree < n."""
    n = f.arity
    if n == 0:
        return LocalMonotonicityReport(0, None)
    deg = int(K.local_degrees(f.numerators, n))
    witness = None if deg == n else _section_scan_witness(f, deg + 1)
    return LocalMonotonicityReport(deg, witness)


def batch_local_degrees(values, n):
    """Degrees for a batch of tables given as an integer array (m, 2**n)."""
    return K.local_degrees(np.asarray(values), n)


def batch_is_p_locally_monotone(values, n, p, method="sections"):
    """Vectorised p-local monotonicity for an integer array of shape (m, 2**n)."""
    values = np.asarray(values)
    if method == "sections":
        return ~K.local_violations(values, n, p)
    if method != "definition":
        raise ValueError(f"unknown method {method!r}")
    size = 1 << n
    idx = np.arange(size)
    dist = K.popcounts(size)[idx[:, None] ^ idx[None, :]]
    ok = np.ones(values.shape[0], dtype=bool)
    for k in range(1, n + 1):
        bit = 1 << (k - 1)
        pts = idx[(idx & bit) == 0]
        s = np.sign(values[:, pts | bit] - values[:, pts]).astype(np.int8)
        close = dist[np.ix_(pts, pts)] < p
        prod = s[:, :, None] * s[:, None, :]
        ok &= ~np.any((prod < 0) & close[None], axis=(1, 2))
    return ok


def lipschitz_violation(f):
    """For Boolean f: a (k, x, y) with |Delta_k f(x) - Delta_k f(y)| > d(x, y).

    Only pairs at distance one (off k) can violate this for Boolean f, since
    the left side never exceeds 2.  Returns None when f is locally monotone.
    """
    if not is_boolean(f):
        raise ValueError("lipschitz_violation needs a Boolean function")
    n = f.arity
    vals = [int(v) for v in f.numerators]
    for k in range(1, n + 1):
        bit = 1 << (k - 1)
        for x in range(1 << n):
            if x & bit:
                continue
            dx = vals[x | bit] - vals[x]
            for j in range(1, n + 1):
                y = x ^ (1 << (j - 1))
                if j == k or y < x:
                    continue
                dy = vals[y | bit] - vals[y]
                if abs(dx - dy) > 1:
                    return Witness(k, Point(n, x), Point(n, y), Fraction(dx), Fraction(dy))
    return None


@dataclass(frozen=True)
class BinarySection:
    """Binary section g(u, v) = f(a with x_j = u, x_k = v) and its coefficients
    g = a0 + a1 u + a2 v + a12 u v."""

    j: int
    k: int
    base: Point
    kind: str
    a0: object
    a1: object
    a2: object
    a12: object

    def as_dict(self):
        return {"j": self.j, "k": self.k, "base": list(self.base.to_tuple()), "kind": self.kind,
                "coefficients": {"a0": str(self.a0), "a1": str(self.a1),
                                 "a2": str(self.a2), "a12": str(self.a12)}}


def binary_sections(f):
    """Yield (j, k, base, g00, g10, g01, g11) for every binary section, as Fractions."""
    n = f.arity
    vals = f.values
    for k in range(2, n + 1):
        for j in range(1, k):
            bj, bk = 1 << (j - 1), 1 << (k - 1)
            rest = ((1 << n) - 1) & ~(bj | bk)
            for base in _submasks(rest):
                yield (j, k, Point(n, base), vals[base], vals[base | bj],
                       vals[base | bk], vals[base | bj | bk])


def _coefficients(g00, g10, g01, g11):
    return g00, g10 - g00, g01 - g00, g11 - g10 - g01 + g00


def forbidden_binary_sections(f, boolean=None):
    """Binary sections that rule out 2-local monotonicity.

    Boolean functions: the sections equal to XOR or XNOR.  Otherwise: the
    sections whose coefficients violate a1(a1 + a12) >= 0 and a2(a2 + a12) >= 0.
    The list is empty iff f is 2-locally monotone.
    """
    if boolean is None:
        boolean = is_boolean(f)
    out = []
    for j, k, base, g00, g10, g01, g11 in binary_sections(f):
        a0, a1, a2, a12 = _coefficients(g00, g10, g01, g11)
        if boolean:
            table = (g00, g10, g01, g11)
            if table == (0, 1, 1, 0):
                kind = "xor"
            elif table == (1, 0, 0, 1):
                kind = "xnor"
            else:
                continue
        else:
            if a1 * (a1 + a12) >= 0 and a2 * (a2 + a12) >= 0:
                continue
            kind = "sign-change"
        out.append(BinarySection(j, k, base, kind, a0, a1, a2, a12))
    return out
