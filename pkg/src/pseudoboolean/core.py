"""Exact pseudo-Boolean functions on the n-cube.

Conventions used throughout the package:

* Variables are numbered ``1..n``.  A point ``x`` of ``{0,1}^n`` is encoded as
  an integer whose bit ``k-1`` holds ``x_k``; so x_1 is the least significant
  bit and the table ``[1, 2, 4, 3]`` means f(0,0)=1, f(1,0)=2, f(0,1)=4,
  f(1,1)=3.
* Subsets of variables are passed as iterables of 1-based indices and are
  returned as frozensets.
* A section keeps the free variables in ascending order: variable ``i`` of
  an S-section is the i-th smallest member of S.
* Values are exact rationals (:class:`fractions.Fraction`).  A table stores
  integer numerators over one common positive denominator, so sign and order
  tests never touch floating point.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from numbers import Rational

import numpy as np

from . import _kernels as K

MAX_ARITY = 20

# int64 stays exact for every kernel (differences, Mobius sums over 2**20
# terms) while numerators stay below this bound; beyond it we use Python ints.
_INT64_SAFE = 1 << 40


class ArityError(ValueError):
    """Raised for arity mismatches, out-of-range indices or arity > 20."""


def to_rational(value):
    """Convert ``value`` to a Fraction exactly.

    Accepts ints, Fractions, floats (converted exactly, not rounded) and
    strings such as ``"3"``, ``"-2/7"`` or ``"0.125"``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, np.bool_)):
        return Fraction(int(value))
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, (float, np.floating)):
        return Fraction(float(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def check_arity(n):
    if not 0 <= n <= MAX_ARITY:
        raise ArityError(f"arity must be in [0, {MAX_ARITY}], got {n}")


def check_index(k, n):
    if not 1 <= k <= n:
        raise ArityError(f"variable index {k} out of range 1..{n}")


def mask_of(indices, n):
    """Bit mask of a collection of 1-based variable indices."""
    if isinstance(indices, (int, np.integer)):
        raise TypeError("pass variable subsets as an iterable of indices")
    m = 0
    for i in indices:
        check_index(i, n)
        m |= 1 << (i - 1)
    return m


def members(mask):
    """Sorted 1-based indices of the bits set in ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _storage_dtype(nums):
    big = max((abs(v) for v in nums), default=0)
    return np.int64 if big < _INT64_SAFE else object


def _normalise(nums, den):
    """Reduce integer numerators over ``den`` to lowest common terms."""
    g = reduce(gcd, nums, den)
    if g > 1:
        nums = [v // g for v in nums]
        den //= g
    return nums, den


class ExactVector:
    """Immutable vector of 2**n exact rationals, indexed by n-bit masks.

    Shared storage for value tables and coefficient tables.
    """

    __slots__ = ("_n", "_num", "_den", "_values")

    def __init__(self, values, arity=None):
        vals = [to_rational(v) for v in values]
        size = len(vals)
        if arity is None:
            arity = size.bit_length() - 1
            if size == 0 or 1 << arity != size:
                raise ArityError(f"table length {size} is not a power of two")
        check_arity(arity)
        if size != 1 << arity:
            raise ArityError(f"arity {arity} needs {1 << arity} values, got {size}")
        den = reduce(lcm, (v.denominator for v in vals), 1)
        nums = [v.numerator * (den // v.denominator) for v in vals]
        self._set(arity, nums, den)

    def _set(self, n, nums, den):
        arr = nums if isinstance(nums, np.ndarray) else None
        if (arr is not None and arr.dtype.kind in "iu" and den < _INT64_SAFE
                and (arr.size == 0 or (arr.max() < _INT64_SAFE and arr.min() > -_INT64_SAFE))):
            arr = arr.astype(np.int64)
            g = gcd(int(np.gcd.reduce(arr)) if arr.size else 0, den)
            if g > 1:
                arr //= g
                den //= g
        else:
            if arr is not None:
                nums = [int(v) for v in arr]
            nums, den = _normalise(nums, den)
            arr = np.array(nums, dtype=_storage_dtype(nums))
        arr.flags.writeable = False
        self._n = n
        self._num = arr
        self._den = den
        self._values = None

    @classmethod
    def _from_scaled(cls, n, nums, den=1):
        """Build from integer numerators over a positive common denominator."""
        obj = cls.__new__(cls)
        obj._set(n, np.asarray(nums).ravel(), int(den))
        return obj

    @property
    def arity(self):
        return self._n

    @property
    def numerators(self):
        """Read-only integer numerators (numpy array, int64 or object)."""
        return self._num

    @property
    def denominator(self):
        return self._den

    @property
    def values(self):
        if self._values is None:
            d = self._den
            self._values = tuple(Fraction(int(v), d) for v in self._num)
        return self._values

    def __len__(self):
        return 1 << self._n

    def __getitem__(self, index):
        return Fraction(int(self._num[index]), self._den)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return (self._n == other._n and self._den == other._den
                and bool(np.array_equal(self._num, other._num)))

    def __hash__(self):
        return hash((type(self).__name__, self._n, self._den, tuple(int(v) for v in self._num)))

    def __repr__(self):
        shown = ", ".join(str(v) for v in self.values[:16])
        if len(self) > 16:
            shown += ", ..."
        return f"{type(self).__name__}(arity={self._n}, [{shown}])"


class FunctionTable(ExactVector):
    """Dense value table of a pseudo-Boolean function ``{0,1}^n -> Q``.

    >>> f = FunctionTable([1, 2, 4, 3])
    >>> f(1, 0)
    Fraction(2, 1)
    """

    __slots__ = ()

    @classmethod
    def constant(cls, n, value):
        return cls([value] * (1 << n), arity=n)

    @classmethod
    def from_function(cls, n, func):
        """Tabulate ``func(x)`` where x is a tuple ``(x_1, ..., x_n)``."""
        check_arity(n)
        return cls([func(Point(n, b).to_tuple()) for b in range(1 << n)], arity=n)

    def __call__(self, *bits):
        if len(bits) == 1 and isinstance(bits[0], (Point, tuple, list)):
            bits = tuple(bits[0])
        return evaluate(self, Point.of(*bits))

    def __le__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        _same_arity(self, other)
        a, b = _common(self, other)
        return bool(np.all(a <= b))

    def __ge__(self, other):
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return other <= self

    def _derived(self, nums, den=None):
        return FunctionTable._from_scaled(self._n, nums, self._den if den is None else den)


def _same_arity(f, g):
    if f.arity != g.arity:
        raise ArityError(f"arity mismatch: {f.arity} vs {g.arity}")


def _common(f, g):
    """Numerators of f and g over a shared denominator."""
    d = lcm(f.denominator, g.denominator)
    a = f.numerators * (d // f.denominator)
    b = g.numerators * (d // g.denominator)
    return a, b


@dataclass(frozen=True)
class Point:
    """A point of ``{0,1}^n``; bit ``k-1`` of ``bits`` holds x_k."""

    arity: int
    bits: int

    def __post_init__(self):
        check_arity(self.arity)
        if not 0 <= self.bits < 1 << self.arity:
            raise ArityError(f"bits {self.bits} do not fit arity {self.arity}")

    @classmethod
    def of(cls, *xs):
        """``Point.of(1, 0, 1)`` is (x_1, x_2, x_3) = (1, 0, 1)."""
        bits = 0
        for i, x in enumerate(xs):
            if x not in (0, 1):
                raise ValueError(f"coordinate {i + 1} must be 0 or 1, got {x!r}")
            bits |= int(x) << i
        return cls(len(xs), bits)

    def __getitem__(self, k):
        check_index(k, self.arity)
        return self.bits >> (k - 1) & 1

    def __iter__(self):
        return iter(self.to_tuple())

    def __len__(self):
        return self.arity

    def to_tuple(self):
        return tuple(self.bits >> i & 1 for i in range(self.arity))

    @property
    def weight(self):
        return bin(self.bits).count("1")

    def __str__(self):
        return "(" + ",".join(map(str, self.to_tuple())) + ")"


def _as_point(x, n):
    if isinstance(x, Point):
        p = x
    elif isinstance(x, (int, np.integer)):
        p = Point(n, int(x))
    else:
        p = Point.of(*x)
    if p.arity != n:
        raise ArityError(f"point of arity {p.arity} used with arity {n}")
    return p


def evaluate(f, x):
    """Value of f at the point x (a :class:`Point`, bit mask or 0/1 tuple)."""
    x = _as_point(x, f.arity)
    return f[x.bits]


def with_assignment(x, k, a):
    """The point x_k^a: x with its k-th coordinate set to ``a``."""
    if not isinstance(x, Point):
        x = Point.of(*x)
    check_index(k, x.arity)
    if a not in (0, 1):
        raise ValueError("a must be 0 or 1")
    bit = 1 << (k - 1)
    return Point(x.arity, (x.bits | bit) if a else (x.bits & ~bit))


def _section_index(n, smask, base):
    """Table indices of f(a_S^x) for x ranging over {0,1}^S in order."""
    mem = members(smask)
    xs = np.arange(1 << len(mem))
    idx = np.full(xs.shape, base & ~smask, dtype=np.int64)
    for j, i in enumerate(mem):
        idx |= ((xs >> j) & 1) << (i - 1)
    return idx


def section(f, S, a):
    """The S-section g(x) = f(a_S^x) of ``f``.

    Variable i of the section corresponds to the i-th smallest member of S;
    the coordinates of ``a`` inside S are ignored.
    """
    n = f.arity
    smask = mask_of(S, n)
    a = _as_point(a, n)
    idx = _section_index(n, smask, a.bits)
    return FunctionTable._from_scaled(bin(smask).count("1"), f.numerators[idx], f.denominator)


def _masks_of_weight(n, p):
    """All n-bit masks with p bits set, ascending (= colexicographic order)."""
    if p == 0:
        yield 0
        return
    m = (1 << p) - 1
    limit = 1 << n
    while m < limit:
        yield m
        c = m & -m
        r = m + c
        m = (((r ^ m) >> 2) // c) | r


def _submasks_ascending(mask):
    """All submasks of ``mask`` in increasing numeric order."""
    mem = members(mask)
    for x in range(1 << len(mem)):
        out = 0
        for j, i in enumerate(mem):
            if x >> j & 1:
                out |= 1 << (i - 1)
        yield out


def sections_of_arity(f, p):
    """Yield ``(S, a, section)`` for every p-ary section of ``f``.

    Subsets S come in colexicographic order; for each S the base points ``a``
    (zero inside S) come in increasing mask order.
    """
    n = f.arity
    if not 1 <= p <= n:
        raise ArityError(f"section arity p={p} out of range 1..{n}")
    full = (1 << n) - 1
    for smask in _masks_of_weight(n, p):
        S = frozenset(members(smask))
        for base in _submasks_ascending(full & ~smask):
            idx = _section_index(n, smask, base)
            g = FunctionTable._from_scaled(p, f.numerators[idx], f.denominator)
            yield S, Point(n, base), g


def negate_variables(f, S):
    """g(x) = f(x with the coordinates in S flipped)."""
    n = f.arity
    smask = mask_of(S, n)
    idx = np.arange(1 << n) ^ smask
    return f._derived(f.numerators[idx])


def affine_transform(f, alpha, beta):
    """Pointwise ``alpha * f + beta``."""
    alpha = to_rational(alpha)
    beta = to_rational(beta)
    vals = [alpha * v + beta for v in f.values]
    return FunctionTable(vals, arity=f.arity)


def essential_variables(f):
    """Variables k such that f(a_k^0) != f(a_k^1) for some a."""
    n = f.arity
    out = []
    for k in range(1, n + 1):
        lo, hi = K.halves(f.numerators, n, k)
        if np.any(lo != hi):
            out.append(k)
    return frozenset(out)


def is_boolean(f):
    return f.denominator == 1 and bool(np.all((f.numerators == 0) | (f.numerators == 1)))
