"""Vectorised table kernels.

Every kernel works on arrays of shape ``(..., 2**n)`` holding the (scaled
integer) values of one or more functions over the n-cube.  The leading axes
are batch axes.  Internally a table is viewed as a cube of shape
``(..., 2, ..., 2)``; since x_1 is the least significant bit of the table
index, variable ``k`` lives on cube axis ``-k``.
"""
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np


def cube(a, n):
    return a.reshape(a.shape[:a.ndim - 1] + (2,) * n)


def flat(c, n):
    return c.reshape(c.shape[:c.ndim - n] + (1 << n,))


def var_axis(c, n, k):
    """Absolute axis of variable k in cube view ``c`` of arity n."""
    return c.ndim - k


def halves(a, n, k):
    """Return (f(x_k^0), f(x_k^1)) as cubes with the k-th axis removed."""
    c = cube(a, n)
    ax = var_axis(c, n, k)
    return np.take(c, 0, axis=ax), np.take(c, 1, axis=ax)


def _edges(a, n, k):
    # (..., 2**(n-k), 2, 2**(k-1)): the middle axis is x_k
    return a.reshape(a.shape[:-1] + (1 << (n - k), 2, 1 << (k - 1)))


def _edge_op(a, n, k, op):
    e = _edges(a, n, k)
    r = op(e[..., 0:1, :], e[..., 1:2, :])
    return np.broadcast_to(r, e.shape).reshape(a.shape)


def delta(a, n, k):
    return _edge_op(a, n, k, lambda lo, hi: hi - lo)


def meet(a, n, k):
    return _edge_op(a, n, k, np.minimum)


def join(a, n, k):
    return _edge_op(a, n, k, np.maximum)


@lru_cache(maxsize=None)
def partners(n):
    """(n, 2**n) array: row k-1 maps x to x with bit k flipped."""
    idx = np.arange(1 << n)
    out = idx[None, :] ^ (1 << np.arange(n))[:, None]
    out.flags.writeable = False
    return out


def all_meets_joins(a, n):
    """Meet and join derivatives for every k, each of shape (..., n, 2**n)."""
    other = a[..., partners(n)]
    here = a[..., None, :]
    return np.minimum(here, other), np.maximum(here, other)


def _collapse(c, axis, op):
    lo = [slice(None)] * c.ndim
    hi = [slice(None)] * c.ndim
    lo[axis] = slice(0, 1)
    hi[axis] = slice(1, 2)
    return op(c[tuple(lo)], c[tuple(hi)])


def reduce_cube(c, n, meets, joins, joins_first):
    """Collapse the variables in ``meets``/``joins`` of cube ``c``.

    With ``joins_first`` False the meet derivatives are applied innermost,
    which is the pointwise least of all interleavings.  Collapsed axes are
    kept with length one.
    """
    steps = [(k, np.minimum) for k in meets]
    if joins_first:
        steps = [(k, np.maximum) for k in joins] + steps
    else:
        steps = steps + [(k, np.maximum) for k in joins]
    for k, op in steps:
        c = _collapse(c, c.ndim - k, op)
    return c


# gather all sections at once only while the gathered array stays this small
GATHER_LIMIT = 1 << 23


@lru_cache(maxsize=64)
def section_indices(n, p):
    """Index array (C(n,p), 2**(n-p), 2**p) of all p-ary sections.

    Entry [s, b, x] is the table index of f(a_S^x) for the s-th p-subset S in
    lexicographic order and the b-th base point of the complement.
    """
    subsets = list(combinations(range(1, n + 1), p))
    rest_size = 1 << (n - p)
    xs = np.arange(1 << p)
    bs = np.arange(rest_size)
    out = np.zeros((len(subsets), rest_size, 1 << p), dtype=np.int64)
    for s, S in enumerate(subsets):
        rest = [i for i in range(1, n + 1) if i not in S]
        idx = np.zeros((rest_size, 1 << p), dtype=np.int64)
        for j, i in enumerate(S):
            idx |= ((xs[None, :] >> j) & 1) << (i - 1)
        for j, i in enumerate(rest):
            idx |= ((bs[:, None] >> j) & 1) << (i - 1)
        out[s] = idx
    out.flags.writeable = False
    return out


def _gathered(a, n, p):
    if a.size * comb(n, p) > GATHER_LIMIT:
        return None
    return a[..., section_indices(n, p)]


def local_violations(a, n, p):
    """Boolean array over the batch: True where the function is NOT p-locally monotone.

    Section scan: for each k and each (p-1)-subset S of the other variables,
    Delta_k must not take both signs on any S-section.
    """
    batch = a.shape[:a.ndim - 1]
    bad = np.zeros(batch, dtype=bool)
    if p <= 1 or n == 0:
        return bad
    sec = _gathered(a, n, p)
    if sec is not None:
        # every p-section must be monotone in each of its p variables
        nb = len(batch)
        for k in range(1, p + 1):
            lo, hi = halves(sec, p, k)
            d = (hi - lo).reshape(sec.shape[:-1] + (-1,))
            hit = (d.min(axis=-1) < 0) & (d.max(axis=-1) > 0)
            bad |= hit.reshape(batch + (-1,)).any(axis=nb)
        return bad
    for k in range(1, n + 1):
        lo, hi = halves(a, n, k)
        d = hi - lo
        # d has n-1 trailing axes; axis for variable i != k
        nb = d.ndim - (n - 1)
        others = [i for i in range(1, n + 1) if i != k]
        pos = {i: nb + (n - 1) - (i if i < k else i - 1) for i in others}
        for S in combinations(others, p - 1):
            axes = tuple(pos[i] for i in S)
            mn = d.min(axis=axes)
            mx = d.max(axis=axes)
            hit = (mn < 0) & (mx > 0)
            rest = tuple(range(nb, hit.ndim))
            bad |= hit.any(axis=rest) if rest else hit
    return bad


def local_degrees(a, n):
    """Degree of local monotonicity for every function of the batch."""
    batch = a.shape[:a.ndim - 1]
    deg = np.full(batch, n, dtype=np.int64)
    if n <= 1:
        return deg
    deg[...] = 1
    alive = np.ones(batch, dtype=bool)
    for p in range(2, n + 1):
        ok = ~local_violations(a, n, p) & alive
        deg[ok] = p
        alive = ok
        if not alive.any():
            break
    return deg


def mixed_splits(K):
    """Yield (meets, joins) for every split of K into two non-empty parts."""
    K = tuple(K)
    p = len(K)
    for m in range(1, (1 << p) - 1):
        meets = tuple(K[i] for i in range(p) if m >> i & 1)
        joins = tuple(K[i] for i in range(p) if not m >> i & 1)
        yield meets, joins


def permutability_violations(a, n, p):
    """True where the batch functions do NOT have p-permutable lattice derivatives."""
    batch = a.shape[:a.ndim - 1]
    bad = np.zeros(batch, dtype=bool)
    if p <= 1:
        return bad
    nb = len(batch)
    sec = _gathered(a, n, p)
    if sec is not None:
        # f is p-permutable iff every p-ary section is fully permutable
        c = cube(sec, p)
        for meets, joins in mixed_splits(range(1, p + 1)):
            least = reduce_cube(c, p, meets, joins, joins_first=False)
            most = reduce_cube(c, p, meets, joins, joins_first=True)
            bad |= (least != most).reshape(batch + (-1,)).any(axis=nb)
            if bad.all():
                break
        return bad
    c = cube(a, n)
    for K in combinations(range(1, n + 1), p):
        for meets, joins in mixed_splits(K):
            least = reduce_cube(c, n, meets, joins, joins_first=False)
            most = reduce_cube(c, n, meets, joins, joins_first=True)
            diff = least != most
            bad |= diff.reshape(batch + (-1,)).any(axis=nb)
    return bad


def permutability_degrees(a, n):
    batch = a.shape[:a.ndim - 1]
    deg = np.full(batch, n, dtype=np.int64)
    if n <= 1:
        return deg
    deg[...] = 1
    alive = np.ones(batch, dtype=bool)
    for p in range(2, n + 1):
        ok = ~permutability_violations(a, n, p) & alive
        deg[ok] = p
        alive = ok
        if not alive.any():
            break
    return deg


def popcounts(size):
    idx = np.arange(size)
    out = np.zeros(size, dtype=np.int64)
    while idx.any():
        out += idx & 1
        idx = idx >> 1
    return out


def mobius(a, n):
    """Subset-difference transform: table values -> multilinear coefficients."""
    c = cube(a.copy(), n)
    for k in range(1, n + 1):
        ax = c.ndim - k
        lo = np.take(c, 0, axis=ax)
        idx = [slice(None)] * c.ndim
        idx[ax] = 1
        c[tuple(idx)] = np.take(c, 1, axis=ax) - lo
    return flat(c, n)


def zeta(a, n):
    """Inverse of :func:`mobius`: coefficients -> table values."""
    c = cube(a.copy(), n)
    for k in range(1, n + 1):
        ax = c.ndim - k
        lo = np.take(c, 0, axis=ax)
        idx = [slice(None)] * c.ndim
        idx[ax] = 1
        c[tuple(idx)] = np.take(c, 1, axis=ax) + lo
    return flat(c, n)
