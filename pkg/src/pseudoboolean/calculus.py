"""Discrete and lattice partial derivatives on value tables.

All derivatives keep arity n; the differentiated variable simply becomes
inessential.  Operator sequences compose right to left, as in
``O_1 O_2 ... O_p f``: the last operator listed acts on f first.
"""
import enum
import re
from dataclasses import dataclass

from . import _kernels as K
from .core import ArityError, check_index


class Kind(enum.Enum):
    DELTA = "d"
    MEET = "^"
    JOIN = "v"


@dataclass(frozen=True)
class DerivativeOp:
    kind: Kind
    index: int

    def __str__(self):
        return f"{self.kind.value}{self.index}"


def meet_op(k):
    return DerivativeOp(Kind.MEET, k)


def join_op(k):
    return DerivativeOp(Kind.JOIN, k)


def delta(f, k):
    """Delta_k f(x) = f(x_k^1) - f(x_k^0)."""
    check_index(k, f.arity)
    return f._derived(K.delta(f.numerators, f.arity, k))


def meet_derivative(f, k):
    """Pointwise min of f over the two endpoints of each k-edge."""
    check_index(k, f.arity)
    return f._derived(K.meet(f.numerators, f.arity, k))


def join_derivative(f, k):
    """Pointwise max of f over the two endpoints of each k-edge."""
    check_index(k, f.arity)
    return f._derived(K.join(f.numerators, f.arity, k))


def delta2(f, j, k):
    """Second-order difference Delta_j Delta_k f (symmetric in j, k)."""
    if j == k:
        raise ArityError("delta2 needs two distinct variables")
    check_index(j, f.arity)
    return delta(delta(f, k), j)


_APPLY = {Kind.DELTA: delta, Kind.MEET: meet_derivative, Kind.JOIN: join_derivative}


def apply_op(f, op):
    return _APPLY[op.kind](f, op.index)


def apply_sequence(f, ops):
    """Apply ``ops`` right to left; an empty sequence returns f."""
    for op in reversed(list(ops)):
        f = apply_op(f, op)
    return f


_OP_TOKEN = re.compile(r"([\^vd])\s*(\d+)")


def parse_ops(text):
    """Parse tokens like ``"v2 ^1 d3"`` (join, meet, delta) into a list of ops.

    The list keeps the written order; :func:`apply_sequence` applies it right
    to left.
    """
    ops = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        if text[pos].isspace() or text[pos] == ",":
            pos += 1
            continue
        m = _OP_TOKEN.match(text, pos)
        if m is None:
            raise ValueError(f"bad operator token at position {pos}: {text[pos:]!r}")
        ops.append(DerivativeOp(Kind(m.group(1)), int(m.group(2))))
        pos = m.end()
    return ops
