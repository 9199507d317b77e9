"""A pseudo-Boolean function read as a cooperative game.

Players are the variables 1..n and f(C) is the worth of coalition C (the
point whose coordinates in C are 1).  A benevolent player k joins or leaves
only if that raises the worth, which is the join derivative; a malevolent
player does the opposite, the meet derivative.

Players asked in turn act on the function one after another, so the first
player asked contributes the innermost derivative.
"""
import enum
from itertools import permutations, product

import numpy as np

from . import _kernels as K

from .calculus import apply_sequence, delta, join_op, meet_op
from .core import ArityError, Point, check_index, mask_of


class PlayerRole(enum.Enum):
    BENEVOLENT = "ben"
    MALEVOLENT = "mal"


def _coalition_point(f, C):
    return Point(f.arity, mask_of(C, f.arity))


def worth(f, C):
    return f[_coalition_point(f, C).bits]


def marginal_contribution(f, k, C):
    """Delta_k f at coalition C; whether k is in C does not matter."""
    check_index(k, f.arity)
    return delta(f, k)[_coalition_point(f, C).bits]


def _ops_for(order):
    # first asked = applied first = rightmost in the written sequence
    ops = []
    for player, role in order:
        role = PlayerRole(role)
        ops.append(join_op(player) if role is PlayerRole.BENEVOLENT else meet_op(player))
    return list(reversed(ops))


def _check_order(f, order):
    seen = set()
    for player, _ in order:
        check_index(player, f.arity)
        if player in seen:
            raise ValueError(f"player {player} is asked twice")
        seen.add(player)


def sequential_outcome(f, C, order):
    """Final worth when the players in ``order`` are asked one by one.

    ``order`` is a list of ``(player, role)`` pairs, first asked first.
    """
    order = list(order)
    _check_order(f, order)
    g = apply_sequence(f, _ops_for(order))
    return g[_coalition_point(f, C).bits]


def extremal_outcomes(f, roles, C):
    """(least, greatest) outcome over all ask orders of the players in ``roles``.

    ``roles`` maps player -> :class:`PlayerRole`.  The least outcome comes from
    asking the malevolent players first, the greatest from asking the
    benevolent players first.
    """
    roles = {p: PlayerRole(r) for p, r in dict(roles).items()}
    mal = [(p, r) for p, r in sorted(roles.items()) if r is PlayerRole.MALEVOLENT]
    ben = [(p, r) for p, r in sorted(roles.items()) if r is PlayerRole.BENEVOLENT]
    return sequential_outcome(f, C, mal + ben), sequential_outcome(f, C, ben + mal)


def all_outcomes(f, roles, C):
    """Outcome for every ask order, as ``{order: value}``."""
    roles = {p: PlayerRole(r) for p, r in dict(roles).items()}
    out = {}
    for perm in permutations(sorted(roles)):
        order = tuple((p, roles[p]) for p in perm)
        out[order] = sequential_outcome(f, C, order)
    return out


def order_irrelevant(f, P):
    """True iff for every role assignment on P every ask order yields the same
    game (hence the same outcome for every coalition)."""
    P = sorted(set(P))
    for p in P:
        check_index(p, f.arity)
    if len(P) > 7:
        raise ArityError("order audits are limited to 7 players")
    n, nums = f.arity, f.numerators
    for roles in product(PlayerRole, repeat=len(P)):
        steps = [(p, K.join if r is PlayerRole.BENEVOLENT else K.meet) for p, r in zip(P, roles)]
        games = []

        # every ask order, depth first so orders sharing their first players
        # share the work
        def ask(a, waiting):
            if not waiting:
                games.append(a)
                return
            for i, (p, op) in enumerate(waiting):
                ask(op(a, n, p), waiting[:i] + waiting[i + 1:])

        ask(nums, steps)
        if any(not np.array_equal(g, games[0]) for g in games[1:]):
            return False
    return True


def parse_order(text):
    """``"1:mal,2:ben"`` -> [(1, MALEVOLENT), (2, BENEVOLENT)]."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        player, _, role = part.partition(":")
        role = role.strip().lower()
        aliases = {"mal": "mal", "malevolent": "mal", "ben": "ben", "benevolent": "ben"}
        if role not in aliases:
            raise ValueError(f"unknown role {role!r} (use 'ben' or 'mal')")
        out.append((int(player), PlayerRole(aliases[role])))
    return out


def parse_coalition(text):
    return frozenset(int(p) for p in text.split(",") if p.strip())
