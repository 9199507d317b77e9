"""Exhaustive and randomized verification of the structural claims.

Each claim is checked over all Boolean functions of arity 1..max_arity and,
where it applies to pseudo-Boolean functions, over seeded random rational
tables.  A claim passes when no counterexample turns up.
"""
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from . import _kernels as K
from .calculus import apply_sequence, join_derivative, meet_derivative
from .core import FunctionTable, Point, affine_transform, members, negate_variables
from .decomposition import decompose, evaluate_decomposition
from .families import boolean_tables
from .games import PlayerRole, _ops_for, extremal_outcomes, order_irrelevant
from .monotonicity import batch_is_p_locally_monotone, batch_local_degrees, is_monotone
from .permutability import (batch_has_p_permutable, batch_has_p_permutable_brute,
                            batch_permutability_degrees)
from .reconstruction import ParityPair, Unique, profile_of, reconstruct
from .symmetric import (SymmetricSequence, seq_local_monotonicity_degree, seq_meet, seq_join,
                        seq_permutability_degree, seq_to_function)


@dataclass
class SweepResult:
    claim: str
    population: str
    total: int = 0
    passed: int = 0
    counterexample: dict | None = None
    seconds: float = 0.0
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return self.counterexample is None and self.passed == self.total

    def as_dict(self):
        return {"claim": self.claim, "population": self.population, "total": self.total,
                "passed": self.passed, "ok": self.ok, "counterexample": self.counterexample,
                "seconds": round(self.seconds, 3), "notes": self.notes}


@dataclass
class SweepConfig:
    max_arity: int = 4
    samples: int = 1000
    seed: int = 0
    max_random_arity: int = 6


CLAIMS = {}


def claim(name, description):
    def register(fn):
        CLAIMS[name] = (description, fn)
        return fn
    return register


def _row_table(row, n):
    return {"arity": n, "values": [str(int(v)) for v in row]}


def _record(result, ok_mask, rows, n, what=""):
    """Fold a boolean verdict array into ``result``."""
    ok_mask = np.asarray(ok_mask, dtype=bool)
    result.total += ok_mask.size
    result.passed += int(ok_mask.sum())
    if result.counterexample is None and not ok_mask.all():
        i = int(np.flatnonzero(~ok_mask)[0])
        result.counterexample = dict(_row_table(rows[i], n), detail=what)


def random_tables(config, min_arity=1, max_arity=None):
    """Seeded random rational tables, grouped as {n: [FunctionTable, ...]}.

    Values are drawn from a small set so that ties (which matter for every
    sign test) are common.
    """
    max_arity = config.max_random_arity if max_arity is None else max_arity
    rng = np.random.default_rng(config.seed)
    out = {}
    for _ in range(config.samples):
        n = int(rng.integers(min_arity, max_arity + 1))
        den = int(rng.choice([1, 2, 3, 6]))
        nums = rng.integers(-4, 5, size=1 << n)
        out.setdefault(n, []).append(FunctionTable([Fraction(int(v), den) for v in nums], arity=n))
    return out


def _random_batches(config, min_arity=1, max_arity=None):
    for n, tables in sorted(random_tables(config, min_arity, max_arity).items()):
        rows = np.stack([t.numerators.astype(np.int64) for t in tables])
        yield n, rows


def _boolean_batches(config, min_arity=1):
    for n in range(min_arity, config.max_arity + 1):
        yield n, boolean_tables(n)


def _both(config, min_arity=1, max_random_arity=None):
    yield from _boolean_batches(config, min_arity)
    yield from _random_batches(config, min_arity, max_random_arity)


def _population(config, boolean=True, random=True, min_arity=1, max_random=None):
    parts = []
    if boolean:
        parts.append(f"all Boolean functions of arity {min_arity}..{config.max_arity}")
    if random:
        mr = config.max_random_arity if max_random is None else max_random
        parts.append(f"{config.samples} random rational tables of arity {min_arity}..{mr} "
                     f"(seed {config.seed})")
    return " + ".join(parts)


def _local_flags(rows, n):
    return {p: batch_is_p_locally_monotone(rows, n, p) for p in range(1, n + 1)}


def _perm_flags(rows, n):
    return {p: batch_has_p_permutable(rows, n, p) for p in range(1, n + 1)}


@claim("boolean-2local-iff-2permutable",
       "Boolean f is 2-locally monotone iff its meet and join derivatives 2-permute")
def _boolean_2local(config):
    r = SweepResult("boolean-2local-iff-2permutable", _population(config, random=False, min_arity=2))
    for n, rows in _boolean_batches(config, 2):
        a = batch_is_p_locally_monotone(rows, n, 2)
        b = batch_has_p_permutable(rows, n, 2)
        _record(r, a == b, rows, n)
    return r


@claim("local-implies-permutable", "p-local monotonicity implies p-permutable lattice derivatives")
def _local_implies_perm(config):
    r = SweepResult("local-implies-permutable", _population(config))
    for n, rows in _both(config):
        loc = batch_local_degrees(rows, n)
        perm = batch_permutability_degrees(rows, n)
        _record(r, perm >= loc, rows, n)
    return r


@claim("permutable-chain", "(p+1)-permutable implies p-permutable")
def _perm_chain(config):
    r = SweepResult("permutable-chain", _population(config))
    for n, rows in _both(config):
        flags = _perm_flags(rows, n)
        ok = np.ones(len(rows), dtype=bool)
        for p in range(1, n):
            ok &= ~flags[p + 1] | flags[p]
        _record(r, ok, rows, n)
    return r


@claim("local-chain", "p-locally monotone implies p'-locally monotone for p' <= p")
def _local_chain(config):
    r = SweepResult("local-chain", _population(config))
    for n, rows in _both(config):
        flags = _local_flags(rows, n)
        ok = np.ones(len(rows), dtype=bool)
        for p in range(1, n):
            ok &= ~flags[p + 1] | flags[p]
        _record(r, ok, rows, n)
    return r


def _derivative_degrees(rows, n):
    """Local degrees of every meet and join derivative: shape (2n, m).

    Derivatives of Boolean tables repeat a lot, so degrees are computed once
    per distinct table.
    """
    derived = np.concatenate([op(rows, n, j) for j in range(1, n + 1) for op in (K.meet, K.join)])
    uniq, inverse = np.unique(derived, axis=0, return_inverse=True)
    return batch_local_degrees(uniq, n)[inverse.ravel()].reshape(2 * n, len(rows))


@claim("derivative-degree-drop",
       "meet and join derivatives of a p-locally monotone f are (p-1)-locally monotone")
def _degree_drop(config):
    r = SweepResult("derivative-degree-drop", _population(config))
    for n, rows in _both(config):
        deg = batch_local_degrees(rows, n)
        _record(r, np.all(_derivative_degrees(rows, n) >= deg - 1, axis=0), rows, n)
    return r


@claim("monotone-derivatives", "lattice derivatives of a monotone function are monotone")
def _monotone_derivatives(config):
    r = SweepResult("monotone-derivatives", _population(config))
    for n, rows in _both(config):
        mono = batch_local_degrees(rows, n) == n
        _record(r, ~mono | np.all(_derivative_degrees(rows, n) == n, axis=0), rows, n)
    return r


@claim("reconstruction-roundtrip",
       "the derivative profile determines f, except for the two parity-type functions")
def _reconstruction(config):
    r = SweepResult("reconstruction-roundtrip", _population(config))
    for n, rows in _both(config):
        ok = np.ones(len(rows), dtype=bool)
        pairs = 0
        for i, row in enumerate(rows):
            f = FunctionTable._from_scaled(n, row)
            res = reconstruct(profile_of(f))
            if isinstance(res, Unique):
                ok[i] = res.table == f
            elif isinstance(res, ParityPair):
                pairs += 1
                ok[i] = f in res.tables(n) and len(set(f.values)) == 2
            else:
                ok[i] = False
        _record(r, ok, rows, n)
        if rows.max() <= 1 and rows.min() >= 0 and len(rows) == 1 << (1 << n):
            r.notes.append(f"arity {n}: {len(rows) - pairs} unique, {pairs} parity-type")
            if pairs != 2 and r.counterexample is None:
                r.counterexample = {"arity": n, "detail": f"{pairs} parity-type functions, expected 2"}
    return r


@claim("binary-nonmonotone-census", "exactly 2 of the 16 binary Boolean functions are not monotone")
def _census(config):
    r = SweepResult("binary-nonmonotone-census", "all 16 Boolean functions of arity 2")
    rows = boolean_tables(2)
    nonmono = int((batch_local_degrees(rows, 2) < 2).sum())
    r.total = 1
    r.passed = int(nonmono == 2)
    r.notes.append(f"{nonmono} non-monotone, {16 - nonmono} 2-locally monotone")
    if nonmono != 2:
        r.counterexample = {"detail": f"found {nonmono} non-monotone functions"}
    return r


@claim("section-vs-definition-scan",
       "section scan and pairwise definition scan agree on p-local monotonicity")
def _scan_agreement(config):
    r = SweepResult("section-vs-definition-scan", _population(config))
    for n, rows in _both(config):
        ok = np.ones(len(rows), dtype=bool)
        for p in range(1, n + 1):
            a = batch_is_p_locally_monotone(rows, n, p, method="sections")
            b = batch_is_p_locally_monotone(rows, n, p, method="definition")
            ok &= a == b
        _record(r, ok, rows, n)
    return r


@claim("extremal-vs-brute-permutability",
       "comparing the two extremal orderings agrees with enumerating all p! orderings")
def _extremal_vs_brute(config):
    r = SweepResult("extremal-vs-brute-permutability",
                    _population(config) + "; p <= 5 on random tables")
    for n, rows in _boolean_batches(config):
        ok = np.ones(len(rows), dtype=bool)
        for p in range(1, n + 1):
            ok &= batch_has_p_permutable(rows, n, p) == batch_has_p_permutable_brute(rows, n, p)
        _record(r, ok, rows, n)
    for n, rows in _random_batches(config):
        ok = np.ones(len(rows), dtype=bool)
        for p in range(1, min(n, 5) + 1):
            ok &= batch_has_p_permutable(rows, n, p) == batch_has_p_permutable_brute(rows, n, p)
        _record(r, ok, rows, n)
    return r


def _binary_coefficients(rows, n):
    """a1, a2, a12 for every binary section: arrays (m, sections)."""
    sec = rows[:, K.section_indices(n, 2)].reshape(len(rows), -1, 4)
    g00, g10, g01, g11 = (sec[..., i] for i in range(4))
    return sec, g10 - g00, g01 - g00, g11 - g10 - g01 + g00


@claim("boolean-forbidden-sections",
       "Boolean f is 2-locally monotone iff neither XOR nor XNOR is a section")
def _forbidden(config):
    r = SweepResult("boolean-forbidden-sections", _population(config, random=False, min_arity=2))
    for n, rows in _boolean_batches(config, 2):
        sec, *_ = _binary_coefficients(rows, n)
        xor = np.all(sec == np.array([0, 1, 1, 0]), axis=-1)
        xnor = np.all(sec == np.array([1, 0, 0, 1]), axis=-1)
        has = (xor | xnor).any(axis=1)
        _record(r, batch_is_p_locally_monotone(rows, n, 2) == ~has, rows, n)
    return r


@claim("binary-coefficient-2local",
       "f is 2-locally monotone iff every binary section has a1(a1+a12) >= 0 and a2(a2+a12) >= 0")
def _coef_2local(config):
    r = SweepResult("binary-coefficient-2local", _population(config, min_arity=2))
    for n, rows in _both(config, 2):
        _, a1, a2, a12 = _binary_coefficients(rows, n)
        cond = np.all((a1 * (a1 + a12) >= 0) & (a2 * (a2 + a12) >= 0), axis=1)
        _record(r, batch_is_p_locally_monotone(rows, n, 2) == cond, rows, n)
    return r


@claim("binary-coefficient-2permutable",
       "f is 2-permutable iff every binary section has a1 a12 >= 0 or a2 a12 >= 0 "
       "or |a12| <= max(|a1|, |a2|)")
def _coef_2perm(config):
    r = SweepResult("binary-coefficient-2permutable", _population(config, min_arity=2))
    for n, rows in _both(config, 2):
        _, a1, a2, a12 = _binary_coefficients(rows, n)
        cond = np.all((a1 * a12 >= 0) | (a2 * a12 >= 0)
                      | (np.abs(a12) <= np.maximum(np.abs(a1), np.abs(a2))), axis=1)
        _record(r, batch_has_p_permutable(rows, n, 2) == cond, rows, n)
    return r


@claim("boolean-lipschitz",
       "Boolean f is locally monotone iff |Delta_k f(x) - Delta_k f(y)| <= d(x, y) off k")
def _lipschitz(config):
    r = SweepResult("boolean-lipschitz", _population(config, random=False, min_arity=2))
    for n, rows in _boolean_batches(config, 2):
        size = 1 << n
        idx = np.arange(size)
        dist = K.popcounts(size)[idx[:, None] ^ idx[None, :]]
        ok_l = np.ones(len(rows), dtype=bool)
        for k in range(1, n + 1):
            bit = 1 << (k - 1)
            pts = idx[(idx & bit) == 0]
            d = rows[:, pts | bit] - rows[:, pts]
            gap = np.abs(d[:, :, None] - d[:, None, :])
            ok_l &= np.all(gap <= dist[np.ix_(pts, pts)][None], axis=(1, 2))
        _record(r, batch_is_p_locally_monotone(rows, n, 2) == ok_l, rows, n)
    return r


@claim("monotone-iff-pseudo-polynomial",
       "f is monotone iff it decomposes as a lattice polynomial of unary maps")
def _pseudo_poly(config):
    arity = min(config.max_arity, 3)
    r = SweepResult("monotone-iff-pseudo-polynomial",
                    f"all Boolean functions of arity 1..{arity} + "
                    + _population(config, boolean=False))
    batches = [(n, boolean_tables(n)) for n in range(1, arity + 1)]
    batches += list(_random_batches(config))
    for n, rows in batches:
        ok = np.ones(len(rows), dtype=bool)
        for i, row in enumerate(rows):
            f = FunctionTable._from_scaled(n, row)
            d = decompose(f)
            if d is None:
                ok[i] = not is_monotone(f)
            else:
                ok[i] = all(evaluate_decomposition(d, Point(n, x)) == f[x] for x in range(1 << n))
        _record(r, ok, rows, n)
    return r


def _random_sequences(config, max_n=8):
    rng = np.random.default_rng(config.seed + 1)
    for _ in range(config.samples):
        n = int(rng.integers(1, max_n + 1))
        yield SymmetricSequence(tuple(int(v) for v in rng.integers(-3, 4, size=n + 1)))


@claim("symmetric-local-iff-permutable",
       "a symmetric f is p-locally monotone iff it has p-permutable lattice derivatives")
def _symmetric(config):
    r = SweepResult("symmetric-local-iff-permutable",
                    f"{config.samples} random symmetric sequences of arity 1..8 (seed {config.seed})")
    for s in _random_sequences(config):
        f = seq_to_function(s)
        n = s.n
        loc = int(batch_local_degrees(f.numerators[None], n)[0])
        perm = int(batch_permutability_degrees(f.numerators[None], n)[0])
        seq = seq_local_monotonicity_degree(s)
        ok = loc == perm == seq == seq_permutability_degree(s)
        if n >= 1:
            ok &= seq_to_function(seq_meet(s)) == _drop_last(meet_derivative(f, n))
            ok &= seq_to_function(seq_join(s)) == _drop_last(join_derivative(f, n))
        r.total += 1
        r.passed += int(ok)
        if not ok and r.counterexample is None:
            r.counterexample = {"sequence": str(s), "local": loc, "permutable": perm, "sequence_degree": seq}
    return r


def _drop_last(f):
    """Drop the (inessential) last variable of f."""
    n = f.arity
    return FunctionTable._from_scaled(n - 1, f.numerators[: 1 << (n - 1)], f.denominator)


@claim("operator-laws",
       "idempotence, order preservation, same-kind commutation and the mixed inequality")
def _operator_laws(config):
    r = SweepResult("operator-laws", _population(config, boolean=False, min_arity=2))
    rng = np.random.default_rng(config.seed + 2)
    for n, rows in _random_batches(config, 2):
        ok = np.ones(len(rows), dtype=bool)
        bumped = rows + rng.integers(0, 3, size=rows.shape)      # bumped >= rows
        for k in range(1, n + 1):
            mk, jk = K.meet(rows, n, k), K.join(rows, n, k)
            ok &= np.all(K.meet(mk, n, k) == mk, axis=1) & np.all(K.join(jk, n, k) == jk, axis=1)
            ok &= np.all(mk <= rows, axis=1) & np.all(rows <= jk, axis=1)
            ok &= np.all(mk <= K.meet(bumped, n, k), axis=1)
            ok &= np.all(jk <= K.join(bumped, n, k), axis=1)
            for j in range(1, n + 1):
                if j == k:
                    continue
                ok &= np.all(K.meet(mk, n, j) == K.meet(K.meet(rows, n, j), n, k), axis=1)
                ok &= np.all(K.join(jk, n, j) == K.join(K.join(rows, n, j), n, k), axis=1)
                ok &= np.all(K.join(K.meet(rows, n, j), n, k) <= K.meet(jk, n, j), axis=1)
        _record(r, ok, rows, n)
    return r


@claim("invariance", "both degrees are unchanged by alpha f + beta (alpha != 0) and by negating variables")
def _invariance(config):
    r = SweepResult("invariance", _population(config, boolean=False))
    rng = np.random.default_rng(config.seed + 3)
    for n, tables in sorted(random_tables(config).items()):
        rows = np.stack([t.numerators.astype(np.int64) for t in tables])
        loc = batch_local_degrees(rows, n)
        perm = batch_permutability_degrees(rows, n)
        variants = []
        for t in tables:
            alpha = Fraction(int(rng.choice([-3, -2, -1, 1, 2, 5])), int(rng.integers(1, 4)))
            beta = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
            S = [i for i in range(1, n + 1) if rng.random() < 0.5]
            variants.append(negate_variables(affine_transform(t, alpha, beta), S))
        vrows = np.stack([v.numerators.astype(np.int64) for v in variants])
        ok = (batch_local_degrees(vrows, n) == loc) & (batch_permutability_degrees(vrows, n) == perm)
        _record(r, ok, rows, n)
    return r


@claim("game-extremal-bounds",
       "asking malevolent players first gives the least outcome, benevolent first the greatest; "
       "ask order never matters iff the derivatives are p-permutable")
def _games(config):
    arity = min(config.max_arity, 3)
    r = SweepResult("game-extremal-bounds",
                    f"all Boolean functions of arity 1..{arity} + "
                    + _population(config, boolean=False, max_random=4))
    rng = np.random.default_rng(config.seed + 4)
    for n, rows in [(n, boolean_tables(n)) for n in range(1, arity + 1)]:
        perm = batch_permutability_degrees(rows, n)
        ok = np.ones(len(rows), dtype=bool)
        for i, row in enumerate(rows):
            f = FunctionTable._from_scaled(n, row)
            for p in range(2, n + 1):
                every = all(order_irrelevant(f, P) for P in combinations(range(1, n + 1), p))
                ok[i] &= every == (perm[i] >= p)
        _record(r, ok, rows, n, "order irrelevance disagrees with permutability")
    for n, rows in _random_batches(config, 1, 4):
        ok = np.ones(len(rows), dtype=bool)
        for i, row in enumerate(rows):
            f = FunctionTable._from_scaled(n, row)
            roles = {k: PlayerRole.BENEVOLENT if rng.random() < 0.5 else PlayerRole.MALEVOLENT
                     for k in range(1, n + 1)}
            least = [0] * (1 << n)
            greatest = [0] * (1 << n)
            for x in range(1 << n):
                C = members(x)
                least[x], greatest[x] = extremal_outcomes(f, roles, C)
            for order in permutations(sorted(roles)):
                g = apply_sequence(f, _ops_for([(k, roles[k]) for k in order]))
                ok[i] &= all(least[x] <= g[x] <= greatest[x] for x in range(1 << n))
        _record(r, ok, rows, n, "an interleaving escapes the extremal bounds")
    return r


def run(names=None, config=None):
    """Run the selected claims (all by default) and return their results."""
    config = config or SweepConfig()
    names = list(CLAIMS) if not names else list(names)
    unknown = [n for n in names if n not in CLAIMS]
    if unknown:
        raise KeyError(f"unknown claim(s): {', '.join(unknown)}")
    results = []
    for name in names:
        t0 = time.perf_counter()
        res = CLAIMS[name][1](config)
        res.seconds = time.perf_counter() - t0
        results.append(res)
    return sorted(results, key=lambda r: r.claim)
