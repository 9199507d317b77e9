"""Command-line front end.

Exit codes: 0 success, 1 a sweep found a counterexample, 2 usage or parse error.
"""
import argparse
import json
import sys

from . import sweep as sweep_mod
from .calculus import apply_sequence, parse_ops
from .core import ArityError, essential_variables, is_boolean, sections_of_arity
from .decomposition import decompose
from .games import (extremal_outcomes, marginal_contribution, parse_coalition, parse_order,
                    sequential_outcome, worth)
from .io import FormatError, read_profile, read_table, table_to_json
from .monotonicity import forbidden_binary_sections, is_monotone, local_monotonicity_degree
from .permutability import (BRUTE_MAX_P, brute_force_counterexample, max_permutability_degree,
                            permutability_counterexample)
from .polyform import ExpressionSyntaxError, poly_from_table, pretty_print, table_from_expression
from .reconstruction import ParityPair, Unique, reconstruct
from .symmetric import (detect_symmetric, parse_sequence, seq_join, seq_local_monotonicity_degree,
                        seq_meet, seq_permutability_degree, seq_to_function)


class UsageError(Exception):
    pass


def _values(f):
    return [str(v) for v in f.values]


def _emit(args, payload, text_lines):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def load_function(args):
    """The function selected by --table, --expr or --seq, plus an input echo."""
    if args.table is not None:
        f = read_table(args.table)
        return f, {"source": "table", "path": args.table, "arity": f.arity}
    if args.expr is not None:
        f = table_from_expression(args.expr, args.arity)
        return f, {"source": "expr", "expr": args.expr, "arity": f.arity}
    if getattr(args, "seq", None) is not None:
        s = parse_sequence(args.seq)
        return seq_to_function(s), {"source": "seq", "seq": str(s), "arity": s.n}
    raise UsageError("give the function with --table, --expr or --seq")


def _add_input(p, seq=True):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--table", metavar="PATH", help="truth-table file (text or JSON)")
    g.add_argument("--expr", metavar="TEXT", help='polynomial expression, e.g. "x1 - x1*x2"')
    if seq:
        g.add_argument("--seq", metavar="A0,A1,...", help="symmetric sequence alpha_0..alpha_n")
    p.add_argument("--arity", type=int, default=None,
                   help="arity for --expr when it exceeds the largest variable index")


# -- commands -----------------------------------------------------------------

def analysis_report(f, echo):
    n = f.arity
    loc = local_monotonicity_degree(f)
    try:
        perm = max_permutability_degree(f)
        perm_json = {"max_p": perm.max_p,
                     "counterexample": perm.counterexample.as_dict() if perm.counterexample else None}
    except ValueError as exc:
        perm_json = {"max_p": None, "counterexample": None, "note": str(exc)}
    sym = detect_symmetric(f)
    d = decompose(f) if loc.monotone else None
    return {
        "input": echo,
        "values": _values(f),
        "polynomial": pretty_print(poly_from_table(f)),
        "boolean": is_boolean(f),
        "essential_variables": sorted(essential_variables(f)),
        "degree": loc.degree,
        "monotone": loc.monotone,
        "witness": loc.witness.as_dict() if loc.witness else None,
        "permutability": perm_json,
        "symmetric": str(sym) if sym is not None and n > 0 else None,
        "forbidden_sections": [s.as_dict() for s in forbidden_binary_sections(f)],
        "decomposition": d.as_dict() if d is not None else None,
    }


def cmd_analyze(args):
    f, echo = load_function(args)
    rep = analysis_report(f, echo)
    lines = [f"arity: {f.arity}",
             f"values: {' '.join(rep['values'])}",
             f"polynomial: {rep['polynomial']}",
             f"boolean: {rep['boolean']}",
             f"essential variables: {rep['essential_variables']}",
             f"local monotonicity degree: {rep['degree']}" + ("  (monotone)" if rep["monotone"] else "")]
    if rep["witness"]:
        w = rep["witness"]
        lines.append(f"  witness: k={w['k']} x={tuple(w['x'])} d={w['delta_x']}  "
                     f"y={tuple(w['y'])} d={w['delta_y']}")
    perm = rep["permutability"]
    lines.append(f"max permutability degree: {perm['max_p'] if perm['max_p'] is not None else perm['note']}")
    if perm["counterexample"]:
        c = perm["counterexample"]
        lines.append(f"  counterexample: {c['first']} = {c['first_value']} but "
                     f"{c['second']} = {c['second_value']} at {tuple(c['point'])}")
    if rep["symmetric"]:
        lines.append(f"symmetric sequence: {rep['symmetric']}")
    lines.append(f"forbidden binary sections: {len(rep['forbidden_sections'])}")
    for s in rep["forbidden_sections"][:10]:
        lines.append(f"  vars ({s['j']},{s['k']}) base {tuple(s['base'])}: {s['kind']}")
    if rep["decomposition"]:
        d = rep["decomposition"]
        lines.append(f"pseudo-polynomial: range [{d['min']}, {d['max']}], "
                     f"orientations {', '.join(d['orientations'])}")
    _emit(args, rep, lines)
    return 0


def cmd_derive(args):
    f, echo = load_function(args)
    ops = parse_ops(args.op)
    g = apply_sequence(f, ops)
    out = {"input": echo, "ops": " ".join(map(str, ops)), "arity": g.arity,
           "values": _values(g), "polynomial": pretty_print(poly_from_table(g))}
    _emit(args, out, [f"{out['ops']} f = {out['polynomial']}", f"values: {' '.join(out['values'])}"])
    return 0


def cmd_sections(args):
    f, echo = load_function(args)
    rows = []
    for S, a, g in sections_of_arity(f, args.p):
        rows.append({"vars": sorted(S), "base": list(a.to_tuple()), "values": _values(g),
                     "monotone": is_monotone(g)})
    out = {"input": echo, "p": args.p, "sections": rows}
    lines = [f"{len(rows)} sections of arity {args.p}"]
    for r in rows:
        flag = "" if r["monotone"] else "  not monotone"
        lines.append(f"vars {tuple(r['vars'])} base {tuple(r['base'])}: {' '.join(r['values'])}{flag}")
    _emit(args, out, lines)
    return 0


def cmd_permute(args):
    f, echo = load_function(args)
    if args.max:
        rep = max_permutability_degree(f)
        ce = rep.counterexample
        out = {"input": echo, "max_p": rep.max_p, "counterexample": ce.as_dict() if ce else None}
        head = f"max permutability degree: {rep.max_p}"
    else:
        if args.p is None:
            raise UsageError("permute needs --p P or --max")
        if args.brute:
            if args.p > BRUTE_MAX_P:
                raise UsageError(f"--brute supports p <= {BRUTE_MAX_P}")
            ce = brute_force_counterexample(f, args.p)
        else:
            ce = permutability_counterexample(f, args.p)
        out = {"input": echo, "p": args.p, "permutable": ce is None,
               "counterexample": ce.as_dict() if ce else None}
        head = f"{args.p}-permutable: {'yes' if ce is None else 'no'}"
    lines = [head]
    if ce:
        lines.append(f"  {' '.join(map(str, ce.first))} f = {ce.first_value} but "
                     f"{' '.join(map(str, ce.second))} f = {ce.second_value} at {ce.point}")
    _emit(args, out, lines)
    return 0


def cmd_reconstruct(args):
    res = reconstruct(read_profile(args.profile))
    if isinstance(res, Unique):
        out = {"kind": "unique", "tables": [table_to_json(res.table)]}
        lines = ["unique", "values: " + " ".join(_values(res.table))]
    elif isinstance(res, ParityPair):
        n = read_profile(args.profile).arity
        even, odd = res.tables(n)
        out = {"kind": "parity-pair", "u": str(res.u), "v": str(res.v),
               "tables": [table_to_json(even), table_to_json(odd)]}
        lines = [f"parity pair {{{res.u}, {res.v}}}: two functions share this profile",
                 "even: " + " ".join(_values(even)), "odd:  " + " ".join(_values(odd))]
    else:
        out = {"kind": "inconsistent", "reason": res.reason, "k": res.k,
               "point": list(res.point.to_tuple()) if res.point else None, "detail": res.detail}
        where = f" (k={res.k}, x={res.point})" if res.k else ""
        lines = [f"inconsistent: {res.reason}{where}: {res.detail}"]
    _emit(args, out, lines)
    return 0


def cmd_symmetric(args):
    if args.seq is not None:
        s = parse_sequence(args.seq)
    else:
        f, _ = load_function(args)
        s = detect_symmetric(f)
        if s is None:
            raise UsageError("the function is not symmetric")
    out = {"seq": str(s), "arity": s.n, "degree": seq_local_monotonicity_degree(s),
           "permutability_degree": seq_permutability_degree(s)}
    if s.n >= 1:
        out["meet"] = str(seq_meet(s))
        out["join"] = str(seq_join(s))
        out["meet_degree"] = seq_local_monotonicity_degree(seq_meet(s))
        out["join_degree"] = seq_local_monotonicity_degree(seq_join(s))
    lines = [f"sequence: {out['seq']}", f"local monotonicity degree: {out['degree']}",
             f"permutability degree: {out['permutability_degree']}"]
    if s.n >= 1:
        lines += [f"meet derivative: {out['meet']}  (degree {out['meet_degree']})",
                  f"join derivative: {out['join']}  (degree {out['join_degree']})"]
    _emit(args, out, lines)
    return 0


def cmd_game(args):
    f, echo = load_function(args)
    C = parse_coalition(args.coalition or "")
    if args.game_cmd == "worth":
        v = worth(f, C)
        out = {"coalition": sorted(C), "worth": str(v)}
        lines = [f"worth of {sorted(C)}: {v}"]
    elif args.game_cmd == "contrib":
        v = marginal_contribution(f, args.player, C)
        out = {"coalition": sorted(C), "player": args.player, "contribution": str(v)}
        lines = [f"marginal contribution of player {args.player} at {sorted(C)}: {v}"]
    else:
        order = parse_order(args.order)
        v = sequential_outcome(f, C, order)
        least, greatest = extremal_outcomes(f, dict(order), C)
        out = {"coalition": sorted(C),
               "order": [f"{p}:{r.value}" for p, r in order],
               "outcome": str(v), "least": str(least), "greatest": str(greatest)}
        lines = [f"outcome: {v}", f"over all ask orders: least {least}, greatest {greatest}"]
    out["input"] = echo
    _emit(args, out, lines)
    return 0


def cmd_decompose(args):
    f, echo = load_function(args)
    d = decompose(f)
    if d is None:
        out = {"monotone": False}
        lines = ["not monotone: no pseudo-polynomial decomposition"]
    else:
        out = d.as_dict()
        lines = [f"range [{d.a}, {d.b}]",
                 "orientations: " + ", ".join(f"x{i + 1} {o.value}" for i, o in enumerate(d.orientations)),
                 "coefficients: " + ", ".join(f"{k}: {v}" for k, v in out["coefficients"].items())]
    _emit(args, out, lines)
    return 0


def cmd_sweep(args):
    if args.list:
        for name, (desc, _) in sorted(sweep_mod.CLAIMS.items()):
            print(f"{name}: {desc}")
        return 0
    if not 1 <= args.max_arity <= 4:
        raise UsageError("exhaustive Boolean sweeps support --max-arity 1..4")
    names = [c.strip() for c in args.claims.split(",") if c.strip()] if args.claims else None
    config = sweep_mod.SweepConfig(max_arity=args.max_arity, samples=args.samples, seed=args.seed)
    try:
        results = sweep_mod.run(names, config)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    lines = []
    for r in results:
        mark = "PASS" if r.ok else "FAIL"
        lines.append(f"{mark} {r.claim}: {r.passed}/{r.total} ({r.seconds:.2f}s) {r.population}")
        lines += [f"     {note}" for note in r.notes]
        if r.counterexample:
            lines.append(f"     counterexample: {json.dumps(r.counterexample)}")
    _emit(args, [r.as_dict() for r in results], lines)
    return 0 if all(r.ok for r in results) else 1


# -- parser -------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="pseudoboolean",
                                     description="Analyse pseudo-Boolean functions exactly.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report on a function")
    _add_input(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("derive", parents=[common], help="apply derivative operators")
    _add_input(p)
    p.add_argument("--op", required=True, help='operators applied right to left, e.g. "v2 ^1 d3"')
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("sections", parents=[common], help="list the p-ary sections")
    _add_input(p)
    p.add_argument("--p", type=int, default=2)
    p.set_defaults(func=cmd_sections)

    p = sub.add_parser("permute", parents=[common], help="permutability of lattice derivatives")
    _add_input(p)
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--p", type=int)
    g.add_argument("--max", action="store_true")
    p.add_argument("--brute", action="store_true", help="enumerate all p! orderings")
    p.set_defaults(func=cmd_permute)

    p = sub.add_parser("reconstruct", parents=[common], help="rebuild f from its derivative profile")
    p.add_argument("--profile", required=True, metavar="PATH")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("symmetric", parents=[common], help="symmetric function via its sequence")
    _add_input(p)
    p.set_defaults(func=cmd_symmetric)

    p = sub.add_parser("game", parents=[common], help="coalition game view")
    gs = p.add_subparsers(dest="game_cmd", required=True)
    for name in ("worth", "contrib", "outcome"):
        q = gs.add_parser(name, parents=[common])
        _add_input(q)
        q.add_argument("--coalition", default="", help="comma-separated players, e.g. 1,3")
        if name == "contrib":
            q.add_argument("--player", type=int, required=True)
        if name == "outcome":
            q.add_argument("--order", required=True, help='e.g. "1:mal,2:ben" (first asked first)')
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("decompose", parents=[common], help="pseudo-polynomial decomposition")
    _add_input(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("sweep", parents=[common], help="verify the structural claims exhaustively")
    p.add_argument("--claims", default=None, help="comma-separated claim ids (default: all)")
    p.add_argument("--max-arity", type=int, default=4)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--list", action="store_true", help="list claim ids and exit")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ExpressionSyntaxError, FormatError, ArityError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
