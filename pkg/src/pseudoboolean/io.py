"""File formats.

Truth-table text: the first line is the arity n, the second holds the 2**n
values (integers, decimals or p/q) in index order, x_1 being the least
significant bit.  JSON: ``{"arity": n, "values": ["1", "2", "4", "3"]}``
with values as strings.  Derivative profiles:
``{"arity": n, "meet": [[...], ...], "join": [[...], ...]}`` with one table
per variable k = 1..n.
"""
import json
from pathlib import Path

from .core import MAX_ARITY, ArityError, FunctionTable, to_rational
from .reconstruction import DerivativeProfile


class FormatError(ValueError):
    pass


def parse_table_text(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("empty truth-table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise FormatError(f"first line must be the arity, got {lines[0]!r}") from None
    tokens = " ".join(lines[1:]).split()
    if not 0 <= n <= MAX_ARITY:
        raise ArityError(f"arity must be in [0, {MAX_ARITY}], got {n}")
    if len(tokens) != 1 << n:
        raise FormatError(f"arity {n} needs {1 << n} values, found {len(tokens)}")
    try:
        vals = [to_rational(t) for t in tokens]
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad value in truth table: {exc}") from None
    return FunctionTable(vals, arity=n)


def format_table_text(f):
    return f"{f.arity}\n" + " ".join(str(v) for v in f.values) + "\n"


def table_to_json(f):
    return {"arity": f.arity, "values": [str(v) for v in f.values]}


def table_from_json(obj):
    try:
        n = int(obj["arity"])
        vals = [to_rational(v) for v in obj["values"]]
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad truth-table JSON: {exc}") from None
    return FunctionTable(vals, arity=n)


def read_table(path):
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json" or text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        return table_from_json(obj)
    return parse_table_text(text)


def profile_to_json(profile):
    return {"arity": profile.arity,
            "meet": [[str(v) for v in t.values] for t in profile.meet],
            "join": [[str(v) for v in t.values] for t in profile.join]}


def profile_from_json(obj):
    try:
        n = int(obj["arity"])
        meet = tuple(FunctionTable([to_rational(v) for v in t], arity=n) for t in obj["meet"])
        join = tuple(FunctionTable([to_rational(v) for v in t], arity=n) for t in obj["join"])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormatError(f"bad profile JSON: {exc}") from None
    return DerivativeProfile(n, meet, join)


def read_profile(path):
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    return profile_from_json(obj)
