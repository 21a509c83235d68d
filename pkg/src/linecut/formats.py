"""Instance text format and solution rendering.

Instance files are UTF-8 text, one point per line as ``<decimal>`` or
``<decimal> <multiplicity>``.  ``#`` starts a comment; blank lines are
skipped.  Decimals are stored as integers at a shared power-of-ten scale, so
parsing and rendering are exact (no floats anywhere).
"""

from __future__ import annotations

import json
import re
from typing import Optional

from .errors import ParseError, PrecisionError, RangeError
from .model import (
    MAX_ABS_COORD,
    MAX_SCALE_EXP,
    Instance,
    Solution,
    compress,
)

_NUMBER_RE = re.compile(r"[+-]?\d+(?:\.\d+)?\Z")


def _split_decimal(token: str) -> tuple[int, str, str]:
    """Break a validated decimal literal into (sign, whole, fraction)."""
    sign = 1
    body = token
    if body[0] in "+-":
        if body[0] == "-":
            sign = -1
        body = body[1:]
    whole, _, frac = body.partition(".")
    # Trailing zeros carry no information, so "1.50" needs one digit, not two.
    return sign, whole, frac.rstrip("0")


def parse_instance(text: str) -> Instance:
    """Read instance text into an ``Instance`` with a shared fixed-point scale."""
    rows: list[tuple[int, int, str, str, int]] = []  # line_no, sign, whole, frac, mult
    scale = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) > 2:
            raise ParseError(line_no, f"expected 'value [multiplicity]', got {raw!r}")
        if not _NUMBER_RE.match(fields[0]):
            raise ParseError(line_no, f"bad decimal literal {fields[0]!r}")
        mult = 1
        if len(fields) == 2:
            if not fields[1].isdigit() or int(fields[1]) < 1:
                raise ParseError(
                    line_no, f"multiplicity must be a positive integer, got {fields[1]!r}"
                )
            mult = int(fields[1])
        sign, whole, frac = _split_decimal(fields[0])
        if len(frac) > MAX_SCALE_EXP:
            raise PrecisionError(
                f"line {line_no}: {fields[0]!r} needs {len(frac)} fractional digits; "
                f"at most {MAX_SCALE_EXP} are supported"
            )
        scale = max(scale, len(frac))
        rows.append((line_no, sign, whole, frac, mult))

    coords: list[int] = []
    for line_no, sign, whole, frac, mult in rows:
        scaled = sign * int(whole + frac.ljust(scale, "0"))
        if abs(scaled) > MAX_ABS_COORD:
            raise RangeError(
                f"line {line_no}: coordinate magnitude {abs(scaled)} at scale "
                f"10^-{scale} exceeds the supported range"
            )
        coords.extend([scaled] * mult)
    # Instance rejects the empty multiset itself.
    return Instance(scaled=tuple(coords), scale_exp=scale)


def format_value(scaled: int, scale_exp: int) -> str:
    """Exact decimal string for ``scaled * 10**-scale_exp``."""
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled))
    if scale_exp == 0:
        return sign + digits
    digits = digits.rjust(scale_exp + 1, "0")
    whole, frac = digits[:-scale_exp], digits[-scale_exp:]
    frac = frac.rstrip("0")
    return sign + whole + (f".{frac}" if frac else "")


def render_instance(instance: Instance) -> str:
    """Canonical text for an instance: sorted, merged, multiplicity column when > 1."""
    ci = compress(instance)
    lines = []
    for x, m in zip(ci.xs, ci.mult):
        value = format_value(x, ci.scale_exp)
        lines.append(value if m == 1 else f"{value} {m}")
    return "\n".join(lines) + "\n"


def render_solution(
    sol: Solution,
    fmt: str,
    *,
    problem_label: Optional[str] = None,
    elapsed_ns: Optional[int] = None,
) -> str:
    """Render a solution as JSON or a text summary.

    ``elapsed_ns`` stays null unless explicitly supplied: equal inputs must
    produce byte-identical output, and wall time would break that.
    """
    ci = sol.ci
    label = problem_label if problem_label is not None else sol.spec.canonical_name()
    assignment = None
    if sol.profile is not None:
        assignment = [
            {
                "x": format_value(x, ci.scale_exp),
                "count_first": a,
                "count_second": m - a,
            }
            for x, m, a in zip(ci.xs, ci.mult, sol.profile)
        ]

    if fmt == "json":
        payload = {
            "problem": label,
            "n": ci.n,
            "k": sol.k_actual,
            "value": format_value(sol.value, ci.scale_exp),
            "assignment": assignment,
            "elapsed_ns": elapsed_ns,
        }
        return json.dumps(payload, indent=2) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown output format: {fmt!r}")

    lines = [
        f"problem: {label}",
        f"n: {ci.n}",
        f"k: {sol.k_actual}",
        f"value: {format_value(sol.value, ci.scale_exp)}",
    ]
    if assignment is None:
        lines.append("assignment: omitted")
    else:
        lines.append("assignment (x: first | second):")
        for entry in assignment:
            lines.append(
                f"  {entry['x']}: {entry['count_first']} | {entry['count_second']}"
            )
    if elapsed_ns is not None:
        lines.append(f"elapsed_ns: {elapsed_ns}")
    return "\n".join(lines) + "\n"
