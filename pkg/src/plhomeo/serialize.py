"""Text formats for PL maps and line actions.

``plmap v1``::

    plmap v1 lift
    # comment
    piece x=0 v=0 s=1/2
    piece x=1/3 v=1/6 s=2

``plaction v1``::

    plaction v1
    group: K
    dir: +1
    x0: 0
    piece x=0 v=0 s=1/2
    piece x=1/2 v=1/4 s=3/2

The action seed pieces cover ``I`` = ``[x0, x0 + dir]`` (or ``[x0 - 1, x0]``).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .actions import ActionSpec
from .pl import IntervalMap, PLError, PLFunc, PLLift, pl_normalize

__all__ = [
    "FormatError",
    "parse_rational",
    "read_plmap",
    "write_plmap",
    "read_action",
    "write_action",
]

_RAT_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")
_PIECE_RE = re.compile(r"^piece\s+x=(\S+)\s+v=(\S+)\s+s=(\S+)$")


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        super().__init__(f"line {line}: {message}" if line is not None else message)
        self.line = line


def parse_rational(text: str, line: int | None = None) -> Fraction:
    text = text.strip()
    if not _RAT_RE.match(text):
        raise FormatError(f"not a rational: {text!r}", line)
    if "/" in text and int(text.split("/")[1]) == 0:
        raise FormatError("zero denominator", line)
    return Fraction(text)


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        s = raw.strip()
        if not s or s.startswith("#"):
            continue
        yield no, s


def _piece(no: int, s: str) -> tuple[Fraction, Fraction, Fraction]:
    m = _PIECE_RE.match(s)
    if not m:
        raise FormatError(f"expected 'piece x=<p/q> v=<p/q> s=<p/q>', got {s!r}", no)
    return tuple(parse_rational(g, no) for g in m.groups())


def read_plmap(text: str) -> PLFunc | PLLift:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty document")
    no, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[:2] != ["plmap", "v1"] or parts[2] not in ("fn", "lift"):
        raise FormatError(f"bad header {header!r}, expected 'plmap v1 fn|lift'", no)
    pieces = [_piece(n, s) for n, s in lines[1:]]
    if not pieces:
        raise FormatError("no pieces", no)
    try:
        return pl_normalize(pieces, parts[2])
    except (PLError, ZeroDivisionError) as exc:
        raise FormatError(str(exc), lines[-1][0]) from None


def write_plmap(m: PLFunc | PLLift) -> str:
    kind = "lift" if isinstance(m, PLLift) else "fn"
    out = [f"plmap v1 {kind}"]
    out += [f"piece x={p.x} v={p.v} s={p.s}" for p in m.pieces]
    return "\n".join(out) + "\n"


def read_action(text: str) -> ActionSpec:
    lines = list(_lines(text))
    if not lines or lines[0][1].split() != ["plaction", "v1"]:
        raise FormatError("expected header 'plaction v1'", lines[0][0] if lines else None)
    fields = {}
    pieces = []
    for no, s in lines[1:]:
        if s.startswith("piece"):
            pieces.append((no, _piece(no, s)))
            continue
        key, sep, value = s.partition(":")
        if not sep or key.strip() not in ("group", "dir", "x0"):
            raise FormatError(f"unexpected line {s!r}", no)
        fields[key.strip()] = (no, value.strip())
    for key in ("group", "dir", "x0"):
        if key not in fields:
            raise FormatError(f"missing field {key!r}")
    group = fields["group"][1]
    if group not in ("Z2", "K"):
        raise FormatError(f"group must be Z2 or K, got {group!r}", fields["group"][0])
    if fields["dir"][1] not in ("+1", "1", "-1"):
        raise FormatError("dir must be +1 or -1", fields["dir"][0])
    direction = -1 if fields["dir"][1] == "-1" else 1
    x0 = parse_rational(fields["x0"][1], fields["x0"][0])
    lo, hi = sorted((x0, x0 + direction))
    if not pieces:
        raise FormatError("seed has no pieces")
    if pieces[0][1][0] != lo:
        raise FormatError(f"seed must start at {lo}", pieces[0][0])
    knots = [pieces[0][1][:2]]
    for i, (no, (x, v, s)) in enumerate(pieces):
        nxt = pieces[i + 1][1][0] if i + 1 < len(pieces) else hi
        if knots[-1] != (x, v):
            raise FormatError(f"discontinuity at x={x}", no)
        if not lo <= x < nxt <= hi:
            raise FormatError(f"piece at x={x} outside or out of order in [{lo}, {hi}]", no)
        knots.append((nxt, v + s * (nxt - x)))
    try:
        seed = IntervalMap(tuple(knots))
        return ActionSpec(group, direction, x0, seed)
    except (PLError, ValueError) as exc:
        raise FormatError(str(exc), pieces[-1][0]) from None


def write_action(spec: ActionSpec) -> str:
    out = [
        "plaction v1",
        f"group: {spec.group}",
        f"dir: {'+1' if spec.direction > 0 else '-1'}",
        f"x0: {spec.x0}",
    ]
    for (xa, ya), (xb, yb) in zip(spec.seed.knots, spec.seed.knots[1:]):
        out.append(f"piece x={xa} v={ya} s={(yb - ya) / (xb - xa)}")
    return "\n".join(out) + "\n"
