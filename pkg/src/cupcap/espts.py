"""Reader/writer for the "espts v1" point-set text format.

Layout::

    espts v1
    # comment lines start with '#'
    0 0
    1/2 -3
    -7/3 5/7

The first line must be exactly ``espts v1``.  Every other non-empty,
non-comment line holds two whitespace-separated tokens, each an optionally
signed integer or a ``p/q`` rational in lowest terms with positive
denominator.  Parse errors report the offending 1-based line number.
"""

from __future__ import annotations

import math
import os
import re
import tempfile
from fractions import Fraction

from .geom import Point, PointSet

HEADER = "espts v1"

_TOKEN = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class EsptsParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _parse_token(tok: str, line_no: int) -> Fraction:
    if not _TOKEN.match(tok):
        raise EsptsParseError(line_no, f"malformed coordinate token {tok!r}")
    if "/" in tok:
        num_s, den_s = tok.split("/")
        num, den = int(num_s), int(den_s)
        if den == 0:
            raise EsptsParseError(line_no, f"zero denominator in {tok!r}")
        if math.gcd(abs(num), den) != 1:
            raise EsptsParseError(line_no, f"{tok!r} is not in lowest terms")
        return Fraction(num, den)
    return Fraction(int(tok))


def loads(text: str) -> PointSet:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise EsptsParseError(1, f"missing {HEADER!r} header")
    points = []
    for idx, raw in enumerate(lines[1:], start=2):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EsptsParseError(idx, f"expected 'X Y', got {raw!r}")
        x = _parse_token(parts[0], idx)
        y = _parse_token(parts[1], idx)
        points.append(Point(x, y))
    try:
        return PointSet(points)
    except ValueError as exc:
        raise EsptsParseError(0, str(exc)) from exc


def dumps(ps: PointSet) -> str:
    out = [HEADER]
    out.extend(f"{p.x} {p.y}" for p in ps)
    return "\n".join(out) + "\n"


def load_file(path: str) -> PointSet:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def save_file(ps: PointSet, path: str) -> None:
    """Atomic write: temp file in the target directory, then rename."""
    write_text_atomic(path, dumps(ps))


def write_text_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".espts-tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
