"""Text format for configurations.

::

    # comments start with '#', anywhere on a line
    k7knots-config 1
    n 7
    0 0 0
    1/2 3 -4
    ...

Coordinates are integers or exact fractions ``p/q``.  Writing then reading a
configuration gives back the identical points.
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable

from .geometry import Configuration

MAGIC = "k7knots-config"
VERSION = 1
_NUMBER = re.compile(r"^[+-]?\d+(/\d+)?$")


class ConfigParseError(ValueError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_points(text: str) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Parse the file body into coordinate triples (no geometry checks)."""
    rows = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((no, body.split()))
    if not rows:
        raise ConfigParseError(1, "empty configuration file")
    no, toks = rows[0]
    if len(toks) != 2 or toks[0] != MAGIC:
        raise ConfigParseError(no, f"expected header '{MAGIC} {VERSION}'")
    if toks[1] != str(VERSION):
        raise ConfigParseError(no, f"unsupported version {toks[1]!r}")
    if len(rows) < 2:
        raise ConfigParseError(no, "missing 'n <count>' line")
    no, toks = rows[1]
    if len(toks) != 2 or toks[0] != "n" or not toks[1].isdigit():
        raise ConfigParseError(no, "expected 'n <count>'")
    n = int(toks[1])
    if n < 4:
        raise ConfigParseError(no, f"n must be at least 4, got {n}")
    points = []
    for no, toks in rows[2:]:
        if len(toks) != 3:
            raise ConfigParseError(no, f"expected 3 coordinates, got {len(toks)}")
        coords = []
        for t in toks:
            if not _NUMBER.match(t):
                raise ConfigParseError(no, f"bad coordinate {t!r}")
            try:
                coords.append(Fraction(t))
            except ZeroDivisionError:
                raise ConfigParseError(no, f"zero denominator in {t!r}") from None
        points.append(tuple(coords))
    if len(points) != n:
        last = rows[-1][0]
        raise ConfigParseError(last, f"header says n={n} but {len(points)} points given")
    return points


def loads(text: str) -> Configuration:
    """Parse and build; raises ConfigParseError or GeneralPositionError."""
    return Configuration(parse_points(text))


def load(path: str | Path) -> Configuration:
    return loads(Path(path).read_text())


def dumps(c: Configuration, comments: Iterable[str] = ()) -> str:
    lines = [f"# {line}" for line in comments]
    lines.append(f"{MAGIC} {VERSION}")
    lines.append(f"n {c.n}")
    for p in c.points:
        lines.append(" ".join(str(x) for x in p))
    return "\n".join(lines) + "\n"


def dump(c: Configuration, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(dumps(c, comments))
