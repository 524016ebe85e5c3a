"""Epsilon sign tables of labelled heptagons and the three figure-eight patterns.

For a labelling 1..7 of a heptagon (consecutive labels joined by edges), row
``p`` of the table is the triangle on positions p, p+1, p+2 and its three
columns are the heptagon edges among the remaining four positions:
(p+3, p+4), (p+4, p+5), (p+5, p+6), all mod 7.  The heptagon is a
figure-eight knot exactly when some labelling gives a table matching one of
the patterns below.

Pattern cells use ``+`` for a cell equal to a common sign s, ``-`` for a cell
equal to -s and ``0`` for a zero cell; s is shared by the whole table.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .diagram import Cycle
from .geometry import Configuration

ROW_LABELS = ("123", "234", "345", "456", "567", "671", "712")
COLUMN_LABELS = (("45", "56", "67"), ("56", "67", "71"), ("67", "71", "12"),
                 ("71", "12", "23"), ("12", "23", "34"), ("23", "34", "45"),
                 ("34", "45", "56"))

_TYPE_I = ("+-0", "-00", "0+0", "+00", "0-0", "-00", "0+0")
_TYPE_II = ("+-0", "-00", "0+0", "+00", "0-0", "-+0", "0+0")
_TYPE_III = ("+-0", "0-0", "0+0", "+00", "0-0", "-00", "0+0")


@dataclass(frozen=True)
class TypePattern:
    name: str
    rows: tuple[str, ...]

    def cells(self) -> str:
        return "".join(self.rows)


PATTERNS = (TypePattern("I", _TYPE_I), TypePattern("II", _TYPE_II), TypePattern("III", _TYPE_III))


def _check_patterns() -> None:
    base = PATTERNS[0].rows
    for p in PATTERNS:
        assert len(p.rows) == 7 and all(len(r) == 3 for r in p.rows)
        # every row has a signed slot
        assert all(r != "000" for r in p.rows)
    diff_ii = [i for i in range(7) if PATTERNS[1].rows[i] != base[i]]
    diff_iii = [i for i in range(7) if PATTERNS[2].rows[i] != base[i]]
    assert diff_ii == [5], diff_ii
    assert diff_iii == [1], diff_iii


_check_patterns()


@dataclass(frozen=True)
class EpsilonTable:
    """21 signs, row-major in the order of ROW_LABELS / COLUMN_LABELS."""

    labeling: tuple[int, ...]
    entries: tuple[int, ...]

    def row(self, r: int) -> tuple[int, ...]:
        return self.entries[3 * r:3 * r + 3]

    def entry(self, row: str, col: str) -> int:
        r = ROW_LABELS.index(row)
        return self.entries[3 * r + COLUMN_LABELS[r].index(col)]

    def format(self) -> str:
        sym = {1: "+", -1: "-", 0: "0"}
        lines = []
        for r, name in enumerate(ROW_LABELS):
            cells = "  ".join(f"{col}:{sym[v]}" for col, v in zip(COLUMN_LABELS[r], self.row(r)))
            lines.append(f"{name} | {cells}")
        return "\n".join(lines)


def table_cells(labeling: Sequence[int]) -> list[tuple[tuple[int, int, int], tuple[int, int]]]:
    """The 21 (triangle, edge) label pairs of a labelling, row-major."""
    L = labeling
    cells = []
    for p in range(7):
        tri = (L[p], L[(p + 1) % 7], L[(p + 2) % 7])
        for q in (3, 4, 5):
            cells.append((tri, (L[(p + q) % 7], L[(p + q + 1) % 7])))
    return cells


def build_table(c: Configuration, labeling: Sequence[int] | Cycle) -> EpsilonTable:
    L = tuple(labeling.vertices if isinstance(labeling, Cycle) else labeling)
    if c.n != 7 or len(L) != 7 or sorted(L) != list(range(1, 8)):
        raise ValueError("tables are defined for heptagons of a 7-point configuration")
    eps = c._epsilons
    entries = tuple(eps[tri + edge] for tri, edge in table_cells(L))
    return EpsilonTable(L, entries)


def matching_sign(t: EpsilonTable | Sequence[int], p: TypePattern) -> int | None:
    """The sign s under which ``t`` matches ``p``, or None."""
    entries = t.entries if isinstance(t, EpsilonTable) else tuple(t)
    cells = p.cells()
    s = entries[0] if cells[0] == "+" else None
    if s is None or s == 0:
        return None
    for v, slot in zip(entries, cells):
        want = s if slot == "+" else -s if slot == "-" else 0
        if v != want:
            return None
    return s


def matches_pattern(t: EpsilonTable | Sequence[int], p: TypePattern) -> bool:
    return matching_sign(t, p) is not None


@dataclass(frozen=True)
class TableMatch:
    labeling: tuple[int, ...]
    type_name: str
    sign: int
    table: EpsilonTable


def table_matches(c: Configuration, cycle: Cycle) -> list[TableMatch]:
    """Every (labelling, type) pair among the 14 labellings of ``cycle`` that matches."""
    found = []
    for L in cycle.labelings():
        t = build_table(c, L)
        for p in PATTERNS:
            s = matching_sign(t, p)
            if s is not None:
                found.append(TableMatch(L, p.name, s, t))
    return found


def is_figure8_by_table(c: Configuration, cycle: Cycle) -> tuple[bool, TableMatch | None]:
    """Table-side figure-eight test; returns the first matching labelling on success."""
    if len(cycle) != 7:
        raise ValueError("table test needs a heptagon")
    for L in cycle.labelings():
        t = build_table(c, L)
        for p in PATTERNS:
            s = matching_sign(t, p)
            if s is not None:
                return True, TableMatch(L, p.name, s, t)
    return False, None
