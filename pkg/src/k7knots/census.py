"""Classify every Hamiltonian cycle of a K6/K7 configuration and check the bounds.

The checks, for a linearly embedded complete graph:

* K7: at most three figure-eight cycles; at least one knotted cycle; the
  Arf invariants of all Hamiltonian cycles sum to 1 mod 2.
* K6: at most one trefoil and no figure-eight cycle.
* K7, keyed on the epsilon-table type of the figure-eight cycles: a
  Type-III cycle is the only figure-eight; a Type-I cycle with no Type-II
  or Type-III cycle anywhere allows at most two.

Failed checks are returned as data with enough provenance to replay them.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations
from math import factorial

from .diagram import (Cycle, GraphProjection, KnotClass, arf_from_determinant,
                      class_from_determinant, generic_direction, knot_determinant)
from .geometry import Configuration
from .reduction import consecutive_trivial_triple, trivial_triples
from .tables import table_matches

SUPPORTED_N = (6, 7)


def hamiltonian_cycles(n: int) -> list[Cycle]:
    """All n!/(2n) Hamiltonian cycles of K_n, canonical and sorted."""
    if n not in SUPPORTED_N:
        raise ValueError(f"unsupported n={n}; expected one of {SUPPORTED_N}")
    return [Cycle((1,) + p) for p in permutations(range(2, n + 1)) if p[0] < p[-1]]


def expected_cycle_count(n: int) -> int:
    return factorial(n) // (2 * n)


@dataclass(frozen=True)
class CycleRecord:
    cycle: Cycle
    knot_class: KnotClass
    determinant: int
    crossings: int
    # (type, labelling, sign) for every matching labelling; empty for n = 6
    table_types: tuple[tuple[str, tuple[int, ...], int], ...] = ()
    excluded_by: tuple[int, int, int] | None = None

    @property
    def types(self) -> set[str]:
        return {t for t, _, _ in self.table_types}

    def to_dict(self) -> dict:
        return {
            "cycle": "".join(map(str, self.cycle.vertices)),
            "class": self.knot_class.value,
            "determinant": self.determinant,
            "crossings": self.crossings,
            "table_types": [{"type": t, "labeling": "".join(map(str, L)), "sign": s}
                            for t, L, s in self.table_types],
            "excluded_by": list(self.excluded_by) if self.excluded_by else None,
        }


@dataclass
class CensusReport:
    n: int
    points: list[tuple[str, str, str]]
    direction: tuple[int, int, int]
    records: list[CycleRecord]
    trivial_triples: list[tuple[int, int, int]]
    tables_checked: bool = True
    counts: dict[str, int] = field(init=False)

    def __post_init__(self):
        self.counts = {k.value: 0 for k in KnotClass}
        for r in self.records:
            self.counts[r.knot_class.value] += 1

    @property
    def figure8(self) -> list[CycleRecord]:
        return [r for r in self.records if r.knot_class is KnotClass.FIGURE_EIGHT]

    @property
    def trefoils(self) -> list[CycleRecord]:
        return [r for r in self.records if r.knot_class is KnotClass.TREFOIL]

    @property
    def figure8_count(self) -> int:
        return self.counts["figure8"]

    @property
    def trefoil_count(self) -> int:
        return self.counts["trefoil"]

    @property
    def nontrivial_count(self) -> int:
        return self.figure8_count + self.trefoil_count

    @property
    def arf_sum_mod2(self) -> int:
        return sum(arf_from_determinant(r.determinant) for r in self.records) % 2

    @property
    def excluded_count(self) -> int:
        return sum(r.excluded_by is not None for r in self.records)

    @property
    def table_figure8(self) -> list[CycleRecord]:
        return [r for r in self.records if r.table_types]

    def summary(self) -> dict:
        return {
            "n": self.n,
            "cycles": len(self.records),
            "unknot": self.counts["unknot"],
            "trefoil": self.counts["trefoil"],
            "figure8": self.counts["figure8"],
            "arf_sum_mod2": self.arf_sum_mod2,
            "trivial_triples": len(self.trivial_triples),
            "excluded_cycles": self.excluded_count,
        }

    def to_dict(self, with_records: bool = True) -> dict:
        out = {
            "points": [list(p) for p in self.points],
            "direction": list(self.direction),
            **self.summary(),
            "figure8_cycles": [r.to_dict() for r in self.figure8],
            "trefoil_cycles": ["".join(map(str, r.cycle.vertices)) for r in self.trefoils],
            "trivial_triple_list": [list(t) for t in self.trivial_triples],
        }
        if with_records:
            out["records"] = [r.to_dict() for r in self.records]
        return out

    def to_json(self, with_records: bool = True) -> str:
        return json.dumps(self.to_dict(with_records), indent=2)


def _fmt(x) -> str:
    return str(x)


def run_census(c: Configuration, with_tables: bool = True,
               direction: tuple[int, int, int] | None = None) -> CensusReport:
    """Classify all Hamiltonian cycles of ``c`` under one regular projection."""
    if c.n not in SUPPORTED_N:
        raise ValueError(f"census needs 6 or 7 points, got {c.n}")
    if direction is None:
        direction = generic_direction(c)
    proj = GraphProjection(c, direction)
    triples = sorted(trivial_triples(c))
    tables = with_tables and c.n == 7
    records = []
    for cycle in hamiltonian_cycles(c.n):
        d = proj.diagram(cycle)
        det = knot_determinant(d)
        types = ()
        if tables:
            types = tuple((m.type_name, m.labeling, m.sign) for m in table_matches(c, cycle))
        records.append(CycleRecord(cycle, class_from_determinant(det), det, d.crossing_count,
                                   types, consecutive_trivial_triple(cycle, triples)))
    points = [tuple(_fmt(v) for v in p) for p in c.points]
    return CensusReport(c.n, points, tuple(direction), records, triples, tables)


def count_classes(c: Configuration) -> tuple[int, int]:
    """(figure-eight count, trefoil count) without the table and triple bookkeeping."""
    proj = GraphProjection(c, generic_direction(c))
    f8 = tr = 0
    for cycle in hamiltonian_cycles(c.n):
        d = proj.diagram(cycle)
        if d.crossing_count < 3:
            continue
        det = knot_determinant(d)
        cls = class_from_determinant(det)
        if cls is KnotClass.FIGURE_EIGHT:
            f8 += 1
        elif cls is KnotClass.TREFOIL:
            tr += 1
    return f8, tr


@dataclass(frozen=True)
class Verdict:
    check: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.check}: {self.detail}"


def verify_bounds(r: CensusReport) -> list[Verdict]:
    f8, tr, nt = r.figure8_count, r.trefoil_count, r.nontrivial_count
    out = [Verdict("cycle-count", len(r.records) == expected_cycle_count(r.n),
                   f"{len(r.records)} cycles, expected {expected_cycle_count(r.n)}")]
    if r.n == 7:
        out.append(Verdict("figure8<=3", f8 <= 3, f"figure8={f8}"))
        out.append(Verdict("nontrivial>=1", nt >= 1, f"nontrivial={nt}"))
        out.append(Verdict("arf-sum-odd", r.arf_sum_mod2 == 1, f"arf_sum_mod2={r.arf_sum_mod2}"))
    else:
        out.append(Verdict("trefoil<=1", tr <= 1, f"trefoil={tr}"))
        out.append(Verdict("figure8==0", f8 == 0, f"figure8={f8}"))
    if r.tables_checked:
        by_det = {str(x.cycle) for x in r.figure8}
        by_table = {str(x.cycle) for x in r.table_figure8}
        out.append(Verdict("table==classifier", by_det == by_table,
                           f"classifier-only={sorted(by_det - by_table)} table-only={sorted(by_table - by_det)}"))
    bad = [str(x.cycle) for x in r.records
           if x.excluded_by is not None and x.knot_class is KnotClass.FIGURE_EIGHT]
    out.append(Verdict("trivial-triple-exclusion", not bad, f"violations={bad}"))
    return out


def verify_lemma_bounds(c: Configuration, r: CensusReport) -> list[Verdict]:
    """Type-keyed bounds for K7.

    A configuration whose figure-eight cycles do not all share one type set is
    reported as ``mixed-types`` (informational, always passing); the
    implications below are still checked as stated.
    """
    if c.n != 7:
        return []
    f8 = r.figure8_count
    fig = r.figure8
    any_type = lambda name: any(name in x.types for x in r.records)
    out = [Verdict("lemma:figure8<=3", f8 <= 3, f"figure8={f8}")]
    if any(("III" in x.types) for x in fig):
        out.append(Verdict("lemma:type-III-unique", f8 == 1, f"figure8={f8}"))
    if any(("I" in x.types) for x in fig) and not any_type("II") and not any_type("III"):
        out.append(Verdict("lemma:type-I<=2", f8 <= 2, f"figure8={f8}"))
    type_sets = {frozenset(x.types) for x in fig}
    mixed = len(type_sets) > 1 or any(len(s) > 1 for s in type_sets)
    if mixed:
        detail = "; ".join(f"{x.cycle}:{'/'.join(sorted(x.types))}" for x in fig)
        out.append(Verdict("mixed-types(flag)", True, detail))
    return out


def is_mixed(verdicts: list[Verdict]) -> bool:
    return any(v.check.startswith("mixed-types") for v in verdicts)
