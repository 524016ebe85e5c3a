"""Trivial triples and the heptagon-to-hexagon reduction.

A triple of vertices is trivial when no edge of the complete graph on the
remaining vertices pierces its triangle.  A cycle passing through a trivial
triple consecutively (i, j, k) can be isotoped across that empty triangle,
replacing the path i-j-k by the single edge i-k.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .diagram import Cycle
from .geometry import Configuration, pierces

Triple = tuple[int, int, int]


class ReductionError(ValueError):
    pass


def as_triple(t: Iterable[int]) -> Triple:
    t = tuple(sorted(int(v) for v in t))
    if len(t) != 3 or len(set(t)) != 3:
        raise ValueError(f"not a triple of distinct labels: {t}")
    return t


def is_trivial_triple(c: Configuration, t: Iterable[int]) -> bool:
    i, j, k = as_triple(t)
    rest = [v for v in c.labels if v not in (i, j, k)]
    return not any(pierces(c, i, j, k, l, m) for l, m in combinations(rest, 2))


def trivial_triples(c: Configuration) -> set[Triple]:
    return {t for t in combinations(c.labels, 3) if is_trivial_triple(c, t)}


def consecutive_trivial_triple(cycle: Cycle, triples: Iterable[Iterable[int]]) -> Triple | None:
    """First trivial triple met as three consecutive cycle vertices.

    Windows are scanned by position of their first vertex along the
    canonical cycle, wrapping around.
    """
    wanted = {as_triple(t) for t in triples}
    v = cycle.vertices
    n = len(v)
    for p in range(n):
        w = as_triple((v[p], v[(p + 1) % n], v[(p + 2) % n]))
        if w in wanted:
            return w
    return None


def middle_vertex(cycle: Cycle, t: Iterable[int]) -> int:
    t = set(as_triple(t))
    v = cycle.vertices
    n = len(v)
    for p in range(n):
        if {v[p - 1], v[p], v[(p + 1) % n]} == t:
            return v[p]
    raise ReductionError(f"{sorted(t)} is not consecutive in {cycle}")


def reduce_along(cycle: Cycle, t: Iterable[int], c: Configuration | None = None) -> Cycle:
    """Drop the middle vertex of the consecutive triple ``t``.

    With a configuration given, triviality of ``t`` is checked too.
    """
    if len(cycle) <= 3:
        raise ReductionError("cannot reduce a triangle")
    mid = middle_vertex(cycle, t)
    if c is not None and not is_trivial_triple(c, t):
        raise ReductionError(f"{as_triple(t)} is not a trivial triple")
    return Cycle.of(v for v in cycle.vertices if v != mid)
