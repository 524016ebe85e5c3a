"""Exact geometric predicates for point configurations in R^3.

Every predicate works on exact numbers (``int`` or :class:`fractions.Fraction`)
and returns a sign in ``{-1, 0, +1}``.  No floating point is involved anywhere,
so sign decisions are never subject to round-off.

A :class:`Configuration` stores its points both as given (fractions) and as
an integer rescaling (all coordinates multiplied by the common denominator).
Signs of orientation determinants are invariant under positive scaling, so the
integer copy is what the hot paths use.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from math import lcm
from typing import Iterable, NamedTuple, Sequence, Union

Number = Union[int, Fraction]


class GeometryError(ValueError):
    """Base class for degenerate-input errors."""


class GeneralPositionError(GeometryError):
    """Raised when points are not in general position."""


class DegenerateTriangleError(GeometryError):
    """Raised when a triangle's vertices are collinear."""


class IndexOverlapError(ValueError):
    """Raised when a triangle and an edge share a vertex label."""


def to_scalar(value) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a canonical Fraction.

    Floats are refused: they would silently smuggle binary round-off into
    coordinates that are supposed to be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected int, Fraction or str, got {type(value).__name__}")


class Point3(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction

    @classmethod
    def of(cls, x, y, z) -> "Point3":
        return cls(to_scalar(x), to_scalar(y), to_scalar(z))


def sign(value: Number) -> int:
    return (value > 0) - (value < 0)


def _det3(ax, ay, az, bx, by, bz, cx, cy, cz):
    return ax * (by * cz - bz * cy) - ay * (bx * cz - bz * cx) + az * (bx * cy - by * cx)


def orient3d(a: Sequence[Number], b: Sequence[Number], c: Sequence[Number],
             d: Sequence[Number]) -> int:
    """Sign of det[b - a, c - a, d - a].

    Positive when ``d`` lies on the side of plane ``abc`` from which the turn
    a -> b -> c looks counterclockwise (right-hand rule).
    """
    a0, a1, a2 = a
    return sign(_det3(b[0] - a0, b[1] - a1, b[2] - a2,
                      c[0] - a0, c[1] - a1, c[2] - a2,
                      d[0] - a0, d[1] - a1, d[2] - a2))


def side_of_plane(i: Sequence[Number], j: Sequence[Number], k: Sequence[Number],
                  p: Sequence[Number]) -> int:
    """Which open half-space of the oriented plane through i, j, k holds ``p``.

    Returns the sign of ``(ij x jk) . jp``: +1 for the positive half-space,
    -1 for the negative one and 0 on the plane itself.  Since
    ``ij x jk = ij x ik`` and ``jp = ip - ij``, this equals
    ``orient3d(i, j, k, p)``.
    """
    if _collinear(i, j, k):
        raise DegenerateTriangleError(f"collinear triangle {tuple(i)}, {tuple(j)}, {tuple(k)}")
    return orient3d(i, j, k, p)


def _collinear(a, b, c) -> bool:
    ux, uy, uz = b[0] - a[0], b[1] - a[1], b[2] - a[2]
    vx, vy, vz = c[0] - a[0], c[1] - a[1], c[2] - a[2]
    return uy * vz - uz * vy == 0 and uz * vx - ux * vz == 0 and ux * vy - uy * vx == 0


def _pierce_signs(t1, t2, t3, s1, s2) -> tuple[int, int, int, int, int]:
    return (orient3d(t1, t2, t3, s1), orient3d(t1, t2, t3, s2),
            orient3d(s1, s2, t1, t2), orient3d(s1, s2, t2, t3), orient3d(s1, s2, t3, t1))


def segment_pierces_triangle(t1, t2, t3, s1, s2) -> bool:
    """True iff the segment s1 s2 meets the triangle t1 t2 t3.

    Five orientation tests decide it: the endpoints must lie strictly on
    opposite sides of the triangle's plane, and the line s1 s2 must pass on
    the same side of each of the three triangle edges.  The five points must
    be in general position; then a meeting point is interior to both the
    segment and the triangle, so it does not matter whether either is taken
    open or closed.  A zero orientation raises :class:`GeneralPositionError`.
    """
    o1, o2, w1, w2, w3 = _pierce_signs(t1, t2, t3, s1, s2)
    if 0 in (o1, o2, w1, w2, w3):
        raise GeneralPositionError("four of the five points are coplanar")
    return o1 != o2 and w1 == w2 == w3


@dataclass(frozen=True)
class Configuration:
    """Labelled points in general position; labels run 1..n.

    Construction checks every 4-subset for coplanarity and raises
    :class:`GeneralPositionError` on failure.
    """

    points: tuple[Point3, ...]
    int_coords: tuple[tuple[int, int, int], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, points: Iterable[Sequence]):
        pts = tuple(p if isinstance(p, Point3) else Point3.of(*p) for p in points)
        if len(pts) < 4:
            raise ValueError("need at least four points")
        object.__setattr__(self, "points", pts)
        den = lcm(*(c.denominator for p in pts for c in p))
        ints = tuple(tuple(int(c * den) for c in p) for p in pts)
        object.__setattr__(self, "int_coords", ints)
        for quad in combinations(range(len(pts)), 4):
            if orient3d(*(ints[q] for q in quad)) == 0:
                labels = tuple(q + 1 for q in quad)
                raise GeneralPositionError(f"points {labels} are coplanar")

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def labels(self) -> range:
        return range(1, self.n + 1)

    def point(self, label: int) -> Point3:
        return self.points[label - 1]

    @cached_property
    def _orientations(self) -> dict[tuple[int, int, int, int], int]:
        # All ordered 4-tuples of labels; 840 entries for n = 7.
        ints = self.int_coords
        table = {}
        for quad in combinations(range(self.n), 4):
            base = orient3d(*(ints[q] for q in quad))
            for perm in permutations(range(4)):
                key = tuple(quad[p] + 1 for p in perm)
                table[key] = base * _perm_sign(perm)
        return table

    def orient(self, a: int, b: int, c: int, d: int) -> int:
        """orient3d on labels, served from a precomputed table."""
        return self._orientations[(a, b, c, d)]

    @cached_property
    def _pierced(self) -> frozenset[tuple[tuple[int, int, int], tuple[int, int]]]:
        # (sorted triangle, sorted edge) pairs with a piercing; disjoint labels only.
        o = self.orient
        hits = set()
        for tri in combinations(self.labels, 3):
            rest = [v for v in self.labels if v not in tri]
            i, j, k = tri
            for l, m in combinations(rest, 2):
                if o(i, j, k, l) != o(i, j, k, m) and o(l, m, i, j) == o(l, m, j, k) == o(l, m, k, i):
                    hits.add((tri, (l, m)))
        return frozenset(hits)

    @cached_property
    def _epsilons(self) -> dict[tuple[int, int, int, int, int], int]:
        # signed epsilon for every ordered triangle and directed disjoint edge
        o = self.orient
        table = {}
        for tri in permutations(self.labels, 3):
            key = tuple(sorted(tri))
            rest = [v for v in self.labels if v not in tri]
            for j, k in permutations(rest, 2):
                hit = (key, (min(j, k), max(j, k))) in self._pierced
                table[tri + (j, k)] = o(*tri, k) if hit else 0
        return table

    def with_points(self, points) -> "Configuration":
        return Configuration(points)

    def relabel(self, perm: Sequence[int]) -> "Configuration":
        """New configuration whose label ``perm[i]`` is this one's label ``i + 1``."""
        new = [None] * self.n
        for old, target in enumerate(perm):
            new[target - 1] = self.points[old]
        return Configuration(new)

    def transformed(self, scale: Number = 1, shift: Sequence[Number] = (0, 0, 0),
                    mirror_z: bool = False) -> "Configuration":
        s = to_scalar(scale)
        pts = []
        for p in self.points:
            z = -p.z if mirror_z else p.z
            pts.append((p.x * s + to_scalar(shift[0]), p.y * s + to_scalar(shift[1]),
                        z * s + to_scalar(shift[2])))
        return Configuration(pts)


def _perm_sign(perm: Sequence[int]) -> int:
    s = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            s = -s
    return s


def check_general_position(points: Iterable[Sequence]) -> bool:
    try:
        Configuration(points)
    except GeneralPositionError:
        return False
    return True


def pierces(c: Configuration, i1: int, i2: int, i3: int, j: int, k: int) -> bool:
    """Does edge jk of the embedded complete graph pierce triangle i1 i2 i3?"""
    tri = tuple(sorted((i1, i2, i3)))
    edge = (j, k) if j < k else (k, j)
    return (tri, edge) in c._pierced


def epsilon(c: Configuration, i1: int, i2: int, i3: int, j: int, k: int) -> int:
    """Signed piercing indicator of edge jk through triangle i1 i2 i3.

    0 when the segment misses the triangle.  Otherwise the sign of
    ``(i1i2 x i2i3) . jk``; with j and k on opposite sides of the plane this
    is the side on which ``k`` lies, i.e. ``orient3d(i1, i2, i3, k)``.
    """
    labels = (i1, i2, i3, j, k)
    if len(set(labels)) != 5:
        raise IndexOverlapError(f"triangle {(i1, i2, i3)} and edge {(j, k)} share a vertex")
    for x in labels:
        if not 1 <= x <= c.n:
            raise IndexError(f"label {x} outside 1..{c.n}")
    return _epsilon(c, i1, i2, i3, j, k)


def _epsilon(c: Configuration, i1: int, i2: int, i3: int, j: int, k: int) -> int:
    # unchecked variant for callers that guarantee five distinct valid labels
    return c._epsilons[(i1, i2, i3, j, k)]
