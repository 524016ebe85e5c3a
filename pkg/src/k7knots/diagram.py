"""Planar diagrams of polygonal cycles and the knot determinant.

A cycle of the embedded complete graph is projected along an integer
direction.  Crossings are found exactly in integer arithmetic; over/under is
decided by comparing depths at the crossing parameters.  The knot determinant
is read off the diagram's coloring matrix (the Alexander matrix at t = -1):
every crossing contributes the row ``2*over - in - out`` over the arcs of the
diagram, and the determinant is the absolute value of any first minor.

For polygons with at most seven edges the determinant separates the only
possible knot types: unknot (1), trefoil (3) and figure-eight (5).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd
from typing import Iterator, Sequence

from .geometry import Configuration


class IrregularProjectionError(ValueError):
    """The projection direction is not regular for the requested edges."""


class DirectionExhaustedError(RuntimeError):
    pass


class ClassificationError(RuntimeError):
    """A determinant outside {1, 3, 5} showed up for a polygon of <= 7 edges."""


class KnotClass(enum.Enum):
    UNKNOT = "unknot"
    TREFOIL = "trefoil"
    FIGURE_EIGHT = "figure8"

    def __str__(self) -> str:
        return self.value


_DET_TO_CLASS = {1: KnotClass.UNKNOT, 3: KnotClass.TREFOIL, 5: KnotClass.FIGURE_EIGHT}


@dataclass(frozen=True, order=True)
class Cycle:
    """A Hamiltonian cycle in canonical form.

    The smallest label comes first and the second entry is smaller than the
    last, so rotations and reflections of the same cycle compare equal.
    Build instances with :meth:`of`; the constructor trusts its input.
    """

    vertices: tuple[int, ...]

    @classmethod
    def of(cls, seq: Sequence[int]) -> "Cycle":
        seq = tuple(int(v) for v in seq)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise ValueError(f"not a cycle: {seq}")
        i = seq.index(min(seq))
        rot = seq[i:] + seq[:i]
        if rot[1] > rot[-1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return cls(rot)

    @classmethod
    def parse(cls, text: str) -> "Cycle":
        """Parse ``"1234567"`` (single digits) or ``"1,2,3,..."``."""
        text = text.strip().strip("<>⟨⟩")
        if "," in text or " " in text:
            parts = [p for p in text.replace(",", " ").split() if p]
        else:
            parts = list(text)
        if not parts or not all(p.isdigit() for p in parts):
            raise ValueError(f"malformed cycle string {text!r}")
        return cls.of(int(p) for p in parts)

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __str__(self) -> str:
        sep = "" if max(self.vertices) < 10 else ","
        return "<" + sep.join(map(str, self.vertices)) + ">"

    def edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def labelings(self) -> list[tuple[int, ...]]:
        """All 2n vertex sequences describing this cycle (base vertex x orientation)."""
        v = self.vertices
        rev = (v[0],) + tuple(reversed(v[1:]))
        out = []
        for seq in (v, rev):
            for i in range(len(seq)):
                out.append(seq[i:] + seq[:i])
        return out


# -- projection directions ---------------------------------------------------

def candidate_directions(max_norm: int = 12) -> Iterator[tuple[int, int, int]]:
    """Primitive integer directions ordered by max-norm, then L1 norm, then lexicographically.

    Only one of d and -d is produced (first nonzero coordinate positive);
    both give the same crossing structure.
    """
    for m in range(1, max_norm + 1):
        shell = []
        for v in product(range(-m, m + 1), repeat=3):
            if max(map(abs, v)) != m or gcd(gcd(v[0], v[1]), v[2]) != 1:
                continue
            first = next(x for x in v if x)
            if first > 0:
                shell.append(v)
        shell.sort(key=lambda v: (sum(map(abs, v)), v))
        yield from shell


def _frame(d: tuple[int, int, int]):
    """Integer vectors e1, e2 spanning d's orthogonal complement with e1 x e2 along +d."""
    axis = (1, 0, 0) if d[1] or d[2] else (0, 1, 0)
    e1 = _cross(d, axis)
    e2 = _cross(d, e1)
    return e1, e2


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]


def _orient2d(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (v > 0) - (v < 0)


def _on_segment(p, a, b) -> bool:
    return (_orient2d(a, b, p) == 0
            and min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


# -- crossing data -------------------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    """One double point of a diagram.

    Edges are indices along the cycle (edge i runs from vertex i to i+1);
    parameters are positions in (0, 1) along each edge in traversal direction.
    ``handedness`` is the usual crossing sign: +1 when the under strand
    passes from right to left as seen travelling along the over strand.
    """

    over_edge: int
    under_edge: int
    over_param: Fraction
    under_param: Fraction
    handedness: int


@dataclass(frozen=True)
class Diagram:
    n_edges: int
    crossings: tuple[Crossing, ...]
    edge_crossings: tuple[tuple[int, ...], ...]

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def passages(self) -> list[tuple[int, bool]]:
        """The Gauss sequence: (crossing index, passes over?) in traversal order."""
        out = []
        for e, xs in enumerate(self.edge_crossings):
            for x in xs:
                out.append((x, self.crossings[x].over_edge == e))
        return out

    def writhe(self) -> int:
        return sum(x.handedness for x in self.crossings)

    def pd_code(self) -> list[tuple[int, int, int, int]]:
        """Planar-diagram code, strands labelled 1..2c along the orientation.

        Each tuple starts with the incoming under strand and lists the four
        strands counterclockwise, the usual PD convention.
        """
        seq = self.passages()
        m = len(seq)
        under_at, over_at = {}, {}
        for pos, (x, is_over) in enumerate(seq):
            (over_at if is_over else under_at)[x] = pos
        strand = lambda pos: (pos + 1) % m + 1  # strand leaving passage pos
        code = []
        for x, cr in enumerate(self.crossings):
            pu, po = under_at[x], over_at[x]
            a, c = strand(pu - 1), strand(pu)
            o_in, o_out = strand(po - 1), strand(po)
            if cr.handedness > 0:
                code.append((a, o_out, c, o_in))
            else:
                code.append((a, o_in, c, o_out))
        return code

    @classmethod
    def from_pd(cls, pd: Sequence[Sequence[int]]) -> "Diagram":
        """Rebuild a diagram from a PD code.

        Every strand becomes one edge of the diagram, carrying the single
        crossing at its head.  Suitable for fixtures; no geometry is implied.
        """
        pd = [tuple(int(v) for v in x) for x in pd]
        m = 2 * len(pd)
        if m == 0:
            return cls(0, (), ())
        succ = lambda s: s % m + 1
        head = {}
        crossings = []
        for idx, (a, b, c, d) in enumerate(pd):
            if d == succ(b):
                o_in, hand = b, -1
            elif b == succ(d):
                o_in, hand = d, +1
            else:
                raise ValueError(f"crossing {idx} over strand is not consecutive: {(a, b, c, d)}")
            if c != succ(a):
                raise ValueError(f"crossing {idx} under strand is not consecutive: {(a, b, c, d)}")
            head[a] = idx
            head[o_in] = idx
            crossings.append(Crossing(o_in - 1, a - 1, Fraction(1, 2), Fraction(1, 2), hand))
        if sorted(head) != list(range(1, m + 1)):
            raise ValueError("PD code does not describe a single closed strand")
        edge_crossings = tuple((head[s],) for s in range(1, m + 1))
        return cls(m, tuple(crossings), edge_crossings)


class GraphProjection:
    """A regular projection of a set of straight edges of a configuration.

    On construction the direction is checked against every edge in ``edges``
    (default: all edges of the complete graph): distinct vertex images, no
    vertex image on a non-incident edge image, only transverse double points
    and no triple points.  A direction regular for the complete graph is
    regular for each of its cycles, so one projection serves a whole census.
    """

    def __init__(self, c: Configuration, direction: Sequence[int],
                 edges: Sequence[tuple[int, int]] | None = None):
        d = tuple(int(v) for v in direction)
        if d == (0, 0, 0):
            raise ValueError("zero direction")
        self.configuration = c
        self.direction = d
        if edges is None:
            edges = list(combinations(c.labels, 2))
        self.edges = [tuple(sorted(e)) for e in edges]
        e1, e2 = _frame(d)
        ints = c.int_coords
        self.xy = {v: (_dot(ints[v - 1], e1), _dot(ints[v - 1], e2)) for v in c.labels}
        self.depth = {v: _dot(ints[v - 1], d) for v in c.labels}
        self._check_vertices()
        # (lo-edge, hi-edge) -> (param on lo, param on hi, lo is over)
        self.pairs: dict[tuple[tuple[int, int], tuple[int, int]], tuple[Fraction, Fraction, bool]] = {}
        self._find_crossings()

    def _check_vertices(self) -> None:
        xy = self.xy
        used = sorted({v for e in self.edges for v in e})
        seen = {}
        for v in used:
            if xy[v] in seen:
                raise IrregularProjectionError(f"vertices {seen[xy[v]]} and {v} project to one point")
            seen[xy[v]] = v
        for a, b in self.edges:
            for v in used:
                if v != a and v != b and _on_segment(xy[v], xy[a], xy[b]):
                    raise IrregularProjectionError(f"vertex {v} projects onto edge {a}{b}")

    def _find_crossings(self) -> None:
        xy, depth = self.xy, self.depth
        on_edge: dict[tuple[int, int], list[Fraction]] = {e: [] for e in self.edges}
        for e, f in combinations(sorted(self.edges), 2):
            if set(e) & set(f):
                continue
            a, b = xy[e[0]], xy[e[1]]
            p, q = xy[f[0]], xy[f[1]]
            if _orient2d(a, b, p) == _orient2d(a, b, q) or _orient2d(p, q, a) == _orient2d(p, q, b):
                continue
            rx, ry = b[0] - a[0], b[1] - a[1]
            sx, sy = q[0] - p[0], q[1] - p[1]
            den = rx * sy - ry * sx
            wx, wy = p[0] - a[0], p[1] - a[1]
            s = Fraction(wx * sy - wy * sx, den)
            t = Fraction(wx * ry - wy * rx, den)
            za = depth[e[0]] + s * (depth[e[1]] - depth[e[0]])
            zb = depth[f[0]] + t * (depth[f[1]] - depth[f[0]])
            if za == zb:
                raise IrregularProjectionError(f"edges {e} and {f} intersect in space")
            on_edge[e].append(s)
            on_edge[f].append(t)
            self.pairs[(e, f)] = (s, t, za > zb)
        for e, params in on_edge.items():
            if len(set(params)) != len(params):
                raise IrregularProjectionError(f"triple point on edge {e}")

    def crossing(self, e: tuple[int, int], f: tuple[int, int]):
        """Crossing of directed edges e and f as (param on e, param on f, e is over), or None."""
        ke, kf = tuple(sorted(e)), tuple(sorted(f))
        if ke < kf:
            hit = self.pairs.get((ke, kf))
            if hit is None:
                return None
            s, t, over = hit
        else:
            hit = self.pairs.get((kf, ke))
            if hit is None:
                return None
            t, s, over = hit
            over = not over
        if e[0] > e[1]:
            s = 1 - s
        if f[0] > f[1]:
            t = 1 - t
        return s, t, over

    def crossing_count(self, cycle: Cycle) -> int:
        edges = [tuple(sorted(e)) for e in cycle.edges()]
        n = len(edges)
        count = 0
        for i in range(n):
            for j in range(i + 2, n - (i == 0)):
                a, b = edges[i], edges[j]
                if (a, b) in self.pairs or (b, a) in self.pairs:
                    count += 1
        return count

    def diagram(self, cycle: Cycle) -> Diagram:
        edges = cycle.edges()
        n = len(edges)
        xy = self.xy
        crossings: list[Crossing] = []
        per_edge: list[list[tuple[Fraction, int]]] = [[] for _ in range(n)]
        for i in range(n):
            for j in range(i + 2, n - (i == 0)):
                hit = self.crossing(edges[i], edges[j])
                if hit is None:
                    continue
                s, t, i_over = hit
                (oi, os_), (ui, us) = ((i, s), (j, t)) if i_over else ((j, t), (i, s))
                o, u = edges[oi], edges[ui]
                ov = (xy[o[1]][0] - xy[o[0]][0], xy[o[1]][1] - xy[o[0]][1])
                uv = (xy[u[1]][0] - xy[u[0]][0], xy[u[1]][1] - xy[u[0]][1])
                cr = ov[0] * uv[1] - ov[1] * uv[0]
                idx = len(crossings)
                crossings.append(Crossing(oi, ui, os_, us, 1 if cr > 0 else -1))
                per_edge[i].append((s, idx))
                per_edge[j].append((t, idx))
        edge_crossings = tuple(tuple(x for _, x in sorted(lst)) for lst in per_edge)
        return Diagram(n, tuple(crossings), edge_crossings)


def is_regular(c: Configuration, direction: Sequence[int], cycle: Cycle | None = None) -> bool:
    try:
        GraphProjection(c, direction, None if cycle is None else cycle.edges())
    except IrregularProjectionError:
        return False
    return True


def regular_directions(c: Configuration, cycle: Cycle | None = None, count: int = 1,
                       max_norm: int = 12) -> list[tuple[int, int, int]]:
    """The first ``count`` regular directions from :func:`candidate_directions`."""
    found = []
    for d in candidate_directions(max_norm):
        if is_regular(c, d, cycle):
            found.append(d)
            if len(found) == count:
                return found
    raise DirectionExhaustedError(f"only {len(found)} regular directions with max-norm <= {max_norm}")


def generic_direction(c: Configuration, cycle: Cycle | None = None) -> tuple[int, int, int]:
    """First candidate direction regular for ``cycle`` (or for the whole complete graph)."""
    return regular_directions(c, cycle, 1)[0]


def project(c: Configuration, cycle: Cycle, direction: Sequence[int]) -> Diagram:
    return GraphProjection(c, direction, cycle.edges()).diagram(cycle)


# -- invariants ----------------------------------------------------------------

def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sgn = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sgn = -sgn
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sgn * m[n - 1][n - 1]


def coloring_matrix(d: Diagram) -> list[list[int]]:
    """Crossings x arcs matrix with rows ``2*over - in - out``.

    Arcs are the pieces of the curve between consecutive under-passages.
    """
    c = d.crossing_count
    rows = [[0] * c for _ in range(c)]
    over_arc, in_arc, out_arc = {}, {}, {}
    arc = 0
    for x, is_over in d.passages():
        if is_over:
            over_arc[x] = arc
        else:
            in_arc[x] = arc
            arc += 1
            out_arc[x] = arc
    for x in range(c):
        row = rows[x]
        row[over_arc[x] % c] += 2
        row[in_arc[x] % c] -= 1
        row[out_arc[x] % c] -= 1
    return rows


def knot_determinant(d: Diagram) -> int:
    """|Alexander polynomial at -1|, via a first minor of the coloring matrix."""
    c = d.crossing_count
    if c == 0:
        return 1
    m = coloring_matrix(d)
    minor = [row[:-1] for row in m[:-1]]
    return abs(bareiss_determinant(minor))


def arf_from_determinant(det: int) -> int:
    """Arf invariant of a knot with odd determinant: 0 iff det = +-1 mod 8."""
    if det % 2 == 0:
        raise ValueError(f"knot determinants are odd, got {det}")
    return 0 if det % 8 in (1, 7) else 1


def arf(d: Diagram) -> int:
    return arf_from_determinant(knot_determinant(d))


def class_from_determinant(det: int) -> KnotClass:
    try:
        return _DET_TO_CLASS[det]
    except KeyError:
        raise ClassificationError(f"determinant {det} impossible for a polygon of <= 7 sticks") from None


def classify(c: Configuration, cycle: Cycle, direction: Sequence[int] | None = None) -> KnotClass:
    if len(cycle) > 7:
        raise ValueError("classification is only valid for cycles of at most 7 edges")
    if direction is None:
        direction = generic_direction(c, cycle)
    return class_from_determinant(knot_determinant(project(c, cycle, direction)))
