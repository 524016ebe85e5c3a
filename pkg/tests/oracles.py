"""Independent reference computations used only by the tests.

Nothing here imports the code paths it checks: piercing is decided by
solving for the intersection point, crossings by an orthogonal rational
projection with Cramer's rule, and knot determinants by the Goeritz matrix
of a checkerboard colouring read off a PD code.
"""
from fractions import Fraction
from itertools import combinations, permutations


def det_by_permutations(m):
    """Leibniz expansion; fine for the small matrices in tests."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += -prod if inv % 2 else prod
    return total


def _sub(a, b):
    return [Fraction(x) - Fraction(y) for x, y in zip(a, b)]


def _cross(a, b):
    return [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def brute_pierces(t1, t2, t3, s1, s2):
    """Intersect the segment's line with the triangle's plane, then test barycentrics."""
    nrm = _cross(_sub(t2, t1), _sub(t3, t1))
    d = _sub(s2, s1)
    den = _dot(nrm, d)
    if den == 0:
        return False
    lam = _dot(nrm, _sub(t1, s1)) / den
    if not 0 <= lam <= 1:
        return False
    x = [Fraction(a) + lam * b for a, b in zip(s1, d)]
    # barycentric: all three sub-triangle normals agree with nrm
    signs = []
    for a, b in ((t1, t2), (t2, t3), (t3, t1)):
        signs.append(_dot(_cross(_sub(b, a), _sub(x, a)), nrm))
    return all(s >= 0 for s in signs)


def brute_epsilon(points, i1, i2, i3, j, k):
    p = lambda v: points[v - 1]
    if not brute_pierces(p(i1), p(i2), p(i3), p(j), p(k)):
        return 0
    val = _dot(_cross(_sub(p(i2), p(i1)), _sub(p(i3), p(i2))), _sub(p(k), p(j)))
    return (val > 0) - (val < 0)


def brute_crossings(points, cycle, direction):
    """(edge i, edge j, i is over) for every crossing of the projected cycle.

    Points are projected orthogonally onto the plane through the origin
    normal to ``direction``; intersections are solved with Cramer's rule on
    the two coordinates where the 2x2 system is nonsingular.
    """
    d = [Fraction(x) for x in direction]
    dd = _dot(d, d)
    proj = {}
    depth = {}
    for v in cycle:
        p = [Fraction(x) for x in points[v - 1]]
        h = _dot(p, d) / dd
        proj[v] = [a - h * b for a, b in zip(p, d)]
        depth[v] = _dot(p, d)
    n = len(cycle)
    edges = [(cycle[i], cycle[(i + 1) % n]) for i in range(n)]
    out = []
    for i, j in combinations(range(n), 2):
        e, f = edges[i], edges[j]
        if set(e) & set(f):
            continue
        a, b, c, dd_ = proj[e[0]], proj[e[1]], proj[f[0]], proj[f[1]]
        r = _sub(b, a)
        s = _sub(dd_, c)
        w = _sub(c, a)
        sol = None
        for x, y in ((0, 1), (0, 2), (1, 2)):
            det = r[x] * (-s[y]) - r[y] * (-s[x])
            if det != 0:
                lam = (w[x] * (-s[y]) - w[y] * (-s[x])) / det
                mu = (r[x] * w[y] - r[y] * w[x]) / det
                sol = (lam, mu)
                break
        if sol is None:
            continue
        lam, mu = sol
        # the third coordinate must agree as well (coplanar lines in the plane always do)
        if not (0 < lam < 1 and 0 < mu < 1):
            continue
        ze = depth[e[0]] + lam * (depth[e[1]] - depth[e[0]])
        zf = depth[f[0]] + mu * (depth[f[1]] - depth[f[0]])
        out.append((i, j, ze > zf))
    return out


def pd_faces(pd):
    """Faces of the planar 4-valent graph of a PD code, as lists of corners.

    A corner (x, slot) is the region between strand slot and slot+1
    (counterclockwise) at crossing x.
    """
    where = {}
    for x, code in enumerate(pd):
        for slot, s in enumerate(code):
            where.setdefault(s, []).append((x, slot))
    faces = []
    seen = set()
    for x in range(len(pd)):
        for slot in range(4):
            if (x, slot) in seen:
                continue
            face = []
            cx, cs = x, slot
            while (cx, cs) not in seen:
                seen.add((cx, cs))
                face.append((cx, cs))
                # leave along the strand bounding the corner clockwise-last,
                # arrive at its other end and continue counterclockwise
                s_next = (cs + 1) % 4
                label = pd[cx][s_next]
                ends = where[label]
                other = ends[0] if ends[1] == (cx, s_next) else ends[1]
                cx, cs = other
            faces.append(face)
    return faces


def goeritz_determinant(pd):
    """|det| of a reduced Goeritz matrix of the PD diagram."""
    if not pd:
        return 1
    faces = pd_faces(pd)
    face_of = {}
    for f, corners in enumerate(faces):
        for corner in corners:
            face_of[corner] = f
    # checkerboard: at every crossing corners 0,2 share a colour, 1,3 the other
    colour = {0: 0}
    changed = True
    while changed:
        changed = False
        for x in range(len(pd)):
            for slot in range(4):
                f = face_of[(x, slot)]
                g = face_of[(x, (slot + 1) % 4)]
                if f in colour and g not in colour:
                    colour[g] = 1 - colour[f]
                    changed = True
                elif g in colour and f not in colour:
                    colour[f] = 1 - colour[g]
                    changed = True
    white = sorted(f for f in range(len(faces)) if colour[f] == 0)
    idx = {f: i for i, f in enumerate(white)}
    g = [[0] * len(white) for _ in white]
    for x in range(len(pd)):
        # corner 0 lies between the incoming under strand and the next strand
        # counterclockwise; crossings whose white corners are 0/2 get +1
        if colour[face_of[(x, 0)]] == 0:
            a, b, eta = face_of[(x, 0)], face_of[(x, 2)], 1
        else:
            a, b, eta = face_of[(x, 1)], face_of[(x, 3)], -1
        if a == b:
            continue
        ia, ib = idx[a], idx[b]
        g[ia][ib] -= eta
        g[ib][ia] -= eta
        g[ia][ia] += eta
        g[ib][ib] += eta
    minor = [row[:-1] for row in g[:-1]]
    return abs(det_by_permutations(minor)) if minor else 1


def brute_is_regular(points, edges, direction):
    """Regularity of the orthogonal projection of ``edges`` along ``direction``."""
    d = [Fraction(x) for x in direction]
    dd = _dot(d, d)
    verts = sorted({v for e in edges for v in e})
    proj = {}
    for v in verts:
        p = [Fraction(x) for x in points[v - 1]]
        h = _dot(p, d) / dd
        proj[v] = tuple(a - h * b for a, b in zip(p, d))
    if len(set(proj.values())) != len(verts):
        return False

    def on_segment(x, a, b):
        ab, ax = _sub(b, a), _sub(x, a)
        if any(_cross(ab, ax)):
            return False
        t = _dot(ax, ab) / _dot(ab, ab)
        return 0 <= t <= 1

    for a, b in edges:
        for v in verts:
            if v not in (a, b) and on_segment(proj[v], proj[a], proj[b]):
                return False
    # crossing points: no point shared by two crossings
    hits = []
    for e, f in combinations(edges, 2):
        if set(e) & set(f):
            continue
        a, b, c, q = proj[e[0]], proj[e[1]], proj[f[0]], proj[f[1]]
        r, s, w = _sub(b, a), _sub(q, c), _sub(c, a)
        for x, y in ((0, 1), (0, 2), (1, 2)):
            det = r[x] * (-s[y]) - r[y] * (-s[x])
            if det != 0:
                lam = (w[x] * (-s[y]) - w[y] * (-s[x])) / det
                mu = (r[x] * w[y] - r[y] * w[x]) / det
                if 0 < lam < 1 and 0 < mu < 1:
                    hits.append(tuple(ai + lam * ri for ai, ri in zip(a, r)))
                break
    return len(hits) == len(set(hits))
