"""Exact planar convex-polygon helpers.

These are performance paths: intersections, diameters and membership tests
of 2-D bodies via polygon clipping instead of row-subset enumeration.  They
must agree exactly with the generic kernel (tested), they just get there in
linear instead of quadratic time.

Polygons are lists of Fraction pairs in counter-clockwise order without a
repeated closing vertex.  Degenerate results (segment, point, empty) are
simply shorter lists.
"""

from fractions import Fraction

from .core import Segment, diameter_of_points
from .linalg import dot


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Andrew monotone chain; returns CCW hull, collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def clip(poly, normal, rhs):
    """Clip a convex polygon by the halfplane normal . x <= rhs.

    Hot path: arithmetic is inlined and the no-cut / all-cut cases return
    without rebuilding the vertex list.
    """
    if not poly:
        return []
    n0, n1 = normal
    vals = [n0 * p[0] + n1 * p[1] - rhs for p in poly]
    inside = outside = False
    for f in vals:
        if f > 0:
            outside = True
        else:
            inside = True
    if not outside:
        return poly
    if not inside:
        return []
    if len(poly) == 2:
        a, b = poly
        fa, fb = vals
        t = fa / (fa - fb)
        mid = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
        out = [a, mid] if fa <= 0 else [mid, b]
        return out if out[0] != out[1] else [out[0]]
    out = []
    n = len(poly)
    for i in range(n):
        j = i + 1 if i + 1 < n else 0
        cur = poly[i]
        fc = vals[i]
        fn = vals[j]
        if fc <= 0:
            out.append(cur)
            if fn > 0:
                nxt = poly[j]
                t = fc / (fc - fn)
                out.append((cur[0] + t * (nxt[0] - cur[0]),
                            cur[1] + t * (nxt[1] - cur[1])))
        elif fn <= 0:
            nxt = poly[j]
            t = fc / (fc - fn)
            out.append((cur[0] + t * (nxt[0] - cur[0]),
                        cur[1] + t * (nxt[1] - cur[1])))
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def clip_rows(poly, rows, rhs):
    """Clip by many halfplanes; a bounding-box test skips rows that cannot
    cut the current polygon (the common case when intersecting bodies that
    mostly contain each other)."""
    if not poly:
        return []
    x0 = min(p[0] for p in poly)
    x1 = max(p[0] for p in poly)
    y0 = min(p[1] for p in poly)
    y1 = max(p[1] for p in poly)
    for row, bound in zip(rows, rhs):
        n0, n1 = row
        hi = n0 * (x1 if n0 > 0 else x0) + n1 * (y1 if n1 > 0 else y0)
        if hi <= bound:
            continue
        clipped = clip(poly, row, bound)
        if not clipped:
            return []
        if clipped is not poly:
            poly = clipped
            x0 = min(p[0] for p in poly)
            x1 = max(p[0] for p in poly)
            y0 = min(p[1] for p in poly)
            y1 = max(p[1] for p in poly)
    return poly


def body_polygon(body):
    """Vertex polygon of a bounded 2-D body (CCW), [] if empty.

    Raises Unbounded via the kernel if the body is unbounded.
    """
    from . import core
    from .errors import EmptyBody

    assert body.dim == 2
    try:
        verts = core.vertices(body)
    except EmptyBody:
        return []
    return convex_hull(verts)


def intersection_polygon(bodies):
    """Polygon of the intersection of 2-D bodies; [] if empty."""
    bodies = list(bodies)
    poly = body_polygon(bodies[0])
    for body in bodies[1:]:
        poly = clip_rows(poly, body.A, body.b)
        if not poly:
            return []
    return poly


def polygon_diameter_sq(poly):
    """(squared diameter, witness segment) of a polygon's vertex set.

    Rotating calipers on the hull for big vertex counts, brute force below;
    ties go to the lexicographically smallest sorted pair either way.
    """
    if len(poly) <= 40:
        return diameter_of_points(poly)
    hull = convex_hull(poly)
    m = len(hull)
    if m <= 3:
        return diameter_of_points(hull)

    def area2(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    best = None
    best_pair = None

    def consider(p, q):
        nonlocal best, best_pair
        d2 = (p[0] - q[0]) ** 2 + (p[1] - q[1]) ** 2
        pair = (p, q) if p <= q else (q, p)
        if best is None or d2 > best or (d2 == best and pair < best_pair):
            best = d2
            best_pair = pair

    j = 1
    for i in range(m):
        ni = (i + 1) % m
        while area2(hull[i], hull[ni], hull[(j + 1) % m]) > \
                area2(hull[i], hull[ni], hull[j]):
            j = (j + 1) % m
        consider(hull[i], hull[j])
        consider(hull[ni], hull[j])
        consider(hull[i], hull[(j + 1) % m])
    return best, Segment(*best_pair)


def point_in_polygon(poly, p):
    """Exact membership of p in the convex region spanned by poly."""
    if not poly:
        return False
    if len(poly) == 1:
        return p == poly[0]
    if len(poly) == 2:
        a, b = poly
        if cross(a, b, p) != 0:
            return False
        return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))
    n = len(poly)
    for i in range(n):
        if cross(poly[i], poly[(i + 1) % n], p) < 0:
            return False
    return True


def point_in_hull_of(points, p, hull_cache=None):
    """Membership of p in conv(points); hull_cache memoizes hulls by id key."""
    if hull_cache is not None:
        key = id(points)
        hull = hull_cache.get(key)
        if hull is None:
            hull = convex_hull(points)
            hull_cache[key] = hull
    else:
        hull = convex_hull(points)
    return point_in_polygon(hull, p)


def polygon_rows(poly):
    """H-rows (normal, rhs) of a CCW polygon; handles degenerate polygons."""
    from .core import ConvexBody, Segment

    if not poly:
        raise ValueError("empty polygon has no H-representation")
    if len(poly) == 1:
        body = ConvexBody.from_segment(Segment(poly[0], poly[0]))
        return list(zip(body.A, body.b))
    if len(poly) == 2:
        body = ConvexBody.from_segment(Segment(poly[0], poly[1]))
        return list(zip(body.A, body.b))
    rows = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        normal = (q[1] - p[1], p[0] - q[0])
        rows.append((normal, dot(normal, p)))
    return rows
