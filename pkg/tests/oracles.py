"""Independent brute-force oracles.

These deliberately avoid the library's detection code paths: all geometry
is recomputed here from raw cross products over Fractions, and maxima are
found by exhaustive subset enumeration.  Only usable at oracle scale.
"""

from itertools import combinations


def cross(o, a, b):
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def is_cup_seq(pts) -> bool:
    pts = sorted(pts, key=lambda p: p.x)
    if len(pts) < 2:
        return False
    if any(a.x == b.x for a, b in zip(pts, pts[1:])):
        return False
    return all(cross(pts[i], pts[i + 1], pts[i + 2]) > 0
               for i in range(len(pts) - 2))


def is_cap_seq(pts) -> bool:
    pts = sorted(pts, key=lambda p: p.x)
    if len(pts) < 2:
        return False
    if any(a.x == b.x for a, b in zip(pts, pts[1:])):
        return False
    return all(cross(pts[i], pts[i + 1], pts[i + 2]) < 0
               for i in range(len(pts) - 2))


def convex_position(pts) -> bool:
    """Every point outside every closed triangle (or segment) of the others."""
    pts = list(pts)
    if len(pts) <= 2:
        return True
    for i, p in enumerate(pts):
        others = [q for j, q in enumerate(pts) if j != i]
        for tri in combinations(others, 3):
            if _in_closed_triangle(p, *tri):
                return False
        for a, b in combinations(others, 2):
            if _on_segment(p, a, b):
                return False
    return True


def _in_closed_triangle(p, a, b, c):
    d1, d2, d3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
    has_neg = d1 < 0 or d2 < 0 or d3 < 0
    has_pos = d1 > 0 or d2 > 0 or d3 > 0
    return not (has_neg and has_pos)


def _on_segment(p, a, b):
    if cross(a, b, p) != 0:
        return False
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def _max_subset(pts, predicate) -> int:
    pts = list(pts)
    for size in range(len(pts), 1, -1):
        for sub in combinations(pts, size):
            if predicate(sub):
                return size
    return 1


def brute_longest_cup(pts) -> int:
    return max(_max_subset(pts, is_cup_seq), 2 if len(pts) >= 2 else 1)


def brute_longest_cap(pts) -> int:
    return max(_max_subset(pts, is_cap_seq), 2 if len(pts) >= 2 else 1)


def brute_max_collinear(pts) -> int:
    pts = list(pts)
    best = min(len(pts), 2)
    for a, b in combinations(pts, 2):
        run = sum(1 for p in pts if cross(a, b, p) == 0)
        best = max(best, run)
    return best


def brute_max_convex_subset(pts) -> int:
    return _max_subset(pts, convex_position)


def brute_pair_label(pts, p, q):
    """(cup length, cap length ending at the pair), by chain enumeration."""
    pts = sorted(pts, key=lambda r: r.x)
    before = [r for r in pts if r.x < p.x]
    best_cup = best_cap = 1
    for size in range(len(before), 0, -1):
        for sub in combinations(before, size):
            chain = list(sub) + [p, q]
            if is_cup_seq(chain) and len(chain) - 1 > best_cup:
                best_cup = len(chain) - 1
            if is_cap_seq(chain) and len(chain) - 1 > best_cap:
                best_cap = len(chain) - 1
    return best_cup, best_cap


def brute_count_downsets(a: int, b: int) -> int:
    """Count antichain... no: count monotone profiles directly."""
    if a == 0:
        return 1

    def count(cols_left: int, bound: int) -> int:
        if cols_left == 0:
            return 1
        return sum(count(cols_left - 1, v) for v in range(bound + 1))

    return count(a, b)


def brute_max_antichain(n: int, less) -> int:
    """Maximum antichain by bitmask enumeration; less(i, j) is the order."""
    pairs = [(i, j) for i in range(n) for j in range(n)
             if i != j and less(i, j)]
    conflict = [0] * n
    for i, j in pairs:
        conflict[i] |= 1 << j
        conflict[j] |= 1 << i
    best = 0
    for mask in range(1 << n):
        size = mask.bit_count()
        if size <= best:
            continue
        ok = True
        m = mask
        while m:
            i = (m & -m).bit_length() - 1
            if conflict[i] & mask:
                ok = False
                break
            m &= m - 1
        if ok:
            best = size
    return best


def point_in_hull_closed(p, pts):
    pts = list(pts)
    if len(pts) == 1:
        return p == pts[0]
    for tri in combinations(pts, 3):
        if _in_closed_triangle(p, *tri):
            return True
    for a, b in combinations(pts, 2):
        if _on_segment(p, a, b):
            return True
    return p in pts


def is_inner_cap(sub, body_vertices) -> bool:
    sub = list(sub)
    for i, x in enumerate(sub):
        rest = [q for j, q in enumerate(sub) if j != i] + list(body_vertices)
        if point_in_hull_closed(x, rest):
            return False
    return True


def _hulls_meet(a_pts, b_pts) -> bool:
    """Closed convex hulls intersect (small sizes only)."""
    for p in a_pts:
        if point_in_hull_closed(p, b_pts):
            return True
    for p in b_pts:
        if point_in_hull_closed(p, a_pts):
            return True
    for a, b in combinations(a_pts, 2):
        for c, d in combinations(b_pts, 2):
            if _segments_meet(a, b, c, d):
                return True
    return False


def _segments_meet(a, b, c, d) -> bool:
    d1, d2 = cross(a, b, c), cross(a, b, d)
    d3, d4 = cross(c, d, a), cross(c, d, b)
    if ((d1 > 0) != (d2 > 0) and d1 != 0 and d2 != 0
            and (d3 > 0) != (d4 > 0) and d3 != 0 and d4 != 0):
        return True
    return (_on_segment(c, a, b) or _on_segment(d, a, b)
            or _on_segment(a, c, d) or _on_segment(b, c, d))


def is_outer_cup(sub, body_vertices) -> bool:
    sub = list(sub)
    for i, x in enumerate(sub):
        rest = [q for j, q in enumerate(sub) if j != i]
        if _hulls_meet([x] + list(body_vertices), rest):
            return False
    return True


def brute_largest_relative(pts, body_vertices, predicate) -> int:
    pts = list(pts)
    for size in range(len(pts), 1, -1):
        for sub in combinations(pts, size):
            if predicate(sub, body_vertices):
                return size
    return 1
