"""Detection of extremal structures in planar point sets.

Cups, caps, collinear runs, maximum convex-position subsets, and the
pair-label / grid-poset down-set machinery built on top of the cup/cap
dynamic program.

Conventions:

* A k-cup is k points with distinct x-coordinates whose left-to-right
  consecutive triples all turn LEFT (convex from below); a k-cap mirrors
  with RIGHT turns.  The *length* of a k-cup or k-cap is k - 1 (edges).
* Every pair of points is both a cup and a cap of length 1; a collinear
  triple is neither a cup nor a cap, so it extends no chain.
* All results are exact.  Inputs are converted once to integer coordinates
  by clearing denominators (an orientation-preserving positive axis
  scaling), and a vectorized int64 code path is used only when coordinate
  magnitudes make the arithmetic provably overflow-free.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .geom import Point, PointSet, cross_sign

# Above this coordinate magnitude the int64 fast path could overflow; the
# exact big-integer path is used instead.  Results are identical.
_INT64_COORD_LIMIT = 1 << 30
# Below this size the plain-Python DP beats numpy's dispatch overhead.
_NUMPY_MIN_POINTS = 24


class WitnessKind(Enum):
    CUP = "cup"
    CAP = "cap"
    COLLINEAR_RUN = "collinear_run"
    CONVEX_SUBSET = "convex_subset"
    INNER_CAP = "inner_cap"
    OUTER_CUP = "outer_cup"


@dataclass(frozen=True)
class StructureWitness:
    """A found structure with its member points (left-to-right for cups/caps)."""

    kind: WitnessKind
    members: PointSet

    def __len__(self) -> int:
        return len(self.members)


class PairLabel(NamedTuple):
    x_label: int  # length (edge count) of the longest cup ending at the pair
    y_label: int  # length of the longest cap ending at the pair


# ---------------------------------------------------------------------------
# integer coordinate normalization


def _int_coords(pts: Sequence[Point]) -> list[tuple[int, int]]:
    """Exact integer surrogate coordinates.

    Clears denominators per axis and translates the minimum to zero;
    positive axis scalings and translations preserve every orientation
    sign, collinearity group, and x-order, so all chain/collinearity
    structure is unchanged.
    """
    if not pts:
        return []
    sx = math.lcm(*(p.x.denominator for p in pts))
    sy = math.lcm(*(p.y.denominator for p in pts))
    xs = [int(p.x * sx) for p in pts]
    ys = [int(p.y * sy) for p in pts]
    mx, my = min(xs), min(ys)
    xs = [v - mx for v in xs]
    ys = [v - my for v in ys]
    gx = math.gcd(*xs) if any(xs) else 1
    gy = math.gcd(*ys) if any(ys) else 1
    return [(x // max(gx, 1), y // max(gy, 1)) for x, y in zip(xs, ys)]


def _int64_safe(coords: Sequence[tuple[int, int]]) -> bool:
    return all(abs(x) < _INT64_COORD_LIMIT and abs(y) < _INT64_COORD_LIMIT
               for x, y in coords)


# ---------------------------------------------------------------------------
# cup/cap label tables
#
# For points sorted by strictly increasing x, X[i][j] (i < j) is the length
# in edges of the longest cup whose last two points are i and j; Y mirrors
# for caps.  Both are >= 1 for every pair.


def _label_tables_python(coords: Sequence[tuple[int, int]]):
    n = len(coords)
    X = [[1] * n for _ in range(n)]
    Y = [[1] * n for _ in range(n)]
    for i in range(1, n - 1):
        xi, yi = coords[i]
        # Slopes are exact; for h < i < j the triple (h, i, j) turns LEFT
        # exactly when slope(i, j) > slope(h, i), RIGHT when <.
        preds = sorted(
            (Fraction(yi - coords[h][1], xi - coords[h][0]), h)
            for h in range(i)
        )
        succs = sorted(
            (Fraction(coords[j][1] - yi, coords[j][0] - xi), j)
            for j in range(i + 1, n)
        )
        Xi = X[i]
        Yi = Y[i]
        # cups: sweep successors by increasing slope, growing the strict
        # prefix of predecessors with smaller slope.
        ptr, run = 0, 0
        for slope, j in succs:
            while ptr < i and preds[ptr][0] < slope:
                run = max(run, X[preds[ptr][1]][i])
                ptr += 1
            Xi[j] = run + 1
        # caps: mirror sweep with decreasing slope.
        ptr, run = i - 1, 0
        for slope, j in reversed(succs):
            while ptr >= 0 and preds[ptr][0] > slope:
                run = max(run, Y[preds[ptr][1]][i])
                ptr -= 1
            Yi[j] = run + 1
    return X, Y


def _label_tables_numpy(coords: Sequence[tuple[int, int]]):
    n = len(coords)
    x = np.array([c[0] for c in coords], dtype=np.int64)
    y = np.array([c[1] for c in coords], dtype=np.int64)
    X = np.ones((n, n), dtype=np.int32)
    Y = np.ones((n, n), dtype=np.int32)
    for i in range(1, n - 1):
        ux = x[i] - x[:i]
        uy = y[i] - y[:i]
        vx = x[i + 1:] - x[i]
        vy = y[i + 1:] - y[i]
        cr = ux[:, None] * vy[None, :] - uy[:, None] * vx[None, :]
        colX = X[:i, i]
        colY = Y[:i, i]
        X[i, i + 1:] = np.where(cr > 0, colX[:, None], 0).max(axis=0) + 1
        Y[i, i + 1:] = np.where(cr < 0, colY[:, None], 0).max(axis=0) + 1
    return X, Y


def _label_tables(coords: Sequence[tuple[int, int]]):
    if len(coords) >= _NUMPY_MIN_POINTS and _int64_safe(coords):
        return _label_tables_numpy(coords)
    return _label_tables_python(coords)


def _sorted_distinct_x(ps: PointSet) -> list[Point]:
    pts = sorted(ps, key=lambda p: (p.x, p.y))
    for a, b in zip(pts, pts[1:]):
        if a.x == b.x:
            raise ValueError(
                f"x-coordinates are not pairwise distinct ({a!r}, {b!r}); "
                "normalize with shear_distinct_x first")
    return pts


@lru_cache(maxsize=64)
def _detection_tables(ps: PointSet):
    """(sorted points, int coords, cup table, cap table) for a point set."""
    pts = _sorted_distinct_x(ps)
    coords = _int_coords(pts)
    X, Y = _label_tables(coords)
    return pts, coords, X, Y


# ---------------------------------------------------------------------------
# cup / cap predicates and witnesses


def is_cup(points: Sequence[Point]) -> bool:
    """True iff the points form a cup (any input order; at least 2 points)."""
    pts = sorted(points, key=lambda p: p.x)
    if len(pts) < 2:
        return False
    if any(a.x == b.x for a, b in zip(pts, pts[1:])):
        return False
    return all(cross_sign(pts[i], pts[i + 1], pts[i + 2]) > 0
               for i in range(len(pts) - 2))


def is_cap(points: Sequence[Point]) -> bool:
    pts = sorted(points, key=lambda p: p.x)
    if len(pts) < 2:
        return False
    if any(a.x == b.x for a, b in zip(pts, pts[1:])):
        return False
    return all(cross_sign(pts[i], pts[i + 1], pts[i + 2]) < 0
               for i in range(len(pts) - 2))


def is_collinear_run(points: Sequence[Point]) -> bool:
    pts = list(points)
    if len(pts) < 2:
        return len(pts) == 1
    return all(cross_sign(pts[0], pts[1], p) == 0 for p in pts[2:])


@lru_cache(maxsize=32)
def _suffix_tables(ps: PointSet):
    """Label tables of the x-reflected set.

    Reflecting x maps cups to cups and caps to caps while reversing the
    order, so these give, for each pair, the length of the longest chain
    *starting* there: points of the longest cup starting at (i, j) equal
    ``XR[n-1-j][n-1-i] + 1``.
    """
    _, coords, _, _ = _detection_tables(ps)
    refl = [(-x, y) for x, y in reversed(coords)]
    return _label_tables(refl)


def _start_tables(ps: PointSet):
    _, coords, _, _ = _detection_tables(ps)
    n = len(coords)
    XR, YR = _suffix_tables(ps)

    def r_cup(i, j):
        return int(XR[n - 1 - j][n - 1 - i]) + 1

    def r_cap(i, j):
        return int(YR[n - 1 - j][n - 1 - i]) + 1

    return r_cup, r_cap


def _lexmin_chain(coords, start_points, turn_sign) -> list[int]:
    """Lexicographically smallest maximum chain, by greedy extension.

    ``start_points(i, j)`` gives the point count of the longest chain
    beginning with the pair (i, j); the greedy minimizes each successive
    index subject to completing a maximum chain.
    """
    n = len(coords)
    best = 2
    for i in range(n - 1):
        for j in range(i + 1, n):
            v = start_points(i, j)
            if v > best:
                best = v
    first = None
    for i in range(n - 1):
        for j in range(i + 1, n):
            if start_points(i, j) == best:
                first = (i, j)
                break
        if first:
            break
    assert first is not None
    chain = [first[0], first[1]]
    remaining = best - 2
    while remaining:
        u, v = chain[-2], chain[-1]
        pu, pv = coords[u], coords[v]
        for w in range(v + 1, n):
            pw = coords[w]
            s = (pv[0] - pu[0]) * (pw[1] - pu[1]) - (pv[1] - pu[1]) * (pw[0] - pu[0])
            if (s > 0) if turn_sign > 0 else (s < 0):
                if start_points(v, w) == start_points(u, v) - 1:
                    chain.append(w)
                    break
        else:  # pragma: no cover - table consistency guarantees extension
            raise AssertionError("chain extension failed")
        remaining -= 1
    return chain


def longest_cup(ps: PointSet) -> StructureWitness:
    """A maximum-cardinality cup; ties broken by the lexicographically
    smallest index sequence in x-order."""
    if len(ps) < 2:
        raise ValueError("longest_cup needs at least 2 points")
    pts, coords, _, _ = _detection_tables(ps)
    r_cup, _ = _start_tables(ps)
    chain = _lexmin_chain(coords, r_cup, +1)
    return StructureWitness(WitnessKind.CUP, PointSet(pts[i] for i in chain))


def longest_cap(ps: PointSet) -> StructureWitness:
    if len(ps) < 2:
        raise ValueError("longest_cap needs at least 2 points")
    pts, coords, _, _ = _detection_tables(ps)
    _, r_cap = _start_tables(ps)
    chain = _lexmin_chain(coords, r_cap, -1)
    return StructureWitness(WitnessKind.CAP, PointSet(pts[i] for i in chain))


def longest_cup_size(ps: PointSet) -> int:
    """Point count of the longest cup (no witness extraction)."""
    pts, coords, X, _ = _detection_tables(ps)
    n = len(pts)
    if n < 2:
        raise ValueError("needs at least 2 points")
    best = 1
    for i in range(n - 1):
        row = X[i]
        for j in range(i + 1, n):
            if row[j] > best:
                best = row[j]
    return int(best) + 1


def longest_cap_size(ps: PointSet) -> int:
    pts, coords, _, Y = _detection_tables(ps)
    n = len(pts)
    if n < 2:
        raise ValueError("needs at least 2 points")
    best = 1
    for i in range(n - 1):
        row = Y[i]
        for j in range(i + 1, n):
            if row[j] > best:
                best = row[j]
    return int(best) + 1


# ---------------------------------------------------------------------------
# maximum collinear subset


def max_collinear(ps: PointSet) -> StructureWitness:
    """A maximum set of members lying on one common line.

    Anchor scan: the lexicographically smallest point of a maximal run sees
    the entire rest of the run in a single reduced-direction bucket.
    """
    if len(ps) < 2:
        raise ValueError("max_collinear needs at least 2 points")
    order = sorted(range(len(ps)), key=lambda i: (ps[i].x, ps[i].y))
    pts = [ps[i] for i in order]
    coords = _int_coords(pts)
    n = len(pts)
    best: list[int] = [0, 1]
    for i in range(n - 1):
        if n - i <= len(best):
            break
        groups: dict[tuple[int, int], list[int]] = {}
        xi, yi = coords[i]
        for j in range(i + 1, n):
            dx = coords[j][0] - xi
            dy = coords[j][1] - yi
            g = math.gcd(abs(dx), abs(dy))
            groups.setdefault((dx // g, dy // g), []).append(j)
        for members in groups.values():
            if len(members) + 1 > len(best):
                best = [i] + members
    return StructureWitness(WitnessKind.COLLINEAR_RUN,
                            PointSet(pts[i] for i in best))


# ---------------------------------------------------------------------------
# maximum subset in convex position


def _angular_key(dx: Fraction, dy: Fraction):
    # Order directions with dy >= 0 by angle in [0, pi): the ray (dy == 0,
    # dx > 0) first, then dx > 0 by increasing slope, then vertical, then
    # dx < 0 by increasing (negative) slope.  Same-ray ties by distance.
    d2 = dx * dx + dy * dy
    if dy == 0:
        return (0, Fraction(0), d2)
    if dx > 0:
        return (1, Fraction(dy, dx), d2)
    if dx == 0:
        return (2, Fraction(0), d2)
    return (3, Fraction(dy, dx), d2)


def max_convex_subset(ps: PointSet) -> StructureWitness:
    """An exact maximum-cardinality subset in strict convex position.

    For each anchor b (the (y, x)-lexicographic minimum of the subset) a
    chain DP runs over the remaining candidates in angular order around b;
    every consecutive turn, the closing turn, and the turn at b itself are
    strict, so no three chosen points are ever collinear.
    """
    if len(ps) < 3:
        raise ValueError("max_convex_subset needs at least 3 points")
    order = sorted(range(len(ps)), key=lambda i: (ps[i].y, ps[i].x))
    pts = [ps[i] for i in order]
    coords = _int_coords(pts)
    n = len(pts)

    def sgn(a, b, c):
        v = ((b[0] - a[0]) * (c[1] - a[1])) - ((b[1] - a[1]) * (c[0] - a[0]))
        return (v > 0) - (v < 0)

    best_size = 2
    best_members = [pts[0], pts[1]]

    for ai in range(n - 2):
        b = coords[ai]
        cand = sorted(
            range(ai + 1, n),
            key=lambda i: _angular_key(Fraction(coords[i][0] - b[0]),
                                       Fraction(coords[i][1] - b[1])),
        )
        c = len(cand)
        if c + 1 <= best_size:
            continue
        # dp[u + 1][v]: vertices of the best chain anchor -> ... -> u -> v,
        # u == -1 standing for the anchor itself.
        dp = [[0] * c for _ in range(c + 1)]
        par = [[-2] * c for _ in range(c + 1)]
        for v in range(c):
            dp[0][v] = 2
        for v in range(c):
            pv = coords[cand[v]]
            for u in range(-1, v):
                d = dp[u + 1][v]
                if d == 0:
                    continue
                pu = b if u == -1 else coords[cand[u]]
                # close the polygon: the turn at v back toward the anchor
                # must be strict (the turn at the anchor itself then is too,
                # because chain angles are strictly increasing on [0, pi)).
                if u >= 0 and sgn(pu, pv, b) > 0 and d > best_size:
                    best_size = d
                    chain = _walk_parents(par, u, v)
                    best_members = [pts[ai]] + [pts[cand[i]] for i in chain]
                for w in range(v + 1, c):
                    if sgn(pu, pv, coords[cand[w]]) > 0 and dp[v + 1][w] < d + 1:
                        dp[v + 1][w] = d + 1
                        par[v + 1][w] = u
    members = sorted(best_members, key=lambda p: (p.x, p.y))
    return StructureWitness(WitnessKind.CONVEX_SUBSET, PointSet(members))


def _walk_parents(par, u: int, v: int) -> list[int]:
    """Chain of candidate indices ending (..., u, v); the anchor is implicit."""
    rev = [v]
    while u != -1:
        rev.append(u)
        u, v = par[u + 1][v], u
    rev.reverse()
    return rev


# ---------------------------------------------------------------------------
# pair labels, down-sets


def pair_labels(ps: PointSet) -> dict[tuple[Point, Point], PairLabel]:
    """Labels (x_pq, y_pq) for every ordered pair p before q in x-order."""
    pts, coords, X, Y = _detection_tables(ps)
    n = len(pts)
    out = {}
    for i in range(n - 1):
        for j in range(i + 1, n):
            out[(pts[i], pts[j])] = PairLabel(int(X[i][j]), int(Y[i][j]))
    return out


@dataclass(frozen=True)
class DownSet:
    """A down-set of the grid poset on [a] x [b], (x, y) <= (x', y') iff
    x <= x' and y <= y'; stored as the non-increasing column-height profile."""

    a: int
    b: int
    profile: tuple[int, ...]

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError("grid dimensions must be non-negative")
        if len(self.profile) != self.a:
            raise ValueError("profile length must equal the grid width")
        prev = self.b
        for v in self.profile:
            if not (0 <= v <= self.b):
                raise ValueError(f"column height {v} outside 0..{self.b}")
            if v > prev:
                raise ValueError("profile must be non-increasing")
            prev = v

    @staticmethod
    def empty(a: int, b: int) -> "DownSet":
        return DownSet(a, b, (0,) * a)

    @staticmethod
    def generated_by(a: int, b: int,
                     pairs: Sequence[tuple[int, int]]) -> "DownSet":
        """Downward closure of 1-based grid points (x, y)."""
        profile = [0] * a
        for x, y in pairs:
            if not (1 <= x <= a and 1 <= y <= b):
                raise ValueError(f"generator ({x}, {y}) outside grid "
                                 f"L({a}, {b})")
            for col in range(x):
                if profile[col] < y:
                    profile[col] = y
        return DownSet(a, b, tuple(profile))

    def contains(self, x: int, y: int) -> bool:
        return 1 <= x <= self.a and 1 <= y <= self.profile[x - 1]

    def size(self) -> int:
        return sum(self.profile)


def downset_of(ps: PointSet, q: Point, a: int, b: int) -> DownSet:
    """Down-set in L(a, b) generated by the labels of pairs ending at q."""
    pts, coords, X, Y = _detection_tables(ps)
    try:
        k = pts.index(q)
    except ValueError:
        raise ValueError(f"{q!r} is not a member of the point set") from None
    pairs = [(int(X[i][k]), int(Y[i][k])) for i in range(k)]
    return DownSet.generated_by(a, b, pairs)


def downsets_by_point(ps: PointSet, a: int, b: int) -> dict[Point, DownSet]:
    """downset_of for every member, computing the label tables once."""
    pts, coords, X, Y = _detection_tables(ps)
    out = {}
    for k, q in enumerate(pts):
        pairs = [(int(X[i][k]), int(Y[i][k])) for i in range(k)]
        out[q] = DownSet.generated_by(a, b, pairs)
    return out


def count_downsets(a: int, b: int) -> int:
    """Number of down-sets of L(a, b): binomial(a + b, a), exactly."""
    if a < 0 or b < 0:
        raise ValueError("grid dimensions must be non-negative")
    return math.comb(a + b, a)


def enumerate_downsets(a: int, b: int) -> list[DownSet]:
    """All down-sets of L(a, b), each exactly once (profile-lex order)."""
    total = count_downsets(a, b)
    if total > 10**6:
        raise ValueError(f"{total} down-sets exceed the enumeration cap")
    out: list[DownSet] = []

    def rec(prefix: list[int], bound: int):
        if len(prefix) == a:
            out.append(DownSet(a, b, tuple(prefix)))
            return
        for v in range(bound, -1, -1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], b)
    return out


# ---------------------------------------------------------------------------
# combined search


def _max_label_pair(table, size: int):
    best, where = 0, None
    for i in range(size - 1):
        row = table[i]
        for j in range(i + 1, size):
            if row[j] > best:
                best, where = int(row[j]), (i, j)
    return best, where


def _chain_backward(coords, table, i: int, j: int, turn_sign: int) -> list[int]:
    """A maximum chain ending at the pair (i, j), walked backward greedily
    through the ending-label table."""
    chain = [j, i]
    while table[i][j] > 1:
        xi, yi = coords[i]
        xj, yj = coords[j]
        for h in range(i):
            xh, yh = coords[h]
            s = (xi - xh) * (yj - yi) - (yi - yh) * (xj - xi)
            good = s > 0 if turn_sign > 0 else s < 0
            if good and table[h][i] == table[i][j] - 1:
                chain.append(h)
                i, j = h, i
                break
        else:  # pragma: no cover - label tables are internally consistent
            raise AssertionError("backward chain walk failed")
    chain.reverse()
    return chain


def find_structure(ps: PointSet, l: int, m: int, n: int) -> Optional[StructureWitness]:
    """A witness of l collinear points, an m-cup, or an n-cap, else None.

    Preference order on success: collinear run, then cup, then cap.  The
    collinear check runs first and does not need distinct x-coordinates;
    the cup/cap phase does.
    """
    if min(l, m, n) < 3:
        raise ValueError("thresholds must all be >= 3")
    if len(ps) >= 2:
        run = max_collinear(ps)
        if len(run) >= l:
            return StructureWitness(WitnessKind.COLLINEAR_RUN,
                                    run.members[:l])
    if len(ps) < 2:
        return None
    pts, coords, X, Y = _detection_tables(ps)
    size = len(pts)
    cup_best, cup_at = _max_label_pair(X, size)
    if cup_best + 1 >= m:
        chain = _chain_backward(coords, X, *cup_at, +1)
        return StructureWitness(WitnessKind.CUP,
                                PointSet(pts[i] for i in chain[:m]))
    cap_best, cap_at = _max_label_pair(Y, size)
    if cap_best + 1 >= n:
        chain = _chain_backward(coords, Y, *cap_at, -1)
        return StructureWitness(WitnessKind.CAP,
                                PointSet(pts[i] for i in chain[:n]))
    return None
