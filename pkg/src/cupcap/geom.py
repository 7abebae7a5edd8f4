"""Exact planar geometry kernel.

Everything here runs on arbitrary-precision rationals (``fractions.Fraction``),
so every predicate is a deterministic exact sign computation.  No floating
point is used anywhere in this module.  All functions are pure and safe to
call concurrently.

Conventions:

* ``orientation(p, q, r)`` is the sign of the cross product
  ``(q - p) x (r - p)``: LEFT for a counterclockwise turn, RIGHT for
  clockwise, COLLINEAR for zero.
* The convex hull is *strict*: a hull vertex is a point that is not in the
  convex hull of the other points, so points interior to hull edges are not
  hull vertices.
* Half-planes are the open (or closed) sets ``{(x, y) : a*x + b*y + c > 0}``
  (``>= 0`` when closed).
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Union

CoordLike = Union[int, str, Fraction]

# Exact rational coordinate; Fraction keeps lowest terms and a positive
# denominator as invariants of the type itself.
Coord = Fraction


def coord(value: CoordLike) -> Fraction:
    """Coerce an int, Fraction, or string like ``-3`` / ``5/7`` to a Coord."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact coordinate")


class Orientation(Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


@dataclass(frozen=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: CoordLike, y: CoordLike) -> "Point":
        return Point(coord(x), coord(y))

    def translate(self, dx: Fraction, dy: Fraction) -> "Point":
        return Point(self.x + dx, self.y + dy)

    def __repr__(self) -> str:
        return f"Point({self.x}, {self.y})"


def cross_sign(p: Point, q: Point, r: Point) -> int:
    """Sign (-1, 0, +1) of the cross product (q - p) x (r - p), exactly."""
    v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def orientation(p: Point, q: Point, r: Point) -> Orientation:
    """Exact three-way turn classification of the ordered triple (p, q, r)."""
    return Orientation(cross_sign(p, q, r))


class PointSet(Sequence):
    """An ordered sequence of distinct points.

    The order is preserved as given (generators emit left-to-right order);
    no two members may be identical.
    """

    __slots__ = ("_pts",)

    def __init__(self, points: Iterable[Point]):
        pts = tuple(points)
        seen = set()
        for p in pts:
            key = (p.x, p.y)
            if key in seen:
                raise ValueError(f"duplicate point {p!r} in point set")
            seen.add(key)
        self._pts = pts

    @staticmethod
    def of(pairs: Iterable[tuple[CoordLike, CoordLike]]) -> "PointSet":
        return PointSet(Point.of(x, y) for x, y in pairs)

    @property
    def points(self) -> tuple[Point, ...]:
        return self._pts

    def sorted_by_x(self) -> "PointSet":
        return PointSet(sorted(self._pts, key=lambda p: (p.x, p.y)))

    def has_distinct_x(self) -> bool:
        return len({p.x for p in self._pts}) == len(self._pts)

    def __len__(self) -> int:
        return len(self._pts)

    def __getitem__(self, i):
        if isinstance(i, slice):
            return PointSet(self._pts[i])
        return self._pts[i]

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self._pts == other._pts

    def __hash__(self) -> int:
        return hash(self._pts)

    def __repr__(self) -> str:
        return f"PointSet({list(self._pts)!r})"


def shear_distinct_x(ps: PointSet) -> PointSet:
    """Shear (x, y) -> (x + eps*y, y) so that all x-coordinates are distinct.

    A shear has unit determinant, so it preserves the orientation of every
    triple exactly; eps only has to dodge the finitely many values at which
    two points would collide in x.  Returns the input unchanged when the
    x-coordinates are already pairwise distinct.
    """
    if ps.has_distinct_x():
        return ps
    pts = ps.points
    # x_i + eps*y_i == x_j + eps*y_j exactly when eps == (x_j - x_i)/(y_i - y_j);
    # pairs with equal y can never collide (the points are distinct).
    forbidden = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            dy = pts[i].y - pts[j].y
            if dy != 0:
                t = (pts[j].x - pts[i].x) / dy
                if t > 0:
                    forbidden.append(t)
    eps = min(forbidden) / 2 if forbidden else Fraction(1)
    return PointSet(Point(p.x + eps * p.y, p.y) for p in pts)


def convex_hull(points: Iterable[Point]) -> tuple[Point, ...]:
    """Strict convex hull in counterclockwise order.

    Points lying in the interior of hull edges are excluded.  A singleton
    yields itself; a collinear set yields its two extreme points.
    """
    pts = sorted(dict.fromkeys(points), key=lambda p: (p.x, p.y))
    if not pts:
        raise ValueError("convex hull of an empty set")
    if len(pts) == 1:
        return (pts[0],)

    def half(seq):
        chain: list[Point] = []
        for p in seq:
            while len(chain) >= 2 and cross_sign(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return tuple(lower[:-1] + upper[:-1])


def is_convex_position(ps: PointSet | Sequence) -> bool:
    """True iff every point is a strict vertex of the convex hull.

    Any set containing three collinear points is not in convex position;
    sets of size <= 2 are.
    """
    pts = list(ps)
    if len(pts) <= 2:
        return True
    return len(convex_hull(pts)) == len(pts)


@dataclass(frozen=True, slots=True)
class HalfPlane:
    """The set {(x, y) : a*x + b*y + c > 0}, or >= 0 when closed."""

    a: Fraction
    b: Fraction
    c: Fraction
    closed: bool = False

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("degenerate half-plane: (a, b) == (0, 0)")

    def value(self, p: Point) -> Fraction:
        return self.a * p.x + self.b * p.y + self.c

    def contains(self, p: Point) -> bool:
        v = self.value(p)
        return v >= 0 if self.closed else v > 0

    @staticmethod
    def left_of(p: Point, q: Point, closed: bool = False) -> "HalfPlane":
        """Half-plane strictly to the left of the directed line p -> q."""
        a = -(q.y - p.y)
        b = q.x - p.x
        c = -(a * p.x + b * p.y)
        return HalfPlane(a, b, c, closed)

    @staticmethod
    def right_of(p: Point, q: Point, closed: bool = False) -> "HalfPlane":
        h = HalfPlane.left_of(p, q)
        return HalfPlane(-h.a, -h.b, -h.c, closed)


def point_in_convex_region(p: Point, halfplanes: Iterable[HalfPlane]) -> bool:
    """Membership in an intersection of half-planes (strict where open)."""
    return all(h.contains(p) for h in halfplanes)


def point_in_convex_hull(p: Point, points: Iterable[Point]) -> bool:
    """Closed containment: p in conv(points), boundary inclusive."""
    hull = convex_hull(points)
    if len(hull) == 1:
        return p == hull[0]
    if len(hull) == 2:
        a, b = hull
        if cross_sign(a, b, p) != 0:
            return False
        return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
                and min(a.y, b.y) <= p.y <= max(a.y, b.y))
    k = len(hull)
    return all(cross_sign(hull[i], hull[(i + 1) % k], p) >= 0 for i in range(k))
