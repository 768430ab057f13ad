# polytopes/shapes.py
"""
Immutable value types for the polygons and polytopes the criteria talk about.

Every shape keeps the fixed vertices at x = 0 implicit ((0,0) and (0,1) in
the plane, (0,0,0), (0,1,0) and (0,0,1) in space) and stores only the left
and right vertices. Convex position is checked at construction time.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from apps.exact_math.services import RationalLike, as_rational
from common.exceptions import InvalidPolytope


def _point(coords: Sequence[RationalLike], dim: int, label: str) -> tuple[Fraction, ...]:
    if len(coords) != dim:
        raise InvalidPolytope(f"{label} needs {dim} coordinates, got {len(coords)}")
    return tuple(as_rational(c) for c in coords)


@dataclass(frozen=True)
class Polygon4:
    p_left: tuple[Fraction, Fraction]
    p_right: tuple[Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "p_left", _point(self.p_left, 2, "p_left"))
        object.__setattr__(self, "p_right", _point(self.p_right, 2, "p_right"))
        if not (self.x_left < 0 < self.x_right):
            raise InvalidPolytope("need x_L < 0 < x_R", p_left=self.p_left, p_right=self.p_right)
        if not (0 <= self.y_cross <= 1):
            raise InvalidPolytope(
                "segment P_L-P_R must cross x = 0 between (0,0) and (0,1)",
                y_cross=self.y_cross,
            )

    @property
    def x_left(self) -> Fraction:
        return self.p_left[0]

    @property
    def y_left(self) -> Fraction:
        return self.p_left[1]

    @property
    def x_right(self) -> Fraction:
        return self.p_right[0]

    @property
    def y_right(self) -> Fraction:
        return self.p_right[1]

    @property
    def width(self) -> Fraction:
        return self.x_right - self.x_left

    @property
    def slope(self) -> Fraction:
        """Slope s of the line joining the left and right vertices."""
        return (self.y_right - self.y_left) / self.width

    @property
    def y_cross(self) -> Fraction:
        return self.y_left + self.slope * (-self.x_left)

    @property
    def s1(self) -> Fraction:
        # side P_L -> (0,0)
        return self.y_left / self.x_left

    @property
    def s2(self) -> Fraction:
        # side (0,0) -> P_R
        return self.y_right / self.x_right

    @property
    def is_triangle(self) -> bool:
        # P_L, P_R collinear with (0,0) (s1 = s2) or with (0,1)
        return self.y_cross in (0, 1)

    @property
    def vertices(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return (Fraction(0), Fraction(0)), (Fraction(0), Fraction(1)), self.p_left, self.p_right


@dataclass(frozen=True)
class Polytope3:
    p_left: tuple[Fraction, Fraction, Fraction]
    p_right: tuple[Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "p_left", _point(self.p_left, 3, "p_left"))
        object.__setattr__(self, "p_right", _point(self.p_right, 3, "p_right"))
        if not (self.x_left < 0 < self.x_right):
            raise InvalidPolytope("need x_L < 0 < x_R", p_left=self.p_left, p_right=self.p_right)
        qy, qz = self.cross_point
        inside = qy >= 0 and qz >= 0 and qy + qz <= 1
        if not inside or (qy, qz) in ((1, 0), (0, 1)):
            raise InvalidPolytope(
                "segment P_L-P_R must cross x = 0 inside the unit triangle, away from (0,1,0) and (0,0,1)",
                cross_point=(qy, qz),
            )

    @property
    def x_left(self) -> Fraction:
        return self.p_left[0]

    @property
    def y_left(self) -> Fraction:
        return self.p_left[1]

    @property
    def z_left(self) -> Fraction:
        return self.p_left[2]

    @property
    def x_right(self) -> Fraction:
        return self.p_right[0]

    @property
    def y_right(self) -> Fraction:
        return self.p_right[1]

    @property
    def z_right(self) -> Fraction:
        return self.p_right[2]

    @property
    def width(self) -> Fraction:
        return self.x_right - self.x_left

    @property
    def slope_y(self) -> Fraction:
        return (self.y_right - self.y_left) / self.width

    @property
    def slope_z(self) -> Fraction:
        return (self.z_right - self.z_left) / self.width

    @property
    def cross_point(self) -> tuple[Fraction, Fraction]:
        return (
            self.y_left - self.slope_y * self.x_left,
            self.z_left - self.slope_z * self.x_left,
        )

    @property
    def is_tetrahedron(self) -> bool:
        return self.cross_point == (0, 0)

    @property
    def vertices(self) -> tuple[tuple[Fraction, Fraction, Fraction], ...]:
        zero, one = Fraction(0), Fraction(1)
        return (zero, zero, zero), (zero, one, zero), (zero, zero, one), self.p_left, self.p_right


@dataclass(frozen=True)
class TetraTuple:
    """
    A tetrahedron given by (x_L, x_R, y_0, z_0): P_L = x_L(1, y_0, z_0) and
    P_R = x_R(1, y_0, z_0). Higher-dimensional simplices carry more slopes.
    """
    x_left: Fraction
    x_right: Fraction
    slopes: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "x_left", as_rational(self.x_left))
        object.__setattr__(self, "x_right", as_rational(self.x_right))
        object.__setattr__(self, "slopes", tuple(as_rational(s) for s in self.slopes))
        if not (self.x_left < 0 < self.x_right):
            raise InvalidPolytope("need x_L < 0 < x_R", x_left=self.x_left, x_right=self.x_right)
        if not self.slopes:
            raise InvalidPolytope("a tetrahedron tuple needs at least one slope")

    @classmethod
    def of(cls, x_left: RationalLike, x_right: RationalLike, *slopes: RationalLike) -> "TetraTuple":
        return cls(as_rational(x_left), as_rational(x_right), tuple(as_rational(s) for s in slopes))

    @property
    def y0(self) -> Fraction:
        return self.slopes[0]

    @property
    def z0(self) -> Fraction:
        return self.slopes[1]

    @property
    def width(self) -> Fraction:
        return self.x_right - self.x_left

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.x_left, self.x_right) + self.slopes


@dataclass(frozen=True)
class SliceProfile:
    """
    Lattice content of one column (corner has one entry) or slice (two
    entries). The points are corner + (i, j) with i, j >= 0 and i + j < size;
    an empty profile has no corner.
    """
    x: int
    size: int
    corner: Optional[tuple[int, ...]]

    def points(self) -> Iterator[tuple[int, ...]]:
        if self.size == 0:
            return
        if len(self.corner) == 1:
            (b,) = self.corner
            for i in range(self.size):
                yield self.x, b + i
            return
        b, c = self.corner
        for i in range(self.size):
            for j in range(self.size - i):
                yield self.x, b + i, c + j

    def point_set(self) -> set[tuple[int, ...]]:
        return set(self.points())
