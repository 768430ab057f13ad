# polytopes/services.py
"""
Shears, scales, widths and lattice-point counts of columns (plane) and
slices (space).

For x <= 0 the polygon is the triangle with apex P_L over the segment
(0,0)-(0,1); for x >= 0 the triangle with apex P_R. The polytope splits the
same way into two pyramids over the triangle conv{(0,0,0),(0,1,0),(0,0,1)}.
Every section is therefore obtained by linear interpolation between the
base at x = 0 and the apex, and every count is a floor/ceil evaluation.
"""
import itertools
import logging
from fractions import Fraction
from typing import Union

from apps.exact_math.services import lcm_of_denominators, rat_ceil, rat_floor
from common.exceptions import InvalidPolytope, OutOfRange
from .shapes import Polygon4, Polytope3, SliceProfile, TetraTuple

logger = logging.getLogger(__name__)

Shape = Union[Polygon4, Polytope3]


# ---------------------------------------------------------------------------
# Transformations
# ---------------------------------------------------------------------------

def shear_2d(p: Polygon4, a: int) -> Polygon4:
    """(x, y) -> (x, y + a x); fixes (0,0) and (0,1)."""
    return Polygon4(
        p_left=(p.x_left, p.y_left + a * p.x_left),
        p_right=(p.x_right, p.y_right + a * p.x_right),
    )


def shear_3d(p: Polytope3, a_y: int, a_z: int) -> Polytope3:
    """(x, y, z) -> (x, y + a_y x, z + a_z x)."""
    def move(pt):
        x, y, z = pt
        return x, y + a_y * x, z + a_z * x

    return Polytope3(p_left=move(p.p_left), p_right=move(p.p_right))


def shear_normalize_2d(p: Polygon4) -> tuple[Polygon4, int]:
    a = -rat_floor(p.y_right / p.x_right)
    return shear_2d(p, a), a


def shear_normalize_3d(p: Polytope3) -> tuple[Polytope3, tuple[int, int]]:
    a_y = -rat_floor(p.y_right / p.x_right)
    a_z = -rat_floor(p.z_right / p.x_right)
    return shear_3d(p, a_y, a_z), (a_y, a_z)


def tetra_to_polytope(t: TetraTuple) -> Polytope3:
    if len(t.slopes) != 2:
        raise InvalidPolytope("only 3-dimensional tetrahedra have a Polytope3 form", slopes=t.slopes)
    return Polytope3(
        p_left=(t.x_left, t.x_left * t.y0, t.x_left * t.z0),
        p_right=(t.x_right, t.x_right * t.y0, t.x_right * t.z0),
    )


def reflect(p: Polytope3) -> Polytope3:
    """Reflection across the yz-plane; the right vertex becomes the left one."""
    (xl, yl, zl), (xr, yr, zr) = p.p_left, p.p_right
    return Polytope3(p_left=(-xr, yr, zr), p_right=(-xl, yl, zl))


def reflect_tetra(t: TetraTuple) -> TetraTuple:
    return TetraTuple(-t.x_right, -t.x_left, tuple(-s for s in t.slopes))


def project(p: Polytope3, plane: str) -> Polygon4:
    """Forget z (plane "xy") or y (plane "xz")."""
    if plane == "xy":
        keep = 1
    elif plane == "xz":
        keep = 2
    else:
        raise ValueError(f"unknown projection plane {plane!r}")
    return Polygon4(
        p_left=(p.x_left, p.p_left[keep]),
        p_right=(p.x_right, p.p_right[keep]),
    )


# ---------------------------------------------------------------------------
# Scalars
# ---------------------------------------------------------------------------

def integrality_scale(p: Shape) -> int:
    """Least m > 0 with m*Delta integral."""
    return lcm_of_denominators(p.p_left + p.p_right)


def width(p: Union[Shape, TetraTuple]) -> Fraction:
    return p.x_right - p.x_left


def _require_scale(p: Shape, m: int) -> None:
    if m <= 0 or any((m * c).denominator != 1 for c in p.p_left + p.p_right):
        raise InvalidPolytope(f"m = {m} does not make the shape integral", m=m)


def _require_range(p: Shape, m: int, x: int) -> None:
    if not (m * p.x_left <= x <= m * p.x_right):
        raise OutOfRange(
            f"x = {x} outside [{m * p.x_left}, {m * p.x_right}]", x=x, m=m
        )


def _apex_fraction(p: Shape, m: int, x: int) -> tuple[Fraction, tuple[Fraction, ...]]:
    """
    Share t of the apex in the convex combination describing section x, and
    the apex itself (scaled by m, coordinates after x).
    """
    if x <= 0:
        apex_x, apex = m * p.x_left, p.p_left
    else:
        apex_x, apex = m * p.x_right, p.p_right
    t = Fraction(x) / apex_x
    return t, tuple(m * c for c in apex[1:])


# ---------------------------------------------------------------------------
# Columns and slices
# ---------------------------------------------------------------------------

def column(p: Polygon4, m: int, x: int) -> SliceProfile:
    _require_scale(p, m)
    _require_range(p, m, x)
    t, (apex_y,) = _apex_fraction(p, m, x)
    lower = t * apex_y
    upper = t * apex_y + (1 - t) * m
    b = rat_ceil(lower)
    size = max(0, rat_floor(upper) - b + 1)
    return SliceProfile(x=x, size=size, corner=(b,) if size else None)


def slice_profile(p: Polytope3, m: int, x: int) -> SliceProfile:
    """
    Section x of m*Delta: the right triangle {y >= alpha, z >= beta,
    y + z <= gamma}.
    """
    _require_scale(p, m)
    _require_range(p, m, x)
    t, (apex_y, apex_z) = _apex_fraction(p, m, x)
    alpha = t * apex_y
    beta = t * apex_z
    gamma = t * (apex_y + apex_z) + (1 - t) * m
    b, c = rat_ceil(alpha), rat_ceil(beta)
    size = max(0, 1 + rat_floor(gamma) - b - c)
    return SliceProfile(x=x, size=size, corner=(b, c) if size else None)


def column_sizes(p: Polygon4, m: int) -> dict[int, int]:
    lo, hi = int(m * p.x_left), int(m * p.x_right)
    return {x: column(p, m, x).size for x in range(lo, hi + 1)}


def slice_sizes(p: Polytope3, m: int) -> dict[int, int]:
    lo, hi = int(m * p.x_left), int(m * p.x_right)
    return {x: slice_profile(p, m, x).size for x in range(lo, hi + 1)}


def tetra_slice_size_left(t: TetraTuple) -> int:
    """Size of slice m*x_L + 1 in closed form."""
    y0, z0 = t.y0, t.z0
    return 1 + rat_floor(y0 + z0 - 1 / t.x_left) - rat_ceil(y0) - rat_ceil(z0)


def tetra_slice_size_right(t: TetraTuple, n: int) -> int:
    """Size of slice m*x_R - n + 1 in closed form."""
    if n < 1:
        raise ValueError("n must be positive")
    y0, z0 = t.y0, t.z0
    k = n - 1
    return (
        1
        - rat_ceil(k * (y0 + z0 - 1 / t.x_right))
        + rat_floor(k * y0)
        + rat_floor(k * z0)
    )


# ---------------------------------------------------------------------------
# Brute-force membership oracle
# ---------------------------------------------------------------------------

def _det(rows) -> Fraction:
    if len(rows) == 2:
        (a, b), (c, d) = rows
        return a * d - b * c
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def _in_simplex(point, corners) -> bool:
    """Closed simplex membership by orientation signs (exact)."""
    origin = corners[0]
    edges = [tuple(c - o for c, o in zip(v, origin)) for v in corners[1:]]
    full = _det(edges)
    if full == 0:
        return False
    rel = tuple(q - o for q, o in zip(point, origin))
    weights = []
    for k in range(len(edges)):
        swapped = list(edges)
        swapped[k] = rel
        weights.append(_det(swapped) / full)
    return all(w >= 0 for w in weights) and sum(weights) <= 1


def _pieces(p: Shape, m: int):
    scaled = [tuple(m * c for c in v) for v in p.vertices]
    if isinstance(p, Polygon4):
        base = scaled[:2]
        apexes = scaled[2:]
    else:
        base = scaled[:3]
        apexes = scaled[3:]
    return [[apex] + base for apex in apexes]


def lattice_points_brute(p: Shape, m: int, x: int) -> set[tuple[int, ...]]:
    """
    All integer points of m*Delta with first coordinate x, found by testing
    every point of the bounding box against the two simplices whose union
    is m*Delta.
    """
    _require_scale(p, m)
    pieces = _pieces(p, m)
    coords = [v for piece in pieces for v in piece]
    ranges = []
    for k in range(1, len(coords[0])):
        lo = min(v[k] for v in coords)
        hi = max(v[k] for v in coords)
        ranges.append(range(rat_floor(lo), rat_ceil(hi) + 1))
    found = set()
    for rest in itertools.product(*ranges):
        point = (x,) + rest
        if any(_in_simplex(point, piece) for piece in pieces):
            found.add(point)
    return found
