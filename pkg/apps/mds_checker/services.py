# mds_checker/services.py
"""
Sufficient criteria for the blowup of a toric variety at a general torus
point not to be a Mori Dream Space.

Every checker evaluates all of its conditions (no short-circuit) and returns
a CheckReport; `verdict` is NotMDS only when all of them hold. The checkers
that depend on the choice of m re-run themselves at 2m when
MDS_STABILITY_CHECK is on and raise UnstableScale if the verdict moves.
"""
import logging
from typing import Callable, Optional

from django.conf import settings

from apps.derivative_oracle.problems import Problem3D
from apps.polytopes import services as poly
from apps.polytopes.serializers import shape_to_dict
from apps.polytopes.shapes import Polygon4, Polytope3, TetraTuple
from common.exceptions import InvalidPolytope, NotSizeOne, OutOfRange, UnstableScale
from .reports import CheckReport, Verdict

logger = logging.getLogger(__name__)

WIDE_RIGHT_VERTEX_NOTE = "x_R > 1: shear normalization applied although x_R exceeds 1"


def _stability_enabled() -> bool:
    return getattr(settings, "MDS_STABILITY_CHECK", True)


def _with_stability(evaluate: Callable[[object, int], CheckReport], shape, m_factor: int) -> CheckReport:
    if m_factor < 1:
        raise InvalidPolytope(f"m_factor must be positive, got {m_factor}", m_factor=m_factor)
    report = evaluate(shape, m_factor)
    if _stability_enabled():
        doubled = evaluate(shape, 2 * m_factor)
        if doubled.verdict != report.verdict:
            raise UnstableScale(
                f"{report.kind} verdict changes from {report.verdict} to {doubled.verdict} when m is doubled",
                m=report.normalization.get("m"),
            )
        report.normalization["stable_at"] = doubled.normalization.get("m")
    logger.debug("%s check: %s (%s)", report.kind, report.verdict, report.branch)
    return report


def _right_sizes(profile: Callable, shape, m: int, n: int) -> list[int]:
    """Sizes of the sections m*x_R, m*x_R - 1, ..., m*x_R - n + 1."""
    sizes = []
    top = int(m * shape.x_right)
    for k in range(n):
        try:
            sizes.append(profile(shape, m, top - k).size)
        except OutOfRange:
            break
    return sizes


def _left_section(profile: Callable, shape, m: int):
    section = profile(shape, m, int(m * shape.x_left) + 1)
    if section.size == 0:
        raise InvalidPolytope("the section next to the left vertex is empty", x=section.x, m=m)
    return section


# ---------------------------------------------------------------------------
# Plane 4-gons
# ---------------------------------------------------------------------------

def _evaluate_2d(p: Polygon4, m_factor: int) -> CheckReport:
    q, shear = poly.shear_normalize_2d(p)
    m = poly.integrality_scale(q) * m_factor
    w = q.width
    strict = not q.is_triangle and w < 1
    if strict:
        branch = "strict-4gon"
    elif q.is_triangle:
        branch = "triangle"
    else:
        branch = "width-one"

    report = CheckReport(kind="2d", branch=branch)
    if p.x_right > 1:
        report.notes.append(WIDE_RIGHT_VERTEX_NOTE)
    report.normalization = {"shear": shear, "m": m, "m_factor": m_factor, "input": shape_to_dict(p)}

    left = _left_section(poly.column, q, m)
    n, (b,) = left.size, left.corner
    my_l = m * q.y_left
    report.summary = {"m": m, "n": n, "b": b, "w": w}
    base = {"m": m, "n": n, "b": b}

    report.add("2d.width", w < 1 if strict else w <= 1, w=w, strict=strict, **base)
    sizes = _right_sizes(poly.column, q, m, n)
    report.add("2d.right_columns", sizes == list(range(1, n + 1)), sizes=sizes, **base)
    report.add("2d.vertex_off_column", not (b + 1 <= my_l <= b + n - 1), m_y_left=my_l, **base)
    if not strict:
        s = q.slope
        target = b - n * s
        report.add("2d.vertex_off_line", my_l != target, m_y_left=my_l, slope=s, line_value=target, **base)
    return report


def check_2d(p: Polygon4, m_factor: int = 1) -> CheckReport:
    return _with_stability(_evaluate_2d, p, m_factor)


# ---------------------------------------------------------------------------
# Three-dimensional polytopes
# ---------------------------------------------------------------------------

def _evaluate_3d(p: Polytope3, m_factor: int) -> CheckReport:
    q, shears = poly.shear_normalize_3d(p)
    m = poly.integrality_scale(q) * m_factor
    w = q.width
    report = CheckReport(kind="3d", branch="tetrahedron" if q.is_tetrahedron else "polytope")
    if p.x_right > 1:
        report.notes.append(WIDE_RIGHT_VERTEX_NOTE)
    report.normalization = {"shear": list(shears), "m": m, "m_factor": m_factor, "input": shape_to_dict(p)}

    left = _left_section(poly.slice_profile, q, m)
    n, (b, c) = left.size, left.corner
    my_l, mz_l = m * q.y_left, m * q.z_left
    s_y, s_z = q.slope_y, q.slope_z
    beta_bar, gamma_bar = my_l - b, mz_l - c
    report.summary = {"m": m, "n": n, "b": b, "c": c, "w": w, "s_y": s_y, "s_z": s_z}
    base = {"m": m, "n": n, "b": b, "c": c}

    report.add("3d.width", w <= 1, w=w, **base)
    sizes = _right_sizes(poly.slice_profile, q, m, n)
    report.add("3d.right_slices", sizes == list(range(1, n + 1)), sizes=sizes, **base)
    in_staircase = beta_bar >= 1 and gamma_bar >= 1 and beta_bar + gamma_bar < n
    report.add("3d.vertex_off_slice", not in_staircase, m_vertex=(my_l, mz_l), **base)

    on_y = beta_bar == -n * s_y
    on_z = gamma_bar == -n * s_z
    report.add(
        "3d.vertex_off_line",
        not (on_y and on_z),
        m_vertex=(my_l, mz_l),
        line_point=(b - n * s_y, c - n * s_z),
        **base,
    )
    report.add("3d.slope_y", not (on_y and 0 < gamma_bar < n) or s_y != 0, s_y=s_y, **base)
    report.add("3d.slope_z", not (on_z and 0 < beta_bar < n) or s_z != 0, s_z=s_z, **base)
    on_sum = beta_bar + gamma_bar == -n * (s_y + s_z)
    report.add(
        "3d.slope_sum",
        not (on_sum and beta_bar > 0 and gamma_bar > 0) or s_y + s_z != -1,
        slope_sum=s_y + s_z,
        **base,
    )
    return report


def check_3d(p: Polytope3, m_factor: int = 1) -> CheckReport:
    return _with_stability(_evaluate_3d, p, m_factor)


def _evaluate_3d_n1(p: Polytope3, m_factor: int) -> CheckReport:
    m = poly.integrality_scale(p) * m_factor
    x = int(m * p.x_left) + 1
    section = poly.slice_profile(p, m, x)
    if section.size != 1:
        raise NotSizeOne(f"slice {x} has size {section.size}, expected 1", size=section.size, m=m)
    b, c = section.corner
    on_line = (m * p.y_left + p.slope_y, m * p.z_left + p.slope_z)

    report = CheckReport(kind="3d-n1", branch="single-point")
    report.normalization = {"m": m, "m_factor": m_factor, "input": shape_to_dict(p)}
    report.summary = {"m": m, "n": 1, "b": b, "c": c, "w": p.width}
    report.add("n1.width", p.width <= 1, w=p.width, m=m)
    report.add("n1.single_point", True, point=(x, b, c), m=m)
    report.add("n1.off_line", (b, c) != on_line, point=(x, b, c), line_point=(x,) + on_line, m=m)
    return report


def check_3d_n1(p: Polytope3, m_factor: int = 1) -> CheckReport:
    return _with_stability(_evaluate_3d_n1, p, m_factor)


# ---------------------------------------------------------------------------
# Tetrahedra given by (x_L, x_R, y_0, z_0)
# ---------------------------------------------------------------------------

def check_tetra(t: TetraTuple, m_factor: int = 1) -> CheckReport:
    """
    Closed-form test on the tuple. Only the slice m*x_R - n + 1 is compared;
    when the full chain of right slices fails the report carries the
    n = 1 argument for the reflected tetrahedron.
    """
    if len(t.slopes) != 2:
        raise InvalidPolytope("check_tetra takes (x_L, x_R, y_0, z_0)", slopes=len(t.slopes))
    w = t.width
    n = poly.tetra_slice_size_left(t)
    if n < 1:
        raise InvalidPolytope("the slice next to the left vertex is empty", tuple=t.as_tuple(), n=n)
    right = poly.tetra_slice_size_right(t, n)
    lattice = (n * t.y0, n * t.z0)

    report = CheckReport(kind="tetra", branch="full-chain")
    report.normalization = {"m_factor": m_factor, "tuple": list(t.as_tuple())}
    report.summary = {"n": n, "w": w, "right_size": right}
    report.add("tetra.width", w <= 1, w=w)
    report.add("tetra.slice_sizes", right == n, n=n, right_size=right)
    report.add(
        "tetra.off_lattice",
        not all(v.denominator == 1 for v in lattice),
        n_slopes=lattice,
        n=n,
    )

    chain = [poly.tetra_slice_size_right(t, k + 1) for k in range(n)]
    report.summary["right_chain"] = chain
    if chain != list(range(1, n + 1)):
        if len(chain) > 1 and chain[1] == 1:
            report.branch = "reflected"
            mirrored = poly.tetra_to_polytope(poly.reflect_tetra(t))
            report.sub_reports.append(check_3d_n1(mirrored, m_factor))
        else:
            report.branch = "broken-chain"
    logger.debug("tetra check %s: %s (%s)", t.as_tuple(), report.verdict, report.branch)
    return report


def projection_report(t: TetraTuple, m_factor: int = 1) -> CheckReport:
    """
    Planar checks of the two coordinate projections. The report itself never
    decides anything; it shows whether the tetrahedron could be handled by
    the planar criterion.
    """
    p = poly.tetra_to_polytope(t)
    m = poly.integrality_scale(p) * m_factor
    report = CheckReport(kind="projection", branch="projection", verdict_override=Verdict.INCONCLUSIVE)
    report.normalization = {"m": m, "m_factor": m_factor, "tuple": list(t.as_tuple())}
    for plane in ("xy", "xz"):
        flat = poly.project(p, plane)
        column = poly.column(flat, m, int(m * flat.x_left) + 1)
        planar = check_2d(flat, m_factor)
        report.sub_reports.append(planar)
        report.summary[plane] = {"left_column": column.size, "verdict": planar.verdict.value}
        report.add(f"projection.{plane}.left_column_single", column.size == 1, size=column.size, m=m)
    return report


# ---------------------------------------------------------------------------
# Link to the derivative problem
# ---------------------------------------------------------------------------

def derivative_problem(p: Polytope3, m_factor: int = 1) -> Optional[Problem3D]:
    """
    The vanishing problem attached to the normalized polytope: mP_R is moved
    to (M - 2, 0, 0) with M = m*w, which puts mP_L at (-2, beta, gamma).
    None when A = M - n is not positive.
    """
    q, _ = poly.shear_normalize_3d(p)
    m = poly.integrality_scale(q) * m_factor
    left = _left_section(poly.slice_profile, q, m)
    n, (b, c) = left.size, left.corner
    big_m = m * q.width
    A = int(big_m) - n
    if A <= 0:
        return None
    return Problem3D(
        A=A,
        B=int(b - m * q.y_right),
        C=int(c - m * q.z_right),
        beta=int(m * (q.y_left - q.y_right)),
        gamma=int(m * (q.z_left - q.z_right)),
        n=n,
    )


DERIVATIVE_LINKED_CONDITIONS = (
    "3d.vertex_off_slice",
    "3d.vertex_off_line",
    "3d.slope_y",
    "3d.slope_z",
    "3d.slope_sum",
)


def derivative_conditions_hold(report: CheckReport) -> bool:
    return all(report.condition(cid).holds for cid in DERIVATIVE_LINKED_CONDITIONS)
