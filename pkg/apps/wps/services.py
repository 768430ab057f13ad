# wps/services.py
"""
Weighted projective spaces P(a, b, c_1, ..., c_{r-1}) for r = 3, 4.

A relation e*a + f*b = g_i*c_i = d gives three collinear lattice points of
the simplex; the slices next to its two vertices are enumerated as integer
tuples (delta_i <= 0 on the left, gamma_i >= 0 on the right) that live on
the lattice delta_i = const (mod g_i).
"""
import logging
import math
import multiprocessing
from fractions import Fraction
from itertools import combinations_with_replacement, islice, product
from typing import Iterable, Iterator, Optional, Sequence

from django.conf import settings

from apps.exact_math.services import lattice_index, positive_relation, primitive
from apps.mds_checker.reports import CheckReport
from apps.polytopes.shapes import SliceProfile, TetraTuple
from common.exceptions import InputError, InvalidPolytope, NonSimplicialSlice, NoPositiveRelation
from .types import SUPPORTED_DIMENSIONS, FanData, Relation, TableRow, WpsWeights

logger = logging.getLogger(__name__)


def _pairwise_coprime(values: Sequence[int]) -> bool:
    return all(math.gcd(x, y) == 1 for i, x in enumerate(values) for y in values[i + 1:])


def find_relations(w: WpsWeights) -> list[Relation]:
    d = math.lcm(*w.c)
    g = tuple(d // c for c in w.c)
    if not _pairwise_coprime(g):
        return []
    relations = []
    for e in range(1, d // w.a + 1):
        rest = d - e * w.a
        if rest <= 0 or rest % w.b:
            continue
        f = rest // w.b
        if all(math.gcd(e, f, gi) == 1 for gi in g):
            relations.append(Relation(e=e, f=f, g=g, d=d))
    return relations


def wps_width(w: WpsWeights, rel: Relation) -> Fraction:
    return Fraction(rel.d ** w.dim, w.a * w.b * math.prod(w.c))


# ---------------------------------------------------------------------------
# Slices next to the two vertices
# ---------------------------------------------------------------------------

def _solutions(w: WpsWeights, rel: Relation, scale: int, ranges: Iterable[range]) -> list[tuple[int, ...]]:
    """Tuples t with (scale*(b, a) + k*(e, -f)) / prod(g) a non-negative integer vector, k = sum t_i*prod(g)/g_i."""
    big_g = rel.g_product
    cofactors = [big_g // gi for gi in rel.g]
    found = []
    for t in product(*ranges):
        k = sum(x * c for x, c in zip(t, cofactors))
        first = scale * w.b + k * rel.e
        second = scale * w.a - k * rel.f
        if first >= 0 and second >= 0 and first % big_g == 0 and second % big_g == 0:
            found.append(t)
    return found


def _simplex_size(points: list[tuple[int, ...]], g: Sequence[int], downward: bool) -> tuple[int, Optional[tuple[int, ...]]]:
    """
    Size N of the standard simplex array the points form on the lattice
    spanned by g_i e_i, together with its corner. Raises NonSimplicialSlice
    for any other shape.
    """
    if not points:
        return 0, None
    dims = len(g)
    for i, gi in enumerate(g):
        if len({p[i] % gi for p in points}) != 1:
            raise NonSimplicialSlice(f"coordinate {i} is not constant modulo {gi}", points=len(points))
    pick = max if downward else min
    corner = tuple(pick(p[i] for p in points) for i in range(dims))
    reduced = {tuple(abs(p[i] - corner[i]) // g[i] for i in range(dims)) for p in points}
    size = max(sum(v) for v in reduced) + 1
    if len(reduced) != math.comb(size + dims - 1, dims):
        raise NonSimplicialSlice(
            f"{len(reduced)} points do not fill a simplex array of size {size}",
            points=len(reduced),
            size=size,
        )
    return size, corner


def delta_points(rel: Relation, w: WpsWeights) -> list[tuple[int, ...]]:
    big_g = rel.g_product
    ranges = [range(-((w.b * gi) // (rel.e * big_g)), 1) for gi in rel.g]
    return _solutions(w, rel, 1, ranges)


def gamma_points(rel: Relation, w: WpsWeights, n: int) -> list[tuple[int, ...]]:
    big_g = rel.g_product
    ranges = [range(0, ((n - 1) * w.a * gi) // (rel.f * big_g) + 1) for gi in rel.g]
    return _solutions(w, rel, n - 1, ranges)


def delta_slice(rel: Relation, w: WpsWeights) -> SliceProfile:
    """
    The slice next to the left vertex. `x` is the offset from that vertex
    and `corner` the coordinatewise largest delta.
    """
    size, corner = _simplex_size(delta_points(rel, w), rel.g, downward=True)
    return SliceProfile(x=1, size=size, corner=corner)


def gamma_slice(rel: Relation, w: WpsWeights, n: int) -> int:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    size, _ = _simplex_size(gamma_points(rel, w, n), rel.g, downward=False)
    return size


# ---------------------------------------------------------------------------
# The criterion
# ---------------------------------------------------------------------------

def _relation_report(w: WpsWeights, rel: Relation) -> CheckReport:
    report = CheckReport(kind="wps-relation", branch=rel.label)
    width = wps_width(w, rel)
    base = {"relation": rel.as_tuple(), "d": rel.d}
    report.add("wps.width", width <= 1, w=width, **base)

    n = 0
    try:
        n = delta_slice(rel, w).size
        right = gamma_slice(rel, w, n) if n >= 1 else None
        report.add("wps.slices", n >= 1 and right == n, n=n, gamma_size=right, **base)
    except NonSimplicialSlice as exc:
        report.notes.append(exc.message)
        report.add("wps.slices", False, n=n, error=exc.message, **base)

    big_g = rel.g_product
    on_lattice = (n * w.b) % big_g == 0 and (n * w.a) % big_g == 0
    report.add("wps.off_lattice", not on_lattice, n=n, g_product=big_g, **base)
    report.summary = {"relation": rel.as_tuple(), "d": rel.d, "n": n, "w": width}
    return report


def check_wps(w: WpsWeights) -> CheckReport:
    """
    Evaluates every admissible relation; the space is reported NotMDS when
    one of them passes. The lexicographically smallest passing relation is
    the one quoted in the summary.
    """
    report = CheckReport(kind="wps", branch=f"dim-{w.dim}")
    canonical, reduced = normalize_weights(w)
    report.normalization = {"weights": list(w.weights), "canonical": list(canonical.weights), "reduced": reduced}

    relations = find_relations(w)
    passing = None
    for rel in relations:
        sub = _relation_report(w, rel)
        report.sub_reports.append(sub)
        if passing is None and sub.is_not_mds:
            passing = sub
    report.add("wps.relation_exists", bool(relations), count=len(relations))
    report.add("wps.relation_passes", passing is not None)
    report.summary = {
        "relations": [rel.as_tuple() for rel in relations],
        "relation": passing.summary["relation"] if passing else None,
        "n": passing.summary["n"] if passing else None,
    }
    if not relations:
        report.notes.append("no relation with pairwise coprime g_i")
    logger.debug("wps %s: %s", w.label, report.verdict)
    return report


def first_passing(w: WpsWeights) -> Optional[tuple[Relation, int]]:
    for rel in find_relations(w):
        sub = _relation_report(w, rel)
        if sub.is_not_mds:
            return rel, sub.summary["n"]
    return None


# ---------------------------------------------------------------------------
# Tetrahedra and weights
# ---------------------------------------------------------------------------

def tetra_fan(t: TetraTuple) -> FanData:
    """Rays of the normal fan, the weights of the positive relation among them and their lattice index."""
    k = len(t.slopes)
    if k + 1 not in SUPPORTED_DIMENSIONS:
        raise InvalidPolytope(f"tetra_fan takes 2 or 3 slopes, got {k}", slopes=k)
    total = sum(t.slopes)
    rays = [
        primitive((total - 1 / t.x_left,) + (-1,) * k),
        primitive((total - 1 / t.x_right,) + (-1,) * k),
    ]
    for j, s in enumerate(t.slopes):
        rays.append(primitive((-s,) + tuple(int(i == j) for i in range(k))))
    weights = positive_relation(rays)
    return FanData(rays=tuple(rays), weights=WpsWeights(weights), index=lattice_index(rays, dim=k + 1))


def is_reduced(weights: Sequence[int]) -> bool:
    """Every choice of all weights but one is setwise coprime."""
    return all(math.gcd(*(weights[:i] + weights[i + 1:])) == 1 for i in range(len(weights)))


def normalize_weights(w: WpsWeights) -> tuple[WpsWeights, bool]:
    ws = list(w.weights)
    changed = True
    while changed:
        changed = False
        common = math.gcd(*ws)
        if common > 1:
            ws = [x // common for x in ws]
            changed = True
        for i in range(len(ws)):
            g = math.gcd(*(ws[:i] + ws[i + 1:]))
            if g > 1:
                ws = [x if j == i else x // g for j, x in enumerate(ws)]
                changed = True
    canonical = WpsWeights((ws[0], ws[1]) + tuple(sorted(ws[2:])))
    return canonical, is_reduced(w.weights)


def reconstruct_tetra(w: WpsWeights, rel: Relation) -> Optional[TetraTuple]:
    """
    The tuple (x_L, x_R, slopes) of the simplex of P(w) in coordinates where
    x^e y^f sits at the origin and z_i^{g_i} at the i-th unit vector. The x
    coordinate is the height d^{r-2}/prod(c) * (f*u - e*v); the slopes are
    read off the residues of the delta tuples. None when the slice next to
    the left vertex is empty or the result does not give back P(w) on the
    full lattice.
    """
    points = delta_points(rel, w)
    if not points:
        return None
    scale = Fraction(rel.d ** (w.dim - 1), math.prod(w.c))
    x_right = scale * rel.f / w.a
    x_left = -scale * rel.e / w.b
    slopes = tuple(Fraction(delta % gi, gi) for delta, gi in zip(points[0], rel.g))
    t = TetraTuple(x_left, x_right, slopes)
    try:
        fan = tetra_fan(t)
    except NoPositiveRelation:
        return None
    if fan.index != 1 or normalize_weights(fan.weights)[0] != normalize_weights(w)[0]:
        logger.debug("relation %s of %s does not reconstruct a tetrahedron", rel.label, w.label)
        return None
    return t


# ---------------------------------------------------------------------------
# Exhaustive search
# ---------------------------------------------------------------------------

def c_tuples(dim: int, bound: int) -> Iterator[tuple[int, ...]]:
    return combinations_with_replacement(range(1, bound), dim - 1)


def _rows_for(dim: int, bound: int, c: tuple[int, ...]) -> list[TableRow]:
    d = math.lcm(*c)
    if not _pairwise_coprime([d // x for x in c]):
        return []
    volume = d ** dim
    c_product = math.prod(c)
    # P(a, b, c) and P(b, a, c) are the same space: one row per {a, b}
    best: dict[tuple[int, int], TableRow] = {}
    for a in range(1, min(bound, d - 1) + 1):
        # width <= 1 as an integer inequality, and a + b <= d
        b_min = max(1, -(-volume // (c_product * a)))
        for b in range(b_min, min(bound, d - a) + 1):
            weights = (a, b) + c
            if not is_reduced(weights):
                continue
            w = WpsWeights(weights)
            hit = first_passing(w)
            if not hit:
                continue
            row = TableRow(w, hit[0], hit[1])
            pair = (min(a, b), max(a, b))
            if pair not in best or _orientation_key(row) < _orientation_key(best[pair]):
                best[pair] = row
    return list(best.values())


def _orientation_key(row: TableRow) -> tuple[int, bool]:
    """Smaller n first; on a tie the orientation with a < b."""
    return row.n, row.weights.a > row.weights.b


def search_chunk(dim: int, bound: int, chunk: Sequence[Sequence[int]]) -> list[TableRow]:
    rows = []
    for c in chunk:
        rows.extend(_rows_for(dim, bound, tuple(c)))
    return rows


def _chunks(items: Iterator, size: int) -> Iterator[list]:
    while True:
        block = list(islice(items, size))
        if not block:
            return
        yield block


def search(dim: int, bound: int, jobs: Optional[int] = None, backend: Optional[str] = None) -> list[TableRow]:
    """
    All reduced P(a, b, c_1, ...) with c_1 <= c_2 <= ... < bound and a, b <= bound
    that pass check_wps, sorted by (c, a, b).
    """
    if dim not in SUPPORTED_DIMENSIONS:
        raise InputError(f"dim must be one of {SUPPORTED_DIMENSIONS}, got {dim}", token=str(dim))
    if bound < 1:
        raise InputError(f"bound must be positive, got {bound}", token=str(bound))
    jobs = jobs or getattr(settings, "MDS_ORACLE_JOBS", 1)
    backend = backend or getattr(settings, "MDS_SEARCH_BACKEND", "local")
    chunk_size = getattr(settings, "MDS_SEARCH_CHUNK_SIZE", 8)
    chunks = [[list(c) for c in block] for block in _chunks(c_tuples(dim, bound), chunk_size)]
    logger.info("search dim=%s bound=%s: %s chunks, backend=%s, jobs=%s", dim, bound, len(chunks), backend, jobs)

    if backend == "celery":
        from celery import group

        from .tasks import search_chunk_task

        job = group(search_chunk_task.s(dim, bound, chunk) for chunk in chunks)
        rows = [TableRow.from_dict(row) for part in job.apply_async().get() for row in part]
    elif jobs > 1:
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.starmap(search_chunk, [(dim, bound, chunk) for chunk in chunks])
        rows = [row for part in parts for row in part]
    else:
        rows = search_chunk(dim, bound, [c for chunk in chunks for c in chunk])

    rows.sort(key=lambda row: row.sort_key)
    logger.info("search dim=%s bound=%s: %s rows", dim, bound, len(rows))
    return rows
