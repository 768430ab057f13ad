# derivative_oracle/services.py
"""
Closed-form values of the vanishing polynomials and an independent check of
them by exact linear algebra.

A differential operator in x d/dx, y d/dy (, z d/dz) applied to x^a y^b (z^c)
and evaluated at (1, 1, 1) is the polynomial evaluated at (a, b, c). So the
"derivative vanishing on a set of monomials" questions become "polynomial
vanishing on a set of lattice points" questions, which the oracle answers by
computing kernels of evaluation matrices.
"""
import itertools
import logging
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from django.conf import settings

from apps.exact_math.services import RatMatrix, falling_factorial, kernel_basis
from common.exceptions import NormalizationUnsolvable, UnexpectedKernelDim
from .problems import Certificate, Problem2D, Problem3D

logger = logging.getLogger(__name__)

Polynomial = dict[tuple[int, ...], Fraction]


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def closed_form_2d(p: Problem2D) -> Fraction:
    bar = p.beta_bar
    return falling_factorial(bar - 1, p.n - 1) * (bar - Fraction(p.n * p.B, p.A))


def closed_form_3d(p: Problem3D, d: int) -> Fraction:
    """Value of p_d at (-A - 1, beta, gamma) for 0 <= d <= n."""
    n = p.n
    if not 0 <= d <= n:
        raise ValueError(f"d must lie in [0, {n}], got {d}")
    y, z = Fraction(p.beta_bar), Fraction(p.gamma_bar)
    if d == n:
        return falling_factorial(y - 1, n - 1) * (y - Fraction(n * p.B, p.A))
    if d == 0:
        return falling_factorial(z - 1, n - 1) * (z - Fraction(n * p.C, p.A))
    head = falling_factorial(y - 1, d - 1) * falling_factorial(z - 1, n - d - 1)
    return head * (y * z - Fraction(d * p.B, p.A) * z - Fraction((n - d) * p.C, p.A) * y)


def derivative_nonvanishing(p: Problem3D) -> tuple[bool, Optional[int]]:
    """
    Whether some p_d is non-zero at (-A - 1, beta, gamma), decided from the
    shifted coordinates alone. The witness is the first such d.
    """
    n, y, z = p.n, p.beta_bar, p.gamma_bar
    y_line, z_line = Fraction(n * p.B, p.A), Fraction(n * p.C, p.A)
    holds = all(
        (
            not (y >= 1 and z >= 1 and y + z < n),
            (y, z) != (y_line, z_line),
            not (y == 0 and 0 < z < n) or p.B != 0,
            not (z == 0 and 0 < y < n) or p.C != 0,
            not (y + z == n and 0 < y < n and 0 < z < n) or p.B + p.C != p.A,
        )
    )
    witness = next((d for d in range(n + 1) if closed_form_3d(p, d) != 0), None)
    return holds, witness if holds else None


# name of the predicate in the published operation list
lemma42_nonvanish = derivative_nonvanishing


# ---------------------------------------------------------------------------
# Polynomial plumbing
# ---------------------------------------------------------------------------

def _exponents(nvars: int, degree: int) -> list[tuple[int, ...]]:
    return [e for e in itertools.product(range(degree + 1), repeat=nvars) if sum(e) <= degree]


def _monomial_row(exponents: Sequence[tuple[int, ...]], point: Sequence) -> list[Fraction]:
    return [math.prod((Fraction(c) ** k for c, k in zip(point, e)), start=Fraction(1)) for e in exponents]


def _evaluate(poly: Polynomial, point: Sequence) -> Fraction:
    total = Fraction(0)
    for e, coeff in poly.items():
        if coeff:
            total += coeff * math.prod((Fraction(c) ** k for c, k in zip(point, e)), start=Fraction(1))
    return total


def _vanishing_space(points: Iterable[Sequence[int]], nvars: int, degree: int) -> list[Polynomial]:
    exponents = _exponents(nvars, degree)
    matrix = RatMatrix.from_rows((_monomial_row(exponents, pt) for pt in points), ncols=len(exponents))
    return [dict(zip(exponents, vec)) for vec in kernel_basis(matrix)]


def staircase(n: int, dim: int) -> list[tuple[int, ...]]:
    """Non-negative integer points with coordinate sum < n."""
    return [e for e in itertools.product(range(n), repeat=dim) if sum(e) < n]


def _scaled(poly: Polynomial, factor: Fraction) -> Polynomial:
    return {e: c * factor for e, c in poly.items()}


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def oracle_2d(p: Problem2D) -> Certificate:
    A, B, n = p.A, p.B, p.n
    s2 = [(-A, B + j) for j in range(n)]
    s3 = staircase(n, 2)
    kernel = _vanishing_space(s2 + s3, nvars=2, degree=n)
    if len(kernel) != 1:
        raise UnexpectedKernelDim(f"expected a one-dimensional kernel, got {len(kernel)}", kernel_dim=len(kernel), problem=p)
    (q,) = kernel

    anchor = B + n
    scale = _evaluate(q, (-A, anchor)) / falling_factorial(anchor - B, n)
    if scale == 0:
        raise NormalizationUnsolvable("kernel polynomial vanishes at the anchor point", problem=p)
    q = _scaled(q, 1 / scale)
    for y in range(B + n, B + 2 * n + 1):
        if _evaluate(q, (-A, y)) != falling_factorial(y - B, n):
            raise NormalizationUnsolvable(f"q(-A, Y) differs from [Y - B]_n at Y = {y}", problem=p)

    recurrence_ok = all(
        A * _evaluate(q, (-A - 1, y))
        == (A + n - y) * _evaluate(q, (-A, y)) + y * _evaluate(q, (-A, y - 1))
        for y in range(B, B + n + 2)
    )
    return Certificate(
        kind="2d",
        problem=p,
        closed_form=closed_form_2d(p),
        oracle_value=_evaluate(q, (-A - 1, p.beta)),
        kernel_dim=1,
        recurrence_ok=recurrence_ok,
    )


def _random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-50, 50), rng.randint(1, 9))


def oracle_3d(p: Problem3D, seed: Optional[int] = None) -> list[Certificate]:
    """
    One certificate per d in [0, n]: the kernel element with
    q(-A, Y, Z) = [Y - B]_d [Z - C]_{n-d}, evaluated at (-A - 1, beta, gamma).
    """
    A, B, C, n = p.A, p.B, p.C, p.n
    t2 = [(-A, B + i, C + j) for i, j in staircase(n, 2)]
    t3 = staircase(n, 3)
    kernel = _vanishing_space(t2 + t3, nvars=3, degree=n)
    if len(kernel) != n + 1:
        raise UnexpectedKernelDim(
            f"expected a kernel of dimension {n + 1}, got {len(kernel)}", kernel_dim=len(kernel), problem=p
        )

    grid = [(y, z) for y in range(B + n + 1, B + 2 * n + 2) for z in range(C + n + 1, C + 2 * n + 2)]
    restricted = [[_evaluate(k, (-A, y, z)) for k in kernel] for y, z in grid]
    rng = random.Random(seed if seed is not None else getattr(settings, "MDS_ORACLE_SEED", 20240501))
    samples = [(_random_rational(rng), _random_rational(rng)) for _ in range(20)]

    certificates = []
    for d in range(n + 1):
        target = [falling_factorial(y - B, d) * falling_factorial(z - C, n - d) for y, z in grid]
        augmented = RatMatrix.from_rows(row + [t] for row, t in zip(restricted, target))
        solutions = [v for v in kernel_basis(augmented) if v[-1] != 0]
        if len(solutions) != 1:
            raise NormalizationUnsolvable(f"sample grid does not pin down p_{d}", d=d, problem=p)
        v = solutions[0]
        weights = [-x / v[-1] for x in v[:-1]]
        p_d: Polynomial = {}
        for w, k in zip(weights, kernel):
            for e, coeff in k.items():
                p_d[e] = p_d.get(e, Fraction(0)) + w * coeff

        recurrence_ok = all(
            A * _evaluate(p_d, (-A - 1, y, z))
            == (A + n - y - z) * _evaluate(p_d, (-A, y, z))
            + y * _evaluate(p_d, (-A, y - 1, z))
            + z * _evaluate(p_d, (-A, y, z - 1))
            for y, z in samples
        )
        certificates.append(
            Certificate(
                kind="3d",
                problem=p,
                closed_form=closed_form_3d(p, d),
                oracle_value=_evaluate(p_d, (-A - 1, p.beta, p.gamma)),
                kernel_dim=len(kernel),
                recurrence_ok=recurrence_ok,
                d=d,
            )
        )
    return certificates


# ---------------------------------------------------------------------------
# Campaigns
# ---------------------------------------------------------------------------

@dataclass
class CampaignSummary:
    samples: int
    seed: int
    passed: dict = field(default_factory=dict)
    failed: dict = field(default_factory=dict)
    counterexamples: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not any(self.failed.values())

    def record(self, kind: str, ok: bool, evidence=None) -> None:
        self.passed.setdefault(kind, 0)
        self.failed.setdefault(kind, 0)
        if ok:
            self.passed[kind] += 1
            return
        self.failed[kind] += 1
        if kind not in self.counterexamples and evidence is not None:
            self.counterexamples[kind] = evidence.to_dict() if hasattr(evidence, "to_dict") else evidence

    def to_dict(self) -> dict:
        return {
            "samples": self.samples,
            "seed": self.seed,
            "ok": self.ok,
            "passed": dict(self.passed),
            "failed": dict(self.failed),
            "counterexamples": dict(self.counterexamples),
        }


def _ranges() -> tuple[int, int, int]:
    return (
        getattr(settings, "MDS_ORACLE_MAX_N", 6),
        getattr(settings, "MDS_ORACLE_MAX_A", 30),
        getattr(settings, "MDS_ORACLE_MAX_ABS", 20),
    )


def random_problem_2d(rng: random.Random) -> Problem2D:
    max_n, max_a, max_abs = _ranges()
    return Problem2D(
        A=rng.randint(1, max_a),
        B=rng.randint(-max_abs, max_abs),
        beta=rng.randint(-max_abs, max_abs),
        n=rng.randint(1, max_n),
    )


def random_problem_3d(rng: random.Random) -> Problem3D:
    max_n, max_a, max_abs = _ranges()
    return Problem3D(
        A=rng.randint(1, max_a),
        B=rng.randint(-max_abs, max_abs),
        C=rng.randint(-max_abs, max_abs),
        beta=rng.randint(-max_abs, max_abs),
        gamma=rng.randint(-max_abs, max_abs),
        n=rng.randint(1, max_n),
    )


def run_campaign(samples: Optional[int] = None, seed: Optional[int] = None, dims: Sequence[int] = (2, 3)) -> CampaignSummary:
    """
    Seeded random campaign: 2D oracle against the closed form, 3D oracle
    against the closed form for every d, and the non-vanishing criterion
    against a scan over d and against the oracle values.
    """
    samples = samples if samples is not None else getattr(settings, "MDS_ORACLE_SAMPLES", 200)
    seed = seed if seed is not None else getattr(settings, "MDS_ORACLE_SEED", 20240501)
    rng = random.Random(seed)
    summary = CampaignSummary(samples=samples, seed=seed)

    if 2 in dims:
        for _ in range(samples):
            problem = random_problem_2d(rng)
            try:
                cert = oracle_2d(problem)
            except (UnexpectedKernelDim, NormalizationUnsolvable) as exc:
                summary.record("2d", False, {"problem": problem.__dict__, "error": exc.as_dict()})
                continue
            summary.record("2d", cert.ok, cert)
        logger.info("2d campaign: %s passed, %s failed", summary.passed.get("2d", 0), summary.failed.get("2d", 0))

    if 3 in dims:
        for _ in range(samples):
            problem = random_problem_3d(rng)
            try:
                certs = oracle_3d(problem, seed=rng.randrange(2**31))
            except (UnexpectedKernelDim, NormalizationUnsolvable) as exc:
                summary.record("3d", False, {"problem": problem.__dict__, "error": exc.as_dict()})
                continue
            bad = next((c for c in certs if not c.ok), None)
            summary.record("3d", bad is None, bad)

            nonvanish, _ = derivative_nonvanishing(problem)
            by_formula = any(c.closed_form != 0 for c in certs)
            by_oracle = any(c.oracle_value != 0 for c in certs)
            summary.record(
                "nonvanishing",
                nonvanish == by_formula == by_oracle,
                {"problem": problem.__dict__, "criterion": nonvanish, "closed_form": by_formula, "oracle": by_oracle},
            )
        logger.info("3d campaign: %s passed, %s failed", summary.passed.get("3d", 0), summary.failed.get("3d", 0))
    return summary
