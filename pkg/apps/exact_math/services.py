# exact_math/services.py
"""
Exact rational arithmetic and the small amount of exact linear algebra the
checkers need. Rationals are `fractions.Fraction`; matrices are handed to
sympy's DomainMatrix over QQ (kernels) or ZZ (Smith normal form).
"""
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence, Union

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from common.exceptions import InputError, NoPositiveRelation, ZeroVector

Rational = Fraction
IntVec = tuple[int, ...]
RatVec = tuple[Fraction, ...]
RationalLike = Union[Fraction, int, str]

# index of a set of vectors that does not span the ambient lattice
INFINITE = math.inf

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


@dataclass(frozen=True)
class RatMatrix:
    rows: tuple[RatVec, ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[RationalLike]], ncols: int | None = None) -> "RatMatrix":
        converted = tuple(tuple(as_rational(x) for x in row) for row in rows)
        width = ncols if ncols is not None else (len(converted[0]) if converted else 0)
        for row in converted:
            if len(row) != width:
                raise ValueError(f"ragged matrix: expected {width} columns, got {len(row)}")
        return cls(rows=converted, ncols=width)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def apply(self, v: Sequence[RationalLike]) -> RatVec:
        return tuple(sum((a * as_rational(x) for a, x in zip(row, v)), Fraction(0)) for row in self.rows)


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InputError("booleans are not rationals", token=str(value))
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"not an exact rational: {value!r}", token=repr(value))


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or an integer literal. Decimal and exponent notation are
    rejected so nothing inexact can reach the checkers.
    """
    match = _RATIONAL_RE.match(text)
    if not match:
        raise InputError(f"expected an integer or p/q, got {text!r}", token=text)
    num, den = match.group(1), match.group(2)
    if den is not None and int(den) == 0:
        raise InputError(f"zero denominator in {text!r}", token=text)
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


def rat_floor(q: RationalLike) -> int:
    return math.floor(as_rational(q))


def rat_ceil(q: RationalLike) -> int:
    return -rat_floor(-as_rational(q))


def is_integral(q: RationalLike) -> bool:
    return as_rational(q).denominator == 1


def falling_factorial(x: RationalLike, i: int) -> Fraction:
    """[x]_i = x(x-1)...(x-i+1), with [x]_0 = 1."""
    if i < 0:
        raise ValueError("falling factorial order must be non-negative")
    x = as_rational(x)
    result = Fraction(1)
    for k in range(i):
        result *= x - k
    return result


def lcm_of_denominators(values: Iterable[RationalLike]) -> int:
    return reduce(math.lcm, (as_rational(v).denominator for v in values), 1)


def primitive(v: Sequence[RationalLike]) -> IntVec:
    """The coprime integer vector that is a positive multiple of v."""
    entries = [as_rational(x) for x in v]
    if all(x == 0 for x in entries):
        raise ZeroVector("cannot primitivize the zero vector", vector=entries)
    scale = lcm_of_denominators(entries)
    ints = [int(x * scale) for x in entries]
    g = reduce(math.gcd, (abs(x) for x in ints))
    return tuple(x // g for x in ints)


def _to_domain_matrix(m: RatMatrix) -> DomainMatrix:
    rows = [[QQ(x.numerator, x.denominator) for x in row] for row in m.rows]
    return DomainMatrix(rows, m.shape, QQ)


def kernel_basis(m: RatMatrix) -> list[RatVec]:
    """
    Basis of the right null space of m, computed exactly. Each basis vector
    is returned in primitive integer form with its first non-zero entry
    positive, so repeated calls are reproducible.
    """
    nrows, ncols = m.shape
    if ncols == 0:
        return []
    if nrows == 0:
        return [tuple(Fraction(int(i == j)) for j in range(ncols)) for i in range(ncols)]

    null = _to_domain_matrix(m).nullspace().to_Matrix()
    basis = []
    for i in range(null.rows):
        vec = [Fraction(int(null[i, j].p), int(null[i, j].q)) for j in range(ncols)]
        ints = primitive(vec)
        lead = next(x for x in ints if x != 0)
        if lead < 0:
            ints = tuple(-x for x in ints)
        basis.append(tuple(Fraction(x) for x in ints))
    return basis


def positive_relation(rays: Sequence[Sequence[int]]) -> IntVec:
    """
    The primitive strictly positive w with sum(w_i * ray_i) = 0, i.e. the
    weights of the weighted projective space whose fan has these rays.
    """
    if not rays:
        raise NoPositiveRelation("no rays given")
    dim = len(rays[0])
    matrix = RatMatrix.from_rows(([ray[k] for ray in rays] for k in range(dim)), ncols=len(rays))
    kernel = kernel_basis(matrix)
    if len(kernel) != 1:
        raise NoPositiveRelation(
            f"ray relations form a space of dimension {len(kernel)}, expected 1",
            kernel_dim=len(kernel),
        )
    w = primitive(kernel[0])
    if all(x < 0 for x in w):
        w = tuple(-x for x in w)
    if not all(x > 0 for x in w):
        raise NoPositiveRelation(f"relation {w} is not strictly positive", relation=w)
    return w


def lattice_index(vecs: Sequence[Sequence[int]], dim: int = 3) -> Union[int, float]:
    """
    Index of the subgroup of Z^dim generated by vecs, from the invariant
    factors of the integer matrix. INFINITE when the vectors do not span.
    """
    if len(vecs) < dim:
        return INFINITE
    columns = Matrix([[int(v[k]) for v in vecs] for k in range(dim)])
    snf = smith_normal_form(columns, domain=ZZ)
    diagonal = [abs(int(snf[i, i])) for i in range(dim)]
    if any(x == 0 for x in diagonal):
        return INFINITE
    return math.prod(diagonal)
