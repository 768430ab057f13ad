# derivative_oracle/problems.py
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Union

from apps.mds_checker.reports import jsonable


@dataclass(frozen=True)
class Problem2D:
    """
    Vanishing on S2 = {(-A, B + j) : 0 <= j < n} and on the staircase
    S3 = {(i, j) : i, j >= 0, i + j < n}; evaluation at (-A - 1, beta).
    """
    A: int
    B: int
    beta: int
    n: int

    def __post_init__(self):
        if self.A <= 0 or self.n <= 0:
            raise ValueError(f"need A > 0 and n > 0, got A={self.A}, n={self.n}")

    @property
    def beta_bar(self) -> int:
        return self.beta - self.B


@dataclass(frozen=True)
class Problem3D:
    """
    Vanishing on T2 = {(-A, B + i, C + j) : i + j < n} and on the simplex
    T3 = {(i, j, k) >= 0 : i + j + k < n}; evaluation at (-A - 1, beta, gamma).
    """
    A: int
    B: int
    C: int
    beta: int
    gamma: int
    n: int

    def __post_init__(self):
        if self.A <= 0 or self.n <= 0:
            raise ValueError(f"need A > 0 and n > 0, got A={self.A}, n={self.n}")

    @property
    def beta_bar(self) -> int:
        return self.beta - self.B

    @property
    def gamma_bar(self) -> int:
        return self.gamma - self.C

    def as_2d(self) -> Problem2D:
        return Problem2D(self.A, self.B, self.beta, self.n)


@dataclass
class Certificate:
    kind: str
    problem: Union[Problem2D, Problem3D]
    closed_form: Fraction
    oracle_value: Fraction
    kernel_dim: int
    recurrence_ok: bool
    d: Optional[int] = None

    @property
    def agree(self) -> bool:
        return self.closed_form == self.oracle_value

    @property
    def ok(self) -> bool:
        return self.agree and self.recurrence_ok

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "problem": asdict(self.problem),
            "d": self.d,
            "closed_form": jsonable(self.closed_form),
            "oracle_value": jsonable(self.oracle_value),
            "kernel_dim": self.kernel_dim,
            "agree": self.agree,
            "recurrence_ok": self.recurrence_ok,
        }
