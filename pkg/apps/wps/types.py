# wps/types.py
import math
from dataclasses import dataclass
from typing import Sequence, Union

from common.exceptions import InputError

SUPPORTED_DIMENSIONS = (3, 4)


@dataclass(frozen=True)
class WpsWeights:
    """Weights (a, b, c_1, ..., c_{r-1}) of P(a, b, c_1, ...)."""
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(x) for x in self.weights))
        if len(self.weights) - 1 not in SUPPORTED_DIMENSIONS:
            raise InputError(
                f"expected {SUPPORTED_DIMENSIONS[0] + 1} or {SUPPORTED_DIMENSIONS[-1] + 1} weights, got {len(self.weights)}",
                token=self.label,
            )
        if any(x < 1 for x in self.weights):
            raise InputError("weights must be positive integers", token=self.label)

    @classmethod
    def of(cls, *weights: int) -> "WpsWeights":
        return cls(tuple(weights))

    @classmethod
    def parse(cls, text: str) -> "WpsWeights":
        values = []
        for token in text.split(","):
            token = token.strip()
            try:
                values.append(int(token))
            except ValueError:
                raise InputError(f"not an integer weight: {token!r}", token=token) from None
        return cls(tuple(values))

    @property
    def a(self) -> int:
        return self.weights[0]

    @property
    def b(self) -> int:
        return self.weights[1]

    @property
    def c(self) -> tuple[int, ...]:
        return self.weights[2:]

    @property
    def dim(self) -> int:
        return len(self.weights) - 1

    @property
    def label(self) -> str:
        return ",".join(str(x) for x in self.weights)


@dataclass(frozen=True)
class Relation:
    """e*a + f*b = g_i*c_i = d for every i."""
    e: int
    f: int
    g: tuple[int, ...]
    d: int

    @property
    def g_product(self) -> int:
        return math.prod(self.g)

    def as_tuple(self) -> tuple[int, ...]:
        return (self.e, self.f) + tuple(self.g)

    @property
    def label(self) -> str:
        return "(" + ",".join(str(x) for x in self.as_tuple()) + ")"

    def to_dict(self) -> dict:
        return {"e": self.e, "f": self.f, "g": list(self.g), "d": self.d}

    @classmethod
    def from_dict(cls, data: dict) -> "Relation":
        return cls(e=data["e"], f=data["f"], g=tuple(data["g"]), d=data["d"])


@dataclass(frozen=True)
class TableRow:
    weights: WpsWeights
    relation: Relation
    n: int

    @property
    def sort_key(self) -> tuple:
        return self.weights.c, self.weights.a, self.weights.b

    def cells(self) -> tuple[str, str, str]:
        return self.weights.label, self.relation.label, str(self.n)

    def to_dict(self) -> dict:
        return {"weights": list(self.weights.weights), "relation": self.relation.to_dict(), "n": self.n}

    @classmethod
    def from_dict(cls, data: dict) -> "TableRow":
        return cls(WpsWeights(tuple(data["weights"])), Relation.from_dict(data["relation"]), data["n"])


@dataclass(frozen=True)
class FanData:
    rays: tuple[tuple[int, ...], ...]
    weights: WpsWeights
    index: Union[int, float]

    def to_dict(self) -> dict:
        return {
            "rays": [list(r) for r in self.rays],
            "weights": list(self.weights.weights),
            "index": self.index if self.index != math.inf else None,
        }


def relation_of(weights: Sequence[int], e: int, f: int) -> Relation:
    w = WpsWeights(tuple(weights))
    d = math.lcm(*w.c)
    return Relation(e=e, f=f, g=tuple(d // c for c in w.c), d=d)

