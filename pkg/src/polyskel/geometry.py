"""Lattice points and rational linear constraints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

LatticePoint = tuple[int, ...]

EQ = "=="
LE = "<="
GE = ">="
RELATIONS = (EQ, LE, GE)


def indicator(subset: Iterable[int], dim: int) -> LatticePoint:
    """0/1 vector with ones at the positions in ``subset``."""
    point = [0] * dim
    for i in subset:
        if not 0 <= i < dim:
            raise IndexError(f"coordinate {i} out of range for dimension {dim}")
        point[i] = 1
    return tuple(point)


def _rational(x) -> int | Fraction:
    return x if isinstance(x, (int, Fraction)) else Fraction(x)


@dataclass(frozen=True)
class Hyperplane:
    """The constraint ``coeffs . x  <relation>  bound`` with exact rationals.

    Also used for half-spaces; ``relation`` is one of ``"=="``, ``"<="``,
    ``">="``.
    """

    coeffs: tuple[int | Fraction, ...]
    bound: int | Fraction
    relation: str = EQ

    def __post_init__(self) -> None:
        if self.relation not in RELATIONS:
            raise ValueError(f"unknown relation {self.relation!r}")
        object.__setattr__(self, "coeffs", tuple(map(_rational, self.coeffs)))
        object.__setattr__(self, "bound", _rational(self.bound))
        # integer form of the same constraint, for fast substitution
        scale = lcm(*(c.denominator for c in self.coeffs), self.bound.denominator)
        object.__setattr__(self, "_terms", tuple(
            (i, int(c * scale)) for i, c in enumerate(self.coeffs) if c))
        object.__setattr__(self, "_ibound", int(self.bound * scale))

    @classmethod
    def sparse(cls, dim: int, terms: dict[int, int], bound: int = 0,
               relation: str = EQ) -> Hyperplane:
        coeffs = [0] * dim
        for i, c in terms.items():
            coeffs[i] += c
        return cls(tuple(coeffs), bound, relation)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    def value(self, x: Sequence) -> Fraction:
        if len(x) != len(self.coeffs):
            raise ValueError(f"point of length {len(x)} in dimension {self.dim}")
        return sum((c * xi for c, xi in zip(self.coeffs, x) if c), Fraction(0))

    def satisfied_by(self, x: Sequence) -> bool:
        if len(x) != len(self.coeffs):
            raise ValueError(f"point of length {len(x)} in dimension {self.dim}")
        v = sum(c * x[i] for i, c in self._terms)
        if self.relation == EQ:
            return v == self._ibound
        if self.relation == LE:
            return v <= self._ibound
        return v >= self._ibound

    def is_trivial(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else f"{mag}*"
            terms.append(f"{sign} {coef}x{i + 1}")
        lhs = " ".join(terms).lstrip("+ ") if terms else "0"
        if lhs.startswith("- "):
            lhs = "-" + lhs[2:]
        return f"{lhs} {self.relation} {self.bound}"


def vertices_on_system(vertices: Sequence[Sequence[int]],
                       system: Iterable[Hyperplane]) -> list[int]:
    """Indices of the vertices satisfying every constraint of ``system``."""
    system = list(system)
    return [k for k, v in enumerate(vertices) if all(h.satisfied_by(v) for h in system)]


def zero_one_points(dim: int) -> list[LatticePoint]:
    """All of ``{0,1}^dim`` in binary counting order."""
    return [tuple(m >> i & 1 for i in range(dim)) for m in range(1 << dim)]
