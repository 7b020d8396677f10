"""Symbolic descriptions of the concrete groups the engine can build."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .field import FieldCtx


class GroupSpecError(ValueError):
    pass


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise GroupSpecError(f"cyclic group order must be >= 1, got {self.n}")

    @property
    def order(self) -> int:
        return self.n

    def describe(self) -> str:
        return f"C{self.n}"


@dataclass(frozen=True)
class FrobeniusMetacyclic:
    """C_m semidirect C_k, the generator of C_k acting as x -> x^t."""

    m: int
    t: int
    k: int

    def __post_init__(self):
        m, t, k = self.m, self.t, self.k
        if m < 2 or k < 2 or not 1 <= t < m:
            raise GroupSpecError(f"need m, k >= 2 and 1 <= t < m, got ({m}, {t}, {k})")
        if pow(t, k, m) != 1:
            raise GroupSpecError(f"{t}^{k} is not 1 mod {m}")
        for j in range(1, k):
            if math.gcd(pow(t, j, m) - 1, m) != 1:
                raise GroupSpecError(f"action of ({m}, {t}, {k}) is not fixed-point-free at power {j}")

    @property
    def order(self) -> int:
        return self.m * self.k

    def describe(self) -> str:
        return f"F({self.m},{self.t},{self.k})"


@dataclass(frozen=True)
class PermGenerators:
    degree: int
    gens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        for g in gens:
            if len(g) != self.degree or sorted(g) != list(range(self.degree)):
                raise GroupSpecError(f"{g} is not a permutation of 0..{self.degree - 1}")

    @property
    def order(self) -> int | None:
        return None

    def describe(self) -> str:
        return f"<{len(self.gens)} perms of degree {self.degree}>"


@dataclass(frozen=True)
class MatGenerators:
    """4x4 matrices over GF(2^alpha); each generator is 16 field elements, row-major."""

    ctx: FieldCtx
    gens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        gens = tuple(tuple(g) for g in self.gens)
        object.__setattr__(self, "gens", gens)
        for g in gens:
            if len(g) != 16 or not all(0 <= x < self.ctx.order for x in g):
                raise GroupSpecError("matrix generators need 16 entries in the field")

    @property
    def order(self) -> int | None:
        return None

    def describe(self) -> str:
        return f"<{len(self.gens)} matrices over GF(2^{self.ctx.alpha})>"


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple[GroupSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise GroupSpecError("direct product needs at least one factor")

    @property
    def order(self) -> int | None:
        orders = [f.order for f in self.factors]
        return None if None in orders else math.prod(orders)

    def describe(self) -> str:
        return " x ".join(f.describe() for f in self.factors)


GroupSpec = Union[Cyclic, FrobeniusMetacyclic, PermGenerators, MatGenerators, DirectProduct]
