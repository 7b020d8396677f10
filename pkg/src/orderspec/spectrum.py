"""Spectra of finite groups, prime graphs, cocliques and the four-prime
nonsolvability criterion.

A spectrum (the set of element orders) is closed under divisors, so it is
stored as ``mu``: its divisibility-maximal elements in ascending order.
"""

from __future__ import annotations

import functools
import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterable

from . import numth


class SpectrumError(ValueError):
    pass


@dataclass(frozen=True)
class Spectrum:
    mu: tuple[int, ...]

    def __post_init__(self):
        mu = tuple(self.mu)
        object.__setattr__(self, "mu", mu)
        if not mu:
            raise SpectrumError("a spectrum always contains 1; mu cannot be empty")
        if any(not isinstance(m, int) or m < 1 for m in mu):
            raise SpectrumError(f"mu entries must be positive integers: {mu}")
        if list(mu) != sorted(set(mu)):
            raise SpectrumError(f"mu must be strictly ascending: {mu}")
        for i, a in enumerate(mu):
            for b in mu[i + 1 :]:
                if b % a == 0:
                    raise SpectrumError(f"{a} divides {b}; mu must be a divisibility antichain")

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.mu)

    @property
    def primes(self) -> tuple[int, ...]:
        return _primes_of(self.mu)

    def to_csv(self) -> str:
        return ",".join(map(str, self.mu))

    def to_json(self) -> str:
        return json.dumps(list(self.mu))

    @classmethod
    def from_csv(cls, text: str) -> Spectrum:
        try:
            values = [int(tok) for tok in text.strip().split(",")]
        except ValueError:
            raise SpectrumError(f"not a comma-separated integer list: {text!r}") from None
        return normalize(values)

    @classmethod
    def from_json(cls, text: str) -> Spectrum:
        values = json.loads(text)
        if not isinstance(values, list) or not all(isinstance(v, int) for v in values):
            raise SpectrumError("JSON spectrum must be an array of integers")
        return normalize(values)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.mu)) + "]"


TRIVIAL = Spectrum((1,))


def normalize(orders: Iterable[int]) -> Spectrum:
    """Keep only the divisibility-maximal values, sorted ascending."""
    values = sorted(set(orders), reverse=True)
    if not values:
        raise SpectrumError("cannot build a spectrum from an empty list")
    if values[-1] < 1:
        raise SpectrumError("element orders must be positive")
    kept: list[int] = []
    for v in values:
        if not any(k % v == 0 for k in kept):
            kept.append(v)
    return Spectrum(tuple(sorted(kept)))


def contains(s: Spectrum, n: int) -> bool:
    if n < 1:
        raise SpectrumError(f"{n} is not a positive integer")
    return any(m % n == 0 for m in s.mu)


def lcm_product(a: Spectrum, b: Spectrum) -> Spectrum:
    """Spectrum of a direct product: orders of pairs are lcms of component orders."""
    values = {math.lcm(x, y) for x in a.mu for y in b.mu}
    if max(values) >= numth.INT_LIMIT:
        raise OverflowError("spectrum element exceeds the 2^96 integer width")
    return normalize(values)


def isospectral(a: Spectrum, b: Spectrum) -> bool:
    return a.mu == b.mu


@functools.lru_cache(maxsize=65536)
def _primes_of(mu: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(frozenset().union(*numth.prime_sets(mu))))


@functools.lru_cache(maxsize=65536)
def _prime_counts(mu: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(len(ps) for ps in numth.prime_sets(mu))


@dataclass(frozen=True)
class PrimeGraph:
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        vs = set(self.vertices)
        for p, q in self.edges:
            if p == q:
                raise SpectrumError(f"self-loop at {p}")
            if p not in vs or q not in vs:
                raise SpectrumError(f"edge {p}--{q} has an endpoint outside the vertex set")

    def adjacent(self, p: int, q: int) -> bool:
        return (min(p, q), max(p, q)) in self.edges

    def to_dot(self, name: str = "GK") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {p};" for p in self.vertices]
        lines += [f"  {p} -- {q};" for p, q in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in sorted(self.edges)]}


def prime_graph(s: Spectrum) -> PrimeGraph:
    vertices = s.primes
    edges = frozenset(
        (p, q) for p, q in itertools.combinations(vertices, 2) if contains(s, p * q)
    )
    return PrimeGraph(vertices, edges)


MAX_COCLIQUE_VERTICES = 64


def max_coclique(g: PrimeGraph, vertex_budget: int = MAX_COCLIQUE_VERTICES) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set, returning the lexicographically least one.

    Branch and bound over bitmasks, vertices in ascending order, trying
    "include" before "exclude"; only a strictly larger set replaces the
    incumbent, so the first maximum found is the lexicographically least.
    Branches are cut with a greedy clique-cover bound.
    """
    n = len(g.vertices)
    if n > vertex_budget:
        raise SpectrumError(f"{n} vertices exceeds the coclique budget of {vertex_budget}")
    index = {p: i for i, p in enumerate(g.vertices)}
    nbr = [0] * n
    for p, q in g.edges:
        i, j = index[p], index[q]
        nbr[i] |= 1 << j
        nbr[j] |= 1 << i

    best = [0, 0]  # size, mask

    def clique_cover(mask: int) -> int:
        # greedy partition into cliques; an independent set meets each at most once
        cliques = 0
        while mask:
            low = mask & -mask
            clique = low
            common = nbr[low.bit_length() - 1] & mask
            while common:
                v = common & -common
                clique |= v
                common &= nbr[v.bit_length() - 1]
            mask &= ~clique
            cliques += 1
        return cliques

    def search(chosen: int, size: int, candidates: int) -> None:
        if candidates == 0:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + candidates.bit_count() <= best[0] or size + clique_cover(candidates) <= best[0]:
            return
        low = candidates & -candidates
        i = low.bit_length() - 1
        search(chosen | low, size + 1, candidates & ~low & ~nbr[i])
        search(chosen, size, candidates & ~low)

    search(0, 0, (1 << n) - 1)
    witness = tuple(g.vertices[i] for i in range(n) if best[1] >> i & 1)
    return best[0], witness


def alpha_invariant(s: Spectrum) -> int:
    """Largest number of distinct primes dividing a single element order."""
    return max(_prime_counts(s.mu))


@dataclass(frozen=True)
class CriterionWitness:
    sigma: tuple[int, int, int, int]

    def __post_init__(self):
        sigma = tuple(sorted(self.sigma))
        object.__setattr__(self, "sigma", sigma)
        if len(set(sigma)) != 4 or not all(numth.is_prime(p) for p in sigma):
            raise SpectrumError(f"witness must be four distinct primes: {sigma}")


def satisfies_conditions(s: Spectrum, primes: Iterable[int]) -> bool:
    """All pairwise products in the spectrum, no product of three."""
    primes = tuple(primes)
    return all(contains(s, p * q) for p, q in itertools.combinations(primes, 2)) and not any(
        contains(s, p * q * r) for p, q, r in itertools.combinations(primes, 3)
    )


def nonsolvability_criterion(s: Spectrum) -> CriterionWitness | None:
    """Lexicographically least 4-set of primes meeting the criterion, if any.

    Conditions on a larger set restrict to each of its 4-subsets, so
    searching 4-subsets is complete.
    """
    g = prime_graph(s)
    for quad in itertools.combinations(g.vertices, 4):
        # pairwise condition first: it's just edge lookups
        if all(g.adjacent(p, q) for p, q in itertools.combinations(quad, 2)) and not any(
            contains(s, p * q * r) for p, q, r in itertools.combinations(quad, 3)
        ):
            return CriterionWitness(quad)
    return None


def gm_condition(w: CriterionWitness) -> bool:
    return not any(q % p == 1 for p in w.sigma for q in w.sigma if p != q)


def higman_bound_holds(s: Spectrum) -> bool:
    a = alpha_invariant(s)
    return len(s.primes) <= a * (a + 3) // 2
