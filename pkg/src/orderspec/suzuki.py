"""Closed-form data for Sz(q), q = 2^alpha: orders, spectra, automorphism
cosets, direct squares and the groups isospectral to Sz(q) x Sz(q).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import numth
from .spectrum import Spectrum, lcm_product, max_coclique, normalize, prime_graph

MAX_ALPHA = 45

# omega(Sz(2)) for the Frobenius group C5 x| C4; everything recursive stops here.
SZ2_OMEGA = (1, 2, 4, 5)


class SuzukiError(ValueError):
    pass


def _check_alpha(alpha: int, minimum: int = 1) -> None:
    if not isinstance(alpha, int) or alpha % 2 == 0:
        raise SuzukiError(f"alpha must be odd, got {alpha}")
    if not minimum <= alpha <= MAX_ALPHA:
        raise SuzukiError(f"alpha must lie in [{minimum}, {MAX_ALPHA}], got {alpha}")


@dataclass(frozen=True)
class SuzukiParams:
    alpha: int
    q: int
    s: int
    m1: int
    m2: int
    m3: int
    m4: int
    order: int

    @property
    def m(self) -> tuple[int, int, int, int]:
        return (self.m1, self.m2, self.m3, self.m4)

    def check_invariants(self) -> None:
        q = self.q
        assert self.m3 * self.m4 == q * q + 1
        assert self.order == q * q * self.m2 * self.m3 * self.m4
        if self.alpha >= 3:
            assert all(math.gcd(a, b) == 1 for a, b in itertools.combinations(self.m, 2))
            assert all(q / 2 < mi < 2 * q for mi in self.m[1:])


def params(alpha: int) -> SuzukiParams:
    _check_alpha(alpha)
    q = 1 << alpha
    s = 1 << ((alpha + 1) // 2)
    p = SuzukiParams(
        alpha=alpha,
        q=q,
        s=s,
        m1=4,
        m2=q - 1,
        m3=q - s + 1,
        m4=q + s + 1,
        order=q * q * (q - 1) * (q * q + 1),
    )
    p.check_invariants()
    return p


def mu_sz(alpha: int) -> Spectrum:
    p = params(alpha)
    # alpha = 1: m2 = m3 = 1 and m4 = 5
    return normalize(p.m)


def omega_sz(alpha: int) -> list[int]:
    """Every element order of Sz(2^alpha), ascending."""
    if alpha == 1:
        return list(SZ2_OMEGA)
    return sorted({d for m in mu_sz(alpha).mu for d in numth.divisors(m)})


def aut_coset_spectrum(alpha: int, gamma: int) -> Spectrum:
    """Orders in the cosets of field automorphisms of order gamma: gamma * omega(Sz(q^(1/gamma)))."""
    _check_alpha(alpha)
    if gamma <= 1 or alpha % gamma:
        raise SuzukiError(f"gamma={gamma} is not a divisor > 1 of alpha={alpha}")
    base = mu_sz(alpha // gamma)
    return Spectrum(tuple(gamma * m for m in base.mu))


def aut_bounds_check(alpha: int) -> bool:
    """Every element of Aut Sz(q) outside Sz(q) has order < 2q, and < q once q >= 32."""
    q = params(alpha).q
    limit = q if q >= 32 else 2 * q
    return all(
        max(aut_coset_spectrum(alpha, g).mu) < limit for g in numth.divisors(alpha) if g > 1
    )


def square_spectrum(alpha: int) -> Spectrum:
    _check_alpha(alpha, minimum=3)
    mu = mu_sz(alpha)
    sq = lcm_product(mu, mu)
    products = sorted(a * b for a, b in itertools.combinations(params(alpha).m, 2))
    if list(sq.mu) != products:
        raise AssertionError(f"square spectrum {sq.mu} differs from pairwise products {products}")
    return sq


def twisted_square_spectrum(alpha: int, p: int) -> tuple[Spectrum, bool]:
    """Spectrum of (L x L) x| <psi>, psi an order-p field automorphism on both factors."""
    _check_alpha(alpha, minimum=3)
    if not numth.is_prime(p) or alpha % p:
        raise SuzukiError(f"p={p} is not a prime divisor of alpha={alpha}")
    square = square_spectrum(alpha)
    coset = aut_coset_spectrum(alpha, p)
    # an outer element is (g1 psi1, g2 psi2); its order is the lcm of the two coset orders
    outer = lcm_product(coset, coset)
    spec = normalize(square.mu + outer.mu)
    return spec, spec == square


def outer_class_count(alpha: int, p: int) -> tuple[int, list[int]]:
    """Conjugacy classes of the diagonal subgroups X_l = <(phi^l, phi)>, 1 <= l < p,
    in (C_p x C_p) x| <tau>, tau swapping the coordinates.

    Classes are found by acting on the subgroups as point sets.
    """
    if not numth.is_prime(p) or alpha % p:
        raise SuzukiError(f"p={p} is not a prime divisor of alpha={alpha}")

    def subgroup(l: int) -> frozenset[tuple[int, int]]:
        return frozenset(((l * s) % p, s % p) for s in range(p))

    labels = {subgroup(l): l for l in range(1, p)}
    # C_p x C_p is abelian, so only the swap moves subgroups
    swap = lambda x: frozenset((b, a) for a, b in x)  # noqa: E731
    reps: list[int] = []
    seen: set[int] = set()
    for l in range(1, p):
        if l in seen:
            continue
        orbit = {l, labels[swap(subgroup(l))]}
        seen |= orbit
        reps.append(min(orbit))
    return len(reps), reps


@dataclass(frozen=True)
class IsospectralGroup:
    label: str
    mu: Spectrum


@dataclass(frozen=True)
class SquareClassification:
    q: int
    groups: tuple[IsospectralGroup, ...]

    @property
    def count(self) -> int:
        return len(self.groups)

    @property
    def labels(self) -> list[str]:
        return [g.label for g in self.groups]

    def to_json(self) -> dict:
        return {
            "q": self.q,
            "count": self.count,
            "groups": [{"label": g.label, "mu": list(g.mu.mu)} for g in self.groups],
        }


def classify_isospectral_squares(alpha: int) -> SquareClassification:
    """Groups with the spectrum of Sz(q) x Sz(q), for q = 2^alpha >= 8.

    Candidates are the square itself and, for each prime p | alpha, the
    extensions by a diagonal order-p field automorphism.  A candidate counts
    only if its spectrum matches; matching extensions are listed once per
    conjugacy class of diagonal outer subgroup.  Swap-type extensions always
    contain elements of order 8 and are not candidates.
    """
    _check_alpha(alpha, minimum=3)
    square = square_spectrum(alpha)
    groups = [IsospectralGroup("LxL", square)]
    for p in sorted(numth.prime_set(alpha)):
        spec, iso = twisted_square_spectrum(alpha, p)
        if iso:
            _, reps = outer_class_count(alpha, p)
            groups += [IsospectralGroup(f"X{l}" if p == alpha else f"X{l}[p={p}]", spec) for l in reps]
    return SquareClassification(params(alpha).q, tuple(groups))


def coclique_number(alpha: int) -> int:
    return max_coclique(prime_graph(mu_sz(alpha)))[0]
