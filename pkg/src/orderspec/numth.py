"""Exact integer arithmetic: factorization, prime sets, multiplicative orders
and primitive prime divisors.

Everything here is a pure function of its arguments.  Factorization is
trial division up to ``TRIAL_LIMIT`` followed by Brent's variant of Pollard
rho with a fixed sequence of polynomial constants, so results (and failures)
are reproducible run to run.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

INT_LIMIT = 1 << 96
TRIAL_LIMIT = 10**6
DEFAULT_BUDGET = 1 << 24
RHO_START = 2

# Strong-probable-prime bases; deterministic below 3.3e24, far beyond any
# known counterexample up to INT_LIMIT.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


class NumthError(ValueError):
    """Invalid argument to a number-theoretic routine."""


class FactorizationBudgetExceeded(RuntimeError):
    def __init__(self, n: int, budget: int):
        super().__init__(
            f"could not finish factoring {n} within {budget} rho iterations; "
            "increase the budget or reduce alpha"
        )
        self.n = n
        self.budget = budget


@functools.lru_cache(maxsize=1)
def _small_primes() -> tuple[int, ...]:
    sieve = bytearray([1]) * (TRIAL_LIMIT + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(TRIAL_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, TRIAL_LIMIT + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """Prime factorization as sorted ``(prime, exponent)`` pairs; ``()`` is 1."""

    factors: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def primes(self) -> frozenset[int]:
        return frozenset(p for p, _ in self.factors)

    @property
    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


def _check_range(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise NumthError(f"expected an integer, got {n!r}")
    if n < 1 or n >= INT_LIMIT:
        raise NumthError(f"{n} is outside the supported range 1 <= n < 2^96")


def _brent(n: int, c: int, budget: int) -> tuple[int, int]:
    """One Brent-rho run with f(x) = x^2 + c.  Returns (divisor or 0, iterations used)."""
    y, r, q, g = RHO_START, 1, 1, 1
    used = 0
    m = 128
    x = ys = y
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = math.gcd(q, n)
            k += m
        used += r
        r *= 2
        if used > budget:
            return 0, used
    if g == n:
        # backtrack one step at a time from the saved position
        while True:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
            if g > 1:
                break
    return (g if g != n else 0), used


def _split(n: int, budget: list[int], total: int) -> int:
    c = 1
    while True:
        d, used = _brent(n, c, budget[0])
        budget[0] -= used
        if d:
            return d
        if budget[0] <= 0:
            raise FactorizationBudgetExceeded(n, total)
        c += 1


def _factor_into(n: int, out: dict[int, int], budget: list[int], total: int) -> None:
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack.extend((r, r))
            continue
        d = _split(m, budget, total)
        stack.extend((d, m // d))


@functools.lru_cache(maxsize=65536)
def _factorize(n: int, budget: int) -> Factorization:
    out: dict[int, int] = {}
    m = n
    checked_prime = False
    for i, p in enumerate(_small_primes()):
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out[p] = e
            checked_prime = False
        elif i >= 168 and not checked_prime:
            if is_prime(m):
                break
            checked_prime = True
    if m > 1:
        _factor_into(m, out, [budget], budget)
    return Factorization(tuple(sorted(out.items())))


def factorize(n: int, budget: int = DEFAULT_BUDGET) -> Factorization:
    """Exact factorization of ``1 <= n < 2**96``.

    Raises FactorizationBudgetExceeded when the rho stage needs more than
    ``budget`` iterations in total.
    """
    _check_range(n)
    return _factorize(n, budget)


def prime_set(n: int, budget: int = DEFAULT_BUDGET) -> frozenset[int]:
    return factorize(n, budget).primes


def coprime_base(values: Iterable[int]) -> list[int]:
    """Pairwise coprime numbers > 1 whose products generate every input.

    Splitting ``values`` by repeated gcds first means only the (much smaller)
    base elements have to be factored.
    """
    base: list[int] = []
    for v in values:
        pending = [v]
        while pending:
            x = pending.pop()
            if x == 1:
                continue
            for i, b in enumerate(base):
                g = math.gcd(x, b)
                if g > 1:
                    del base[i]
                    pending.extend((g, b // g, x // g))
                    break
            else:
                base.append(x)
    return sorted(base)


def prime_sets(values: Iterable[int], budget: int = DEFAULT_BUDGET) -> list[frozenset[int]]:
    """``prime_set`` of each value, factoring only a shared coprime base."""
    values = list(values)
    for v in values:
        _check_range(v)
    base_primes = {b: prime_set(b, budget) for b in coprime_base(values)}
    result = []
    for v in values:
        primes: set[int] = set()
        for b, ps in base_primes.items():
            if math.gcd(v, b) > 1:
                primes |= ps
        result.append(frozenset(primes))
    return result


def multiplicative_order(q: int, r: int) -> int:
    """Least d >= 1 with q**d == 1 (mod r), for a prime r not dividing q."""
    if r < 2 or not is_prime(r):
        raise NumthError(f"modulus {r} is not prime")
    if q % r == 0:
        raise NumthError(f"{r} divides {q}; no multiplicative order")
    d = r - 1
    for p, _ in _factorize(d, DEFAULT_BUDGET):
        while d % p == 0 and pow(q, d // p, r) == 1:
            d //= p
    return d


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n):
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def cyclotomic_value(n: int, q: int) -> int:
    """The n-th cyclotomic polynomial evaluated at q."""
    num, den = 1, 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    return num // den


def is_power_of_two(n: int) -> bool:
    return n > 0 and n & (n - 1) == 0


def is_mersenne_prime(q: int) -> bool:
    return is_power_of_two(q + 1) and is_prime(q)


@dataclass(frozen=True)
class PrimitivePrimeDivisor:
    """Answer to a primitive-prime-divisor query for ``base**exponent - 1``.

    Exactly one of ``prime`` and ``exception`` is set.  ``exception`` is 1 for
    (base, exponent) = (2, 6) and 2 for exponent 2 with base + 1 a power of
    two.  For prime bases case 2 means a Mersenne prime; composite bases such
    as 15 (15^2 - 1 = 2^5 * 7) land there too.
    """

    base: int
    exponent: int
    prime: int | None = None
    exception: int | None = None

    @property
    def exists(self) -> bool:
        return self.prime is not None


def primitive_prime_divisor(q: int, n: int, budget: int = DEFAULT_BUDGET) -> PrimitivePrimeDivisor:
    """Smallest prime r with r | q^n - 1 and r not dividing q^i - 1 for i < n."""
    if q < 2 or n < 2:
        raise NumthError(f"need q, n >= 2, got q={q}, n={n}")
    if (q, n) == (2, 6):
        return PrimitivePrimeDivisor(q, n, exception=1)
    if n == 2 and is_power_of_two(q + 1):
        return PrimitivePrimeDivisor(q, n, exception=2)
    # every primitive prime divisor divides the cyclotomic part; scan small
    # primes in order and only factor what is left if none of them qualifies
    phi = cyclotomic_value(n, q)
    for p in _small_primes():
        if p * p > phi:
            break
        if phi % p == 0:
            if q % p and multiplicative_order(q, p) == n:
                return PrimitivePrimeDivisor(q, n, prime=p)
            while phi % p == 0:
                phi //= p
    rest: dict[int, int] = {}
    if phi > 1:
        # the cofactor may exceed INT_LIMIT; only the rho budget bounds the work
        _factor_into(phi, rest, [budget], budget)
    for r in sorted(rest):
        if q % r and multiplicative_order(q, r) == n:
            return PrimitivePrimeDivisor(q, n, prime=r)
    raise ArithmeticError(f"no primitive prime divisor of {q}^{n}-1 outside the known exceptions")
