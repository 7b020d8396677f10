"""Brute-force reference implementations.

Deliberately naive and independent of the package code paths they check.
"""

import itertools
import math


def trial_factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def brute_is_prime(n):
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


def brute_order(q, r):
    d, x = 1, q % r
    while x != 1:
        x = x * q % r
        d += 1
    return d


def maximal_elements(values):
    values = set(values)
    return sorted(v for v in values if not any(w != v and w % v == 0 for w in values))


def divisor_closure(mu):
    return {d for m in mu for d in range(1, m + 1) if m % d == 0}


def brute_coclique(vertices, edges):
    """Largest independent set by scanning all subsets; lexicographically least."""
    best = ()
    for size in range(len(vertices), -1, -1):
        for subset in itertools.combinations(sorted(vertices), size):
            if all((min(a, b), max(a, b)) not in edges for a, b in itertools.combinations(subset, 2)):
                return size, subset
    return 0, best


def brute_criterion(mu):
    """Scan every 4-set of primes up to max(mu) against the divisor closure."""
    omega = divisor_closure(mu)
    primes = sorted(p for p in omega if brute_is_prime(p))
    for quad in itertools.combinations(primes, 4):
        if all(a * b in omega for a, b in itertools.combinations(quad, 2)) and not any(
            a * b * c in omega for a, b, c in itertools.combinations(quad, 3)
        ):
            return quad
    return None


def gf2_polymul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def brute_irreducible(poly):
    """No product of two polynomials of positive degree equals poly."""
    deg = poly.bit_length() - 1
    for a in range(2, 1 << deg):
        for b in range(2, 1 << deg):
            da, db = a.bit_length() - 1, b.bit_length() - 1
            if da + db == deg and gf2_polymul(a, b) == poly:
                return False
    return True


def perm_compose(x, y):
    """Apply x, then y."""
    return tuple(y[i] for i in x)


def perm_closure(gens):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = perm_compose(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


def element_power_order(mul, identity, g):
    d, x = 1, g
    while x != identity:
        x = mul(x, g)
        d += 1
    return d


def frobenius_elements(m, t, k):
    """(a, j) for x^a y^j, with y x y^-1 = x^t, as plain tuples."""

    def mul(u, v):
        return ((u[0] + pow(t, u[1], m) * v[0]) % m, (u[1] + v[1]) % k)

    return [(a, j) for a in range(m) for j in range(k)], mul


def brute_spectrum(elements, mul, identity):
    return maximal_elements({element_power_order(mul, identity, g) for g in elements})
