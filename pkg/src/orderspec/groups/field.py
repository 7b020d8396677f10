"""Arithmetic in GF(2^alpha), polynomial basis.

Elements are plain ints: bit i is the coefficient of x^i.  The vectorized
multiply works on numpy uint64 arrays and is what the matrix groups use;
the scalar functions are for setup and tests.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

MAX_ALPHA = 45


class FieldError(ValueError):
    pass


def _pmod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def _pmulmod(a: int, b: int, m: int) -> int:
    r = 0
    deg = m.bit_length() - 1
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= m
    return r


def _pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, _pmod(a, b)
    return a


def is_irreducible(poly: int) -> bool:
    """Rabin-style test: gcd(f, x^(2^k) - x) = 1 for every k <= deg/2."""
    deg = poly.bit_length() - 1
    if deg < 1:
        return False
    if deg == 1:
        return True
    x = 0b10
    h = x
    for _ in range(deg // 2):
        h = _pmulmod(h, h, poly)
        if _pgcd(poly, h ^ x) != 1:
            return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    alpha: int
    modulus: int

    def __post_init__(self):
        if not 1 <= self.alpha <= MAX_ALPHA:
            raise FieldError(f"alpha must lie in [1, {MAX_ALPHA}], got {self.alpha}")
        if self.modulus.bit_length() - 1 != self.alpha:
            raise FieldError(f"modulus {bin(self.modulus)} does not have degree {self.alpha}")
        if not is_irreducible(self.modulus):
            raise FieldError(f"modulus {bin(self.modulus)} is reducible")

    @property
    def order(self) -> int:
        return 1 << self.alpha

    def elem(self, bits: int) -> FieldElem:
        return FieldElem(self, bits)

    def mul(self, a: int, b: int) -> int:
        return _pmulmod(a, b, self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in GF(2^alpha)")
        return self.pow(a, self.order - 2)

    def mul_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Elementwise product of broadcastable uint64 arrays."""
        a, b = np.broadcast_arrays(np.asarray(a, dtype=np.uint64), np.asarray(b, dtype=np.uint64))
        a, b = a.copy(), b.copy()
        r = np.zeros(a.shape, dtype=np.uint64)
        top = np.uint64(1 << self.alpha)
        mod = np.uint64(self.modulus)
        one = np.uint64(1)
        for _ in range(self.alpha):
            r ^= np.where(b & one, a, np.uint64(0))
            b >>= one
            a <<= one
            a ^= np.where(a & top, mod, np.uint64(0))
        return r

    def primitive_element(self) -> int:
        from ..numth import prime_set

        n = self.order - 1
        if n == 1:
            return 1
        ps = prime_set(n)
        for g in range(2, self.order):
            if all(self.pow(g, n // p) != 1 for p in ps):
                return g
        raise AssertionError("multiplicative group is cyclic; unreachable")


@dataclass(frozen=True)
class FieldElem:
    ctx: FieldCtx
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < self.ctx.order:
            raise FieldError(f"{self.bits:#x} is not reduced modulo the field polynomial")

    def __add__(self, other: FieldElem) -> FieldElem:
        return FieldElem(self.ctx, self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: FieldElem) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.mul(self.bits, other.bits))

    def __pow__(self, e: int) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.pow(self.bits, e))

    def inverse(self) -> FieldElem:
        return FieldElem(self.ctx, self.ctx.inv(self.bits))

    def __bool__(self) -> bool:
        return self.bits != 0


def field_make(alpha: int, modulus: int | None = None) -> FieldCtx:
    """Field context for GF(2^alpha); defaults to the least irreducible modulus
    with nonzero constant term."""
    if not 1 <= alpha <= MAX_ALPHA:
        raise FieldError(f"alpha must lie in [1, {MAX_ALPHA}], got {alpha}")
    if modulus is None:
        for cand in range((1 << alpha) | 1, 1 << (alpha + 1), 2):
            if is_irreducible(cand):
                modulus = cand
                break
    return FieldCtx(alpha, modulus)
