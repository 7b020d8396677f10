"""4x4 matrices over GF(2^alpha) and generators for Sz(2^alpha).

A matrix is a tuple of 16 field elements in row-major order.
"""

from __future__ import annotations

from .field import FieldCtx
from .specs import GroupSpecError, MatGenerators

Mat4 = tuple[int, ...]

IDENTITY: Mat4 = tuple(int(i == j) for i in range(4) for j in range(4))


def mat_mul(ctx: FieldCtx, a: Mat4, b: Mat4) -> Mat4:
    out = []
    for i in range(4):
        for j in range(4):
            acc = 0
            for k in range(4):
                acc ^= ctx.mul(a[4 * i + k], b[4 * k + j])
            out.append(acc)
    return tuple(out)


def mat_inverse(ctx: FieldCtx, a: Mat4) -> Mat4 | None:
    """Gauss-Jordan inverse, or None for a singular matrix."""
    rows = [list(a[4 * i : 4 * i + 4]) + [int(i == j) for j in range(4)] for i in range(4)]
    for col in range(4):
        pivot = next((r for r in range(col, 4) if rows[r][col]), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        scale = ctx.inv(rows[col][col])
        rows[col] = [ctx.mul(scale, x) for x in rows[col]]
        for r in range(4):
            if r != col and rows[r][col]:
                f = rows[r][col]
                rows[r] = [x ^ ctx.mul(f, y) for x, y in zip(rows[r], rows[col])]
    return tuple(x for row in rows for x in row[4:])


def is_invertible(ctx: FieldCtx, a: Mat4) -> bool:
    return mat_inverse(ctx, a) is not None


def pack(ctx: FieldCtx, a: Mat4) -> int:
    """Canonical encoding: entries packed alpha bits each, row-major, first entry lowest."""
    out = 0
    for i, x in enumerate(a):
        out |= x << (ctx.alpha * i)
    return out


def unpack(ctx: FieldCtx, code: int) -> Mat4:
    mask = ctx.order - 1
    return tuple((code >> (ctx.alpha * i)) & mask for i in range(16))


def twist_exponent(alpha: int) -> int:
    """2^((alpha+1)/2): applying x -> x^this twice is the Frobenius x -> x^2."""
    return 1 << ((alpha + 1) // 2)


def unipotent(ctx: FieldCtx, a: int, b: int) -> Mat4:
    """Lower unitriangular S(a, b) of the Sylow 2-subgroup of Sz(q)."""
    mul = ctx.mul
    at = ctx.pow(a, twist_exponent(ctx.alpha))
    bt = ctx.pow(b, twist_exponent(ctx.alpha))
    a2 = mul(a, a)
    return (
        1, 0, 0, 0,
        a, 1, 0, 0,
        b, at, 1, 0,
        mul(a2, at) ^ mul(a, b) ^ bt, mul(a, at) ^ b, a, 1,
    )  # fmt: skip


def torus(ctx: FieldCtx, kappa: int) -> Mat4:
    e = 1 << ((ctx.alpha - 1) // 2)
    ki = ctx.inv(kappa)
    d = (ctx.pow(ki, 1 + e), ctx.pow(ki, e), ctx.pow(kappa, e), ctx.pow(kappa, 1 + e))
    return tuple(d[i] if i == j else 0 for i in range(4) for j in range(4))


ANTIDIAGONAL: Mat4 = tuple(int(i + j == 3) for i in range(4) for j in range(4))


def suzuki_generators(ctx: FieldCtx) -> MatGenerators:
    """Sz(2^alpha) <= GL_4(2^alpha), generated by S(1,0), a torus element for a
    primitive field element, and the antidiagonal involution.

    Nothing here is trusted: enumeration must reproduce the group order and
    element orders.
    """
    if ctx.alpha % 2 == 0:
        raise GroupSpecError(f"Suzuki groups need odd alpha, got {ctx.alpha}")
    gens = [unipotent(ctx, 1, 0)]
    if ctx.alpha > 1:
        gens.append(torus(ctx, ctx.primitive_element()))
    gens.append(ANTIDIAGONAL)
    return MatGenerators(ctx, tuple(gens))
