import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orderspec.groups.field import MAX_ALPHA, FieldCtx, FieldError, field_make, is_irreducible

from oracles import brute_irreducible, gf2_polymul


def test_field_make_defaults():
    assert field_make(3).modulus == 0b1011
    assert field_make(1).modulus == 0b11
    assert field_make(5).modulus == 0b100101


def test_field_make_explicit_modulus():
    assert field_make(3, 0b1101).modulus == 0b1101
    with pytest.raises(FieldError):
        field_make(3, 0b1111)  # (x + 1)^3
    with pytest.raises(FieldError):
        field_make(3, 0b10011)  # wrong degree


@pytest.mark.parametrize("alpha", [0, -1, MAX_ALPHA + 1])
def test_field_make_range(alpha):
    with pytest.raises(FieldError):
        field_make(alpha)


def test_is_irreducible_matches_factor_search():
    for poly in range(2, 1 << 9):
        assert is_irreducible(poly) == (poly.bit_length() > 1 and brute_irreducible(poly)), bin(poly)


def test_irreducible_counts():
    # number of monic irreducibles of degree n over GF(2)
    counts = {1: 2, 2: 1, 3: 2, 4: 3, 5: 6, 6: 9, 7: 18, 8: 30}
    for n, c in counts.items():
        assert sum(is_irreducible(p) for p in range(1 << n, 1 << (n + 1))) == c


def test_default_modulus_for_every_alpha():
    for a in range(1, MAX_ALPHA + 1):
        ctx = field_make(a)
        assert ctx.modulus & 1 and ctx.modulus.bit_length() == a + 1


def reduce_mod(a, m):
    while a.bit_length() >= m.bit_length():
        a ^= m << (a.bit_length() - m.bit_length())
    return a


fields = st.sampled_from([field_make(a) for a in (1, 2, 3, 5, 8, 13, 31, 45)])


@st.composite
def field_and_elements(draw, n=3):
    ctx = draw(fields)
    return ctx, [draw(st.integers(0, ctx.order - 1)) for _ in range(n)]


@given(field_and_elements())
@settings(max_examples=200)
def test_field_axioms(case):
    ctx, (a, b, c) = case
    mul = ctx.mul
    assert mul(a, b) == reduce_mod(gf2_polymul(a, b), ctx.modulus)
    assert mul(a, b) == mul(b, a)
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert mul(a, b ^ c) == mul(a, b) ^ mul(a, c)
    assert mul(a, 1) == a
    if a:
        assert mul(a, ctx.inv(a)) == 1


@given(field_and_elements(2))
def test_frobenius_is_additive(case):
    ctx, (a, b) = case
    assert ctx.pow(a ^ b, 2) == ctx.pow(a, 2) ^ ctx.pow(b, 2)
    assert ctx.pow(a, ctx.order) == a


@given(field_and_elements(2))
def test_elem_operators(case):
    ctx, (a, b) = case
    x, y = ctx.elem(a), ctx.elem(b)
    assert (x + y).bits == a ^ b and (x - y).bits == a ^ b
    assert (x * y).bits == ctx.mul(a, b)
    assert (x**5).bits == ctx.pow(a, 5)
    assert bool(x) == (a != 0)
    if a:
        assert (x * x.inverse()).bits == 1


def test_elem_must_be_reduced():
    ctx = field_make(3)
    with pytest.raises(FieldError):
        ctx.elem(8)
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


@pytest.mark.parametrize("alpha", [1, 3, 5, 7, 13, 45])
def test_mul_array_matches_scalar(alpha):
    ctx = field_make(alpha)
    rng = np.random.default_rng(alpha)
    a = rng.integers(0, ctx.order, size=200, dtype=np.uint64)
    b = rng.integers(0, ctx.order, size=200, dtype=np.uint64)
    got = ctx.mul_array(a, b)
    assert [int(v) for v in got] == [ctx.mul(int(x), int(y)) for x, y in zip(a, b)]


@pytest.mark.parametrize("alpha", [1, 2, 3, 4, 5, 6, 7])
def test_primitive_element_generates(alpha):
    ctx = field_make(alpha)
    g = ctx.primitive_element()
    powers = {ctx.pow(g, e) for e in range(ctx.order - 1)}
    assert powers == set(range(1, ctx.order))


def test_ctx_validates():
    with pytest.raises(FieldError):
        FieldCtx(2, 0b101)  # x^2 + 1 = (x + 1)^2
