import itertools

import pytest
from hypothesis import given, settings, strategies as st

from trace_cotrace.errors import NonMonicError, ZeroInverseError
from trace_cotrace.ext_field import (
    FieldCtx,
    enumerate_elements,
    find_irreducible,
    invert,
    is_irreducible,
    multiplicative_generator,
    trace,
)


def f4():
    return FieldCtx(2, 2, (1, 1, 1))


def brute_force_irreducible(f, p):
    """Oracle: monic f is irreducible iff no monic divisor of degree
    1..deg-1 divides it (checked by long division over F_p)."""
    m = len(f) - 1

    def poly_mod(a, b):
        a = list(a)
        while len(a) >= len(b) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            shift = len(a) - len(b)
            factor = a[-1] * pow(b[-1], -1, p) % p
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - factor * c) % p
        while a and a[-1] == 0:
            a.pop()
        return a

    for d in range(1, m):
        for tail in itertools.product(range(p), repeat=d):
            divisor = list(tail) + [1]
            if not poly_mod(f, divisor):
                return False
    return True


def test_is_irreducible_examples():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)  # (x+1)^2
    assert is_irreducible((1, 0, 1), 3)


def test_is_irreducible_rejects_non_monic():
    with pytest.raises(NonMonicError):
        is_irreducible((1, 1, 2), 3)
    with pytest.raises(ValueError):
        is_irreducible((1,), 3)


@pytest.mark.parametrize(
    "p,m", [(2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2)]
)
def test_is_irreducible_matches_brute_force(p, m):
    for tail in itertools.product(range(p), repeat=m):
        f = tuple(tail) + (1,)
        assert is_irreducible(f, p) == brute_force_irreducible(f, p), f


def test_find_irreducible_examples():
    assert find_irreducible(2, 2) == (1, 1, 1)
    assert find_irreducible(2, 3) == (1, 1, 0, 1)
    assert find_irreducible(3, 2) == (1, 0, 1)


@pytest.mark.parametrize("p,m", [(2, 6), (3, 4), (5, 3), (7, 2)])
def test_find_irreducible_is_smallest(p, m):
    f = find_irreducible(p, m)
    assert is_irreducible(f, p)
    base_p_value = sum(c * p**e for e, c in enumerate(f[:m]))
    for n in range(base_p_value):
        smaller = tuple((n // p**e) % p for e in range(m)) + (1,)
        assert not is_irreducible(smaller, p)


def test_field_ctx_validation():
    with pytest.raises(ValueError):
        FieldCtx(4, 2)
    with pytest.raises(ValueError):
        FieldCtx(2, 0)
    with pytest.raises(ValueError):
        FieldCtx(2, 2, (1, 0, 1))  # reducible
    with pytest.raises(ValueError):
        FieldCtx(2, 2, (1, 1, 1, 1))  # wrong degree


def test_trace_examples_f4():
    ctx = f4()
    zero, one = ctx.zero(), ctx.one()
    alpha = ctx.element((0, 1))
    assert int(trace(zero)) == 0
    assert int(trace(one)) == 0
    assert int(trace(alpha)) == 1


@pytest.mark.parametrize("p,m", [(2, 4), (3, 3), (5, 2), (7, 2), (2, 1), (13, 1)])
def test_trace_matches_frobenius_sum(p, m):
    # oracle: tr(x) = x + x^p + ... + x^(p^(m-1)) computed by powering
    ctx = FieldCtx(p, m)
    for x in enumerate_elements(ctx):
        acc = ctx.zero()
        for k in range(m):
            acc = acc + x ** (p**k)
        expected = acc.coeffs
        assert expected[1:] == (0,) * (m - 1)
        assert int(trace(x)) == expected[0]


@pytest.mark.parametrize("p,m", [(2, 6), (3, 4), (5, 3), (11, 2)])
def test_trace_fibers_are_uniform(p, m):
    ctx = FieldCtx(p, m)
    fibers = [0] * p
    for x in enumerate_elements(ctx):
        fibers[int(trace(x))] += 1
    assert fibers == [ctx.q // p] * p


@pytest.mark.parametrize("p,m", [(2, 5), (3, 3), (7, 2)])
def test_trace_frobenius_invariance_and_linearity(p, m):
    ctx = FieldCtx(p, m)
    elements = list(enumerate_elements(ctx))
    for x in elements:
        assert trace(x**p) == trace(x)
    sample = elements[:: max(1, len(elements) // 12)]
    for x in sample:
        for y in sample:
            assert int(trace(x + y)) == (int(trace(x)) + int(trace(y))) % p
        for c in range(p):
            assert int(trace(x.scaled(c))) == (c * int(trace(x))) % p


def test_invert_examples_f4():
    ctx = f4()
    one = ctx.one()
    alpha = ctx.element((0, 1))
    assert invert(one) == one
    assert invert(alpha) == ctx.element((1, 1))  # alpha * (alpha + 1) = 1
    assert alpha * invert(alpha) == one


def test_invert_zero_raises():
    with pytest.raises(ZeroInverseError):
        invert(f4().zero())


@pytest.mark.parametrize("p,m", [(2, 4), (3, 3), (5, 2), (3, 1)])
def test_invert_is_involution_and_exact(p, m):
    ctx = FieldCtx(p, m)
    one = ctx.one()
    for x in enumerate_elements(ctx):
        if x.is_zero():
            continue
        assert x * invert(x) == one
        assert invert(invert(x)) == x


def test_enumerate_examples():
    ctx2 = FieldCtx(2, 1)
    assert [x.coeffs for x in enumerate_elements(ctx2)] == [(0,), (1,)]
    ctx4 = f4()
    assert [x.coeffs for x in enumerate_elements(ctx4)] == [
        (0, 0), (1, 0), (0, 1), (1, 1),
    ]
    assert sum(1 for _ in enumerate_elements(FieldCtx(3, 4))) == 81


def test_enumerate_indexes_round_trip():
    ctx = FieldCtx(3, 3)
    for n, x in enumerate(enumerate_elements(ctx)):
        assert x.index() == n
        assert ctx.from_index(n) == x


@pytest.mark.parametrize("p,m", [(2, 4), (3, 2), (5, 2), (2, 1), (7, 1)])
def test_multiplicative_generator_order(p, m):
    ctx = FieldCtx(p, m)
    g = multiplicative_generator(ctx)
    seen = set()
    x = ctx.one()
    for _ in range(ctx.q - 1):
        seen.add(x.coeffs)
        x = x * g
    assert x == ctx.one()
    assert len(seen) == ctx.q - 1


@settings(max_examples=60)
@given(st.data())
def test_field_axioms_sampled(data):
    p, m = data.draw(st.sampled_from([(2, 3), (3, 2), (5, 2)]))
    ctx = FieldCtx(p, m)
    draw_elem = lambda: ctx.from_index(data.draw(st.integers(0, ctx.q - 1)))
    a, b, c = draw_elem(), draw_elem(), draw_elem()
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
