import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fouriermds.errors import ContextMismatch, DivisionByZero, NotPrime, NotPrimitive, OrderTooLarge
from fouriermds.galois import (
    FieldContext,
    FieldSpec,
    add,
    field_build,
    field_of_order,
    inv,
    mul,
    neg,
    power,
    sub,
)
from oracles import PolyField, is_irreducible, multiplicative_order

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (5, 2), (257, 1)]


@pytest.mark.parametrize("p,m", FIELDS)
def test_modulus_is_monic_irreducible_and_x_primitive(p, m):
    ctx = field_build(p, m)
    f = list(ctx.spec.modulus)
    assert f[-1] == 1 and len(f) == m + 1
    assert is_irreducible(f, p)
    oracle = PolyField(p, f)
    assert multiplicative_order(oracle, ctx.omega.value) == ctx.q - 1


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (3, 2), (2, 4), (3, 3), (5, 2)])
def test_modulus_is_smallest_primitive_encoding(p, m):
    ctx = field_build(p, m)
    chosen = sum(c * p**i for i, c in enumerate(ctx.spec.modulus))
    for low in range(1, chosen - p**m):
        coeffs = [(low // p**i) % p for i in range(m)] + [1]
        if coeffs[0] == 0 or not is_irreducible(coeffs, p):
            continue
        oracle = PolyField(p, coeffs)
        x = p if m > 1 else (-coeffs[0]) % p
        assert multiplicative_order(oracle, x) < p**m - 1


def test_gf2_is_trivial():
    ctx = field_build(2, 1)
    assert ctx.q == 2 and ctx.order == 1
    assert ctx.omega.value == 1


def test_gf257_omega_is_three():
    ctx = field_build(257)
    assert ctx.omega.value == 3
    assert multiplicative_order(PolyField(257, ctx.spec.modulus), 3) == 256


def test_gf8_omega_order_seven():
    ctx = field_build(2, 3)
    w = ctx.omega
    assert w**7 == ctx.one
    assert all(w**i != ctx.one for i in range(1, 7))


def test_known_moduli():
    # derived by hand: x^2+x+2 is the first monic quadratic over GF(3) with x of order 8
    assert field_build(3, 2).spec.modulus == (2, 1, 1)
    assert field_build(2, 3).spec.modulus == (1, 1, 0, 1)
    assert field_build(2, 8).spec.modulus == (1, 0, 1, 1, 1, 0, 0, 0, 1)


def test_errors():
    with pytest.raises(NotPrime):
        field_build(9, 1)
    with pytest.raises(OrderTooLarge):
        field_build(2, 17)
    with pytest.raises(NotPrimitive):
        FieldContext(FieldSpec(3, 2, (1, 0, 1)))  # x^2+1: irreducible, but x has order 4
    with pytest.raises(ValueError):
        FieldSpec(3, 2, (1, 0, 2))


def test_addition_examples():
    gf8, gf257, gf9 = field_build(2, 3), field_build(257), field_build(3, 2)
    assert (gf8(1) + gf8(1)).value == 0
    assert (gf257(256) + gf257(1)).value == 0
    assert (gf9(3) + gf9(6)).value == 0
    assert add(gf9(3), gf9(6)) == gf9.zero
    assert sub(gf9(3), gf9(3)) == gf9.zero
    assert neg(gf9(3)).value == 6


def test_inverse_examples():
    gf257 = field_build(257)
    assert inv(gf257(1)).value == 1
    assert inv(gf257(3)).value == 86
    assert (gf257(3) * gf257(86)).value == 1
    with pytest.raises(DivisionByZero):
        inv(gf257(0))
    with pytest.raises(ZeroDivisionError):
        gf257.zero**-1


def test_power_wraps():
    gf8 = field_build(2, 3)
    assert power(gf8.omega, 8) == gf8.omega
    assert power(gf8.omega, -1) * gf8.omega == gf8.one


def test_context_mismatch():
    with pytest.raises(ContextMismatch):
        field_build(2, 3)(1) + field_build(2, 2)(1)


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (5, 1), (2, 4), (3, 3), (5, 2)])
def test_scalar_and_vector_ops_match_polynomial_oracle(p, m):
    ctx = field_build(p, m)
    oracle = PolyField(p, ctx.spec.modulus)
    a, b = np.meshgrid(np.arange(ctx.q), np.arange(ctx.q), indexing="ij")
    a, b = a.ravel(), b.ravel()
    vm, va, vs = ctx.vmul(a, b), ctx.vadd(a, b), ctx.vsub(a, b)
    for x, y, pm, pa, ps in zip(a.tolist(), b.tolist(), vm.tolist(), va.tolist(), vs.tolist()):
        assert pm == ctx.mul(x, y) == oracle.mul(x, y)
        assert pa == ctx.add(x, y) == oracle.add(x, y)
        assert ps == ctx.sub(x, y) == oracle.sub(x, y)
    nz = np.arange(1, ctx.q)
    assert ctx.vinv(nz).tolist() == [oracle.inv(x) for x in range(1, ctx.q)]


@pytest.mark.parametrize("p,m", [(2, 4), (3, 2), (13, 1), (3, 3), (257, 1)])
def test_field_axioms_random_triples(p, m):
    ctx = field_build(p, m)
    rng = np.random.default_rng(p * 100 + m)
    a, b, c = rng.integers(0, ctx.q, size=(3, 10**4))
    assert np.array_equal(ctx.vadd(a, ctx.vadd(b, c)), ctx.vadd(ctx.vadd(a, b), c))
    assert np.array_equal(ctx.vmul(a, ctx.vmul(b, c)), ctx.vmul(ctx.vmul(a, b), c))
    assert np.array_equal(ctx.vadd(a, b), ctx.vadd(b, a))
    assert np.array_equal(ctx.vmul(a, b), ctx.vmul(b, a))
    assert np.array_equal(ctx.vmul(a, ctx.vadd(b, c)), ctx.vadd(ctx.vmul(a, b), ctx.vmul(a, c)))


@pytest.mark.parametrize("q", [2, 4, 9, 16, 27, 257])
def test_exp_log_bijection(q):
    ctx = field_of_order(q)
    assert len(set(ctx.exp_table)) == ctx.order
    assert 0 not in ctx.exp_table
    assert all(ctx.log(ctx.exp(i)) == i for i in range(ctx.order))
    assert ctx.log_table[0] == -1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([4, 8, 9, 25, 27, 257]), st.integers(-(10**6), 10**6))
def test_omega_powers_reduce_mod_order(q, e):
    ctx = field_of_order(q)
    assert power(ctx.omega, e) == power(ctx.omega, e % ctx.order)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([8, 9, 16, 49]), st.data())
def test_element_ops_hypothesis(q, data):
    ctx = field_of_order(q)
    elem = st.integers(0, q - 1).map(ctx)
    a, b = data.draw(elem), data.draw(elem)
    assert (a + b) - b == a
    assert a + (-a) == ctx.zero
    if b:
        assert (a / b) * b == a
        assert mul(b, inv(b)) == ctx.one


def test_build_is_deterministic():
    field_build.cache_clear()
    a = field_build(2, 10)
    field_build.cache_clear()
    b = field_build(2, 10)
    assert a is not b
    assert a.spec == b.spec and a.exp_table == b.exp_table and a.log_table == b.log_table
    assert a == b
