"""Finite fields GF(p^m) with exp/log tables.

Elements are encoded as integers in ``[0, q)``: the polynomial
``c0 + c1*x + ... + c_{m-1}*x^(m-1)`` is stored as ``c0 + c1*p + ... +
c_{m-1}*p^(m-1)``.  Fields are built from a monic modulus under which
``x`` generates the multiplicative group, so ``omega = x`` and
``exp_table[i]`` is simply the encoding of ``x^i``.

Scalar arithmetic on encoded integers lives on :class:`FieldContext`
(``ctx.add(a, b)``, ``ctx.mul(a, b)``, ...).  The ``v*`` methods are the
same operations on numpy arrays and are what the linear algebra kernels
use.  :class:`FieldElement` wraps an encoded value with its field and
supports the usual operators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    ContextMismatch,
    DivisionByZero,
    NotPrime,
    NotPrimitive,
    OrderTooLarge,
)

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split a prime power ``q`` into ``(p, m)``."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    m = 0
    rest = q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, m


def _digits(value: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        value, c = divmod(value, p)
        out.append(c)
    return out


def _undigits(coeffs: Sequence[int], p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = value * p + c
    return value


@dataclass(frozen=True)
class FieldSpec:
    """Characteristic, degree and monic modulus (ascending coefficients)."""

    p: int
    m: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if not is_prime(self.p):
            raise NotPrime(f"characteristic {self.p} is not prime")
        if self.m < 1:
            raise ValueError(f"extension degree must be >= 1, got {self.m}")
        if len(self.modulus) != self.m + 1:
            raise ValueError(
                f"modulus needs {self.m + 1} coefficients, got {len(self.modulus)}"
            )
        if any(not 0 <= c < self.p for c in self.modulus):
            raise ValueError(f"modulus coefficients must lie in [0, {self.p})")
        if self.modulus[-1] != 1:
            raise ValueError("modulus must be monic")

    @property
    def q(self) -> int:
        return self.p**self.m

    def __str__(self) -> str:
        coeffs = ",".join(str(c) for c in self.modulus)
        return f"p={self.p} m={self.m} modulus=[{coeffs}]"


def _poly_mulmod(a: list[int], b: list[int], spec: FieldSpec) -> list[int]:
    """Multiply two residues (length-m digit lists) modulo ``spec.modulus``."""
    p, m, f = spec.p, spec.m, spec.modulus
    prod = [0] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for deg in range(len(prod) - 1, m - 1, -1):
        top = prod[deg]
        if top:
            for i in range(m):
                prod[deg - m + i] = (prod[deg - m + i] - top * f[i]) % p
    return prod[:m]


def _x_residue(spec: FieldSpec) -> list[int]:
    if spec.m > 1:
        return [0, 1] + [0] * (spec.m - 2)
    return [(-spec.modulus[0]) % spec.p]


def _x_is_generator(spec: FieldSpec) -> bool:
    """Whether ``x`` has multiplicative order ``q - 1`` modulo the modulus.

    A reducible modulus has fewer than ``q - 1`` units, so a positive answer
    also certifies irreducibility.
    """
    if spec.modulus[0] == 0:
        return False
    order = spec.q - 1
    one = [1] + [0] * (spec.m - 1)
    x = _x_residue(spec)

    def power(e: int) -> list[int]:
        result, base = one, x
        while e:
            if e & 1:
                result = _poly_mulmod(result, base, spec)
            base = _poly_mulmod(base, base, spec)
            e >>= 1
        return result

    if power(order) != one:
        return False
    return all(power(order // ell) != one for ell in prime_factors(order))


class FieldContext:
    """An immutable finite field GF(p^m) with its exp/log tables."""

    def __init__(self, spec: FieldSpec) -> None:
        q = spec.q
        if q > MAX_ORDER:
            raise OrderTooLarge(f"q = {q} exceeds the table cap {MAX_ORDER}")
        if not _x_is_generator(spec):
            raise NotPrimitive(f"x does not generate GF({q})* modulo {list(spec.modulus)}")
        self.spec = spec
        self.p = spec.p
        self.m = spec.m
        self.q = q
        self.order = q - 1

        exp = []
        cur = [1] + [0] * (spec.m - 1)
        x = _x_residue(spec)
        for _ in range(self.order):
            exp.append(_undigits(cur, spec.p))
            cur = _poly_mulmod(cur, x, spec)
        self.exp_table: tuple[int, ...] = tuple(exp)
        log = [-1] * q
        for i, v in enumerate(exp):
            log[v] = i
        # log_table[0] is -1: zero has no logarithm
        self.log_table: tuple[int, ...] = tuple(log)

        self._exp2 = np.array(exp + exp, dtype=np.int64)
        self._log = np.array([max(v, 0) for v in log], dtype=np.int64)
        self._exp2.setflags(write=False)
        self._log.setflags(write=False)

    # ----------------------------------------------------------------- identity
    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldContext) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __repr__(self) -> str:
        return f"GF({self.q})[{self.spec}]"

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def omega(self) -> FieldElement:
        return FieldElement(self, self.exp_table[1 % self.order])

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, v) for v in range(self.q))

    def from_int(self, n: int) -> int:
        """Encoding of the integer ``n`` viewed in the prime subfield."""
        return n % self.p

    # ------------------------------------------------------ scalar, encoded ints
    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.m == 1:
            return (a + b) % p
        out, w = 0, 1
        for _ in range(self.m):
            out += ((a // w + b // w) % p) * w
            w *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (-a) % p
        out, w = 0, 1
        for _ in range(self.m):
            out += ((-(a // w)) % p) * w
            w *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in GF({self.q})")
        return self.exp_table[(-self.log_table[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("0 raised to a negative power")
            return 1 if e == 0 else 0
        return self.exp_table[(self.log_table[a] * e) % self.order]

    def exp(self, i: int) -> int:
        """Encoding of ``omega**i``; ``i`` may be any integer."""
        return self.exp_table[i % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("log of 0")
        return self.log_table[a]

    # ---------------------------------------------------------- numpy kernels
    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        p = self.p
        if p == 2:
            return np.bitwise_xor(a, b)
        if self.m == 1:
            return (a + b) % p
        out = np.zeros(np.broadcast_shapes(np.shape(a), np.shape(b)), dtype=np.int64)
        w = 1
        for _ in range(self.m):
            out += ((a // w + b // w) % p) * w
            w *= p
        return out

    def vneg(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a)
        p = self.p
        if p == 2:
            return a
        if self.m == 1:
            return (-a) % p
        out = np.zeros(np.shape(a), dtype=np.int64)
        w = 1
        for _ in range(self.m):
            out += ((-(a // w)) % p) * w
            w *= p
        return out

    def vsub(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.asarray(a), np.asarray(b)
        prod = self._exp2[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vexp(self, e: np.ndarray) -> np.ndarray:
        """Encodings of ``omega**e`` for an integer array ``e``."""
        return self._exp2[np.mod(e, self.order)]

    def vinv(self, a: np.ndarray) -> np.ndarray:
        """Elementwise inverse; zero entries map to zero."""
        a = np.asarray(a)
        out = self._exp2[(self.order - self._log[a]) % self.order]
        return np.where(a == 0, 0, out)


@lru_cache(maxsize=None)
def field_build(p: int, m: int = 1) -> FieldContext:
    """Deterministically construct GF(p^m).

    For ``m > 1`` the modulus is the monic polynomial with the smallest
    base-``p`` encoding of its coefficients under which ``x`` is a generator.
    For ``m == 1`` omega is the smallest primitive root and the modulus is
    recorded as ``x - omega``.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree must be >= 1, got {m}")
    q = p**m
    if q > MAX_ORDER:
        raise OrderTooLarge(f"q = {q} exceeds the table cap {MAX_ORDER}")
    if m == 1:
        for w in range(1, p):
            spec = FieldSpec(p, 1, ((-w) % p, 1))
            if _x_is_generator(spec):
                return FieldContext(spec)
    else:
        for low in range(1, p**m):
            coeffs = _digits(low, p, m)
            if coeffs[0] == 0:
                continue
            spec = FieldSpec(p, m, tuple(coeffs) + (1,))
            if _x_is_generator(spec):
                return FieldContext(spec)
    raise AssertionError(f"no primitive modulus found for GF({p}^{m})")  # unreachable


def field_of_order(q: int) -> FieldContext:
    return field_build(*prime_power(q))


def field_from_spec(spec: FieldSpec) -> FieldContext:
    """Context for an explicit spec, sharing the cached instance when canonical."""
    canonical = field_build(spec.p, spec.m)
    if canonical.spec == spec:
        return canonical
    return FieldContext(spec)


class FieldElement:
    """One element of a :class:`FieldContext`."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldContext, value: int) -> None:
        value = int(value)
        if not 0 <= value < field.q:
            raise ValueError(f"{value} is not an element encoding of GF({field.q})")
        self.field = field
        self.value = value

    def _other(self, other: object) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field is not self.field and other.field != self.field:
            raise ContextMismatch(f"{self.field!r} vs {other.field!r}")
        return other.value

    def __add__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __mul__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    def __truediv__(self, other: FieldElement) -> FieldElement:
        return FieldElement(self.field, self.field.div(self.value, self._other(other)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int) -> FieldElement:
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.value == other.value and self.field == other.field

    def __hash__(self) -> int:
        return hash((self.field.spec, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF({self.field.q})({self.value})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def neg(a: FieldElement) -> FieldElement:
    return -a


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    """``a**e``; negative exponents give inverse powers."""
    return a**e
