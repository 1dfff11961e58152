"""Exact arithmetic in GF(p^m) with trace and norm maps onto subfields.

An element of GF(p^m) is its integer index in [0, p^m): the radix-p digits
of the index are the coefficients of the residue polynomial, lowest degree
first.  Every field is built on a canonical modulus (the monic irreducible
of degree m whose non-leading coefficient vector has the smallest integer
encoding) and a canonical generator (the element of smallest index with
multiplicative order p^m - 1).  This makes element indices, point orders
and share files reproducible across runs and machines.

Multiplicative structure runs on discrete-log tables, addition on digit
arithmetic, so every operation is exact integer work.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import ValidationError

# Guard against accidentally asking for a table-driven field too large to
# enumerate; everything in this package is desk scale.
ORDER_CAP = 1 << 20


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate at desk scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
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


def factor_prime_power(q: int) -> tuple[int, int]:
    """Write q = p**a with p prime, or raise ValidationError."""
    if q < 2:
        raise ValidationError(f"{q} is not a prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise ValidationError(f"{q} is not a prime power")
    p = ps[0]
    a = 0
    while q > 1:
        q //= p
        a += 1
    return p, a


def _digits(value: int, p: int, length: int) -> tuple[int, ...]:
    out = []
    for _ in range(length):
        out.append(value % p)
        value //= p
    return tuple(out)


def _poly_mod(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num modulo the monic polynomial den, over GF(p)."""
    num = list(num)
    dd = len(den) - 1
    while len(num) > dd:
        lead = num[-1] % p
        if lead:
            off = len(num) - 1 - dd
            for k in range(dd):
                num[off + k] = (num[off + k] - lead * den[k]) % p
        num.pop()
    return num


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Exhaustive trial division by all lower-degree monic polynomials."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for code in range(p**d):
            div = _digits(code, p, d) + (1,)
            if not any(_poly_mod(list(poly), div, p)):
                return False
    return True


def _canonical_modulus(p: int, m: int) -> tuple[int, ...]:
    for code in range(p**m):
        poly = _digits(code, p, m) + (1,)
        if _is_irreducible(poly, p):
            return poly
    raise AssertionError("irreducible polynomials exist in every degree")


class Field:
    """GF(p^m) acting on integer element indices.

    Use make_field() rather than the constructor so identical parameters
    share one table set.  All state is immutable after construction and
    every operation is a pure function, so instances are safe to use from
    any number of threads.
    """

    def __init__(self, p: int, m: int, cap: int = ORDER_CAP):
        if not is_prime(p):
            raise ValidationError(f"characteristic {p} is not prime")
        if m < 1:
            raise ValidationError(f"extension degree {m} must be positive")
        order = p**m
        if order > cap:
            raise ValidationError(f"field order {order} exceeds cap {cap}")
        self.p = p
        self.m = m
        self.order = order
        self.modulus = _canonical_modulus(p, m)
        self._reductions = self._power_reductions()
        self.generator = self._find_generator()
        self._build_log_tables()

    # -- construction ------------------------------------------------

    def _power_reductions(self) -> list[tuple[int, ...]]:
        # digit vectors of x^m .. x^(2m-2) reduced modulo the modulus
        p, m = self.p, self.m
        if m == 1:
            return []
        cur = tuple((-c) % p for c in self.modulus[:m])
        powers = [cur]
        for _ in range(m - 2):
            top = cur[m - 1]
            cur = tuple(
                ((cur[k - 1] if k else 0) + top * powers[0][k]) % p for k in range(m)
            )
            powers.append(cur)
        return powers

    def _raw_mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        conv = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    conv[i + j] += ai * bj
        res = [conv[k] % p for k in range(m)]
        for k in range(m, 2 * m - 1):
            c = conv[k] % p
            if c:
                red = self._reductions[k - m]
                for t in range(m):
                    res[t] = (res[t] + c * red[t]) % p
        out = 0
        for k in range(m - 1, -1, -1):
            out = out * p + res[k]
        return out

    def _raw_pow(self, a: int, e: int) -> int:
        out = 1
        base = a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    def _find_generator(self) -> int:
        group = self.order - 1
        checks = [group // f for f in prime_factors(group)]
        for x in range(1, self.order):
            if all(self._raw_pow(x, c) != 1 for c in checks):
                return x
        raise AssertionError("the multiplicative group of a field is cyclic")

    def _build_log_tables(self) -> None:
        exp = [1] * (self.order - 1)
        for k in range(1, self.order - 1):
            exp[k] = self._raw_mul(exp[k - 1], self.generator)
        log = [0] * self.order
        for k, v in enumerate(exp):
            log[v] = k
        self._exp = exp
        self._log = log

    # -- arithmetic on element indices --------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, shift = 0, 1
        for _ in range(self.m):
            out += ((a + b) % p) * shift
            a //= p
            b //= p
            shift *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, shift = 0, 1
        for _ in range(self.m):
            out += (-a % p) * shift
            a //= p
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self._exp[-self._log[a] % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("zero has no negative powers")
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValidationError("zero has no multiplicative order")
        group = self.order - 1
        return group // math.gcd(self._log[a], group)

    # -- subfield structure --------------------------------------------

    def subfield_degree(self, q: int) -> int:
        """Degree over GF(p) of the subfield of order q, if it exists."""
        p, a = factor_prime_power(q)
        if p != self.p or self.m % a:
            raise ValidationError(f"GF({q}) is not a subfield of GF({self.order})")
        return a

    def in_subfield(self, x: int, q: int) -> bool:
        self.subfield_degree(q)
        return self.pow(x, q) == x

    def subfield_elements(self, q: int) -> tuple[int, ...]:
        """All elements fixed by x -> x^q, ascending by index."""
        self.subfield_degree(q)
        return tuple(x for x in range(self.order) if self.pow(x, q) == x)

    def subfield_generator(self, q: int) -> int:
        """Smallest-index element of multiplicative order q - 1."""
        self.subfield_degree(q)
        for x in range(1, self.order):
            if self.multiplicative_order(x) == q - 1:
                return x
        raise AssertionError("subfields always contain primitive elements")

    def trace(self, x: int, q: int) -> int:
        """Trace onto the subfield of order q: the sum of x, x^q, x^(q^2), ..."""
        steps = self.m // self.subfield_degree(q)
        acc, y = 0, x
        for _ in range(steps):
            acc = self.add(acc, y)
            y = self.pow(y, q)
        return acc

    def norm(self, x: int, q: int) -> int:
        """Norm onto the subfield of order q: x raised to (order-1)/(q-1)."""
        self.subfield_degree(q)
        return self.pow(x, (self.order - 1) // (q - 1))

    # -- representation -------------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of x, lowest degree first."""
        return _digits(x, self.p, self.m)

    def from_coeffs(self, coeffs) -> int:
        out = 0
        for c in reversed(list(coeffs)):
            out = out * self.p + c % self.p
        return out

    def element(self, index: int) -> "FieldElement":
        return FieldElement(self, index)

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self) -> str:
        return f"GF({self.order})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, m: int, cap: int = ORDER_CAP) -> Field:
    """Canonical GF(p^m); repeated calls return the same instance."""
    return Field(p, m, cap)


def field_of_order(q: int, cap: int = ORDER_CAP) -> Field:
    p, a = factor_prime_power(q)
    return make_field(p, a, cap)


@dataclass(frozen=True)
class FieldElement:
    """Operator-syntax wrapper around a field element index."""

    field: Field
    index: int

    def __post_init__(self):
        if not 0 <= self.index < self.field.order:
            raise ValidationError(f"index {self.index} outside {self.field!r}")

    def _lift(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValidationError("elements belong to different fields")
            return other.index
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return FieldElement(self.field, self.field.add(self.index, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return FieldElement(self.field, self.field.sub(self.index, o))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.index))

    def __mul__(self, other):
        o = self._lift(other)
        return FieldElement(self.field, self.field.mul(self.index, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return FieldElement(self.field, self.field.div(self.index, o))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.index, e))

    def __int__(self) -> int:
        return self.index

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.index)

    def trace_to(self, q: int) -> "FieldElement":
        return FieldElement(self.field, self.field.trace(self.index, q))

    def norm_to(self, q: int) -> "FieldElement":
        return FieldElement(self.field, self.field.norm(self.index, q))


def trace_to_subfield(x: FieldElement, q: int) -> FieldElement:
    """Trace of x down to the subfield of order q."""
    return x.trace_to(q)


def norm_to_subfield(x: FieldElement, q: int) -> FieldElement:
    """Norm of x down to the subfield of order q."""
    return x.norm_to(q)
