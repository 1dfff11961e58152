"""The numerical semigroup generated by u and q^(s-1).

This semigroup collects the pole orders realizable at infinity; the
monomial x^i y^j has pole order i*q^(s-1) + j*u.  Exponents live in the
box 0 <= i < u(q-1)+1, 0 <= j < q^(s-1), and the n box pole orders form
the set at which the one-point code filtration strictly grows.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .curve import CurveParams
from .errors import ValidationError


@dataclass(frozen=True)
class ExponentPair:
    """A box exponent (i, j) together with its pole order."""

    i: int
    j: int
    pole_order: int


def exponent_pair(params: CurveParams, i: int, j: int) -> ExponentPair:
    """Build the pair (i, j), enforcing the box bounds."""
    if not (0 <= i < params.box_width and 0 <= j < params.box_height):
        raise ValidationError(
            f"({i}, {j}) outside the exponent box "
            f"{params.box_width} x {params.box_height}"
        )
    return ExponentPair(i, j, i * params.qs1 + j * params.u)


def leq_partial(a: ExponentPair, b: ExponentPair) -> bool:
    """Componentwise partial order on exponent pairs."""
    return a.i <= b.i and a.j <= b.j


def in_semigroup(params: CurveParams, value: int) -> bool:
    """Membership of a non-negative combination a*u + b*q^(s-1)."""
    if value < 0:
        return False
    qs1, u = params.qs1, params.u
    return any((value - k * qs1) % u == 0 for k in range(value // qs1 + 1))


def pole_order(params: CurveParams, i: int, j: int) -> int:
    return i * params.qs1 + j * params.u


def iota(params: CurveParams, value: int) -> ExponentPair:
    """The unique box pair with the given pole order.

    u and q^(s-1) are coprime (u divides q^s - 1), so j is determined
    modulo q^(s-1) and the pair is unique when it exists.
    """
    qs1, u = params.qs1, params.u
    if value < 0:
        raise ValidationError(f"pole order {value} is negative")
    j = (value * pow(u, -1, qs1)) % qs1
    rem = value - j * u
    if rem < 0:
        raise ValidationError(f"{value} is not a box pole order")
    i = rem // qs1
    if i >= params.box_width:
        raise ValidationError(f"{value} is not a box pole order")
    return ExponentPair(i, j, value)


class HStar:
    """The n pole orders at which the one-point code filtration grows."""

    def __init__(self, params: CurveParams, members):
        self.params = params
        self.members = tuple(members)
        self._set = frozenset(self.members)

    def __contains__(self, value: int) -> bool:
        return value in self._set

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def index(self, value: int) -> int:
        return self.members.index(value)

    def predecessor(self, value: int) -> int:
        """Largest member strictly below value."""
        below = [m for m in self.members if m < value]
        if not below:
            raise ValidationError(f"no member below {value}")
        return below[-1]

    def __repr__(self) -> str:
        return f"HStar(n={len(self.members)}, max={self.members[-1]})"


@functools.lru_cache(maxsize=None)
def h_star(params: CurveParams) -> HStar:
    """All box pole orders, sorted ascending (cached per parameter set)."""
    values = sorted(
        i * params.qs1 + j * params.u
        for i in range(params.box_width)
        for j in range(params.box_height)
    )
    if len(set(values)) != params.n:
        raise AssertionError("box pole orders collide")
    return HStar(params, values)


def gap_count(params: CurveParams, value: int) -> int:
    """Number of semigroup elements not reachable as value + member.

    For any member this count equals the member itself, which is the
    identity behind the basic minimum-distance bound n - value; it is
    exposed so tests can exercise it directly.
    """
    if not in_semigroup(params, value):
        raise ValidationError(f"{value} is not in the semigroup")
    u, qs1 = params.u, params.qs1
    frobenius = -1 if u == 1 else u * qs1 - u - qs1
    count = 0
    for mu in range(value + max(frobenius, 0) + 1):
        if in_semigroup(params, mu) and not (
            mu >= value and in_semigroup(params, mu - value)
        ):
            count += 1
    return count
