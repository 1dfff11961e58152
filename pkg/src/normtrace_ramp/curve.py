"""Extended norm-trace curves over GF(q^s).

A curve is x^u = y^(q^(s-1)) + y^(q^(s-2)) + ... + y with u dividing
(q^s - 1)/(q - 1).  Its affine rational points split into q departments:
department 0 is the x = 0 column, and department i >= 1 collects the
points whose x^u value is the i-th power of the canonical primitive
element of the subfield GF(q).  Each department is a coordinate product
of an x-value set and a y-value set.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import ValidationError
from .field import Field, factor_prime_power, make_field


@dataclass(frozen=True)
class CurveParams:
    """Validated parameter triple (q, s, u); use validate_params() to build."""

    q: int
    s: int
    u: int

    @property
    def qs1(self) -> int:
        """q^(s-1): the pole order of x, and the height of the exponent box."""
        return self.q ** (self.s - 1)

    @property
    def box_width(self) -> int:
        """Number of admissible x-exponents, u(q-1) + 1."""
        return self.u * (self.q - 1) + 1

    @property
    def box_height(self) -> int:
        """Number of admissible y-exponents, q^(s-1)."""
        return self.qs1

    @property
    def n(self) -> int:
        """Number of affine rational points."""
        return self.box_width * self.qs1

    def field(self) -> Field:
        """The ambient field GF(q^s)."""
        p, a = factor_prime_power(self.q)
        return make_field(p, a * self.s)


def validate_params(q: int, s: int, u: int) -> CurveParams:
    """Check (q, s, u) and return the parameter record.

    q must be a prime power, s at least 2, and u a positive divisor of
    (q^s - 1)/(q - 1).
    """
    factor_prime_power(q)
    if s < 2:
        raise ValidationError(f"s must be at least 2, got {s}")
    if u < 1:
        raise ValidationError(f"u must be positive, got {u}")
    quotient = (q**s - 1) // (q - 1)
    if quotient % u:
        raise ValidationError(f"u={u} does not divide (q^s-1)/(q-1) = {quotient}")
    return CurveParams(q, s, u)


class PointPartition:
    """The ordered affine points of a curve and their department structure.

    Points are listed department-major (department 0 first), and inside a
    department lexicographically by (x index, y index).  All participant
    and point indices in this package are 0-based positions into `points`.
    Instances are cached per parameter set and must be treated as
    immutable.

    Attributes:
        params: the CurveParams.
        field: GF(q^s).
        alpha: canonical primitive element of the subfield GF(q); the
            x^u value shared by department i is alpha**i.
        points: tuple of (x, y) element-index pairs, length n.
        departments: per-department tuples of point indices.
        gamma1: per-department x-value tuples.
        gamma2: per-department y-value tuples.
    """

    def __init__(self, params: CurveParams):
        self.params = params
        field = params.field()
        self.field = field
        q, u = params.q, params.u
        self.alpha = field.subfield_generator(q)

        trace_of = [field.trace(y, q) for y in range(field.order)]
        xu = [field.pow(x, u) for x in range(field.order)]

        targets = [0] + [field.pow(self.alpha, i) for i in range(1, q)]
        points: list[tuple[int, int]] = []
        departments: list[tuple[int, ...]] = []
        gamma1: list[tuple[int, ...]] = []
        gamma2: list[tuple[int, ...]] = []
        for i, target in enumerate(targets):
            if i == 0:
                g1 = (0,)
            else:
                g1 = tuple(x for x in range(1, field.order) if xu[x] == target)
            g2 = tuple(y for y in range(field.order) if trace_of[y] == target)
            start = len(points)
            for x in g1:
                for y in g2:
                    points.append((x, y))
            departments.append(tuple(range(start, len(points))))
            gamma1.append(g1)
            gamma2.append(g2)

        self.points = tuple(points)
        self.departments = tuple(departments)
        self.gamma1 = tuple(gamma1)
        self.gamma2 = tuple(gamma2)
        self._check()
        # shared evaluation-row cache, filled lazily by codes.monomial_row
        self._row_cache: dict[tuple[int, int], tuple[int, ...]] = {}

    def _check(self) -> None:
        params, field = self.params, self.field
        if len(self.points) != params.n:
            raise AssertionError("point count disagrees with the closed form")
        if len(self.gamma2[0]) != params.qs1:
            raise AssertionError("department 0 has the wrong height")
        for i in range(1, params.q):
            if len(self.gamma1[i]) != params.u or len(self.gamma2[i]) != params.qs1:
                raise AssertionError(f"department {i} has the wrong shape")
        for x, y in self.points:
            if field.pow(x, params.u) != field.trace(y, params.q):
                raise AssertionError("a listed point misses the curve")

    def department_of(self, index: int) -> int:
        """Department number of a point index."""
        first = len(self.departments[0])
        if index < first:
            return 0
        return 1 + (index - first) // (self.params.u * self.params.qs1)

    @property
    def n(self) -> int:
        return self.params.n

    def __repr__(self) -> str:
        p = self.params
        return f"PointPartition(q={p.q}, s={p.s}, u={p.u}, n={p.n})"


@functools.lru_cache(maxsize=None)
def enumerate_points(params: CurveParams) -> PointPartition:
    """Canonical ordered point list and departments for the curve (cached)."""
    return PointPartition(params)
