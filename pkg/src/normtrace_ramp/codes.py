"""Evaluation codes on the curve points, duals, and exact leakage algebra.

A code is the span of monomial rows ev(x^i y^j) = (value at P_0, ...,
value at P_{n-1}).  Monomial sets that are downward closed in both
exponents evaluate to independent rows because the full exponent box
evaluates to a basis of the whole space; one-point codes are the special
case where the set is a pole-order threshold.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from . import linalg
from .curve import PointPartition
from .errors import ValidationError
from .semigroup import ExponentPair, exponent_pair, h_star


def monomial_row(partition: PointPartition, i: int, j: int) -> tuple[int, ...]:
    """Evaluation of x^i y^j at every point, cached on the partition."""
    cache = partition._row_cache
    row = cache.get((i, j))
    if row is not None:
        return row
    field = partition.field
    if i == 0 and j == 0:
        row = (1,) * partition.n
    elif j == 0:
        prev = monomial_row(partition, i - 1, 0)
        row = tuple(field.mul(v, pt[0]) for v, pt in zip(prev, partition.points))
    else:
        prev = monomial_row(partition, i, j - 1)
        row = tuple(field.mul(v, pt[1]) for v, pt in zip(prev, partition.points))
    cache[(i, j)] = row
    return row


class EvaluationCode:
    """Span of monomial evaluations over the curve points.

    The monomial list is kept sorted by pole order; generator rows are
    materialized lazily and cached.  Instances are immutable.
    """

    def __init__(self, partition: PointPartition, monomials):
        self.partition = partition
        mono = tuple(sorted(monomials, key=lambda e: e.pole_order))
        if len({e.pole_order for e in mono}) != len(mono):
            raise ValidationError("duplicate monomials")
        for e in mono:
            exponent_pair(partition.params, e.i, e.j)
        self.monomials = mono

    @property
    def field(self):
        return self.partition.field

    @property
    def n(self) -> int:
        return self.partition.n

    @property
    def dimension(self) -> int:
        return len(self.monomials)

    @functools.cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(monomial_row(self.partition, e.i, e.j) for e in self.monomials)

    def __repr__(self) -> str:
        return f"EvaluationCode[{self.n}, {self.dimension}]"


def build_one_point_code(partition: PointPartition, pole_bound: int) -> EvaluationCode:
    """Code spanned by all box monomials of pole order at most pole_bound."""
    if pole_bound < 0:
        raise ValidationError("pole bound must be non-negative")
    params = partition.params
    monomials = [
        exponent_pair(params, i, j)
        for i in range(params.box_width)
        for j in range(params.box_height)
        if i * params.qs1 + j * params.u <= pole_bound
    ]
    return EvaluationCode(partition, monomials)


def build_decreasing_code(partition: PointPartition, exponents) -> EvaluationCode:
    """Code for an explicit monomial set, downward closed in both exponents.

    Accepts ExponentPair values or raw (i, j) tuples.  The empty set is
    allowed and yields the zero code.
    """
    params = partition.params
    pairs = []
    for e in exponents:
        i, j = (e.i, e.j) if isinstance(e, ExponentPair) else (int(e[0]), int(e[1]))
        pairs.append(exponent_pair(params, i, j))
    present = {(e.i, e.j) for e in pairs}
    if len(present) != len(pairs):
        raise ValidationError("duplicate monomials")
    for i, j in present:
        if i and (i - 1, j) not in present:
            raise ValidationError(f"set is not downward closed: missing ({i - 1}, {j})")
        if j and (i, j - 1) not in present:
            raise ValidationError(f"set is not downward closed: missing ({i}, {j - 1})")
    return EvaluationCode(partition, pairs)


def dual_basis(code: EvaluationCode) -> list[list[int]]:
    """Rows spanning the dual code (the null space of the generator rows)."""
    return linalg.nullspace(code.field, code.rows, code.n)


@dataclass(frozen=True)
class NestedCodePair:
    """A pair c2 inside c1 with positive co-dimension ell.

    extension_monomials are the monomials of c1 absent from c2, sorted by
    pole order; for one-point pairs lambda1 and lambda2 record the pole
    bounds that produced the pair.
    """

    c1: EvaluationCode
    c2: EvaluationCode
    ell: int
    extension_monomials: tuple[ExponentPair, ...]
    lambda1: int | None = None
    lambda2: int | None = None

    @property
    def field(self):
        return self.c1.field

    @property
    def n(self) -> int:
        return self.c1.n


def pair_from_codes(
    c1: EvaluationCode,
    c2: EvaluationCode,
    lambda1: int | None = None,
    lambda2: int | None = None,
) -> NestedCodePair:
    if c1.partition is not c2.partition:
        raise ValidationError("codes live on different point sets")
    inner = {(e.i, e.j) for e in c2.monomials}
    outer = {(e.i, e.j) for e in c1.monomials}
    if not inner <= outer:
        raise ValidationError("inner code is not contained in the outer code")
    extension = tuple(e for e in c1.monomials if (e.i, e.j) not in inner)
    ell = c1.dimension - c2.dimension
    if ell < 1:
        raise ValidationError("codes coincide; the pair has no secret space")
    return NestedCodePair(c1, c2, ell, extension, lambda1, lambda2)


def nested_pair(partition: PointPartition, lambda1: int, lambda2: int) -> NestedCodePair:
    """One-point pair with pole bounds lambda2 < lambda1."""
    if lambda2 >= lambda1:
        raise ValidationError(f"need lambda2 < lambda1, got {lambda2} >= {lambda1}")
    if lambda2 < 0:
        raise ValidationError("lambda2 must be non-negative")
    c1 = build_one_point_code(partition, lambda1)
    c2 = build_one_point_code(partition, lambda2)
    return pair_from_codes(c1, c2, lambda1, lambda2)


def _normalize_subset(n: int, subset) -> list[int]:
    idx = sorted(set(int(i) for i in subset))
    if idx and (idx[0] < 0 or idx[-1] >= n):
        raise ValidationError(f"participant indices must lie in [0, {n})")
    return idx


def leakage(pair: NestedCodePair, subset) -> int:
    """Number of secret symbols determined by the shares on the subset.

    Computed as the projection-rank difference of the two codes on the
    given coordinates.
    """
    idx = _normalize_subset(pair.n, subset)
    field = pair.field
    r1 = linalg.rank(field, linalg.columns(pair.c1.rows, idx))
    r2 = linalg.rank(field, linalg.columns(pair.c2.rows, idx))
    return r1 - r2


def uncertainty(pair: NestedCodePair, subset) -> int:
    """Number of secret symbols left undetermined by the shares on subset.

    Computed independently of leakage(): with V the words of c1 vanishing
    on the subset, this is dim V - dim(V intersect c2).  The number of
    secrets consistent with any realizable share assignment on the subset
    is the field order raised to this value, and it always complements
    leakage() to the full co-dimension.
    """
    idx = _normalize_subset(pair.n, subset)
    field = pair.field
    kernel = linalg.left_kernel(field, linalg.columns(pair.c1.rows, idx))
    v_rows = [linalg.row_combination(field, z, pair.c1.rows) for z in kernel]
    dim_v = len(v_rows)
    stacked = v_rows + [list(r) for r in pair.c2.rows]
    dim_meet = dim_v + pair.c2.dimension - linalg.rank(field, stacked)
    return dim_v - dim_meet
