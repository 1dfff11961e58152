"""Bounds on relative generalized Hamming weights of nested codes.

Two counting routes give support-size lower bounds for a subspace with
prescribed leading pole orders: a lattice count of box exponents
dominated by the leading exponents (plus a wrap-around column), and a
count inside the pole-order set via semigroup translates.  On these
curves the two counts agree and the resulting minimization bounds are
attained, so we also ship the closed staircase formula for monotone
chains, extraction of leading pole orders from explicit subspaces, and a
brute-force subspace oracle for small instances.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import linalg
from .codes import NestedCodePair, monomial_row
from .curve import CurveParams, PointPartition
from .errors import (
    BudgetExceededError,
    HypothesisError,
    InfeasibleError,
    ValidationError,
)
from .semigroup import ExponentPair, h_star, in_semigroup, iota

ORACLE_BUDGET = 200_000


@dataclass(frozen=True)
class GammaSet:
    """Sorted, duplicate-free pole orders from the box, with iota images."""

    params: CurveParams
    gammas: tuple[int, ...]
    pairs: tuple[ExponentPair, ...]

    def __len__(self) -> int:
        return len(self.gammas)


def gamma_set(params: CurveParams, gammas) -> GammaSet:
    values = tuple(sorted({int(g) for g in gammas}))
    if not values:
        raise ValidationError("at least one pole order is required")
    hs = h_star(params)
    for g in values:
        if g not in hs:
            raise ValidationError(f"{g} is not a box pole order")
    return GammaSet(params, values, tuple(iota(params, g) for g in values))


def footprint_count(gs: GammaSet) -> int:
    """Box exponents dominated by some iota image or the wrap-around column.

    The wrap-around dominator sits u columns to the right of the smallest
    leading column and only matters when it still lies inside the box.
    """
    params = gs.params
    dominators = [(e.i, e.j) for e in gs.pairs]
    a = min(i for i, _ in dominators)
    if a + params.u < params.box_width:
        dominators.append((a + params.u, 0))
    height = params.box_height
    count = 0
    for i in range(params.box_width):
        threshold = height
        for di, dj in dominators:
            if di <= i and dj < threshold:
                threshold = dj
        count += height - threshold
    return count


def semigroup_count(gs: GammaSet) -> int:
    """Box pole orders reachable as gamma plus a semigroup element.

    Must agree with footprint_count on every input; the test suite checks
    the identity rather than assuming it.
    """
    params = gs.params
    return sum(
        1
        for lam in h_star(params).members
        if any(in_semigroup(params, lam - g) for g in gs.gammas)
    )


def dual_footprint_count(gs: GammaSet) -> int:
    """Box exponents below some iota image or the wrap-around dominator.

    The wrap-around dominator sits u columns to the left of the largest
    leading column, at full height, and only matters when that column
    index is non-negative.
    """
    params = gs.params
    dominators = [(e.i, e.j) for e in gs.pairs]
    a = max(i for i, _ in dominators)
    if a >= params.u:
        dominators.append((a - params.u, params.box_height - 1))
    count = 0
    for i in range(params.box_width):
        best = -1
        for di, dj in dominators:
            if di >= i and dj > best:
                best = dj
        count += best + 1
    return count


def dual_semigroup_count(gs: GammaSet) -> int:
    """Semigroup elements expressible as gamma minus a semigroup element."""
    params = gs.params
    top = gs.gammas[-1]
    return sum(
        1
        for mu in range(top + 1)
        if in_semigroup(params, mu)
        and any(in_semigroup(params, g - mu) for g in gs.gammas)
    )


@dataclass(frozen=True)
class BoundReport:
    """Outcome of a weight-bound minimization with its audit table."""

    m: int
    value: int
    minimizing: GammaSet
    per_subset: tuple[tuple[tuple[int, ...], int], ...]
    lambda1: int
    lambda2: int
    pool: tuple[int, ...]


def default_pool(params: CurveParams, lambda1: int, lambda2: int) -> tuple[int, ...]:
    """Box pole orders strictly above lambda2 and at most lambda1."""
    if lambda2 >= lambda1:
        raise ValidationError(f"need lambda2 < lambda1, got {lambda2} >= {lambda1}")
    return tuple(g for g in h_star(params).members if lambda2 < g <= lambda1)


def _resolve_pool(params, lambda1, lambda2, pool) -> tuple[int, ...]:
    if pool is None:
        return default_pool(params, lambda1, lambda2)
    values = tuple(sorted({int(g) for g in pool}))
    allowed = set(default_pool(params, lambda1, lambda2))
    for g in values:
        if g not in allowed:
            raise ValidationError(
                f"pool member {g} is not a box pole order in ({lambda2}, {lambda1}]"
            )
    return values


def _minimize(params, m, lambda1, lambda2, pool, count_fn) -> BoundReport:
    pool = _resolve_pool(params, lambda1, lambda2, pool)
    if m < 1:
        raise ValidationError("m must be positive")
    if m > len(pool):
        raise InfeasibleError(f"m={m} exceeds the candidate pool of size {len(pool)}")
    best_gs = None
    best = None
    table = []
    for combo in itertools.combinations(pool, m):
        gs = gamma_set(params, combo)
        value = count_fn(gs)
        table.append((combo, value))
        if best is None or value < best:
            best, best_gs = value, gs
    return BoundReport(
        m=m,
        value=best,
        minimizing=best_gs,
        per_subset=tuple(table),
        lambda1=lambda1,
        lambda2=lambda2,
        pool=pool,
    )


def rghw_primary_bound(
    params: CurveParams,
    m: int,
    lambda1: int,
    lambda2: int,
    pool=None,
) -> BoundReport:
    """Minimum footprint count over m-subsets of the candidate pole orders.

    This is the m-th relative weight of the one-point pair (attained on
    these curves).  Ties go to the lexicographically smallest subset.
    """
    return _minimize(params, m, lambda1, lambda2, pool, footprint_count)


def rghw_dual_bound(
    params: CurveParams,
    m: int,
    lambda1: int,
    lambda2: int,
    pool=None,
) -> BoundReport:
    """Dual-side analogue of rghw_primary_bound."""
    return _minimize(params, m, lambda1, lambda2, pool, dual_footprint_count)


def _chain_pairs(pairs) -> list[ExponentPair]:
    return sorted(pairs, key=lambda e: e.i)


@dataclass(frozen=True)
class ChainReport:
    """Diagnostics for the monotone-staircase hypotheses of a gamma chain."""

    gammas: tuple[int, ...]
    pairs: tuple[ExponentPair, ...]
    gap_ok: bool
    a_increasing: bool
    b_decreasing: bool
    a_span_ok: bool
    a1_premise: bool
    a1_bound_ok: bool

    @property
    def chain_ok(self) -> bool:
        return self.a_increasing and self.b_decreasing and self.a_span_ok


def chain_conditions(params: CurveParams, gammas) -> ChainReport:
    """Report whether a set of pole orders forms a monotone staircase chain.

    gap_ok records the sufficient spread condition (largest minus smallest
    below min(u, q^(s-1))); the monotonicity clauses are evaluated
    directly on the iota images, sorted by first exponent.  The bound on
    the smallest first exponent is only asserted when the smallest gamma
    is low enough for it to be guaranteed.
    """
    gs = gamma_set(params, gammas)
    w = len(gs)
    pairs = _chain_pairs(gs.pairs)
    a = [e.i for e in pairs]
    b = [e.j for e in pairs]
    gap_ok = gs.gammas[-1] - gs.gammas[0] < min(params.u, params.qs1)
    a_inc = all(a[k] < a[k + 1] for k in range(w - 1))
    b_dec = all(b[k] > b[k + 1] for k in range(w - 1))
    a_span_ok = a[-1] - a[0] < params.u
    premise = gs.gammas[0] <= (params.u * (params.q - 2) + w) * params.qs1
    bound_ok = a[0] <= params.u * (params.q - 2) + 1
    return ChainReport(
        gammas=gs.gammas,
        pairs=tuple(pairs),
        gap_ok=gap_ok,
        a_increasing=a_inc,
        b_decreasing=b_dec,
        a_span_ok=a_span_ok,
        a1_premise=premise,
        a1_bound_ok=bound_ok,
    )


def staircase_closed_form(gs: GammaSet) -> int:
    """Closed-form footprint count for a monotone staircase chain.

    Requires strictly increasing first exponents, strictly decreasing
    second exponents, first-exponent span below u, and the smallest first
    exponent at most u(q-2)+1.  Under these hypotheses the value equals
    footprint_count(gs).
    """
    params = gs.params
    pairs = _chain_pairs(gs.pairs)
    a = [e.i for e in pairs]
    b = [e.j for e in pairs]
    w = len(pairs)
    if any(a[k] >= a[k + 1] for k in range(w - 1)):
        raise HypothesisError("first exponents are not strictly increasing")
    if any(b[k] <= b[k + 1] for k in range(w - 1)):
        raise HypothesisError("second exponents are not strictly decreasing")
    if a[-1] - a[0] >= params.u:
        raise HypothesisError("first-exponent span must stay below u")
    if a[0] > params.u * (params.q - 2) + 1:
        raise HypothesisError("smallest first exponent exceeds u(q-2)+1")
    inner = a[0] * params.qs1 + b[-1] * params.u
    inner += sum((a[k + 1] - a[k]) * (b[k] - b[-1]) for k in range(w - 1))
    return params.n - inner


# -- leading pole orders of explicit subspaces ---------------------------


def _full_basis(partition: PointPartition) -> list[tuple[int, ...]]:
    cached = getattr(partition, "_full_basis", None)
    if cached is None:
        params = partition.params
        pairs = sorted(
            (
                ExponentPair(i, j, i * params.qs1 + j * params.u)
                for i in range(params.box_width)
                for j in range(params.box_height)
            ),
            key=lambda e: e.pole_order,
        )
        cached = [monomial_row(partition, e.i, e.j) for e in pairs]
        partition._full_basis = cached
    return cached


def _basis_inverse(partition: PointPartition) -> list[list[int]]:
    cached = getattr(partition, "_basis_inverse", None)
    if cached is None:
        cached = linalg.matrix_inverse(partition.field, _full_basis(partition))
        partition._basis_inverse = cached
    return cached


def _reduce_pivots(field, rows, pick_last: bool) -> list[int]:
    """Eliminate rows to distinct pivot positions and return them sorted.

    The pivot of a row is its last nonzero index when pick_last is set,
    otherwise its first.  Raises when the rows are dependent.
    """

    def pivot_of(row):
        idx = [k for k, v in enumerate(row) if v]
        if not idx:
            return None
        return idx[-1] if pick_last else idx[0]

    taken: dict[int, list[int]] = {}
    for row in rows:
        row = list(row)
        pos = pivot_of(row)
        while pos is not None and pos in taken:
            other = taken[pos]
            scale = field.div(row[pos], other[pos])
            row = [field.sub(v, field.mul(scale, o)) for v, o in zip(row, other)]
            pos = pivot_of(row)
        if pos is None:
            raise ValidationError("rows are linearly dependent")
        taken[pos] = row
    return sorted(taken)


def rho_of_subspace(partition: PointPartition, rows) -> GammaSet:
    """Leading pole orders of the subspace spanned by the given words.

    Words are rewritten in the full monomial basis (ascending pole order)
    and eliminated so that every row has a distinct highest coordinate;
    those coordinates name the pole orders.  The result is an invariant
    of the span, not of the presented basis.
    """
    field = partition.field
    n = partition.n
    for row in rows:
        if len(row) != n:
            raise ValidationError("word length disagrees with the point count")
    inverse = _basis_inverse(partition)
    coords = [linalg.vec_matrix(field, row, inverse) for row in rows]
    leads = _reduce_pivots(field, coords, pick_last=True)
    members = h_star(partition.params).members
    return gamma_set(partition.params, [members[k] for k in leads])


def kappa_of_subspace(partition: PointPartition, rows) -> GammaSet:
    """Dual-filtration jump orders of the subspace spanned by the words.

    A word sits in the dual of the code with pole bound eta - 1 but not
    of the one with bound eta exactly when its first nonzero inner
    product against the pole-ordered monomial basis occurs at eta.
    """
    field = partition.field
    basis = _full_basis(partition)
    table = [[linalg.dot(field, row, b) for b in basis] for row in rows]
    leads = _reduce_pivots(field, table, pick_last=False)
    members = h_star(partition.params).members
    return gamma_set(partition.params, [members[k] for k in leads])


# -- brute-force oracle ---------------------------------------------------


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of an n-dimensional space."""
    if k < 0 or k > n:
        return 0
    out = 1
    for i in range(1, k + 1):
        out = out * (q ** (n - k + i) - 1) // (q**i - 1)
    return out


def _echelon_coefficients(order: int, k: int, t: int):
    """All reduced-echelon t x k coefficient matrices, one per subspace."""
    for pivots in itertools.combinations(range(k), t):
        pivot_set = set(pivots)
        free = [
            (r, c)
            for r in range(t)
            for c in range(pivots[r] + 1, k)
            if c not in pivot_set
        ]
        for values in itertools.product(range(order), repeat=len(free)):
            matrix = [[0] * k for _ in range(t)]
            for r, pc in enumerate(pivots):
                matrix[r][pc] = 1
            for (r, c), v in zip(free, values):
                matrix[r][c] = v
            yield matrix


def brute_force_rghw(pair: NestedCodePair, t: int, max_subspaces: int = ORACLE_BUDGET) -> int:
    """Exact t-th relative weight by exhaustive subspace enumeration.

    Visits every t-dimensional subspace of the outer code once through
    reduced-echelon coefficient matrices, keeps those meeting the inner
    code trivially, and minimizes the support size.  Intended for small
    instances; raises when the subspace count exceeds the budget.
    """
    field = pair.field
    k1, k2 = pair.c1.dimension, pair.c2.dimension
    if t < 1:
        raise ValidationError("t must be positive")
    if t > k1 - k2:
        raise InfeasibleError(
            f"no {t}-dimensional subspace can avoid a subcode of co-dimension {k1 - k2}"
        )
    total = gaussian_binomial(k1, t, field.order)
    if total > max_subspaces:
        raise BudgetExceededError(
            f"{total} subspaces exceed the budget of {max_subspaces}"
        )
    g1 = pair.c1.rows
    g2 = [list(r) for r in pair.c2.rows]
    best = None
    for coeffs in _echelon_coefficients(field.order, k1, t):
        words = [linalg.row_combination(field, c, g1) for c in coeffs]
        if linalg.rank(field, words + g2) != t + k2:
            continue
        support = sum(1 for col in zip(*words) if any(col))
        if best is None or support < best:
            best = support
    if best is None:
        raise AssertionError("a feasible subspace always exists when t <= ell")
    return best
