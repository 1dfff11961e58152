"""Structured maximum non-qualifying participant sets.

For a monotone chain of pole orders attaining the primary weight bound,
products of linear factors realize a subspace whose support complement
is as large as any coalition can be while still missing the
corresponding amount of the secret.  The common-root sets decompose into
whole departments, one horizontal slab of a department, optionally the
zero-column department, and a staircase inside a chosen department;
enumerating the free choices yields many interchangeable coalition
patterns with the same guaranteed blindness.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .codes import uncertainty
from .curve import PointPartition
from .errors import HypothesisError, InfeasibleError, ValidationError
from .ramp import Scheme
from .semigroup import ExponentPair, exponent_pair
from .weights import (
    GammaSet,
    chain_conditions,
    footprint_count,
    gamma_set,
    rghw_primary_bound,
    _resolve_pool,
)


@dataclass(frozen=True)
class RootChoice:
    """Free choices behind a common-root construction.

    alphas are the x-values shared as roots by every function, drawn from
    the union of the x-value sets of departments other than i_prime
    (including the zero column).  gamma1_order and gamma2_order enumerate
    the x-values and y-values of department i_prime; only their prefixes
    (and, in the overflow regime, the tail of gamma1_order) matter.
    """

    i_prime: int
    alphas: tuple[int, ...]
    gamma1_order: tuple[int, ...]
    gamma2_order: tuple[int, ...]


@dataclass(frozen=True)
class FunctionSpec:
    """A product of linear factors: prod(x - r) * prod(y - r')."""

    x_roots: tuple[int, ...]
    y_roots: tuple[int, ...]
    exponents: ExponentPair


def _sorted_chain(partition: PointPartition, gammas: GammaSet):
    report = chain_conditions(partition.params, gammas.gammas)
    if not report.a_increasing:
        raise HypothesisError("first exponents are not strictly increasing")
    if not report.b_decreasing:
        raise HypothesisError("second exponents are not strictly decreasing")
    if not report.a_span_ok:
        raise HypothesisError("first-exponent span must stay below u")
    return report.pairs


def _outside_values(partition: PointPartition, i_prime: int) -> set[int]:
    values = {0}
    for d in range(1, partition.params.q):
        if d != i_prime:
            values.update(partition.gamma1[d])
    return values


def canonical_choice(partition: PointPartition, gammas: GammaSet, i_prime: int = 1) -> RootChoice:
    """Deterministic structured choice: whole departments first, then a
    slab from the next department, then the zero column only if forced."""
    params = partition.params
    q, u = params.q, params.u
    if not 1 <= i_prime <= q - 1:
        raise ValidationError(f"i_prime must lie in [1, {q - 1}]")
    pairs = _sorted_chain(partition, gammas)
    a1 = pairs[0].i
    avail = u * (q - 2) + 1
    need = min(a1, avail)
    others = [d for d in range(1, q) if d != i_prime]
    alphas: list[int] = []
    remaining = need
    used = []
    for d in others:
        if remaining >= u:
            alphas.extend(partition.gamma1[d])
            used.append(d)
            remaining -= u
    if remaining:
        partial = [d for d in others if d not in used]
        if partial:
            alphas.extend(partition.gamma1[partial[0]][:remaining])
        else:
            alphas.append(0)
    return RootChoice(
        i_prime=i_prime,
        alphas=tuple(alphas),
        gamma1_order=partition.gamma1[i_prime],
        gamma2_order=partition.gamma2[i_prime],
    )


def construct_functions(
    partition: PointPartition, gammas: GammaSet, choice: RootChoice
) -> tuple[FunctionSpec, ...]:
    """The root-product functions realizing the given pole orders.

    Every function shares the alphas as x-roots; function j adds the
    first a_j - a_1 values of gamma1_order and takes the first b_j values
    of gamma2_order as y-roots.  When a_1 exceeds the number of x-values
    outside department i_prime, the shortfall is covered by the tail of
    gamma1_order, which keeps the root counts and hence the pole orders
    intact.
    """
    params = partition.params
    q, u = params.q, params.u
    pairs = _sorted_chain(partition, gammas)
    a1 = pairs[0].i
    avail = u * (q - 2) + 1
    need = min(a1, avail)
    overflow = a1 - need

    if not 1 <= choice.i_prime <= q - 1:
        raise ValidationError(f"i_prime must lie in [1, {q - 1}]")
    allowed = _outside_values(partition, choice.i_prime)
    if len(choice.alphas) != need:
        raise ValidationError(f"choice provides {len(choice.alphas)} alphas, need {need}")
    if len(set(choice.alphas)) != len(choice.alphas):
        raise ValidationError("alphas must be distinct")
    if not set(choice.alphas) <= allowed:
        raise ValidationError("alphas must avoid department i_prime")
    if sorted(choice.gamma1_order) != sorted(partition.gamma1[choice.i_prime]):
        raise ValidationError("gamma1_order must enumerate the department x-values")
    if sorted(choice.gamma2_order) != sorted(partition.gamma2[choice.i_prime]):
        raise ValidationError("gamma2_order must enumerate the department y-values")

    head_max = pairs[-1].i - a1
    if head_max + overflow > u:
        raise AssertionError("root demand cannot exceed the department width")
    tail = choice.gamma1_order[u - overflow :] if overflow else ()
    shared = tuple(choice.alphas) + tuple(tail)
    functions = []
    for e in pairs:
        head = choice.gamma1_order[: e.i - a1]
        functions.append(
            FunctionSpec(
                x_roots=shared + tuple(head),
                y_roots=tuple(choice.gamma2_order[: e.j]),
                exponents=exponent_pair(params, e.i, e.j),
            )
        )
    return tuple(functions)


def evaluate_function(partition: PointPartition, fn: FunctionSpec) -> tuple[int, ...]:
    """The word (fn at P_0, ..., fn at P_{n-1})."""
    field = partition.field
    out = []
    for x, y in partition.points:
        v = 1
        for r in fn.x_roots:
            v = field.mul(v, field.sub(x, r))
        for r in fn.y_roots:
            v = field.mul(v, field.sub(y, r))
        out.append(v)
    return tuple(out)


def common_zero_set(partition: PointPartition, functions) -> tuple[int, ...]:
    """Indices of points at which every function vanishes."""
    zero_sets = [(set(f.x_roots), set(f.y_roots)) for f in functions]
    out = []
    for idx, (x, y) in enumerate(partition.points):
        if all(x in xs or y in ys for xs, ys in zero_sets):
            out.append(idx)
    return tuple(out)


@dataclass(frozen=True)
class StructureRecord:
    """Decomposition of a common-root set into its department pieces."""

    i_prime: int
    full_departments: tuple[int, ...]
    slab_department: int | None
    slab_values: tuple[int, ...]
    a0_included: bool
    staircase: tuple[int, ...]


@dataclass(frozen=True)
class NonQualifyingSet:
    """A verified maximum non-level-qualifying participant set."""

    indices: tuple[int, ...]
    level: int
    w: int
    gammas: tuple[int, ...]
    structure: StructureRecord | None


def decompose_structure(
    partition: PointPartition, indices, choice: RootChoice, gammas: GammaSet
) -> StructureRecord:
    """Split a constructed common-root set into departments, slab,
    zero column and staircase, verifying the pieces tile it exactly."""
    params = partition.params
    q, u = params.q, params.u
    _sorted_chain(partition, gammas)
    index_set = set(int(i) for i in indices)
    alpha_set = set(choice.alphas)

    fulls = []
    slab_department = None
    slab_values: tuple[int, ...] = ()
    for d in range(1, q):
        if d == choice.i_prime:
            continue
        hit = alpha_set.intersection(partition.gamma1[d])
        if not hit:
            continue
        if len(hit) == u:
            fulls.append(d)
        elif slab_department is None:
            slab_department = d
            slab_values = tuple(sorted(hit))
        else:
            raise InfeasibleError("set is not of the constructed form: two partial departments")

    a0_included = 0 in alpha_set
    staircase = tuple(
        i for i in sorted(index_set) if partition.department_of(i) == choice.i_prime
    )

    covered = set(staircase)
    if a0_included:
        covered.update(partition.departments[0])
    for d in fulls:
        covered.update(partition.departments[d])
    if slab_department is not None:
        covered.update(
            i
            for i in partition.departments[slab_department]
            if partition.points[i][0] in slab_values
        )
    if covered != index_set:
        raise InfeasibleError("set is not the common-root set of the given choice")

    expected = (
        len(fulls) * u * params.qs1
        + len(slab_values) * params.qs1
        + (params.qs1 if a0_included else 0)
        + len(staircase)
    )
    if expected != len(index_set):
        raise AssertionError("decomposition pieces must tile the set")
    return StructureRecord(
        i_prime=choice.i_prime,
        full_departments=tuple(fulls),
        slab_department=slab_department,
        slab_values=slab_values,
        a0_included=a0_included,
        staircase=staircase,
    )


def _resolve_scheme_pool(scheme: Scheme, pool):
    pair = scheme.pair
    if pair.lambda1 is None:
        raise ValidationError("qualifying sets require a one-point pair")
    params = scheme.partition.params
    if pool is None:
        pool = scheme.gamma_pool
    return _resolve_pool(params, pair.lambda1, pair.lambda2, pool)


def build_max_nonqualifying(
    scheme: Scheme,
    w: int,
    gammas=None,
    choice: RootChoice | None = None,
    pool=None,
) -> NonQualifyingSet:
    """Common-root set for a minimizing chain, verified against the codes.

    The pole orders must attain the m = w primary bound over the pool;
    the returned set has exactly the complementary size and leaves at
    least w secret symbols undetermined, both checked by independent
    linear algebra.
    """
    partition = scheme.partition
    params = partition.params
    pool = _resolve_scheme_pool(scheme, pool)
    bound = rghw_primary_bound(params, w, scheme.pair.lambda1, scheme.pair.lambda2, pool)
    if gammas is None:
        gammas = bound.minimizing
    elif not isinstance(gammas, GammaSet):
        gammas = gamma_set(params, gammas)
    if len(gammas) != w:
        raise ValidationError(f"expected {w} pole orders, got {len(gammas)}")
    if not set(gammas.gammas) <= set(pool):
        raise ValidationError("pole orders must come from the candidate pool")
    if footprint_count(gammas) != bound.value:
        raise InfeasibleError(
            f"pole orders {gammas.gammas} do not attain the minimum {bound.value}"
        )
    if choice is None:
        choice = canonical_choice(partition, gammas)
    functions = construct_functions(partition, gammas, choice)
    indices = common_zero_set(partition, functions)
    if len(indices) != scheme.n - bound.value:
        raise AssertionError("common-root count must complement the weight bound")
    if uncertainty(scheme.pair, indices) < w:
        raise AssertionError("constructed set leaks more than it may")
    try:
        structure = decompose_structure(partition, indices, choice, gammas)
    except InfeasibleError:
        structure = None
    return NonQualifyingSet(
        indices=indices,
        level=len(pool) - w + 1,
        w=w,
        gammas=gammas.gammas,
        structure=structure,
    )


def _subset_chains(values, sizes):
    """Nested value sets of the given ascending sizes, largest chosen first."""
    if not sizes:
        yield ()
        return
    *init, last = sizes
    for top in itertools.combinations(values, last):
        for inner in _subset_chains(top, tuple(init)):
            yield inner + (top,)


def _order_realizing(values, chain, tail=()):
    """An enumeration whose prefixes realize the chain and whose tail is
    the given set; chain levels come first, new elements sorted."""
    order: list[int] = []
    seen = set(tail)
    for level in chain:
        for v in sorted(level):
            if v not in seen:
                seen.add(v)
                order.append(v)
    for v in sorted(values):
        if v not in seen:
            seen.add(v)
            order.append(v)
    order.extend(sorted(tail))
    return tuple(order)


def _alpha_patterns(partition: PointPartition, i_prime: int, need: int):
    """Structured alpha selections: (use_zero, full departments, slab)."""
    params = partition.params
    q, u = params.q, params.u
    others = [d for d in range(1, q) if d != i_prime]
    avail = u * (q - 2) + 1
    if need >= avail:
        values = [0]
        for d in others:
            values.extend(partition.gamma1[d])
        yield tuple(values)
        return
    for use_zero in (False, True):
        rest = need - (1 if use_zero else 0)
        if rest < 0:
            continue
        fulls_count, slab_size = divmod(rest, u)
        if fulls_count > len(others):
            continue
        for fulls in itertools.combinations(others, fulls_count):
            base = ([0] if use_zero else []) + [
                v for d in fulls for v in partition.gamma1[d]
            ]
            if slab_size == 0:
                yield tuple(base)
                continue
            for d2 in (d for d in others if d not in fulls):
                for slab in itertools.combinations(partition.gamma1[d2], slab_size):
                    yield tuple(base) + slab


def enumerate_variants(scheme: Scheme, gammas, limit: int, pool=None) -> list[NonQualifyingSet]:
    """Distinct verified non-qualifying sets for the given pole orders.

    Varies the special department, the structured alpha selections, and
    the x/y enumerations (as nested subset chains, each distinct shape
    visited once), verifying every emitted set.  Stops after limit sets.
    """
    if limit < 1:
        raise ValidationError("limit must be positive")
    partition = scheme.partition
    params = partition.params
    if not isinstance(gammas, GammaSet):
        gammas = gamma_set(params, gammas)
    w = len(gammas)
    pairs = _sorted_chain(partition, gammas)
    a1 = pairs[0].i
    avail = params.u * (params.q - 2) + 1
    need = min(a1, avail)
    overflow = a1 - need
    head_sizes = tuple(sorted({e.i - a1 for e in pairs} - {0}))
    y_sizes = tuple(sorted({e.j for e in pairs} - {0}))

    seen: set[tuple[int, ...]] = set()
    out: list[NonQualifyingSet] = []
    for i_prime in range(1, params.q):
        g1 = partition.gamma1[i_prime]
        g2 = partition.gamma2[i_prime]
        for alphas in _alpha_patterns(partition, i_prime, need):
            for x_chain in _subset_chains(g1, head_sizes):
                head_top = set(x_chain[-1]) if x_chain else set()
                if overflow:
                    tail_pool = [v for v in g1 if v not in head_top]
                    tails = itertools.combinations(tail_pool, overflow)
                else:
                    tails = [()]
                for tail in tails:
                    g1_order = _order_realizing(g1, x_chain, tail)
                    for y_chain in _subset_chains(g2, y_sizes):
                        g2_order = _order_realizing(g2, y_chain)
                        choice = RootChoice(i_prime, alphas, g1_order, g2_order)
                        candidate = build_max_nonqualifying(
                            scheme, w, gammas, choice, pool
                        )
                        if candidate.indices in seen:
                            continue
                        seen.add(candidate.indices)
                        out.append(candidate)
                        if len(out) >= limit:
                            return out
    return out
