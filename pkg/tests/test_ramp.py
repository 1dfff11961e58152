"""Dealing, thresholds, coalition analysis, and reconstruction."""

import random
from itertools import combinations, product

import pytest

from helpers import all_subsets, partition
from normtrace_ramp import (
    InconsistentSharesError,
    ValidationError,
    access_numbers,
    coalition_report,
    deal,
    h_star,
    iota,
    leakage,
    make_scheme,
    reconstruct,
)
from normtrace_ramp.codes import monomial_row


def small_scheme(lam1=2, lam2=0):
    return make_scheme(partition(2, 2, 3), lam1, lam2)


def test_deal_zero_and_monomial_fixture():
    scheme = small_scheme()
    zero = deal(scheme, [0], [0])
    assert zero.shares == (0,) * 8
    sv = deal(scheme, [1], [0])
    assert sv.shares == monomial_row(scheme.partition, 1, 0)
    # the shares vanish exactly on the zero column
    dept0 = set(scheme.partition.departments[0])
    for i, share in enumerate(sv.shares):
        assert (share == 0) == (i in dept0)


def test_deal_is_linear_and_injective():
    scheme = small_scheme(5, 2)  # ell = 2, k2 = 3
    field = scheme.field
    rng = random.Random(40)
    for _ in range(15):
        s1 = [rng.randrange(4) for _ in range(scheme.ell)]
        s2 = [rng.randrange(4) for _ in range(scheme.ell)]
        r1 = [rng.randrange(4) for _ in range(scheme.k2)]
        r2 = [rng.randrange(4) for _ in range(scheme.k2)]
        left = deal(scheme, s1, r1).shares
        right = deal(scheme, s2, r2).shares
        both = deal(
            scheme,
            [field.add(a, b) for a, b in zip(s1, s2)],
            [field.add(a, b) for a, b in zip(r1, r2)],
        ).shares
        assert both == tuple(field.add(a, b) for a, b in zip(left, right))
    seen = {}
    for secret in product(range(4), repeat=scheme.ell):
        for rand in product(range(4), repeat=scheme.k2):
            shares = deal(scheme, secret, rand).shares
            assert shares not in seen
            seen[shares] = (secret, rand)


def test_deal_validation_and_seeding():
    scheme = small_scheme()
    with pytest.raises(ValidationError):
        deal(scheme, [1, 2], [0])
    with pytest.raises(ValidationError):
        deal(scheme, [5], [0])
    a = deal(scheme, [1], seed=9)
    b = deal(scheme, [1], seed=9)
    assert a.shares == b.shares


def test_access_numbers_small_fixture():
    rep = access_numbers(small_scheme())
    assert rep.ell == rep.ell_full == 1
    assert rep.t == (1,)
    assert rep.r == (3,)
    assert rep.pool == (2,)


def test_access_numbers_437_pool_override():
    scheme = make_scheme(partition(4, 3, 7), 92, 87, gamma_pool=(90, 91, 92))
    rep = access_numbers(scheme)
    assert rep.ell == 3
    assert rep.ell_full == 4
    assert rep.m_primary == (260, 274, 295)
    assert rep.m_dual == (14, 33, 40)
    assert rep.t == (13, 32, 39)
    assert rep.r == (58, 79, 93)
    assert rep.swapped_t == (259, 273, 294)
    assert rep.swapped_r == (313, 320, 339)
    # audit provenance: the minimizing sets behind the tables
    assert rep.primary_reports[1].minimizing.gammas == (90, 92)
    assert rep.dual_reports[0].minimizing.gammas == (91,)


def test_access_numbers_without_pool_sees_the_larger_secret_space():
    scheme = make_scheme(partition(4, 3, 7), 92, 87)
    rep = access_numbers(scheme)
    assert rep.ell == rep.ell_full == 4
    assert rep.pool == (88, 90, 91, 92)
    assert rep.m_primary[2] == 286


def _single_symbol_scheme(q, s, u, tau):
    params_part = partition(q, s, u)
    params = params_part.params
    lam1 = tau * u * params.qs1
    lam2 = h_star(params).predecessor(lam1)
    return make_scheme(params_part, lam1, lam2)


def test_closed_form_thresholds_spot():
    scheme = _single_symbol_scheme(3, 2, 2, 1)
    assert scheme.pair.lambda1 == 6 and scheme.pair.lambda2 == 5
    rep = access_numbers(scheme)
    assert rep.ell == 1
    assert rep.t == (4,)
    assert rep.r == (7,)
    assert rep.r[0] - rep.t[0] == 3


def test_threshold_ordering_invariants():
    for scheme in (
        small_scheme(),
        small_scheme(4, 0),
        make_scheme(partition(3, 2, 2), 8, 4),
        make_scheme(partition(4, 3, 7), 92, 87, gamma_pool=(90, 91, 92)),
    ):
        rep = access_numbers(scheme)
        assert all(a <= b for a, b in zip(rep.t, rep.t[1:]))
        assert all(a <= b for a, b in zip(rep.r, rep.r[1:]))
        assert all(t < r for t, r in zip(rep.t, rep.r))


def test_threshold_semantics_exhaustive():
    # t_m: every coalition of that size learns under m symbols, and some
    # coalition one larger reaches m; r_m dually.
    for lam2, lam1 in [(0, 2), (0, 4)]:
        scheme = small_scheme(lam1, lam2)
        rep = access_numbers(scheme)
        by_size = {}
        for subset in all_subsets(8):
            by_size.setdefault(len(subset), []).append(leakage(scheme.pair, subset))
        for m in range(1, rep.ell + 1):
            t, r = rep.t[m - 1], rep.r[m - 1]
            assert all(v <= m - 1 for v in by_size[t])
            assert any(v >= m for v in by_size[t + 1])
            assert all(v >= m for v in by_size[r])
            assert any(v <= m - 1 for v in by_size[r - 1])


def test_coalition_report_values_match_the_secret():
    scheme = small_scheme(4, 0)  # ell = 3
    field = scheme.field
    rng = random.Random(41)
    for _ in range(10):
        secret = [rng.randrange(4) for _ in range(scheme.ell)]
        sv = deal(scheme, secret, seed=rng.randrange(999))
        subset = rng.sample(range(8), rng.randrange(0, 9))
        rep = coalition_report(scheme, subset, sv)
        assert rep.leakage + rep.uncertainty == scheme.ell
        assert len(rep.functionals) == rep.leakage
        for phi, value in zip(rep.functionals, rep.values):
            expected = 0
            for c, s in zip(phi, secret):
                expected = field.add(expected, field.mul(c, s))
            assert expected == value


def test_leakage_depends_only_on_the_subset():
    scheme = small_scheme(4, 0)
    rng = random.Random(42)
    for _ in range(5):
        subset = rng.sample(range(8), rng.randrange(0, 9))
        reports = set()
        for _ in range(6):
            sv = deal(
                scheme,
                [rng.randrange(4) for _ in range(scheme.ell)],
                seed=rng.randrange(999),
            )
            rep = coalition_report(scheme, subset, sv)
            reports.add((rep.leakage, rep.uncertainty, rep.functionals))
        assert len(reports) == 1


def test_reconstruct_round_trip_and_partials():
    scheme = small_scheme()
    rep = access_numbers(scheme)
    r_full = rep.r[-1]
    for secret in product(range(4), repeat=scheme.ell):
        for rand in product(range(4), repeat=scheme.k2):
            sv = deal(scheme, secret, rand)
            for subset in combinations(range(8), r_full):
                values = [sv.shares[i] for i in subset]
                result = reconstruct(scheme, subset, values)
                assert result.complete
                assert result.secret == tuple(secret)
    empty = reconstruct(scheme, [], [])
    assert not empty.complete
    assert empty.consistent_secret_count == 4**scheme.ell


def test_reconstruct_flags_corruption():
    scheme = small_scheme()
    sv = deal(scheme, [2], seed=3)
    values = list(sv.shares)
    values[0] = scheme.field.add(values[0], 1)
    try:
        result = reconstruct(scheme, range(8), values)
        # a consistent but different codeword must decode to another secret
        assert result.secret != (2,)
    except InconsistentSharesError:
        pass


def test_reconstruct_rejects_unexplainable_shares():
    scheme = small_scheme()
    # ev(1) and ev(x) agree on the first two points, so (0, 1) is impossible
    with pytest.raises(InconsistentSharesError):
        reconstruct(scheme, [0, 1], [0, 1])
