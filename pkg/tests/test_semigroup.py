"""Semigroup membership, the exponent box bijection, and gap counting."""

import pytest

from helpers import DESK_PARAMS
from normtrace_ramp import (
    ValidationError,
    exponent_pair,
    gap_count,
    h_star,
    in_semigroup,
    iota,
    leq_partial,
    validate_params,
)


def _brute_membership(params, value):
    # independent oracle: exhaustive search over both coefficients
    u, qs1 = params.u, params.qs1
    return any(
        a * u + b * qs1 == value
        for a in range(value // u + 1)
        for b in range(value // qs1 + 1)
    )


def test_membership_fixtures():
    p437 = validate_params(4, 3, 7)
    assert in_semigroup(p437, 0)
    assert in_semigroup(p437, 88)  # 8*7 + 2*16
    assert not in_semigroup(p437, 89)
    assert not in_semigroup(p437, -1)


@pytest.mark.parametrize("q,s,u", DESK_PARAMS)
def test_membership_matches_brute_force(q, s, u):
    params = validate_params(q, s, u)
    for value in range(120):
        assert in_semigroup(params, value) == _brute_membership(params, value)


def test_iota_fixtures():
    p437 = validate_params(4, 3, 7)
    assert (iota(p437, 90).i, iota(p437, 90).j) == (3, 6)
    assert (iota(p437, 91).i, iota(p437, 91).j) == (0, 13)
    assert (iota(p437, 92).i, iota(p437, 92).j) == (4, 4)
    assert (iota(p437, 88).i, iota(p437, 88).j) == (2, 8)
    assert (iota(p437, 0).i, iota(p437, 0).j) == (0, 0)
    p425 = validate_params(4, 2, 5)
    assert (iota(p425, 66).i, iota(p425, 66).j) == (14, 2)
    assert (iota(p425, 67).i, iota(p425, 67).j) == (13, 3)
    with pytest.raises(ValidationError):
        iota(p437, 89)


def test_h_star_small_fixture():
    params = validate_params(2, 2, 3)
    # direct box enumeration: 2i + 3j for i < 4, j < 2
    assert h_star(params).members == (0, 2, 3, 4, 5, 6, 7, 9)


def test_h_star_437():
    params = validate_params(4, 3, 7)
    hs = h_star(params)
    assert len(hs) == 352
    for v in (87, 88, 90, 91, 92):
        assert v in hs
    assert 89 not in hs
    assert hs.predecessor(90) == 88
    assert hs.predecessor(88) == 87


@pytest.mark.parametrize("q,s,u", DESK_PARAMS)
def test_box_bijection_round_trips(q, s, u):
    params = validate_params(q, s, u)
    hs = h_star(params)
    seen = set()
    for i in range(params.box_width):
        for j in range(params.box_height):
            e = exponent_pair(params, i, j)
            assert e.pole_order not in seen  # injectivity
            seen.add(e.pole_order)
            back = iota(params, e.pole_order)
            assert (back.i, back.j) == (i, j)
    assert seen == set(hs.members)
    for value in hs:
        assert in_semigroup(params, value)  # H* sits inside the semigroup


def test_partial_order():
    params = validate_params(4, 3, 7)
    zero = exponent_pair(params, 0, 0)
    for value in (87, 90, 91, 92):
        assert leq_partial(zero, iota(params, value))
    assert not leq_partial(iota(params, 90), iota(params, 92))
    assert not leq_partial(iota(params, 92), iota(params, 90))
    p425 = validate_params(4, 2, 5)
    assert leq_partial(exponent_pair(p425, 13, 3), exponent_pair(p425, 14, 3))


def test_exponent_pair_bounds():
    params = validate_params(2, 2, 3)
    with pytest.raises(ValidationError):
        exponent_pair(params, 4, 0)
    with pytest.raises(ValidationError):
        exponent_pair(params, 0, 2)


def _brute_gap_count(params, value, frobenius):
    # generate the semigroup as explicit sums instead of membership tests;
    # everything above value + frobenius lies in the shifted copy
    bound = value + max(frobenius, 0)
    sums = {
        a * params.u + b * params.qs1
        for a in range(bound // params.u + 1)
        for b in range(bound // params.qs1 + 1)
    }
    members = {m for m in sums if m <= bound}
    shifted = {value + m for m in members}
    return len(members - shifted)


def test_gap_count_identity_fixtures():
    assert gap_count(validate_params(4, 3, 7), 7) == 7
    assert gap_count(validate_params(2, 2, 3), 9) == 9
    assert gap_count(validate_params(2, 2, 3), 0) == 0
    with pytest.raises(ValidationError):
        gap_count(validate_params(4, 3, 7), 89)


@pytest.mark.parametrize("q,s,u", DESK_PARAMS)
def test_gap_count_equals_the_member(q, s, u):
    params = validate_params(q, s, u)
    frobenius = params.u * params.qs1 - params.u - params.qs1
    for value in range(0, 201):
        if not in_semigroup(params, value):
            continue
        assert gap_count(params, value) == value
        assert _brute_gap_count(params, value, frobenius) == value
