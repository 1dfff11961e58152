"""Linear ramp secret sharing on a nested pair of evaluation codes.

A secret is a vector of ell field elements, one per monomial extending
the inner code to the outer one; dealing mixes it with random multiples
of the inner-code basis, and each participant holds one coordinate of
the resulting outer codeword.  Privacy and reconstruction thresholds
come from the relative-weight bounds, which are attained for these
codes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .codes import NestedCodePair, leakage, monomial_row, nested_pair, uncertainty
from .curve import PointPartition
from .errors import InconsistentSharesError, ValidationError
from .weights import BoundReport, _resolve_pool, rghw_dual_bound, rghw_primary_bound


class Scheme:
    """A dealt-share layout over a nested code pair.

    The basis lists the inner-code monomial rows first (randomness
    coordinates) and the extension rows after them (secret coordinates),
    each block in increasing pole order, so secret symbol j corresponds
    to extension monomial j.  gamma_pool optionally restricts the pole
    orders used by threshold computations.
    """

    def __init__(self, pair: NestedCodePair, gamma_pool=None):
        self.pair = pair
        self.partition = pair.c1.partition
        self.field = pair.field
        self.n = pair.n
        self.k2 = pair.c2.dimension
        self.k1 = pair.c1.dimension
        self.ell = pair.ell
        rows = list(pair.c2.rows)
        rows += [
            monomial_row(self.partition, e.i, e.j) for e in pair.extension_monomials
        ]
        self.basis = tuple(rows)
        if gamma_pool is not None:
            if pair.lambda1 is None:
                raise ValidationError("gamma pools require a one-point pair")
            gamma_pool = _resolve_pool(
                self.partition.params, pair.lambda1, pair.lambda2, gamma_pool
            )
        self.gamma_pool = gamma_pool

    def __repr__(self) -> str:
        return f"Scheme(n={self.n}, ell={self.ell})"


def make_scheme(
    partition: PointPartition,
    lambda1: int,
    lambda2: int,
    gamma_pool=None,
) -> Scheme:
    """Scheme over the one-point pair with the given pole bounds."""
    return Scheme(nested_pair(partition, lambda1, lambda2), gamma_pool)


@dataclass(frozen=True)
class ShareVector:
    """Shares for all n participants; participant i holds shares[i]."""

    scheme: Scheme
    shares: tuple[int, ...]


def _check_symbols(field, values, length, what) -> tuple[int, ...]:
    vals = tuple(int(v) for v in values)
    if len(vals) != length:
        raise ValidationError(f"{what} must have length {length}, got {len(vals)}")
    for v in vals:
        if not 0 <= v < field.order:
            raise ValidationError(f"{what} symbol {v} outside {field!r}")
    return vals


def deal(scheme: Scheme, secret, randomness=None, seed=None) -> ShareVector:
    """Encode a secret into shares.

    randomness supplies the k2 inner-code coefficients explicitly; when
    omitted they are drawn from a deterministic generator seeded with
    seed, so share files are reproducible.
    """
    field = scheme.field
    secret = _check_symbols(field, secret, scheme.ell, "secret")
    if randomness is None:
        rng = random.Random(seed)
        randomness = tuple(rng.randrange(field.order) for _ in range(scheme.k2))
    else:
        randomness = _check_symbols(field, randomness, scheme.k2, "randomness")
    coeffs = randomness + secret
    shares = linalg.row_combination(field, coeffs, scheme.basis)
    return ShareVector(scheme, tuple(shares))


@dataclass(frozen=True)
class AccessReport:
    """Privacy and reconstruction numbers with their audit tables.

    t and r follow the stated threshold equations (privacy from the dual
    table, reconstruction from the primary one); swapped_t and swapped_r
    carry the same data with the two weight tables interchanged, for
    consumers that prefer the other convention.  ell is the effective
    secret length used for the tables (the pool size when a pool override
    is active), ell_full the co-dimension of the code pair.
    """

    ell: int
    ell_full: int
    t: tuple[int, ...]
    r: tuple[int, ...]
    m_primary: tuple[int, ...]
    m_dual: tuple[int, ...]
    swapped_t: tuple[int, ...]
    swapped_r: tuple[int, ...]
    pool: tuple[int, ...]
    primary_reports: tuple[BoundReport, ...]
    dual_reports: tuple[BoundReport, ...]


def access_numbers(scheme: Scheme, pool=None) -> AccessReport:
    """Thresholds t_m and r_m for m = 1..ell from the weight tables.

    t_m is one less than the m-th dual weight; r_m is n minus the
    (ell-m+1)-th primary weight plus one.
    """
    pair = scheme.pair
    if pair.lambda1 is None:
        raise ValidationError("access numbers require a one-point pair")
    params = scheme.partition.params
    lam1, lam2 = pair.lambda1, pair.lambda2
    actual = _resolve_pool(params, lam1, lam2, pool if pool is not None else scheme.gamma_pool)
    ell = len(actual)
    primary = tuple(
        rghw_primary_bound(params, m, lam1, lam2, actual) for m in range(1, ell + 1)
    )
    dual = tuple(
        rghw_dual_bound(params, m, lam1, lam2, actual) for m in range(1, ell + 1)
    )
    n = scheme.n
    m_primary = tuple(rep.value for rep in primary)
    m_dual = tuple(rep.value for rep in dual)
    t = tuple(v - 1 for v in m_dual)
    r = tuple(n - m_primary[ell - m] + 1 for m in range(1, ell + 1))
    swapped_t = tuple(v - 1 for v in m_primary)
    swapped_r = tuple(n - m_dual[ell - m] + 1 for m in range(1, ell + 1))
    report = AccessReport(
        ell=ell,
        ell_full=scheme.ell,
        t=t,
        r=r,
        m_primary=m_primary,
        m_dual=m_dual,
        swapped_t=swapped_t,
        swapped_r=swapped_r,
        pool=actual,
        primary_reports=primary,
        dual_reports=dual,
    )
    for m in range(ell):
        if report.t[m] >= report.r[m]:
            raise AssertionError("privacy numbers must stay below reconstruction")
    return report


def _secret_functionals(scheme: Scheme, idx):
    """Recoverable secret functionals on a coordinate subset.

    Returns (functionals, recovery) where each functional is an
    ell-vector phi with phi . secret determined by the shares on idx, and
    recovery holds the matching coefficient vector over the subset
    positions (value = recovery . shares_on_idx).
    """
    field = scheme.field
    point_rows = linalg.transpose(linalg.columns(scheme.basis, idx)) if idx else []
    R, T, pivots = linalg.ref_with_transform(field, point_rows)
    functionals = []
    recovery = []
    for row_index, pivot in enumerate(pivots):
        if pivot >= scheme.k2:
            functionals.append(R[row_index][scheme.k2 :])
            recovery.append(T[row_index])
    return functionals, recovery


@dataclass(frozen=True)
class CoalitionReport:
    """What a coalition of participants learns about the secret."""

    subset: tuple[int, ...]
    leakage: int
    uncertainty: int
    functionals: tuple[tuple[int, ...], ...]
    values: tuple[int, ...] | None
    consistent_secret_count: int


def coalition_report(scheme: Scheme, subset, shares: ShareVector | None = None) -> CoalitionReport:
    """Exact leakage and uncertainty of a subset, with the recoverable
    secret functionals; their values are filled in when shares are given."""
    idx = sorted({int(i) for i in subset})
    if idx and (idx[0] < 0 or idx[-1] >= scheme.n):
        raise ValidationError(f"participant indices must lie in [0, {scheme.n})")
    leak = leakage(scheme.pair, idx)
    unc = uncertainty(scheme.pair, idx)
    functionals, recovery = _secret_functionals(scheme, idx)
    if len(functionals) != leak:
        raise AssertionError("functional count disagrees with projection ranks")
    values = None
    if shares is not None:
        if shares.scheme is not scheme:
            raise ValidationError("shares belong to a different scheme")
        restricted = [shares.shares[i] for i in idx]
        values = tuple(
            linalg.dot(scheme.field, rec, restricted) for rec in recovery
        )
    return CoalitionReport(
        subset=tuple(idx),
        leakage=leak,
        uncertainty=unc,
        functionals=tuple(tuple(f) for f in functionals),
        values=values,
        consistent_secret_count=scheme.field.order**unc,
    )


@dataclass(frozen=True)
class ReconstructionResult:
    """Outcome of reconstructing from a subset of shares.

    When complete, secret holds the full ell-vector.  Otherwise
    functionals/values list what is determined, and
    consistent_secret_count how many secrets explain the given shares.
    """

    complete: bool
    secret: tuple[int, ...] | None
    leakage: int
    uncertainty: int
    functionals: tuple[tuple[int, ...], ...]
    values: tuple[int, ...]
    consistent_secret_count: int


def reconstruct(scheme: Scheme, subset, share_values) -> ReconstructionResult:
    """Recover the secret (or all recoverable functionals) from shares.

    Raises InconsistentSharesError when no codeword of the scheme matches
    the given values on the subset.
    """
    idx = sorted({int(i) for i in subset})
    if idx and (idx[0] < 0 or idx[-1] >= scheme.n):
        raise ValidationError(f"participant indices must lie in [0, {scheme.n})")
    field = scheme.field
    values = _check_symbols(field, share_values, len(idx), "shares")
    projected = linalg.columns(scheme.basis, idx)
    if linalg.solve_left(field, projected, list(values)) is None:
        raise InconsistentSharesError("no codeword matches the given shares")
    functionals, recovery = _secret_functionals(scheme, idx)
    recovered = tuple(linalg.dot(field, rec, values) for rec in recovery)
    leak = len(functionals)
    unc_true = uncertainty(scheme.pair, idx)
    if leak == scheme.ell:
        secret = linalg.solve_left(field, linalg.transpose(functionals), list(recovered))
        if secret is None:
            raise AssertionError("full-leakage functional system must be solvable")
        return ReconstructionResult(
            complete=True,
            secret=tuple(secret),
            leakage=leak,
            uncertainty=unc_true,
            functionals=tuple(tuple(f) for f in functionals),
            values=recovered,
            consistent_secret_count=1,
        )
    return ReconstructionResult(
        complete=False,
        secret=None,
        leakage=leak,
        uncertainty=unc_true,
        functionals=tuple(tuple(f) for f in functionals),
        values=recovered,
        consistent_secret_count=field.order**unc_true,
    )
