"""Command-line surface with stable, scriptable JSON output.

Subcommands:
    params       threshold tables and audit data for a scheme config
    curve        point list and department partition of the curve
    deal         split a secret into a share file
    reconstruct  recover a secret from a subset of a share file
    coalition    leakage analysis of a participant subset
    nonqual      structured maximum non-qualifying sets
    oracle       brute-force relative weight on small instances

All participant and point indices are 0-based.  Exit codes: 0 success,
2 validation or file errors, 3 domain infeasibility, 4 enumeration
budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from dataclasses import dataclass

from .curve import PointPartition, enumerate_points, validate_params
from .errors import (
    BudgetExceededError,
    InfeasibleError,
    NormTraceError,
    ValidationError,
)
from .qualifying import enumerate_variants
from .ramp import Scheme, ShareVector, access_numbers, coalition_report, deal, make_scheme, reconstruct
from .weights import _resolve_pool, brute_force_rghw, gaussian_binomial, rghw_primary_bound


@dataclass(frozen=True)
class SchemeConfig:
    """Wire-format scheme description; see schemas/scheme_config.schema.json."""

    q: int
    s: int
    u: int
    lambda1: int | None = None
    lambda2: int | None = None
    gamma_pool: tuple[int, ...] | None = None
    seed: int | None = None

    @staticmethod
    def from_dict(data) -> "SchemeConfig":
        if not isinstance(data, dict):
            raise ValidationError("config must be a JSON object")
        known = {"q", "s", "u", "lambda1", "lambda2", "gamma_pool", "seed"}
        unknown = set(data) - known
        if unknown:
            raise ValidationError(f"unknown config keys: {sorted(unknown)}")
        for key in ("q", "s", "u"):
            if key not in data or not isinstance(data[key], int):
                raise ValidationError(f"config key '{key}' must be an integer")
        for key in ("lambda1", "lambda2", "seed"):
            if key in data and data[key] is not None and not isinstance(data[key], int):
                raise ValidationError(f"config key '{key}' must be an integer")
        pool = data.get("gamma_pool")
        if pool is not None:
            if not isinstance(pool, list) or not all(isinstance(g, int) for g in pool):
                raise ValidationError("gamma_pool must be a list of integers")
            pool = tuple(pool)
        return SchemeConfig(
            q=data["q"],
            s=data["s"],
            u=data["u"],
            lambda1=data.get("lambda1"),
            lambda2=data.get("lambda2"),
            gamma_pool=pool,
            seed=data.get("seed"),
        )

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "s": self.s,
            "u": self.u,
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "gamma_pool": list(self.gamma_pool) if self.gamma_pool is not None else None,
            "seed": self.seed,
        }

    def partition(self) -> PointPartition:
        return enumerate_points(validate_params(self.q, self.s, self.u))

    def scheme(self) -> Scheme:
        if self.lambda1 is None or self.lambda2 is None:
            raise ValidationError("config must set lambda1 and lambda2")
        return make_scheme(self.partition(), self.lambda1, self.lambda2, self.gamma_pool)


def load_config(path: str, pool_override: str | None = None, seed_override: int | None = None) -> SchemeConfig:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    cfg = SchemeConfig.from_dict(data)
    if pool_override is not None:
        pool = tuple(int(v) for v in _split_ints(pool_override))
        cfg = SchemeConfig(cfg.q, cfg.s, cfg.u, cfg.lambda1, cfg.lambda2, pool, cfg.seed)
    if seed_override is not None:
        cfg = SchemeConfig(cfg.q, cfg.s, cfg.u, cfg.lambda1, cfg.lambda2, cfg.gamma_pool, seed_override)
    return cfg


def _split_ints(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from exc


def parse_subset(text: str, n: int) -> list[int]:
    """Comma-separated indices with inclusive a-b ranges, or 'all'."""
    if text.strip().lower() == "all":
        return list(range(n))
    out: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.update(range(int(lo), int(hi) + 1))
            else:
                out.add(int(part))
    except ValueError as exc:
        raise ValidationError(f"bad subset syntax: {text!r}") from exc
    subset = sorted(out)
    if subset and (subset[0] < 0 or subset[-1] >= n):
        raise ValidationError(f"subset indices must lie in [0, {n})")
    return subset


def _dump(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


# -- report builders (also used directly by the tests) --------------------


def params_report(cfg: SchemeConfig) -> dict:
    scheme = cfg.scheme()
    report = access_numbers(scheme)

    def audit(bound_reports):
        return [
            {
                "m": rep.m,
                "value": rep.value,
                "minimizing": list(rep.minimizing.gammas),
                "subsets": [
                    {"gammas": list(gs), "count": count} for gs, count in rep.per_subset
                ],
            }
            for rep in bound_reports
        ]

    return {
        "config": cfg.to_dict(),
        "n": scheme.n,
        "k1": scheme.k1,
        "k2": scheme.k2,
        "ell": report.ell,
        "ell_full": report.ell_full,
        "pool": list(report.pool),
        "m_primary": list(report.m_primary),
        "m_dual": list(report.m_dual),
        "privacy": list(report.t),
        "reconstruction": list(report.r),
        "swapped_assignment": {
            "privacy": list(report.swapped_t),
            "reconstruction": list(report.swapped_r),
            "note": (
                "privacy from the primary table and reconstruction from the"
                " dual table; emitted for cross-checking only"
            ),
        },
        "primary_audit": audit(report.primary_reports),
        "dual_audit": audit(report.dual_reports),
    }


def params_csv(report: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["kind", "m", "gammas", "value"])
    for name in ("m_primary", "m_dual", "privacy", "reconstruction"):
        for m, value in enumerate(report[name], start=1):
            writer.writerow([name, m, "", value])
    for side in ("primary_audit", "dual_audit"):
        for entry in report[side]:
            for sub in entry["subsets"]:
                writer.writerow(
                    [side, entry["m"], " ".join(map(str, sub["gammas"])), sub["count"]]
                )
    return buf.getvalue()


def curve_report(cfg: SchemeConfig) -> dict:
    partition = cfg.partition()
    return {
        "config": cfg.to_dict(),
        "n": partition.n,
        "alpha": partition.alpha,
        "points": [list(pt) for pt in partition.points],
        "departments": [list(d) for d in partition.departments],
        "gamma1": [list(g) for g in partition.gamma1],
        "gamma2": [list(g) for g in partition.gamma2],
    }


def share_file(cfg: SchemeConfig, secret, seed: int | None) -> dict:
    scheme = cfg.scheme()
    if seed is None:
        seed = random.SystemRandom().randrange(2**32)
    shares = deal(scheme, secret, seed=seed)
    field = scheme.field
    recorded = SchemeConfig(cfg.q, cfg.s, cfg.u, cfg.lambda1, cfg.lambda2, cfg.gamma_pool, seed)
    return {
        "config": recorded.to_dict(),
        "field_spec": {
            "p": field.p,
            "m": field.m,
            "modulus": list(field.modulus),
            "generator": field.generator,
            "order": field.order,
        },
        "shares": list(shares.shares),
    }


def load_share_file(path: str) -> tuple[SchemeConfig, Scheme, ShareVector]:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "config" not in data or "shares" not in data:
        raise ValidationError("share file must be an object with config and shares")
    cfg = SchemeConfig.from_dict(data["config"])
    scheme = cfg.scheme()
    field = scheme.field
    spec = data.get("field_spec", {})
    expected = {
        "p": field.p,
        "m": field.m,
        "modulus": list(field.modulus),
        "generator": field.generator,
        "order": field.order,
    }
    if {k: spec.get(k) for k in expected} != expected:
        raise ValidationError("share file field_spec does not match the canonical field")
    shares = data["shares"]
    if not isinstance(shares, list) or len(shares) != scheme.n:
        raise ValidationError(f"share file must hold exactly {scheme.n} shares")
    vector = ShareVector(scheme, tuple(int(v) for v in shares))
    for v in vector.shares:
        if not 0 <= v < field.order:
            raise ValidationError(f"share value {v} outside the field")
    return cfg, scheme, vector


def reconstruct_report(scheme: Scheme, subset, values) -> dict:
    result = reconstruct(scheme, subset, values)
    return {
        "subset": sorted(int(i) for i in subset),
        "complete": result.complete,
        "secret": list(result.secret) if result.secret is not None else None,
        "leakage": result.leakage,
        "uncertainty": result.uncertainty,
        "functionals": [list(f) for f in result.functionals],
        "values": list(result.values),
        "consistent_secret_count": result.consistent_secret_count,
    }


def coalition_json(scheme: Scheme, subset, shares: ShareVector | None) -> dict:
    rep = coalition_report(scheme, subset, shares)
    return {
        "subset": list(rep.subset),
        "leakage": rep.leakage,
        "uncertainty": rep.uncertainty,
        "functionals": [list(f) for f in rep.functionals],
        "values": list(rep.values) if rep.values is not None else None,
        "consistent_secret_count": rep.consistent_secret_count,
    }


def nonqual_report(cfg: SchemeConfig, w: int, limit: int) -> dict:
    scheme = cfg.scheme()
    params = scheme.partition.params
    pool = _resolve_pool(params, scheme.pair.lambda1, scheme.pair.lambda2, scheme.gamma_pool)
    bound = rghw_primary_bound(params, w, scheme.pair.lambda1, scheme.pair.lambda2, pool)
    variants = enumerate_variants(scheme, bound.minimizing, limit)
    sets = []
    for v in variants:
        structure = None
        if v.structure is not None:
            structure = {
                "i_prime": v.structure.i_prime,
                "full_departments": list(v.structure.full_departments),
                "slab_department": v.structure.slab_department,
                "slab_values": list(v.structure.slab_values),
                "a0_included": v.structure.a0_included,
                "staircase": list(v.structure.staircase),
            }
        sets.append(
            {
                "indices": list(v.indices),
                "level": v.level,
                "w": v.w,
                "gammas": list(v.gammas),
                "structure": structure,
            }
        )
    return {
        "config": cfg.to_dict(),
        "w": w,
        "level": len(pool) - w + 1,
        "gammas": list(bound.minimizing.gammas),
        "set_size": scheme.n - bound.value,
        "count": len(sets),
        "sets": sets,
    }


def oracle_report(cfg: SchemeConfig, t: int, budget: int) -> dict:
    scheme = cfg.scheme()
    value = brute_force_rghw(scheme.pair, t, budget)
    return {
        "config": cfg.to_dict(),
        "t": t,
        "value": value,
        "subspaces": gaussian_binomial(scheme.k1, t, scheme.field.order),
    }


# -- command wiring --------------------------------------------------------


def _emit(args, text: str) -> None:
    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _require_json_format(args) -> None:
    if getattr(args, "format", "json") != "json":
        raise ValidationError("only --format json is supported for this command")


def cmd_params(args) -> None:
    cfg = load_config(args.config, args.pool, args.seed)
    report = params_report(cfg)
    if args.format == "csv":
        _emit(args, params_csv(report))
    else:
        _emit(args, _dump(report))


def cmd_curve(args) -> None:
    _require_json_format(args)
    cfg = load_config(args.config, args.pool, args.seed)
    _emit(args, _dump(curve_report(cfg)))


def cmd_deal(args) -> None:
    _require_json_format(args)
    cfg = load_config(args.config, args.pool, args.seed)
    with open(args.secret, "r", encoding="utf-8") as fh:
        secret = json.load(fh)
    if not isinstance(secret, list):
        raise ValidationError("secret file must hold a JSON list of integers")
    _emit(args, _dump(share_file(cfg, secret, cfg.seed)))


def cmd_reconstruct(args) -> None:
    _require_json_format(args)
    _, scheme, vector = load_share_file(args.shares)
    subset = parse_subset(args.subset, scheme.n)
    values = [vector.shares[i] for i in subset]
    _emit(args, _dump(reconstruct_report(scheme, subset, values)))


def cmd_coalition(args) -> None:
    _require_json_format(args)
    if args.shares:
        cfg, scheme, vector = load_share_file(args.shares)
    else:
        cfg = load_config(args.config, args.pool, args.seed)
        scheme, vector = cfg.scheme(), None
    subset = parse_subset(args.subset, scheme.n)
    _emit(args, _dump(coalition_json(scheme, subset, vector)))


def cmd_nonqual(args) -> None:
    _require_json_format(args)
    cfg = load_config(args.config, args.pool, args.seed)
    _emit(args, _dump(nonqual_report(cfg, args.w, args.limit)))


def cmd_oracle(args) -> None:
    _require_json_format(args)
    cfg = load_config(args.config, args.pool, args.seed)
    _emit(args, _dump(oracle_report(cfg, args.t, args.budget)))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="normtrace-ramp",
        description="Ramp secret sharing from extended norm-trace curves",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", required=True, help="scheme config JSON file")
        p.add_argument("--pool", help="override gamma pool, comma-separated")
        p.add_argument("--seed", type=int, help="override the config seed")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", help="write to a file instead of stdout")

    p = sub.add_parser("params", help="threshold tables and audits")
    common(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("curve", help="points and departments")
    common(p)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("deal", help="split a secret into shares")
    common(p)
    p.add_argument("--secret", required=True, help="JSON file with the secret vector")
    p.set_defaults(func=cmd_deal)

    p = sub.add_parser("reconstruct", help="recover a secret from shares")
    p.add_argument("--shares", required=True, help="share file from deal")
    p.add_argument("--subset", required=True, help="indices, e.g. 0,2,5-9 or all")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", help="write to a file instead of stdout")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("coalition", help="leakage analysis of a subset")
    common(p)
    p.add_argument("--subset", required=True, help="indices, e.g. 0,2,5-9 or all")
    p.add_argument("--shares", help="optional share file for recovered values")
    p.set_defaults(func=cmd_coalition)

    p = sub.add_parser("nonqual", help="maximum non-qualifying sets")
    common(p)
    p.add_argument("--w", type=int, required=True, help="chain length")
    p.add_argument("--limit", type=int, default=10, help="maximum sets to emit")
    p.set_defaults(func=cmd_nonqual)

    p = sub.add_parser("oracle", help="brute-force relative weight")
    common(p)
    p.add_argument("--t", type=int, required=True, help="subspace dimension")
    p.add_argument("--budget", type=int, default=200_000, help="subspace budget")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except InfeasibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValidationError, json.JSONDecodeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NormTraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
