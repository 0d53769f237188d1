"""Command-line front end.

    zetalab appendix
    zetalab zeta --sigma 0.5 --t 14.134725
    zetalab zeros --t-max 30 --step 0.1
    zetalab series --t 1 --schedule 1000,10000,100000,1000000
    zetalab pappus --seed 7
    zetalab audit-all --seed 7 --output audit.json

Exit status: 0 on success, 1 when ``--strict`` is set and an audit fails,
2 on bad input or an unwritable output path.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from . import __version__
from .appendix import EXAMPLES, check_example
from .claims_audit import (
    FAILS,
    AuditRecord,
    appendix_audit,
    cosine_sweep_audit,
    critical_point_audit,
    doubled_factorization_audit,
    factorization_audit,
    infinity_times_zero_audit,
    phase_condition_check,
    uniqueness_identity_check,
    uniqueness_sweep_audit,
)
from .errors import ZetaLabError
from .oscillatory_series import cos_partial, growth_fit, partial_sums, sin_partial
from .report import SCHEMA_VERSION, columns_of, dumps, to_csv, to_table, write_atomic
from .rotation_solid import (
    ProfileRegion,
    barycenter,
    cylinder_volume,
    implied_eta,
    pappus_residual,
    random_polynomial_region,
)
from .zero_scout import DEFAULT_STEP, critical_ratio_report, find_zeros, hardy_z
from .zeta_core import SPoint, zeta_eta, zeta_partial, zeta_reflected

COMMANDS = ("appendix", "zeta", "zeros", "series", "pappus", "audit-all")
FORMATS = ("json", "csv", "table")
DEFAULT_FORMAT = {"appendix": "table", "zeros": "csv"}
DEFAULT_SCHEDULE = (1000, 10_000, 100_000, 1_000_000)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any] = field(default_factory=dict)
    output_path: str | None = None
    format: str = "json"
    seed: int = 0
    strict: bool = False

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ConfigError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise ConfigError(f"unknown format {self.format!r}")
        p = self.params
        for key in ("t_min", "t_max", "step", "sigma", "t"):
            v = p.get(key)
            if v is not None and not math.isfinite(v):
                raise ConfigError(f"--{key.replace('_', '-')} must be finite")
        if p.get("step") is not None and p["step"] <= 0:
            raise ConfigError("--step must be positive")
        if p.get("n_max") is not None and p["n_max"] < 1:
            raise ConfigError("--n-max must be >= 1")
        if self.command == "zeros" and p.get("t_max") is None:
            raise ConfigError("zeros needs --t-max")
        if self.command == "zeta" and p.get("sigma") is None:
            raise ConfigError("zeta needs --sigma")
        sched = p.get("schedule")
        if sched is not None and (len(sched) < 4 or any(b <= a for a, b in zip(sched, sched[1:])) or sched[0] < 1):
            raise ConfigError("--schedule needs >= 4 strictly increasing positive integers")


# --- commands -----------------------------------------------------------------

def _report(cfg: RunConfig, rows: list[dict], extra: dict | None = None, records: list[AuditRecord] | None = None) -> dict:
    out: dict[str, Any] = {"schema_version": SCHEMA_VERSION, "command": cfg.command, "params": cfg.params}
    if cfg.command in ("pappus", "audit-all"):
        out["seed"] = cfg.seed
    if extra:
        out.update(extra)
    if records is not None:
        out["records"] = [r.to_dict() for r in records]
    out["rows"] = rows
    return out


def cmd_appendix(cfg: RunConfig) -> tuple[dict, list[AuditRecord]]:
    rows = [r for ex in EXAMPLES for r in check_example(ex)]
    return _report(cfg, rows), appendix_audit()


def _zeta_row(sigma: float, t: float) -> dict:
    if sigma > 0:
        r = zeta_eta(SPoint(sigma, t))
        value, err, terms = r.value, r.est_error, r.terms_used
    else:
        value, err, terms = zeta_reflected(SPoint(sigma, t)), None, None
    row = {"sigma": sigma, "t": t, "re": value.real, "im": value.imag, "abs": abs(value),
           "est_error": err, "terms_used": terms}
    if sigma == 0.5:
        row["hardy_z"] = hardy_z(t)
    return row


def cmd_zeta(cfg: RunConfig) -> tuple[dict, list]:
    p = cfg.params
    sigma = p["sigma"]
    if p.get("t_max") is not None:
        t_min = p.get("t_min") or 0.0
        step = p.get("step") or DEFAULT_STEP
        count = int(math.floor((p["t_max"] - t_min) / step + 1e-9))
        ts = [t_min + k * step for k in range(count + 1)]
    else:
        ts = [p.get("t") or 0.0]
    rows = [_zeta_row(sigma, t) for t in ts]
    return _report(cfg, rows), []


def cmd_zeros(cfg: RunConfig) -> tuple[dict, list]:
    p = cfg.params
    t_min = p.get("t_min") or 0.0
    step = p.get("step") or DEFAULT_STEP
    records = find_zeros(t_min, p["t_max"], step)
    extra = {}
    if t_min == 0.0 and p["t_max"] > 2 * math.pi:
        extra["ratio_report"] = critical_ratio_report(p["t_max"], step).to_dict()
    return _report(cfg, [r.row() for r in records], extra), []


def cmd_series(cfg: RunConfig) -> tuple[dict, list]:
    p = cfg.params
    t = p.get("t") if p.get("t") is not None else 1.0
    schedule = list(p.get("schedule") or DEFAULT_SCHEDULE)
    if p.get("n_max") is not None:
        schedule = [n for n in schedule if n <= p["n_max"]]
        if len(schedule) < 4:
            # log-spaced schedule ending at n_max
            schedule = sorted({max(1, int(round(p["n_max"] ** (k / 4)))) for k in range(1, 5)} | {p["n_max"]})
            if len(schedule) < 4:
                raise ConfigError("--n-max too small for a growth fit")
    report = growth_fit(t, schedule)
    S = partial_sums(t, schedule[-1])
    env = np.maximum.accumulate(np.abs(S))
    # log-spaced plot columns
    grid = np.unique(np.round(np.logspace(0, math.log10(schedule[-1]), 200)).astype(int))
    rows = [{"N": int(n), "cos_partial": float(S[n - 1]), "envelope": float(env[n - 1]),
             "amplitude": float(n) * report.reference_amplitude} for n in grid]
    extra = {
        "growth": report.to_dict(),
        "sin_partial_at_max": sin_partial(t, schedule[-1]),
        "cos_partial_at_max": cos_partial(t, schedule[-1]),
    }
    return _report(cfg, rows, extra), []


def cmd_pappus(cfg: RunConfig) -> tuple[dict, list]:
    p = cfg.params
    rng = np.random.default_rng(cfg.seed)
    regions = [("rectangle", ProfileRegion([1.5], [0.0], 0.0, 2.0)), ("cone", ProfileRegion([0.0, 1.0], [0.0], 0.0, 1.0))]
    regions += [(f"random{i}", random_polynomial_region(rng)) for i in range(20)]
    rows = []
    for name, r in regions:
        xi, eta = barycenter(r)
        rows.append({"region": name, "xi": xi, "eta": eta, "pappus_residual": pappus_residual(r)})
    sigma = p.get("sigma") if p.get("sigma") is not None else 0.5
    t = p.get("t") if p.get("t") is not None else 14.1347
    n_max = p.get("n_max") or 10_000
    s = complex(sigma, t)
    den = zeta_partial(s, n_max)
    extra = {
        "eta_note": (
            "eta is the centroid ordinate of the half-lamina between g and f; "
            "the full axial cross-section is symmetric and has its centroid on the axis"
        ),
        "cylinder_volumes": [{"n": n, "volume": cylinder_volume(n, s)} for n in range(1, 6)],
        "implied_eta": {
            "sigma": sigma, "t": t, "N": n_max,
            "value": implied_eta(s, n_max),
            "abs_denominator": abs(den),
            "small_denominator": abs(den) < 0.1,
            "note": "formal quotient; no geometric content for complex s",
        },
    }
    return _report(cfg, rows, extra), []


def cmd_audit_all(cfg: RunConfig) -> tuple[dict, list[AuditRecord]]:
    p = cfg.params
    schedule = list(p.get("schedule") or DEFAULT_SCHEDULE)
    n = p.get("n_max") or 10_000
    two_pi_ln2 = 2.0 * math.pi / math.log(2.0)
    records: list[AuditRecord] = []
    records += appendix_audit()
    records.append(cosine_sweep_audit(cfg.seed))
    records.append(factorization_audit(SPoint(2.0, 0.0), 100))
    records.append(factorization_audit(SPoint(0.5, 14.134725), n))
    records.append(doubled_factorization_audit(SPoint(0.5, 0.0), 100_000))
    records.append(doubled_factorization_audit(SPoint(0.5, 1.0), n))
    records.append(infinity_times_zero_audit(0.0, schedule))
    records.append(infinity_times_zero_audit(1.0, schedule))
    records.append(uniqueness_identity_check(0.3, 0.7, 14.134725, 1000))
    records.append(uniqueness_sweep_audit(cfg.seed))
    records.append(phase_condition_check(1.0 + two_pi_ln2, 1.0, 2))
    records.append(phase_condition_check(1.0 + two_pi_ln2, 1.0, 3))
    records.append(critical_point_audit())
    ratio = critical_ratio_report(50.0)
    rows = [{"claim_id": r.claim_id, "verdict": r.verdict, "note": r.note} for r in records]
    return _report(cfg, rows, {"ratio_report": ratio.to_dict()}, records), records


HANDLERS = {
    "appendix": cmd_appendix,
    "zeta": cmd_zeta,
    "zeros": cmd_zeros,
    "series": cmd_series,
    "pappus": cmd_pappus,
    "audit-all": cmd_audit_all,
}


# --- rendering ----------------------------------------------------------------

def render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return dumps(report)
    rows = report.get("rows", [])
    cols = columns_of(rows)
    if fmt == "csv":
        return to_csv(rows, cols)
    return to_table(rows, cols)


def summary_table(report: dict) -> str:
    rows = report.get("rows", [])
    if rows and "verdict" in rows[0]:
        return to_table([{"claim_id": r["claim_id"], "verdict": r["verdict"]} for r in rows])
    return to_table(rows, columns_of(rows))


def run(cfg: RunConfig) -> int:
    try:
        cfg.validate()
        report, records = HANDLERS[cfg.command](cfg)
    except (ConfigError, ZetaLabError, ValueError) as exc:
        print(f"zetalab {cfg.command}: error: {exc}", file=sys.stderr)
        return 2
    text = render(report, cfg.format)
    if cfg.output_path:
        try:
            write_atomic(cfg.output_path, text)
        except OSError as exc:
            print(f"zetalab {cfg.command}: cannot write {cfg.output_path}: {exc}", file=sys.stderr)
            return 2
        sys.stdout.write(summary_table(report))
    else:
        sys.stdout.write(text)
    failed = [r.claim_id for r in records if r.verdict == FAILS]
    if failed and cfg.strict:
        print(f"zetalab {cfg.command}: failing verdicts: {', '.join(failed)}", file=sys.stderr)
        return 1
    return 0


# --- argument parsing ---------------------------------------------------------

def _schedule(text: str) -> list[int]:
    try:
        return [int(float(x)) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad schedule {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, help="report format (default depends on command)")
    common.add_argument("--output", help="write the report here (atomically) and print a summary")
    common.add_argument("--strict", action="store_true", help="exit 1 if any audit verdict is 'fails'")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised sweeps")
    common.add_argument("--t-min", type=float, dest="t_min")
    common.add_argument("--t-max", type=float, dest="t_max")
    common.add_argument("--step", type=float)
    common.add_argument("--sigma", type=float)
    common.add_argument("--t", type=float)
    common.add_argument("--n-max", type=int, dest="n_max")
    common.add_argument("--schedule", type=_schedule, help="comma-separated increasing N values")

    parser = argparse.ArgumentParser(prog="zetalab", description="Numerical audit laboratory for zeta-function manipulations.")
    parser.add_argument("--version", action="version", version=f"zetalab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    helps = {
        "appendix": "recompute the three worked complex triangles exactly and in floating point",
        "zeta": "evaluate zeta at --sigma/--t, or along t with --t-min/--t-max/--step",
        "zeros": "locate critical-line zeros on [--t-min, --t-max] by sign changes of Z",
        "series": "partial sums of cos(4t ln n) and their growth fit over --schedule",
        "pappus": "barycenters and Pappus residuals; cylinder volumes; implied eta",
        "audit-all": "run every audit and emit the AuditRecord batch",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name], description=helps[name])
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    keys = ("t_min", "t_max", "step", "sigma", "t", "n_max", "schedule")
    params = {k: getattr(ns, k) for k in keys if getattr(ns, k) is not None}
    return RunConfig(
        command=ns.command,
        params=params,
        output_path=ns.output,
        format=ns.format or DEFAULT_FORMAT.get(ns.command, "json"),
        seed=ns.seed,
        strict=ns.strict,
    )


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
