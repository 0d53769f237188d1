"""
Critical-line zeros of zeta located through sign changes of Hardy's Z.

``Z(t) = exp(i theta(t)) zeta(1/2 + i t)`` is real for real ``t``, with
``theta(t) = Im log_gamma(1/4 + i t/2) - (t/2) log(pi)``.  Only the line
``Re s = 1/2`` is searched; nothing here says anything about zeros off it.
"""

from __future__ import annotations

import cmath
import csv
import io
import math
from dataclasses import asdict, dataclass, field

from .errors import DomainError, ZetaLabError
from .zeta_core import LOG_PI, log_gamma, zeta_eta

__all__ = [
    "ZeroRecord",
    "RatioReport",
    "PhaseError",
    "theta",
    "hardy_z",
    "find_zeros",
    "n_of_t",
    "critical_ratio_report",
    "zeros_to_csv",
    "THRESHOLDS",
]

SCAN_TOL = 1e-11
BRACKET_WIDTH = 1e-6
DEFAULT_STEP = 0.05
PHASE_TOL = 1e-8

# historical lower bounds for N0(T)/N(T)
THRESHOLDS = {"selberg": 0.01, "levinson": 1.0 / 3.0, "lou": 0.35}


class PhaseError(ZetaLabError, ArithmeticError):
    """exp(i theta) zeta(1/2 + it) came out with a non-negligible imaginary part."""


@dataclass(frozen=True)
class ZeroRecord:
    index: int
    t: float
    bracket: tuple[float, float]
    residual: float

    def row(self) -> dict:
        return {
            "index": self.index,
            "t": self.t,
            "bracket_lo": self.bracket[0],
            "bracket_hi": self.bracket[1],
            "residual": self.residual,
        }


@dataclass
class RatioReport:
    T: float
    zeros_found: int
    n_estimate: float
    ratio: float
    thresholds: dict = field(default_factory=lambda: dict(THRESHOLDS))
    passed: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def theta(t: float) -> float:
    return log_gamma(complex(0.25, 0.5 * t)).imag - 0.5 * t * LOG_PI


def hardy_z(t: float, tol: float = SCAN_TOL) -> float:
    if not math.isfinite(t):
        raise DomainError("t must be finite")
    rotated = cmath.exp(1j * theta(t)) * zeta_eta(complex(0.5, t), tol=tol).value
    if abs(rotated.imag) > PHASE_TOL:
        raise PhaseError(f"Im Z({t}) = {rotated.imag:.3g} exceeds {PHASE_TOL}")
    return rotated.real


def _bisect(lo: float, hi: float, zlo: float, width: float) -> tuple[float, float]:
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        zm = hardy_z(mid)
        if zm == 0.0:
            return mid, mid
        if (zm > 0) == (zlo > 0):
            lo, zlo = mid, zm
        else:
            hi = mid
    return lo, hi


def find_zeros(t_min: float, t_max: float, step: float = DEFAULT_STEP, width: float = BRACKET_WIDTH) -> list[ZeroRecord]:
    """Scan ``Z`` on ``t_min, t_min + step, ...`` and bisect every sign change.

    Zeros closer together than ``step`` that cancel in sign are missed; the
    ratio report surfaces that as a count deficit rather than an error.
    """
    if t_min < 0 or t_max < t_min:
        raise DomainError(f"need 0 <= t_min <= t_max, got [{t_min}, {t_max}]")
    if step <= 0:
        raise DomainError("step must be positive")
    if t_max == t_min:
        return []

    count = int(math.floor((t_max - t_min) / step + 1e-9))
    grid = [t_min + k * step for k in range(count + 1)]
    if grid[-1] < t_max:
        grid.append(t_max)

    records: list[ZeroRecord] = []
    prev_t, prev_z = grid[0], hardy_z(grid[0])
    brackets = []
    if prev_z == 0.0:
        brackets.append((prev_t, prev_t))
    for t in grid[1:]:
        z = hardy_z(t)
        if z == 0.0:
            brackets.append((t, t))
        elif prev_z != 0.0 and (z > 0) != (prev_z > 0):
            brackets.append(_bisect(prev_t, t, prev_z, width))
        prev_t, prev_z = t, z

    for i, (lo, hi) in enumerate(brackets, start=1):
        mid = 0.5 * (lo + hi)
        residual = abs(zeta_eta(complex(0.5, mid), tol=SCAN_TOL).value)
        records.append(ZeroRecord(index=i, t=mid, bracket=(lo, hi), residual=residual))
    return records


def n_of_t(T: float) -> float:
    """Smooth zero count ``(T/2pi) log(T/2pi) - T/2pi + 7/8``."""
    if T <= 2.0 * math.pi:
        raise DomainError(f"n_of_t needs T > 2 pi, got {T}")
    x = T / (2.0 * math.pi)
    return x * math.log(x) - x + 7.0 / 8.0


def critical_ratio_report(T: float, step: float = DEFAULT_STEP) -> RatioReport:
    n_est = n_of_t(T)
    found = len(find_zeros(0.0, T, step))
    ratio = found / n_est
    passed = {name: ratio >= c for name, c in THRESHOLDS.items()}
    # the 0.35 bound is stated strictly
    passed["lou"] = ratio > THRESHOLDS["lou"]
    return RatioReport(T=T, zeros_found=found, n_estimate=n_est, ratio=ratio, passed=passed)


def zeros_to_csv(records: list[ZeroRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["index", "t", "bracket_lo", "bracket_hi", "residual"])
    for r in records:
        writer.writerow([r.index, format(r.t, ".17g"), format(r.bracket[0], ".17g"),
                         format(r.bracket[1], ".17g"), format(r.residual, ".17g")])
    return buf.getvalue()
