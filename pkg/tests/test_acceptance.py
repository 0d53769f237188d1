"""Acceptance criteria, one check each, with runtime limits.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

import oracles  # noqa: E402
from zetalab.appendix import EXAMPLES, check_example  # noqa: E402
from zetalab.claims_audit import (  # noqa: E402
    FAILS,
    HOLDS,
    HOLDS_UNDER_CONVENTION,
    STRIP_GRID,
    cosine_sweep_audit,
    critical_point_audit,
    phase_condition_check,
    uniqueness_sweep_audit,
)
from zetalab.oscillatory_series import cos_integral_closed, growth_fit  # noqa: E402
from zetalab.quadrature import adaptive_quad  # noqa: E402
from zetalab.rotation_solid import (  # noqa: E402
    ProfileRegion,
    barycenter,
    pappus_residual,
    random_polynomial_region,
)
from zetalab.zero_scout import THRESHOLDS, critical_ratio_report, find_zeros  # noqa: E402
from zetalab.zeta_core import functional_eq_residual, zeta_eta, zeta_partial, zeta_reflected  # noqa: E402

RESULTS: list[tuple[int, str, bool, str]] = []


class Timer:
    def __init__(self, limit: float):
        self.limit = limit

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        if exc[0] is None:
            assert self.elapsed < self.limit, f"took {self.elapsed:.2f} s, limit {self.limit} s"


def criterion_1() -> str:
    with Timer(1.0) as tm:
        rows = [r for ex in EXAMPLES for r in check_example(ex, rel_tol=1e-12)]
    printed = [r for r in rows if not r["quantity"].startswith("cosine_residual")]
    assert len(printed) == 27
    assert all(r["exact_match"] for r in rows), [r for r in rows if not r["exact_match"]]
    worst = max(r["float_rel_err"] for r in rows)
    assert worst <= 1e-12, worst
    return f"27 printed values exact, float rel err {worst:.1e}, {tm.elapsed:.2f} s"


def criterion_2() -> str:
    with Timer(5.0) as tm:
        rec = cosine_sweep_audit(seed=2024, trials=10_000)
    worst = rec.computed["max_rel_residual"]
    assert worst < 1e-12 and rec.verdict == HOLDS, worst
    return f"max rel residual {worst:.1e}, {tm.elapsed:.2f} s"


def criterion_3() -> str:
    z2 = math.pi ** 2 / 6
    with Timer(5.0) as tm:
        partial = abs(zeta_partial(2, 1000) - z2)
        eta2 = abs(zeta_eta(2).value - z2)
        half = zeta_eta(0.5).value
        trivial = [abs(zeta_reflected(-2)), abs(zeta_reflected(-4))]
    assert partial <= 1.1e-3, partial
    assert eta2 <= 1e-9, eta2
    assert abs(half - (-1.4603545)) <= 1e-6, half
    assert abs(half - oracles.em_zeta(0.5)) <= 1e-12
    assert max(trivial) <= 1e-10, trivial
    return f"partial err {partial:.3e}, eta err {eta2:.1e}, zeta(1/2) {half.real:.10f}, {tm.elapsed:.2f} s"


def criterion_4() -> str:
    with Timer(10.0) as tm:
        grid = [abs(functional_eq_residual(s)) for s in STRIP_GRID]
        off = abs(functional_eq_residual(0.3 + 2j))
        rec = critical_point_audit()
    assert len(grid) == 25 and max(grid) < 1e-8, max(grid)
    assert off < 1e-8, off
    assert rec.verdict == HOLDS_UNDER_CONVENTION
    return f"grid max {max(grid):.1e}, at 0.3+2i {off:.1e}, verdict {rec.verdict}, {tm.elapsed:.2f} s"


def criterion_5() -> str:
    with Timer(60.0) as tm:
        ref = oracles.scan_zeros(30.0)
        got = find_zeros(0.0, 30.0, 0.1)
        rep = critical_ratio_report(50.0)
    assert len(ref) == 3 and len(got) == 3, (ref, got)
    gaps = [abs(a.t - b) for a, b in zip(got, ref)]
    assert max(gaps) < 1e-4, gaps
    assert rep.ratio >= 0.99, rep
    assert rep.thresholds == THRESHOLDS and all(rep.passed.values()), rep.passed
    return f"zeros {[round(r.t, 6) for r in got]}, max gap {max(gaps):.1e}, ratio(50) {rep.ratio:.4f}, {tm.elapsed:.2f} s"


def criterion_6() -> str:
    with Timer(30.0) as tm:
        r1 = growth_fit(1.0, [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6])
        r0 = growth_fit(0.0, [10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6])
    ref = 1 / math.sqrt(17)
    assert abs(r1.fitted_exponent - 1.0) <= 0.15, r1.fitted_exponent
    assert abs(r1.fitted_coefficient - ref) <= 0.25 * ref, r1.fitted_coefficient
    assert r1.bounded_verdict is False
    assert abs(r0.fitted_exponent - 1.0) <= 1e-12, r0.fitted_exponent
    return (
        f"t=1 exponent {r1.fitted_exponent:.4f} coefficient {r1.fitted_coefficient:.4f} "
        f"(1/sqrt17 = {ref:.4f}) bounded={r1.bounded_verdict}; t=0 exponent {r0.fitted_exponent:.12f}, {tm.elapsed:.2f} s"
    )


def criterion_7() -> str:
    with Timer(5.0) as tm:
        worst = 0.0
        for t in (0.25, 1.0, 3.0):
            for w in (2.0, 10.0, 100.0):
                f = lambda x, t=t: np.cos(4.0 * t * np.log(x))  # noqa: E731
                worst = max(worst, abs(cos_integral_closed(t, w) - adaptive_quad(f, 1.0, w).value))
    assert worst < 1e-8, worst
    return f"9 pairs, max abs diff {worst:.1e}, {tm.elapsed:.2f} s"


def criterion_8() -> str:
    with Timer(5.0) as tm:
        rng = np.random.default_rng(8)
        regions = [ProfileRegion([1.5], [0.0], 0.0, 2.0), ProfileRegion([0.0, 1.0], [0.0], 0.0, 1.0)]
        regions += [random_polynomial_region(rng) for _ in range(20)]
        residuals = [pappus_residual(r) for r in regions]
        xi, eta = barycenter(regions[1])
    assert max(residuals) < 1e-10, max(residuals)
    assert abs(xi - 2 / 3) <= 1e-12 and abs(eta - 1 / 3) <= 1e-12, (xi, eta)
    return f"22 regions, max residual {max(residuals):.1e}, cone barycenter ({xi:.15f}, {eta:.15f}), {tm.elapsed:.2f} s"


def criterion_9() -> str:
    two_pi_ln2 = 2 * math.pi / math.log(2)
    with Timer(10.0) as tm:
        sweep = uniqueness_sweep_audit(seed=99, trials=100, N=1000)
        n2 = phase_condition_check(1.0 + two_pi_ln2, 1.0, 2)
        n3 = phase_condition_check(1.0 + two_pi_ln2, 1.0, 3)
    worst = sweep.computed["max_residual"]
    assert worst < 1e-12, worst
    assert n2.verdict == HOLDS and n2.computed["k"] == 1
    assert n3.verdict == FAILS
    return f"max termwise residual {worst:.1e}; n=2 {n2.verdict} (k=1), n=3 {n3.verdict}, {tm.elapsed:.2f} s"


def criterion_10() -> str:
    with tempfile.TemporaryDirectory() as tmp:
        outs = []
        for name in ("first.json", "second.json"):
            path = Path(tmp) / name
            proc = subprocess.run(
                [sys.executable, "-m", "zetalab", "audit-all", "--seed", "7", "--output", str(path)],
                capture_output=True,
                text=True,
            )
            assert proc.returncode == 0, proc.stderr
            outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    return f"two runs byte-identical ({len(outs[0])} bytes)"


CRITERIA = {
    1: ("appendix golden suite", criterion_1),
    2: ("cosine-theorem sweep", criterion_2),
    3: ("zeta values", criterion_3),
    4: ("functional equation grid", criterion_4),
    5: ("zero scout and ratio report", criterion_5),
    6: ("oscillatory growth audit", criterion_6),
    7: ("closed-form integral vs quadrature", criterion_7),
    8: ("pappus suite", criterion_8),
    9: ("identity sweep and phase condition", criterion_9),
    10: ("audit-all determinism", criterion_10),
}


def _record(number: int) -> None:
    name, fn = CRITERIA[number]
    try:
        detail = fn()
    except AssertionError as exc:
        RESULTS.append((number, name, False, str(exc) or "assertion failed"))
        raise
    RESULTS.append((number, name, True, detail))


def format_result(number: int, name: str, ok: bool, detail: str) -> str:
    return f"criterion {number:>2} {'PASS' if ok else 'FAIL'}  {name}: {detail}"


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    _record(number)
    print(format_result(*RESULTS[-1]))


if __name__ == "__main__":
    failed = 0
    for number in sorted(CRITERIA):
        try:
            _record(number)
        except AssertionError:
            failed += 1
        print(format_result(*RESULTS[-1]), flush=True)
    sys.exit(1 if failed else 0)
