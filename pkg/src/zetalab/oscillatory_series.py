"""
Partial sums of ``cos(4 t ln n)`` and ``sin(4 t ln n)``, their integral
analogue, and an empirical growth measurement of the partial sums.

For ``t != 0`` the sums are not bounded: Euler-Maclaurin gives
``sum_{n<=N} n**(4it) ~ N**(1+4it) / (1+4it)``, so the cosine sum swings with
amplitude close to ``N / sqrt(1 + 16 t**2)``.  :func:`growth_fit` measures that
growth directly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

__all__ = [
    "cos_partial",
    "sin_partial",
    "exp_partial",
    "partial_sums",
    "cos_integral_closed",
    "GrowthReport",
    "growth_fit",
    "BOUNDED_EXPONENT",
]

BOUNDED_EXPONENT = 0.1
MAX_TERMS = 10**7
_CHUNK = 1 << 20


def _check_n(N: int) -> None:
    if N < 1:
        raise ValueError("N must be >= 1")
    if N > MAX_TERMS:
        raise ValueError(f"N = {N} exceeds the supported maximum {MAX_TERMS}")


def _phase_chunks(t: float, N: int):
    for start in range(1, N + 1, _CHUNK):
        n = np.arange(start, min(N, start + _CHUNK - 1) + 1, dtype=np.float64)
        yield 4.0 * t * np.log(n)


def cos_partial(t: float, N: int) -> float:
    """``sum_{n=1}^{N} cos(4 t ln n)``."""
    _check_n(N)
    return math.fsum(math.fsum(np.cos(ph)) for ph in _phase_chunks(t, N))


def sin_partial(t: float, N: int) -> float:
    """``sum_{n=1}^{N} sin(4 t ln n)``."""
    _check_n(N)
    return math.fsum(math.fsum(np.sin(ph)) for ph in _phase_chunks(t, N))


def exp_partial(t: float, N: int) -> complex:
    """``sum_{n=1}^{N} n**(4it)``, i.e. ``cos_partial + i * sin_partial``."""
    return complex(cos_partial(t, N), sin_partial(t, N))


def partial_sums(t: float, N: int) -> np.ndarray:
    """Running cosine sums ``S_1 .. S_N`` in one forward pass (float64 cumsum)."""
    _check_n(N)
    out = np.empty(N)
    offset = 0.0
    pos = 0
    for ph in _phase_chunks(t, N):
        c = np.cumsum(np.cos(ph)) + offset
        out[pos:pos + c.size] = c
        pos += c.size
        offset = c[-1]
    return out


def cos_integral_closed(t: float, w: float) -> float:
    """``int_1^w cos(4 t ln x) dx`` from the antiderivative
    ``x (cos(4t ln x) + 4t sin(4t ln x)) / (1 + 16 t^2)``."""
    if w < 1:
        raise ValueError("w must be >= 1")
    k = 4.0 * t
    lw = math.log(w)
    upper = w * (math.cos(k * lw) + k * math.sin(k * lw))
    return (upper - 1.0) / (1.0 + k * k)


@dataclass
class GrowthReport:
    """Envelope of ``|cos_partial(t, N)|`` and its power-law fit ``c * N**alpha``.

    ``envelope[i]`` is ``max_{n <= sample_Ns[i]} |S_n|`` and ``peak_Ns[i]`` is
    the ``n`` at which that maximum was attained.  The fit regresses
    ``log envelope`` on ``log peak_Ns``: at a record peak the sum sits on its
    amplitude curve, whereas the sample point itself may fall anywhere in an
    oscillation.
    """

    t: float
    sample_Ns: list[int]
    envelope: list[float]
    peak_Ns: list[int]
    fitted_exponent: float
    fitted_coefficient: float
    bounded_verdict: bool
    threshold: float = BOUNDED_EXPONENT
    reference_amplitude: float = field(init=False)

    def __post_init__(self):
        # leading Euler-Maclaurin amplitude 1/sqrt(1+16t^2)
        self.reference_amplitude = 1.0 / math.sqrt(1.0 + 16.0 * self.t * self.t)

    @property
    def sin_delta(self) -> float:
        # the phase angle of 1 + 4it, as sin/cos of its complement
        return self.reference_amplitude

    @property
    def cos_delta(self) -> float:
        return 4.0 * self.t * self.reference_amplitude

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "sample_Ns": list(self.sample_Ns),
            "envelope": list(self.envelope),
            "peak_Ns": list(self.peak_Ns),
            "fitted_exponent": self.fitted_exponent,
            "fitted_coefficient": self.fitted_coefficient,
            "reference_amplitude": self.reference_amplitude,
            "sin_delta": self.sin_delta,
            "cos_delta": self.cos_delta,
            "bounded_verdict": self.bounded_verdict,
            "threshold": self.threshold,
        }


def growth_fit(t: float, Ns: Sequence[int]) -> GrowthReport:
    Ns = [int(n) for n in Ns]
    if len(Ns) < 4:
        raise ValueError("growth_fit needs at least 4 sample sizes")
    if any(b <= a for a, b in zip(Ns, Ns[1:])) or Ns[0] < 1:
        raise ValueError("sample sizes must be positive and strictly increasing")

    S = np.abs(partial_sums(t, Ns[-1]))
    env = np.maximum.accumulate(S)
    idx = np.arange(S.size)
    # position of the latest record (ties count as new records)
    peak = np.maximum.accumulate(np.where(S >= env, idx, 0)) + 1

    sel = np.array(Ns) - 1
    e = env[sel]
    p = peak[sel]

    if np.all(e == e[0]) or np.any(e <= 0.0):
        alpha, coeff = 0.0, float(e[0])
    else:
        x = np.log(p.astype(float))
        y = np.log(e)
        if np.ptp(x) == 0.0:
            alpha, coeff = 0.0, float(np.exp(np.mean(y)))
        else:
            alpha, intercept = np.polyfit(x, y, 1)
            alpha, coeff = float(alpha), float(np.exp(intercept))

    return GrowthReport(
        t=float(t),
        sample_Ns=Ns,
        envelope=[float(v) for v in e],
        peak_Ns=[int(v) for v in p],
        fitted_exponent=alpha,
        fitted_coefficient=coeff,
        bounded_verdict=alpha < BOUNDED_EXPONENT,
    )
