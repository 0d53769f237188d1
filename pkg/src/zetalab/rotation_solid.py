"""
Plane regions between two profiles and the solids they sweep out.

A :class:`ProfileRegion` is the set ``{(z, r): a <= z <= b, g(z) <= r <= f(z)}``.
Rotating it about the z axis gives a solid of volume ``pi int (f^2 - g^2)``;
the region's centroid ordinate ``eta`` satisfies the Pappus relation
``volume = 2 pi eta * area``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence, Union

import numpy as np
from numpy.polynomial import Polynomial

from .errors import DegenerateRegionError
from .quadrature import adaptive_quad
from .zeta_core import SLike, as_spoint, zeta_partial

__all__ = [
    "ProfileRegion",
    "barycenter",
    "pappus_residual",
    "pappus_sides",
    "cylinder_volume",
    "implied_eta",
    "random_polynomial_region",
]

Profile = Union[Sequence[float], Callable[[np.ndarray], np.ndarray]]
QUAD_TOL = 1e-12
_SAMPLES = 257


@dataclass(frozen=True)
class ProfileRegion:
    """Region between outer profile ``f`` and inner profile ``g`` on ``[a, b]``.

    Profiles are coefficient lists (lowest degree first) or vectorised
    callables.  ``0 <= g <= f`` is checked on a uniform sample grid.
    """

    f: Profile
    g: Profile
    a: float
    b: float

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or not self.a < self.b:
            raise ValueError(f"need finite a < b, got [{self.a}, {self.b}]")
        z = np.linspace(self.a, self.b, _SAMPLES)
        fz, gz = self.outer(z), self.inner(z)
        slack = 1e-12 * max(1.0, float(np.max(np.abs(fz))))
        if np.any(gz < -slack) or np.any(fz < gz - slack):
            raise ValueError("profiles must satisfy f >= g >= 0 on [a, b]")

    @property
    def is_polynomial(self) -> bool:
        return not callable(self.f) and not callable(self.g)

    def _poly(self, p) -> Polynomial:
        return Polynomial(np.asarray(p, dtype=float))

    def outer(self, z):
        return self._poly(self.f)(z) if not callable(self.f) else np.asarray(self.f(z), dtype=float)

    def inner(self, z):
        return self._poly(self.g)(z) if not callable(self.g) else np.asarray(self.g(z), dtype=float)

    def shifted(self, delta: float) -> "ProfileRegion":
        """Same region translated by ``delta`` along the axis."""
        if self.is_polynomial:
            move = Polynomial([-delta, 1.0])
            f = self._poly(self.f)(move).coef
            g = self._poly(self.g)(move).coef
            return ProfileRegion(list(f), list(g), self.a + delta, self.b + delta)
        f0, g0 = self.f, self.g
        return ProfileRegion(
            (lambda z: self.outer(np.asarray(z) - delta)) if callable(f0) else f0,
            (lambda z: self.inner(np.asarray(z) - delta)) if callable(g0) else g0,
            self.a + delta,
            self.b + delta,
        )

    def scaled(self, k: float) -> "ProfileRegion":
        """Both profiles multiplied by ``k > 0``."""
        if self.is_polynomial:
            return ProfileRegion([k * c for c in self.f], [k * c for c in self.g], self.a, self.b)
        return ProfileRegion(lambda z: k * self.outer(z), lambda z: k * self.inner(z), self.a, self.b)


def _moments(r: ProfileRegion) -> tuple[float, float, float]:
    """(int (f-g), int z (f-g), int (f^2-g^2)/2), exact for polynomials."""
    if r.is_polynomial:
        # re-expand about z = a so that shifted regions see the same cancellation
        local = Polynomial([r.a, 1.0])
        d = r._poly(r.f)(local) - r._poly(r.g)(local)
        total = r._poly(r.f)(local) + r._poly(r.g)(local)
        u = Polynomial([0.0, 1.0])
        width = r.b - r.a
        area, first_local, half_sq = (
            float(p.integ()(width)) for p in (d, u * d, 0.5 * d * total)
        )
        return area, r.a * area + first_local, half_sq
    area = adaptive_quad(lambda z: r.outer(z) - r.inner(z), r.a, r.b, QUAD_TOL).value
    first = adaptive_quad(lambda z: z * (r.outer(z) - r.inner(z)), r.a, r.b, QUAD_TOL).value
    half_sq = adaptive_quad(lambda z: 0.5 * (r.outer(z) ** 2 - r.inner(z) ** 2), r.a, r.b, QUAD_TOL).value
    return area, first, half_sq


def barycenter(r: ProfileRegion) -> tuple[float, float]:
    """Centroid ``(xi, eta)`` of the region: axial and radial coordinates.

    ``eta`` belongs to the half-lamina ``g <= y <= f``, not to the full
    cross-section through the axis (whose centroid lies on the axis).
    """
    area, first, half_sq = _moments(r)
    if area == 0.0:
        raise DegenerateRegionError("region has zero area")
    return first / area, half_sq / area


def pappus_sides(r: ProfileRegion) -> tuple[float, float]:
    """``(volume, 2 pi eta * area)``.

    ``eta`` comes from :func:`barycenter`; volume and area are recomputed by
    adaptive quadrature of the profiles, so for polynomial regions the two
    sides are reached by different routes.
    """
    _, eta = barycenter(r)
    volume = math.pi * adaptive_quad(lambda z: r.outer(z) ** 2 - r.inner(z) ** 2, r.a, r.b, QUAD_TOL).value
    area = adaptive_quad(lambda z: r.outer(z) - r.inner(z), r.a, r.b, QUAD_TOL).value
    return volume, 2.0 * math.pi * eta * area


def pappus_residual(r: ProfileRegion) -> float:
    volume, swept = pappus_sides(r)
    return abs(volume - swept)


def random_polynomial_region(rng: np.random.Generator) -> ProfileRegion:
    """Random region of degree <= 4 with unit-scale profiles and interval."""
    deg = int(rng.integers(0, 5))
    taper = np.array([1.0] + [0.2] * deg)
    g = list(rng.uniform(0.0, 1.0, size=deg + 1) * taper)
    bump = list(rng.uniform(0.1, 1.0, size=deg + 1) * taper)
    f = [gi + bi for gi, bi in zip(g, bump)]
    a = float(rng.uniform(0.0, 1.0))
    return ProfileRegion(f, g, a, a + float(rng.uniform(0.5, 2.0)))


def cylinder_volume(n: int, s) -> complex:
    """Formal cylinder volume ``pi * n**(-2s)`` of radius ``n**-s`` and unit height."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return math.pi * complex(np.exp(-2.0 * complex(s) * math.log(n)))


def implied_eta(s: SLike, N: int) -> complex:
    """Complex ordinate forced by ``pi Z(2s) = 2 pi eta Z(s)`` at truncation ``N``.

    Returns ``zeta_partial(2s, N) / (2 zeta_partial(s, N))``; purely formal for
    complex ``s``.
    """
    p = as_spoint(s)
    den = zeta_partial(p, N)
    if den == 0:
        raise DegenerateRegionError("partial zeta sum vanishes; quotient undefined")
    return zeta_partial(2.0 * p.s, N) / (2.0 * den)
