"""
Bilinear (unconjugated) geometry on complex vectors.

Every product here is ``sum(u_k * v_k)`` with no complex conjugation, so a
nonzero vector may have zero "length" (e.g. ``(1, i)``).  Vectors built from
Gaussian rationals via :meth:`CVector.exact` keep exact arithmetic all the way
through dot products, squared norms and squared areas; float vectors use
compensated summation.
"""

from __future__ import annotations

import cmath
import enum
import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

import numpy as np

from .errors import DimensionError, IsotropicVectorError

__all__ = [
    "ExactComplex",
    "CVector",
    "BranchPolicy",
    "principal_sqrt",
    "bdot",
    "bnorm_sq",
    "bnorm",
    "bcos_angle",
    "cosine_theorem_residual",
    "triangle_area_sq",
    "triangle_area",
]


class ExactComplex:
    """Gaussian rational ``re + im*i`` with :class:`fractions.Fraction` parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "ExactComplex":
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, (Rational, int)):
            return cls(value, 0)
        if isinstance(value, (float, complex)):
            z = complex(value)
            if not (z.real.is_integer() and z.imag.is_integer()):
                raise TypeError(f"{value!r} is not a Gaussian integer; pass Fractions for exact rationals")
            return cls(int(z.real), int(z.imag))
        raise TypeError(f"cannot convert {type(value).__name__} to ExactComplex")

    def _other(self, other):
        try:
            return ExactComplex.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return ExactComplex(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("ExactComplex division by zero")
        num = self * ExactComplex(o.re, -o.im)
        return ExactComplex(num.re / den, num.im / den)

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __eq__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __abs__(self):
        return abs(complex(self))

    def __repr__(self):
        return f"ExactComplex({self.re}, {self.im})"

    def __str__(self):
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"


Scalar = Union[complex, ExactComplex]


class BranchPolicy(enum.Enum):
    """Square-root branch; only the principal branch is supported."""

    PRINCIPAL = "principal"


def principal_sqrt(z, policy: BranchPolicy = BranchPolicy.PRINCIPAL) -> complex:
    """Principal square root: ``Re >= 0``; on the negative real axis the result is ``+i*r``.

    ``cmath.sqrt`` honours the sign of a zero imaginary part, so ``-4-0j``
    would map to ``-2j``.  The zero is normalised first.
    """
    if policy is not BranchPolicy.PRINCIPAL:
        raise ValueError(f"unsupported branch policy {policy!r}")
    z = complex(z)
    if z.imag == 0.0:
        z = complex(z.real, 0.0)
    return cmath.sqrt(z)


class CVector:
    """Finite complex vector with a fixed positive dimension.

    Entries are stored either as a ``complex128`` array (float path) or as an
    object array of :class:`ExactComplex` (exact path).  Instances are treated
    as immutable.
    """

    __slots__ = ("_data", "_exact")

    def __init__(self, entries: Iterable, *, exact: bool = False):
        items = list(entries.tolist() if isinstance(entries, np.ndarray) else entries)
        if not items:
            raise DimensionError("CVector needs dimension >= 1")
        if exact:
            data = np.empty(len(items), dtype=object)
            data[:] = [ExactComplex.coerce(x) for x in items]
        else:
            data = np.array([complex(x) for x in items], dtype=np.complex128)
            if not np.all(np.isfinite(data)):
                raise ValueError("CVector entries must be finite")
        data.flags.writeable = False
        self._data = data
        self._exact = exact

    @classmethod
    def exact(cls, entries: Iterable) -> "CVector":
        """Build an exact vector from Gaussian integers/rationals."""
        return cls(entries, exact=True)

    @classmethod
    def from_array(cls, array: np.ndarray) -> "CVector":
        # fast path for large float vectors; skips per-entry conversion
        data = np.ascontiguousarray(array, dtype=np.complex128)
        if data.ndim != 1 or data.size == 0:
            raise DimensionError("CVector needs a non-empty 1-D array")
        if not np.all(np.isfinite(data)):
            raise ValueError("CVector entries must be finite")
        obj = cls.__new__(cls)
        data = data.copy()
        data.flags.writeable = False
        obj._data = data
        obj._exact = False
        return obj

    @property
    def is_exact(self) -> bool:
        return self._exact

    @property
    def dim(self) -> int:
        return self._data.shape[0]

    @property
    def entries(self) -> tuple:
        return tuple(self._data.tolist())

    def as_array(self) -> np.ndarray:
        if self._exact:
            return np.array([complex(x) for x in self._data], dtype=np.complex128)
        return self._data

    def to_float(self) -> "CVector":
        return self if not self._exact else CVector.from_array(self.as_array())

    def _combine(self, other: "CVector", op) -> "CVector":
        if not isinstance(other, CVector):
            return NotImplemented
        _check_dims(self, other)
        if self._exact and other._exact:
            return CVector([op(a, b) for a, b in zip(self._data, other._data)], exact=True)
        return CVector.from_array(op(self.as_array(), other.as_array()))

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self):
        if self._exact:
            return CVector([-a for a in self._data], exact=True)
        return CVector.from_array(-self._data)

    def scale(self, alpha) -> "CVector":
        if self._exact and not isinstance(alpha, (float, complex)):
            a = ExactComplex.coerce(alpha)
            return CVector([a * x for x in self._data], exact=True)
        return CVector.from_array(complex(alpha) * self.as_array())

    def __len__(self):
        return self.dim

    def __eq__(self, other):
        if not isinstance(other, CVector) or other.dim != self.dim:
            return NotImplemented if not isinstance(other, CVector) else False
        return all(complex(a) == complex(b) for a, b in zip(self._data, other._data))

    def __hash__(self):
        return hash(tuple(complex(x) for x in self._data))

    def __repr__(self):
        kind = "exact" if self._exact else "float"
        return f"CVector({list(self.entries)!r}, {kind})"


def _check_dims(u: CVector, v: CVector) -> None:
    if u.dim != v.dim:
        raise DimensionError(f"dimension mismatch: {u.dim} vs {v.dim}")


def bdot(u: CVector, v: CVector) -> Scalar:
    """Bilinear product ``sum_k u_k v_k`` (no conjugation).

    Exact when both vectors are exact, otherwise the real and imaginary parts
    of the products are summed with :func:`math.fsum`.
    """
    _check_dims(u, v)
    if u.is_exact and v.is_exact:
        total = ExactComplex(0)
        for a, b in zip(u._data, v._data):
            total = total + a * b
        return total
    p = u.as_array() * v.as_array()
    return complex(math.fsum(p.real), math.fsum(p.imag))


def bnorm_sq(u: CVector) -> Scalar:
    """Squared bilinear length ``bdot(u, u)``; may vanish for nonzero ``u``."""
    return bdot(u, u)


def bnorm(u: CVector, policy: BranchPolicy = BranchPolicy.PRINCIPAL) -> complex:
    return principal_sqrt(complex(bnorm_sq(u)), policy)


def _is_isotropic(u: CVector, sq: Scalar) -> bool:
    if u.is_exact:
        return sq == 0
    scale = float(np.sum(np.abs(u.as_array()) ** 2))
    return abs(complex(sq)) <= 8 * np.finfo(float).eps * scale


def bcos_angle(u: CVector, v: CVector, policy: BranchPolicy = BranchPolicy.PRINCIPAL) -> complex:
    """Cosine of the bilinear angle, ``bdot(u, v) / (bnorm(u) * bnorm(v))``.

    Raises
    ------
    IsotropicVectorError
        If either vector has (numerically) zero bilinear length.
    """
    _check_dims(u, v)
    su, sv = bnorm_sq(u), bnorm_sq(v)
    if _is_isotropic(u, su) or _is_isotropic(v, sv):
        raise IsotropicVectorError("angle undefined for isotropic or zero vectors")
    return complex(bdot(u, v)) / (principal_sqrt(su, policy) * principal_sqrt(sv, policy))


def _edges(A: CVector, B: CVector, C: CVector):
    _check_dims(A, B)
    _check_dims(A, C)
    return B - A, C - A, C - B


def cosine_theorem_residual(A: CVector, B: CVector, C: CVector) -> Scalar:
    """``(|AB|^2 + |AC|^2 - |BC|^2)/2 - AB.AC``, identically zero in exact arithmetic."""
    ab, ac, bc = _edges(A, B, C)
    total = bnorm_sq(ab) + bnorm_sq(ac) - bnorm_sq(bc)
    half = total / 2 if isinstance(total, ExactComplex) else total / 2.0
    return half - bdot(ab, ac)


def triangle_area_sq(A: CVector, B: CVector, C: CVector) -> Scalar:
    """Branch-free squared area ``(|AB|^2 |AC|^2 - (AB.AC)^2) / 4``."""
    ab, ac, _ = _edges(A, B, C)
    d = bdot(ab, ac)
    gram = bnorm_sq(ab) * bnorm_sq(ac) - d * d
    return gram / 4 if isinstance(gram, ExactComplex) else gram / 4.0


def triangle_area(A: CVector, B: CVector, C: CVector, policy: BranchPolicy = BranchPolicy.PRINCIPAL) -> complex:
    return principal_sqrt(complex(triangle_area_sq(A, B, C)), policy)
