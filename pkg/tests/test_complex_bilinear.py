from __future__ import annotations

import cmath
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import exact_bdot, half_angle_sqrt
from zetalab.appendix import EXAMPLES, check_example, computed_values
from zetalab.complex_bilinear import (
    CVector,
    ExactComplex,
    bcos_angle,
    bdot,
    bnorm,
    bnorm_sq,
    cosine_theorem_residual,
    principal_sqrt,
    triangle_area,
    triangle_area_sq,
)
from zetalab.errors import DimensionError, IsotropicVectorError

gauss_int = st.builds(complex, st.integers(-50, 50), st.integers(-50, 50))
finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
float_c = st.builds(complex, finite, finite)


def vectors(elem, min_dim=1, max_dim=8, count=2):
    return st.integers(min_dim, max_dim).flatmap(
        lambda n: st.tuples(*[st.lists(elem, min_size=n, max_size=n) for _ in range(count)])
    )


# --- golden values ------------------------------------------------------------


@pytest.mark.parametrize("ex", EXAMPLES, ids=lambda e: e.name)
def test_printed_values_exact(ex):
    got = computed_values(ex, exact=True)
    for key, printed in ex.printed.items():
        assert got[key] == printed, key


@pytest.mark.parametrize("ex", EXAMPLES, ids=lambda e: e.name)
def test_printed_values_float(ex):
    rows = check_example(ex)
    assert all(r["float_ok"] for r in rows), [r for r in rows if not r["float_ok"]]


@pytest.mark.parametrize("ex", EXAMPLES, ids=lambda e: e.name)
def test_cosine_theorem_at_both_apexes(ex):
    got = computed_values(ex, exact=True)
    assert got["cosine_residual(A)"] == 0
    assert got["cosine_residual(C)"] == 0


def test_example_one_by_hand():
    A = CVector.exact([1 + 1j, 3])
    B = CVector.exact([-1j, 2j])
    C = CVector.exact([1, -1j])
    ab, ac = B - A, C - A
    assert ab.entries == (ExactComplex(-1, -2), ExactComplex(-3, 2))
    assert bdot(ab, ac) == ExactComplex(9, -2)
    assert triangle_area_sq(A, B, C) == ExactComplex(Fraction(-15, 4), -2)


def test_area_sq_symmetric_in_vertex_order():
    for ex in EXAMPLES:
        A, B, C = (CVector.exact(v) for v in (ex.A, ex.B, ex.C))
        ref = triangle_area_sq(A, B, C)
        for perm in ((A, C, B), (B, A, C), (B, C, A), (C, A, B), (C, B, A)):
            assert triangle_area_sq(*perm) == ref


# --- exact arithmetic ---------------------------------------------------------


def test_exact_complex_rejects_non_integer_floats():
    with pytest.raises(TypeError):
        ExactComplex.coerce(0.5 + 1j)
    assert ExactComplex.coerce(Fraction(1, 3)) == ExactComplex(Fraction(1, 3), 0)


def test_exact_division():
    z = ExactComplex(3, 4) / ExactComplex(1, 2)
    assert z == ExactComplex(Fraction(11, 5), Fraction(-2, 5))
    with pytest.raises(ZeroDivisionError):
        ExactComplex(1) / ExactComplex(0)


@given(vectors(gauss_int))
def test_exact_bdot_matches_fraction_oracle(pair):
    u, v = pair
    got = bdot(CVector.exact(u), CVector.exact(v))
    re, im = exact_bdot(u, v)
    assert got == ExactComplex(re, im)


@given(vectors(gauss_int))
def test_float_bdot_equals_exact_on_small_integers(pair):
    u, v = pair
    assert bdot(CVector(u), CVector(v)) == complex(bdot(CVector.exact(u), CVector.exact(v)))


# --- algebraic properties -----------------------------------------------------


@given(vectors(gauss_int))
def test_bdot_symmetric(pair):
    u, v = (CVector.exact(x) for x in pair)
    assert bdot(u, v) == bdot(v, u)


@given(vectors(gauss_int, count=3), gauss_int, gauss_int)
def test_bdot_bilinear(triple, a, b):
    u, v, w = (CVector.exact(x) for x in triple)
    lhs = bdot(u.scale(a) + v.scale(b), w)
    rhs = ExactComplex.coerce(a) * bdot(u, w) + ExactComplex.coerce(b) * bdot(v, w)
    assert lhs == rhs


@given(vectors(gauss_int, count=3))
def test_cosine_theorem_exact(triple):
    A, B, C = (CVector.exact(x) for x in triple)
    assert cosine_theorem_residual(A, B, C) == 0


@settings(max_examples=200)
@given(vectors(float_c, min_dim=2, count=3))
def test_cosine_theorem_float_relative(triple):
    A, B, C = (CVector(x) for x in triple)
    res = abs(complex(cosine_theorem_residual(A, B, C)))
    scale = float(np.sum(np.abs((B - A).as_array()) ** 2) + np.sum(np.abs((C - A).as_array()) ** 2))
    assert res <= 1e-12 * max(scale, 1e-300)


@given(vectors(gauss_int, count=1))
def test_bnorm_sq_is_unconjugated(single):
    (u,) = single
    expected = sum(complex(x) ** 2 for x in u)
    assert complex(bnorm_sq(CVector.exact(u))) == expected


# --- branch handling ----------------------------------------------------------


@given(float_c)
def test_principal_sqrt_matches_half_angle(z):
    r = principal_sqrt(z)
    ref = half_angle_sqrt(z)
    assert abs(r - ref) <= 1e-14 * max(1.0, abs(ref))
    assert r.real >= 0.0


def test_principal_sqrt_negative_axis_signed_zero():
    assert principal_sqrt(complex(-4.0, -0.0)) == 2j
    assert principal_sqrt(complex(-4.0, 0.0)) == 2j
    assert cmath.sqrt(complex(-4.0, -0.0)) == -2j  # the pitfall being avoided


def test_bnorm_of_negative_square():
    assert bnorm(CVector([2j])) == 2j


def test_triangle_area_is_root_of_area_sq():
    ex = EXAMPLES[1]
    A, B, C = (CVector(v) for v in (ex.A, ex.B, ex.C))
    area = triangle_area(A, B, C)
    assert abs(area * area - complex(triangle_area_sq(A, B, C))) < 1e-12
    assert area.real >= 0


# --- errors -------------------------------------------------------------------


def test_isotropic_vector_has_no_angle():
    iso = CVector([1, 1j])
    assert bnorm_sq(iso) == 0
    with pytest.raises(IsotropicVectorError):
        bcos_angle(iso, CVector([1, 0]))
    with pytest.raises(IsotropicVectorError):
        bcos_angle(CVector.exact([1, 1j]), CVector.exact([1, 0]))


def test_zero_vector_has_no_angle():
    with pytest.raises(IsotropicVectorError):
        bcos_angle(CVector([0, 0]), CVector([1, 2]))


def test_real_vectors_reduce_to_euclidean_cosine():
    u, v = CVector([3, 0]), CVector([1, 1])
    assert abs(bcos_angle(u, v) - 1 / np.sqrt(2)) < 1e-15


def test_dimension_errors():
    with pytest.raises(DimensionError):
        CVector([])
    with pytest.raises(DimensionError):
        bdot(CVector([1, 2]), CVector([1, 2, 3]))
    with pytest.raises(DimensionError):
        CVector([1]) + CVector([1, 2])


def test_non_finite_entries_rejected():
    with pytest.raises(ValueError):
        CVector([float("nan")])
    with pytest.raises(ValueError):
        CVector.from_array(np.array([1.0, np.inf]))


def test_vectors_are_read_only():
    v = CVector([1, 2])
    with pytest.raises(ValueError):
        v.as_array()[0] = 5
