"""
The three worked triangles with Gaussian-integer vertices, and the values
printed for them.  Each printed quantity is recomputed in exact arithmetic
and in floating point by :func:`check_example`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex_bilinear import (
    CVector,
    ExactComplex,
    bdot,
    bnorm_sq,
    cosine_theorem_residual,
    triangle_area_sq,
)


def _g(re, im=0) -> ExactComplex:
    return ExactComplex(re, im)


@dataclass(frozen=True)
class TriangleExample:
    name: str
    A: tuple
    B: tuple
    C: tuple
    printed: dict


EXAMPLES = (
    TriangleExample(
        name="example1",
        A=(1 + 1j, 3),
        B=(-1j, 2j),
        C=(1, -1j),
        printed={
            "|AB|^2": _g(2, -8),
            "|AC|^2": _g(7, 6),
            "|BC|^2": _g(-9, 2),
            "AB.AC": _g(9, -2),
            "AC.BC": _g(-2, 8),
            "|AB|^2|AC|^2": _g(62, -44),
            "|AC|^2|BC|^2": _g(-75, -40),
            "area_sq(ABC)": _g(-15, -8) / 4,
            "area_sq(ACB)": _g(-15, -8) / 4,
        },
    ),
    TriangleExample(
        name="example2",
        A=(1 + 1j, 1 - 1j, 2j),
        B=(1 - 1j, 1 + 1j, -2j),
        C=(1, 0, 1j),
        printed={
            "|AB|^2": _g(-24),
            "|AC|^2": _g(-2, -2),
            "|BC|^2": _g(-10, 2),
            "AB.AC": _g(-8, -2),
            "AC.BC": _g(6),
            "|AB|^2|AC|^2": _g(48, 48),
            "|AC|^2|BC|^2": _g(24, 16),
            "area_sq(ABC)": _g(-3, 4),
            "area_sq(ACB)": _g(-3, 4),
        },
    ),
    TriangleExample(
        name="example3",
        A=(8j, 14, 8 - 1j, 1),
        B=(6, 15j, 17, -8),
        C=(3 - 1j, 10 + 7j, 11, 3j),
        printed={
            "|AB|^2": _g(104, -498),
            "|AC|^2": _g(-105, -110),
            "|BC|^2": _g(135, -106),
            "AB.AC": _g(-68, -251),
            "AC.BC": _g(-37, 141),
            "|AB|^2|AC|^2": _g(-65700, 40850),
            "|AC|^2|BC|^2": _g(-25835, -3720),
            "area_sq(ABC)": _g(-7323, 6714) / 4,
            "area_sq(ACB)": _g(-7323, 6714) / 4,
        },
    ),
)


def computed_values(ex: TriangleExample, exact: bool = True) -> dict:
    make = CVector.exact if exact else CVector
    A, B, C = make(ex.A), make(ex.B), make(ex.C)
    ab, ac, bc = B - A, C - A, C - B
    out = {
        "|AB|^2": bnorm_sq(ab),
        "|AC|^2": bnorm_sq(ac),
        "|BC|^2": bnorm_sq(bc),
        "AB.AC": bdot(ab, ac),
        "AC.BC": bdot(ac, bc),
        "|AB|^2|AC|^2": bnorm_sq(ab) * bnorm_sq(ac),
        "|AC|^2|BC|^2": bnorm_sq(ac) * bnorm_sq(bc),
        "area_sq(ABC)": triangle_area_sq(A, B, C),
        "area_sq(ACB)": triangle_area_sq(A, C, B),
        "cosine_residual(A)": cosine_theorem_residual(A, B, C),
        # angle at C: the same identity with C as the apex
        "cosine_residual(C)": cosine_theorem_residual(C, A, B),
    }
    return out


def check_example(ex: TriangleExample, rel_tol: float = 1e-12) -> list[dict]:
    """One row per printed value: exact match flag and float relative error."""
    exact = computed_values(ex, exact=True)
    approx = computed_values(ex, exact=False)
    rows = []
    for key, printed in ex.printed.items():
        p = complex(printed)
        rel = abs(complex(approx[key]) - p) / max(abs(p), 1e-300)
        rows.append({
            "example": ex.name,
            "quantity": key,
            "printed": str(printed),
            "exact": str(exact[key]),
            "exact_match": exact[key] == printed,
            "float_rel_err": rel,
            "float_ok": rel <= rel_tol,
        })
    for key in ("cosine_residual(A)", "cosine_residual(C)"):
        rows.append({
            "example": ex.name,
            "quantity": key,
            "printed": "0",
            "exact": str(exact[key]),
            "exact_match": exact[key] == 0,
            "float_rel_err": abs(complex(approx[key])),
            "float_ok": abs(complex(approx[key])) <= rel_tol,
        })
    return rows
