"""Toeplitz and symmetric Toeplitz determinant functionals on low-order coefficients.

For a normalized function with coefficients a2, a3, a4 the conjugated
(Toeplitz) determinants T_{2,1}, T_{3,1} are real by Hermitian symmetry;
the symmetric variants drop the conjugation and are genuinely complex.
Callers compare moduli against bounds; the signed or complex values are
kept because extremal verification needs them exactly.

All functions accept python scalars or numpy arrays alike.
"""

from __future__ import annotations

from enum import Enum

__all__ = [
    "COEFF_WINDOW",
    "FunctionalId",
    "bound_value",
    "evaluate",
    "inversion_invariance_check",
    "t21",
    "t31",
    "ts22",
    "ts23",
    "ts31",
    "ts32",
]


class FunctionalId(Enum):
    T21 = "t21"
    T31 = "t31"
    TS22 = "ts22"
    TS23 = "ts23"
    TS31 = "ts31"
    TS32 = "ts32"


#: Which coefficient indices each determinant is built from.
COEFF_WINDOW: dict[FunctionalId, tuple[int, ...]] = {
    FunctionalId.T21: (2, 3),
    FunctionalId.T31: (2, 3),
    FunctionalId.TS22: (2, 3),
    FunctionalId.TS31: (2, 3),
    FunctionalId.TS23: (2, 3, 4),
    FunctionalId.TS32: (2, 3, 4),
}


def t21(a2):
    """1 - |a2|^2."""
    return 1.0 - abs(a2) ** 2


def t31(a2, a3):
    """2 Re(a2^2 conj(a3)) - 2|a2|^2 - |a3|^2 + 1 (real by construction)."""
    return (2.0 * (a2 * a2 * a3.conjugate()).real
            - 2.0 * abs(a2) ** 2 - abs(a3) ** 2 + 1.0)


def ts22(a2, a3):
    """a2^2 - a3^2."""
    return a2 * a2 - a3 * a3


def ts23(a3, a4):
    """a3^2 - a4^2."""
    return a3 * a3 - a4 * a4


def ts31(a2, a3):
    """1 - 2 a2^2 + 2 a2^2 a3 - a3^2."""
    return 1.0 - 2.0 * a2 * a2 + 2.0 * a2 * a2 * a3 - a3 * a3


def ts32(a2, a3, a4):
    """(a2 - a4)(a2^2 - 2 a3^2 + a2 a4)."""
    return (a2 - a4) * (a2 * a2 - 2.0 * a3 * a3 + a2 * a4)


def evaluate(fid: FunctionalId, a2, a3, a4=None):
    """Dispatch on the functional tag; a4 is required for TS23 and TS32."""
    if fid is FunctionalId.T21:
        return t21(a2)
    if fid is FunctionalId.T31:
        return t31(a2, a3)
    if fid is FunctionalId.TS22:
        return ts22(a2, a3)
    if fid is FunctionalId.TS31:
        return ts31(a2, a3)
    if a4 is None:
        raise ValueError(f"{fid.name} needs the coefficient a4")
    if fid is FunctionalId.TS23:
        return ts23(a3, a4)
    return ts32(a2, a3, a4)


def bound_value(fid: FunctionalId, a2, a3, a4=None):
    """The number compared against bounds: signed for T21/T31, modulus otherwise."""
    value = evaluate(fid, a2, a3, a4)
    if fid in (FunctionalId.T21, FunctionalId.T31):
        return value
    return abs(value)


def inversion_invariance_check(a2, a3):
    """Evaluate T21 and TS31 on (a2, a3) and on the induced inverse pair.

    The inverse pair is (A2, A3) = (-a2, 2 a2^2 - a3).  Returns
    (t21(a2), t21(A2), ts31(a2, a3), ts31(A2, A3)); both determinant
    families are invariant under inversion, so the entries must agree
    pairwise, which the property suite asserts.
    """
    A2 = -a2
    A3 = 2.0 * a2 * a2 - a3
    return (t21(a2), t21(A2), ts31(a2, a3), ts31(A2, A3))
