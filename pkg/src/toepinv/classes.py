"""Coefficient maps for the bounded-turning, starlike and convex classes.

Members of each class correspond to Schwarz functions omega through the
usual subordination identities (f' = (1+omega)/(1-omega) for bounded
turning, zf'/f and 1 + zf''/f' analogously for starlike and convex).
Comparing Taylor coefficients gives closed forms for (a2, a3, a4) in
terms of the Schwarz coefficients (c1, c2, c3), and pushing those
through series reversion gives the inverse coefficients (A2, A3, A4):

  bounded turning   a = (c1, (2/3)(c2 + c1^2), (1/2)(c3 + 2 c1 c2 + c1^3))
                    A = (-c1, -(2/3)c2 + (4/3)c1^2,
                         -(1/2)(c3 - (14/3) c1 c2 + (13/3) c1^3))
  starlike          a = (2 c1, c2 + 3 c1^2, (2/3)(c3 + 5 c1 c2 + 6 c1^3))
                    A = (-2 c1, -c2 + 5 c1^2,
                         -(2/3)(c3 - 10 c1 c2 + 21 c1^3))
  convex            a = (c1, (1/3)(c2 + 3 c1^2), (1/6)(c3 + 5 c1 c2 + 6 c1^3))
                    A = (-c1, -(1/3)(c2 - 3 c1^2),
                         -(1/6)(c3 - 5 c1 c2 + 6 c1^3))

Each A row is identically the generic reversion closed form applied to
the a row; the test suite checks this, so the two derivations guard
each other.

The full univalent class S has no finite coefficient parametrization,
so it appears only through the extremal catalog: explicit functions
whose determinant values attain the known sharp bounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Mapping

from .errors import UnsupportedClassError
from .functionals import FunctionalId
from .series import CoeffTriple, InverseTriple

__all__ = [
    "ClassId",
    "ExactComplex",
    "ExtremalEntry",
    "extremal_catalog",
    "forward_map",
    "inverse_map",
]


class ClassId(Enum):
    S = "s"              # full univalent class; extremal catalog only
    R = "r"              # bounded turning, Re f' > 0
    STARLIKE = "star"    # Re(z f'/f) > 0
    CONVEX = "convex"    # Re(1 + z f''/f') > 0


_PARAMETRIZED = (ClassId.R, ClassId.STARLIKE, ClassId.CONVEX)


def _require_parametrized(class_id: ClassId) -> None:
    if class_id not in _PARAMETRIZED:
        raise UnsupportedClassError(
            f"class {class_id.name} has no Schwarz-coefficient parametrization"
        )


def forward_map(class_id: ClassId, c: CoeffTriple) -> CoeffTriple:
    """(a2, a3, a4) of the class member generated by Schwarz coefficients c."""
    _require_parametrized(class_id)
    c1, c2, c3 = c
    if class_id is ClassId.R:
        return CoeffTriple(
            c1,
            (2.0 / 3.0) * (c2 + c1 * c1),
            0.5 * (c3 + 2.0 * c1 * c2 + c1 ** 3),
        )
    if class_id is ClassId.STARLIKE:
        return CoeffTriple(
            2.0 * c1,
            c2 + 3.0 * c1 * c1,
            (2.0 / 3.0) * (c3 + 5.0 * c1 * c2 + 6.0 * c1 ** 3),
        )
    return CoeffTriple(
        c1,
        (c2 + 3.0 * c1 * c1) / 3.0,
        (c3 + 5.0 * c1 * c2 + 6.0 * c1 ** 3) / 6.0,
    )


def inverse_map(class_id: ClassId, c: CoeffTriple) -> InverseTriple:
    """(A2, A3, A4) of the inverse of the member generated by c.

    Identically equal to ``inverse_coeffs_closed_form(forward_map(...))``;
    written out so each class has its own directly checkable closed form.
    """
    _require_parametrized(class_id)
    c1, c2, c3 = c
    if class_id is ClassId.R:
        return InverseTriple(
            -c1,
            -(2.0 / 3.0) * c2 + (4.0 / 3.0) * c1 * c1,
            -0.5 * (c3 - (14.0 / 3.0) * c1 * c2 + (13.0 / 3.0) * c1 ** 3),
        )
    if class_id is ClassId.STARLIKE:
        return InverseTriple(
            -2.0 * c1,
            -c2 + 5.0 * c1 * c1,
            -(2.0 / 3.0) * (c3 - 10.0 * c1 * c2 + 21.0 * c1 ** 3),
        )
    return InverseTriple(
        -c1,
        -(c2 - 3.0 * c1 * c1) / 3.0,
        -(c3 - 5.0 * c1 * c2 + 6.0 * c1 ** 3) / 6.0,
    )


#: A complex number with exact rational real and imaginary parts.
ExactComplex = tuple[Fraction, Fraction]


def _q(re, im=0) -> ExactComplex:
    return (Fraction(re), Fraction(im))


def _to_complex(x: ExactComplex) -> complex:
    return complex(float(x[0]), float(x[1]))


@dataclass(frozen=True)
class ExtremalEntry:
    """An explicit function attaining sharp determinant values.

    Coefficients are stored exactly (rational real/imaginary pairs) so
    report tables never pick up float drift; the ``*_coeffs`` views are
    the binary64 working forms.  ``attained`` maps a functional to the
    exact value it reaches on the inverse coefficients: signed for the
    real-valued T21/T31, modulus for the symmetric determinants.
    """

    class_id: ClassId
    label: str
    forward_exact: tuple[ExactComplex, ExactComplex, ExactComplex]
    inverse_exact: tuple[ExactComplex, ExactComplex, ExactComplex]
    attained: Mapping[FunctionalId, Fraction]

    @property
    def forward_coeffs(self) -> CoeffTriple:
        return CoeffTriple(*(_to_complex(x) for x in self.forward_exact))

    @property
    def inverse_coeffs(self) -> InverseTriple:
        return InverseTriple(*(_to_complex(x) for x in self.inverse_exact))


def extremal_catalog() -> list[ExtremalEntry]:
    """The explicit extremal functions used for sharpness verification.

    The rotated Koebe function z/(1-iz)^2 appears twice: it is the
    witness both over the full univalent class and within the starlike
    class (where it also attains the TS32 bound).
    """
    F = Fraction
    return [
        ExtremalEntry(
            ClassId.S,
            "z/(1-z)^2 (Koebe)",
            (_q(2), _q(3), _q(4)),
            (_q(-2), _q(5), _q(-14)),
            {FunctionalId.T21: F(-3), FunctionalId.T31: F(8)},
        ),
        ExtremalEntry(
            ClassId.S,
            "z/(1-z+z^2)",
            (_q(1), _q(0), _q(-1)),
            (_q(-1), _q(2), _q(-4)),
            {FunctionalId.T31: F(-1)},
        ),
        ExtremalEntry(
            ClassId.S,
            "z/(1-iz)^2",
            (_q(0, 2), _q(-3), _q(0, -4)),
            (_q(0, -2), _q(-5), _q(0, 14)),
            {FunctionalId.TS22: F(29), FunctionalId.TS23: F(221)},
        ),
        ExtremalEntry(
            ClassId.STARLIKE,
            "z/(1-iz)^2",
            (_q(0, 2), _q(-3), _q(0, -4)),
            (_q(0, -2), _q(-5), _q(0, 14)),
            {
                FunctionalId.TS22: F(29),
                FunctionalId.TS23: F(221),
                FunctionalId.TS32: F(416),
            },
        ),
        ExtremalEntry(
            ClassId.R,
            "antiderivative of (1+iz)/(1-iz)",
            (_q(0, 1), _q(F(-2, 3)), _q(0, F(-1, 2))),
            (_q(0, -1), _q(F(-4, 3)), _q(0, F(13, 6))),
            {
                FunctionalId.TS22: F(25, 9),
                FunctionalId.TS23: F(233, 36),
                FunctionalId.TS32: F(817, 108),
            },
        ),
        ExtremalEntry(
            ClassId.CONVEX,
            "z/(1-iz)",
            (_q(0, 1), _q(-1), _q(0, -1)),
            (_q(0, -1), _q(-1), _q(0, 1)),
            {
                FunctionalId.TS22: F(2),
                FunctionalId.TS23: F(2),
                FunctionalId.TS32: F(4),
            },
        ),
    ]
