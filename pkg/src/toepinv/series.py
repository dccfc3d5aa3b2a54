"""Truncated complex power series and compositional reversion.

A :class:`TruncatedSeries` holds the coefficients of

    s(z) = s0 + s1 z + s2 z^2 + ... + sN z^N

as complex doubles, with index k holding the coefficient of z^k.  All
arithmetic truncates at the fixed order N and never reads past it, so a
series of order N is a faithful representative of its function modulo
z^(N+1).  Two flavors appear throughout the library:

* "normalized" series, s(z) = z + a2 z^2 + ..., the shape univalent
  functions are normalized to (s0 = 0, s1 = 1);
* "general" series with free low-order coefficients, used for
  Schwarz-type functions omega(z) = c1 z + c2 z^2 + ...

Compositional reversion (:func:`reverse`) finds the series g with
f(g(w)) = w modulo w^(N+1).  Because f is normalized, the coefficient
of w^k in f(g(w)) is g_k plus terms involving only g_2 .. g_(k-1), so
the system is triangular and is solved one order at a time; this works
at any truncation order.  For the first three inverse coefficients the
closed form is :func:`inverse_coeffs_closed_form`:

    A2 = -a2
    A3 = 2 a2^2 - a3
    A4 = -a4 + 5 a2 a3 - 5 a2^3

The classical check: the Koebe-type coefficients (a2, a3, a4) =
(2, 3, 4) invert to (A2, A3, A4) = (-2, 5, -14).

Coefficients are complex binary64 pairs throughout.  Everything here is
free of side effects; instances are never mutated after construction.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import DomainError, OrderMismatchError

__all__ = [
    "DEFAULT_ORDER",
    "CoeffTriple",
    "InverseTriple",
    "TruncatedSeries",
    "compose",
    "identity",
    "inverse_coeffs_closed_form",
    "multiply",
    "normalized",
    "reverse",
]

#: The library default truncation order; all closed forms here concern
#: coefficients up to a4 / A4, i.e. order 4.
DEFAULT_ORDER = 4


class CoeffTriple(NamedTuple):
    """Three consecutive low-order series coefficients.

    The same shape serves the Schwarz coefficients (c1, c2, c3) and, by
    role aliasing, the coefficients (a2, a3, a4) of a normalized
    function.
    """

    c1: complex
    c2: complex
    c3: complex


class InverseTriple(NamedTuple):
    """Coefficients (A2, A3, A4) of an inverse, w + A2 w^2 + A3 w^3 + A4 w^4."""

    A2: complex
    A3: complex
    A4: complex


class TruncatedSeries:
    """A power series truncated at a fixed order.

    ``coeffs[k]`` is the coefficient of z^k; there are exactly
    ``order + 1`` entries.  The coefficient array is frozen, operations
    return new instances.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[complex]):
        arr = np.array(coeffs, dtype=np.complex128)
        if arr.ndim != 1 or arr.size < 2:
            raise ValueError("a series needs a 1-d coefficient list of order >= 1")
        arr.setflags(write=False)
        self._coeffs = arr

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    @property
    def is_normalized(self) -> bool:
        """True when the series has the shape z + a2 z^2 + ..."""
        return self._coeffs[0] == 0 and self._coeffs[1] == 1

    def truncated(self, order: int) -> "TruncatedSeries":
        """Drop all coefficients above ``order`` (1 <= order <= self.order)."""
        if not 1 <= order <= self.order:
            raise ValueError(f"cannot truncate order-{self.order} series to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def __repr__(self) -> str:
        return f"TruncatedSeries({self._coeffs.tolist()!r})"


def identity(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """The series z, the identity under composition."""
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1] = 1.0
    return TruncatedSeries(c)


def normalized(tail: Sequence[complex], order: int | None = None) -> TruncatedSeries:
    """Build z + a2 z^2 + ... from the tail (a2, a3, ...), zero padded to ``order``."""
    tail = list(tail)
    if order is None:
        order = len(tail) + 1
    if order < len(tail) + 1:
        raise ValueError("order too small for the given coefficients")
    c = np.zeros(order + 1, dtype=np.complex128)
    c[1] = 1.0
    c[2 : 2 + len(tail)] = tail
    return TruncatedSeries(c)


def _check_orders(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.order != b.order:
        raise OrderMismatchError(f"series orders differ: {a.order} != {b.order}")


def multiply(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product of two series of equal order, truncated at that order."""
    _check_orders(a, b)
    prod = np.convolve(a.coeffs, b.coeffs)[: a.order + 1]
    return TruncatedSeries(prod)


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """outer(inner(z)) truncated at the common order.

    ``inner`` must have zero constant term, otherwise the composition
    would need coefficients of ``outer`` beyond the truncation order.
    Evaluated Horner style in the truncated-series algebra.
    """
    _check_orders(outer, inner)
    if inner.coeffs[0] != 0:
        raise DomainError("inner series must have zero constant term")
    n = outer.order
    ic = inner.coeffs
    acc = np.zeros(n + 1, dtype=np.complex128)
    acc[0] = outer.coeffs[n]
    for k in range(n - 1, -1, -1):
        acc = np.convolve(acc, ic)[: n + 1]
        acc[0] += outer.coeffs[k]
    return TruncatedSeries(acc)


def reverse(f: TruncatedSeries) -> TruncatedSeries:
    """Compositional inverse of a normalized series, to the same order.

    Returns g with compose(f, g) = identity modulo z^(order+1).  The
    coefficients are solved order by order: with g known through order
    k-1 and g_k = 0, the coefficient of w^k in f(g(w)) is exactly the
    defect that g_k must cancel.
    """
    if not f.is_normalized:
        raise DomainError("reverse() needs a normalized series z + a2 z^2 + ...")
    n = f.order
    g = np.zeros(n + 1, dtype=np.complex128)
    g[1] = 1.0
    for k in range(2, n + 1):
        defect = compose(f, TruncatedSeries(g)).coeffs[k]
        g[k] = -defect
    return TruncatedSeries(g)


def inverse_coeffs_closed_form(a: CoeffTriple) -> InverseTriple:
    """First three inverse coefficients of z + a2 z^2 + a3 z^3 + a4 z^4.

    Closed form of the order-by-order reversion:
    (A2, A3, A4) = (-a2, 2 a2^2 - a3, -a4 + 5 a2 a3 - 5 a2^3).
    """
    a2, a3, a4 = a
    return InverseTriple(
        -a2,
        2.0 * a2 * a2 - a3,
        -a4 + 5.0 * a2 * a3 - 5.0 * a2 ** 3,
    )
