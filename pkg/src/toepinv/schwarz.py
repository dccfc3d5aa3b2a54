"""The Schwarz coefficient body via Schur parameters.

A Schwarz function is an analytic self-map of the unit disk fixing the
origin, omega(z) = c1 z + c2 z^2 + ...  Writing omega(z) = z psi(z)
with psi mapping the disk into its closure and running the classical
Schur algorithm on psi yields parameters gamma0, gamma1, gamma2, ...
in the closed unit disk; conversely any parameter choice produces an
admissible psi through the Moebius chain

    psi(z) = phi(gamma0, z phi(gamma1, z gamma2)),
    phi(g, w) = (g + w) / (1 + conj(g) w).

The first three coefficients of omega depend on the first three
parameters only:

    c1 = gamma0
    c2 = (1 - |gamma0|^2) gamma1
    c3 = (1 - |gamma0|^2) [(1 - |gamma1|^2) gamma2 - conj(gamma0) gamma1^2]

:func:`schur_to_coeffs` applies this closed form.  That it covers the
exact reachable (c1, c2, c3) body is the classical Schur coefficient
result and is assumed here; :func:`coeffs_via_composition` exists to
validate the closed form numerically by Taylor-expanding the explicit
Moebius chain, and every downstream maximization rests on the two
routes agreeing.

Also provided is the Prokhorov-Szynal coefficient inequality for
Schwarz functions,

    |c3 + mu c1 c2 + nu c1^3| <= |nu|,

valid whenever the real pair (mu, nu) lies in one of the closed regions
D4, D6, D7 tested by :func:`region_member`.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import DomainError
from .series import CoeffTriple

__all__ = [
    "LEMMA_PAIRS",
    "MODULUS_TOL",
    "PSRegion",
    "SchurParams",
    "coeffs_via_composition",
    "ps_functional",
    "region_member",
    "sample_params",
    "schur_to_coeffs",
]

#: Slack allowed on |gamma_k| <= 1 before an input is rejected.
MODULUS_TOL = 1e-12

#: Fraction of each gamma_k drawn exactly on the unit circle by
#: :func:`sample_params`.  Extremal configurations live on the boundary,
#: so plain uniform-in-disk sampling would almost never get near them.
BOUNDARY_WEIGHT = 0.25

#: The four (mu, nu) pairs used by the sharp coefficient estimates for
#: the bounded-turning and starlike inverse coefficients.  Each lies in
#: D4, D6 or D7, so the Prokhorov-Szynal inequality applies.
LEMMA_PAIRS: tuple[tuple[Fraction, Fraction], ...] = (
    (Fraction(-14, 3), Fraction(13, 3)),
    (Fraction(22, 9), Fraction(-25, 9)),
    (Fraction(-10, 3), Fraction(21)),
    (Fraction(35, 3), Fraction(-33, 2)),
)


class SchurParams(NamedTuple):
    """Three Schur parameters, each in the closed unit disk."""

    gamma0: complex
    gamma1: complex
    gamma2: complex


class PSRegion(NamedTuple):
    """A Prokhorov-Szynal region hit, tag in {"D4", "D6", "D7"}."""

    tag: str
    mu: float
    nu: float


def _project(g: complex, label: str) -> complex:
    r = abs(g)
    if r > 1.0 + MODULUS_TOL:
        raise DomainError(f"|{label}| = {r:.17g} exceeds 1")
    if r > 1.0:
        return g / r
    return g


def schur_to_coeffs(g: SchurParams) -> CoeffTriple:
    """Map Schur parameters to the Schwarz coefficients (c1, c2, c3).

    Parameters a hair outside the closed disk (within ``MODULUS_TOL``)
    are projected back onto the circle; anything further out raises
    :class:`DomainError`.  The output always satisfies |c1| <= 1 and
    |c2| <= 1 - |c1|^2.
    """
    g0 = _project(complex(g.gamma0), "gamma0")
    g1 = _project(complex(g.gamma1), "gamma1")
    g2 = _project(complex(g.gamma2), "gamma2")
    t0 = 1.0 - abs(g0) ** 2
    t1 = 1.0 - abs(g1) ** 2
    c1 = g0
    c2 = t0 * g1
    c3 = t0 * (t1 * g2 - g0.conjugate() * g1 * g1)
    return CoeffTriple(c1, c2, c3)


def coeffs_via_composition(
    g: SchurParams, radius: float = 0.5, n_samples: int = 64
) -> CoeffTriple:
    """Taylor coefficients of the explicit Moebius chain, for cross-checks.

    Builds omega(z) = z phi(gamma0, z phi(gamma1, z gamma2)) pointwise on
    the circle |z| = radius and extracts c1, c2, c3 by a discrete Fourier
    transform.  All coefficients of omega are bounded by 1, so the
    aliasing error is below radius^(n_samples - 3); the defaults leave it
    far under double precision.  This path shares no algebra with
    :func:`schur_to_coeffs`.
    """
    g0 = _project(complex(g.gamma0), "gamma0")
    g1 = _project(complex(g.gamma1), "gamma1")
    g2 = _project(complex(g.gamma2), "gamma2")
    z = radius * np.exp(2j * np.pi * np.arange(n_samples) / n_samples)
    inner = z * (g1 + z * g2) / (1.0 + np.conjugate(g1) * z * g2)
    psi = (g0 + inner) / (1.0 + np.conjugate(g0) * inner)
    hat = np.fft.fft(z * psi) / n_samples
    c = [hat[k] / radius ** k for k in (1, 2, 3)]
    return CoeffTriple(complex(c[0]), complex(c[1]), complex(c[2]))


def _sample_one(rng: np.random.Generator) -> SchurParams:
    gs = []
    for _ in range(3):
        if rng.random() < BOUNDARY_WEIGHT:
            r = 1.0
        else:
            r = math.sqrt(rng.random())
        theta = 2.0 * math.pi * rng.random()
        gs.append(r * cmath.exp(1j * theta))
    return SchurParams(*gs)


def sample_params(rng_seed: int, count: int) -> list[SchurParams]:
    """Deterministic boundary-biased sample of Schur parameter triples.

    Each gamma_k is drawn uniformly on the unit circle with probability
    ``BOUNDARY_WEIGHT`` and uniformly in the disk otherwise.  Sample i
    derives its own generator from (rng_seed, i), so any contiguous or
    partitioned re-generation reproduces the identical sequence.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    return [_sample_one(np.random.default_rng([rng_seed, i])) for i in range(count)]


def region_member(mu: float, nu: float) -> PSRegion | None:
    """First of the closed regions D4, D6, D7 containing (mu, nu), if any.

    D4: |mu| >= 1/2  and  nu <= -(2/3)(|mu| + 1)
    D6: |mu| >= 4    and  nu >=  (2/3)(|mu| - 1)
    D7: 2 <= |mu| <= 4  and  nu >= (mu^2 + 8)/12
    """
    mu = float(mu)
    nu = float(nu)
    m = abs(mu)
    if m >= 0.5 and nu <= -(2.0 / 3.0) * (m + 1.0):
        return PSRegion("D4", mu, nu)
    if m >= 4.0 and nu >= (2.0 / 3.0) * (m - 1.0):
        return PSRegion("D6", mu, nu)
    if 2.0 <= m <= 4.0 and nu >= (mu * mu + 8.0) / 12.0:
        return PSRegion("D7", mu, nu)
    return None


def ps_functional(c: CoeffTriple, mu: float, nu: float) -> float:
    """|c3 + mu c1 c2 + nu c1^3|, the left side of the coefficient inequality."""
    c1, c2, c3 = c
    return abs(c3 + mu * c1 * c2 + nu * c1 ** 3)
