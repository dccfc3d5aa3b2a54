from fractions import Fraction

import numpy as np
import pytest

import suites
import toepinv as t
from toepinv import ClassId, CoeffTriple, FunctionalId, UnsupportedClassError


# ------------------------------------------------------------ coefficient maps


def test_forward_map_bounded_turning_extremal():
    a = t.forward_map(ClassId.R, CoeffTriple(1j, 0, 0))
    np.testing.assert_allclose(np.array(a), [1j, -2 / 3, -0.5j], atol=1e-15)


def test_forward_map_starlike_extremal():
    a = t.forward_map(ClassId.STARLIKE, CoeffTriple(1j, 0, 0))
    np.testing.assert_allclose(np.array(a), [2j, -3, -4j], atol=1e-15)


def test_forward_map_convex_zero():
    assert t.forward_map(ClassId.CONVEX, CoeffTriple(0, 0, 0)) == (0, 0, 0)


def test_inverse_map_examples():
    A = t.inverse_map(ClassId.R, CoeffTriple(1j, 0, 0))
    np.testing.assert_allclose(np.array(A), [-1j, -4 / 3, 13j / 6], atol=1e-15)
    A = t.inverse_map(ClassId.STARLIKE, CoeffTriple(1j, 0, 0))
    np.testing.assert_allclose(np.array(A), [-2j, -5, 14j], atol=1e-15)
    A = t.inverse_map(ClassId.CONVEX, CoeffTriple(1j, 0, 0))
    np.testing.assert_allclose(np.array(A), [-1j, -1, 1j], atol=1e-15)


def test_class_s_is_not_parametrized():
    with pytest.raises(UnsupportedClassError):
        t.forward_map(ClassId.S, CoeffTriple(0, 0, 0))
    with pytest.raises(UnsupportedClassError):
        t.inverse_map(ClassId.S, CoeffTriple(0, 0, 0))


def test_inverse_map_equals_closed_form_of_forward_small():
    assert suites.class_map_identity_worst(1000) <= 1e-12


def test_series_reversion_reproduces_inverse_map():
    assert suites.series_level_consistency_worst(1000) <= 1e-10


# ------------------------------------------------------ exact catalog content


def _cneg(x):
    return (-x[0], -x[1])


def _cadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _cmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _cscale(k, x):
    return (k * x[0], k * x[1])


def _exact_inverse_triple(a2, a3, a4):
    # A2 = -a2, A3 = 2 a2^2 - a3, A4 = -a4 + 5 a2 a3 - 5 a2^3, in exact rationals
    A2 = _cneg(a2)
    A3 = _cadd(_cscale(Fraction(2), _cmul(a2, a2)), _cneg(a3))
    A4 = _cadd(
        _cadd(_cneg(a4), _cscale(Fraction(5), _cmul(a2, a3))),
        _cneg(_cscale(Fraction(5), _cmul(_cmul(a2, a2), a2))),
    )
    return (A2, A3, A4)


def test_catalog_inverse_coeffs_are_exactly_the_closed_form():
    for entry in t.extremal_catalog():
        assert _exact_inverse_triple(*entry.forward_exact) == entry.inverse_exact


def test_catalog_attained_values_match_float_evaluation():
    for entry in t.extremal_catalog():
        A = entry.inverse_coeffs
        for fid, exact in entry.attained.items():
            got = t.bound_value(fid, A.A2, A.A3, A.A4)
            assert got == pytest.approx(float(exact), abs=1e-12), (entry.label, fid)


def test_catalog_classes_and_labels():
    entries = t.extremal_catalog()
    by_class = {}
    for e in entries:
        by_class.setdefault(e.class_id, []).append(e.label)
    assert "z/(1-z)^2 (Koebe)" in by_class[ClassId.S]
    assert "z/(1-z+z^2)" in by_class[ClassId.S]
    # the rotated Koebe function is filed under both S and starlike
    assert "z/(1-iz)^2" in by_class[ClassId.S]
    assert by_class[ClassId.STARLIKE] == ["z/(1-iz)^2"]
    assert by_class[ClassId.CONVEX] == ["z/(1-iz)"]
    assert len(by_class[ClassId.R]) == 1


def test_catalog_koebe_row():
    koebe = next(e for e in t.extremal_catalog() if "Koebe" in e.label)
    assert koebe.inverse_coeffs == (-2, 5, -14)
    assert koebe.attained[FunctionalId.T21] == -3
    assert koebe.attained[FunctionalId.T31] == 8


def test_rotated_koebe_inverse_attains_ts31_reference_value():
    # derived: the TS31 bound 24 over the full class is hit by z/(1-iz)^2,
    # although the bound table records it without a named witness
    f2 = next(e for e in t.extremal_catalog() if e.class_id is ClassId.S
              and e.label == "z/(1-iz)^2")
    A = f2.inverse_coeffs
    assert t.ts31(A.A2, A.A3) == pytest.approx(24.0, abs=1e-12)
    assert t.exact_bound(ClassId.S, FunctionalId.TS31) == 24


# --------------------------------------------------------- coefficient bounds


CLASS_COEFF_BOUNDS = {
    ClassId.R: (Fraction(1), Fraction(4, 3), Fraction(13, 6)),
    ClassId.STARLIKE: (Fraction(2), Fraction(5), Fraction(14)),
    ClassId.CONVEX: (Fraction(1), Fraction(1), Fraction(1)),
}


def test_inverse_coefficient_bounds_on_samples():
    maxima = suites.coefficient_bound_maxima(2000)
    for cid, bounds in CLASS_COEFF_BOUNDS.items():
        for got, bound in zip(maxima[cid], bounds):
            assert got <= float(bound) + 1e-12, (cid, got, bound)


def test_extremal_entries_attain_coefficient_bounds():
    for entry in t.extremal_catalog():
        if entry.class_id not in CLASS_COEFF_BOUNDS:
            continue
        bounds = CLASS_COEFF_BOUNDS[entry.class_id]
        A = entry.inverse_coeffs
        for val, bound in zip(A, bounds):
            assert abs(val) == pytest.approx(float(bound), abs=1e-15)
