#!/usr/bin/env python3
"""Truncated power series: arithmetic, composition, reversion.

Walks through the series layer with the two classical examples: the
Koebe-type coefficients (2, 3, 4) whose inverse starts -2, +5, -14, and
the bounded rational function z/(1-z+z^2) with coefficients (1, 0, -1).
"""

import numpy as np

import toepinv as t

print("identity series of order 4:", t.identity(4).coeffs)

f = t.normalized([2, 3, 4])
print("\nf(z) = z + 2z^2 + 3z^3 + 4z^4")
print("coeffs:", f.coeffs)

g = t.reverse(f)
print("\ng = reverse(f)  (so f(g(w)) = w modulo w^5)")
print("coeffs:", g.coeffs)

print("\ncheck: f o g =", t.compose(f, g).coeffs)

print("\nclosed form for the first three inverse coefficients:")
print("  (2, 3, 4)  ->", t.inverse_coeffs_closed_form(t.CoeffTriple(2, 3, 4)))
print("  (1, 0, -1) ->", t.inverse_coeffs_closed_form(t.CoeffTriple(1, 0, -1)))

# reversion is order agnostic; push one order further
f5 = t.normalized([2, 3, 4, 5])
g5 = t.reverse(f5)
print("\norder-5 reversion of z + 2z^2 + 3z^3 + 4z^4 + 5z^5:")
print("coeffs:", g5.coeffs)
residual = np.max(np.abs(t.compose(f5, g5).coeffs - t.identity(5).coeffs))
print(f"max residual of f o g vs identity: {residual:.2e}")
