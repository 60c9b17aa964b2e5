#!/usr/bin/env python3
"""Codewords as s x ell arrays closed under row and column shifts."""

import numpy as np

from tdcyclic import CODEWORD, GF, INTERNAL, BiPoly, RingShape

shape = RingShape(GF(2), 3, 4)
print("ring shape:", shape.s, "rows x", shape.ell, "cols over", shape.field)

rng = np.random.default_rng(0)
w = BiPoly(shape, rng.integers(0, 2, size=(3, 4)))
print("\na codeword array:")
print(w.to_array())

# Multiplying by x shifts the rows cyclically; by y shifts the columns.
print("\nafter one row shift (times x):")
print(w.shift_x().to_array())
print("after one column shift (times y):")
print(w.shift_y().to_array())
print("s row shifts give the word back:", w.shift_x(3) == w)
print("ell column shifts give the word back:", w.shift_y(4) == w)

# The same element reads as a vector of column residues: column j is
# the coefficient of y^j.
print("\ncolumn residues (coefficients of y^0..y^3):")
for j, c in enumerate(w.coords()):
    print(f"  y^{j}: {list(c.coeffs)}")

# Two flattening orders coexist and must not be mixed: the row-major
# codeword layout and the column-major internal layout used by the
# ideal machinery.
print("\ncodeword order:", w.to_vector(CODEWORD).tolist())
print("internal order:", w.to_vector(INTERNAL).tolist())
back = BiPoly.from_vector(shape, w.to_vector(INTERNAL), INTERNAL)
print("round trip recovers the array:", back == w)

# Full ring product: convolution over y with residue products in x.
u = BiPoly.one(shape).shift_y()          # the monomial y
print("\nw * y equals the column shift:", w * u == w.shift_y())
