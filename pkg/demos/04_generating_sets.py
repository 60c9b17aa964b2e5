#!/usr/bin/env python3
"""From a handful of generators to the canonical triangular generating set."""

import json

from tdcyclic import GF, BiPoly, RingShape, canonical_form, extract_generators, span_basis

shape = RingShape(GF(2), 4, 3)
g1 = BiPoly(shape, [[1, 0, 0], [1, 0, 0], [0, 0, 0], [0, 0, 0]])   # (1+x)
g2 = BiPoly(shape, [[0, 1, 1], [0, 1, 1], [0, 0, 0], [0, 0, 0]])   # (1+x)(y+y^2)
print("generators:")
for g in (g1, g2):
    print(g.to_array(), "\n")

# The code is the span of all shifts of the generators.
basis = span_basis(shape, [g1, g2])
print("code dimension:", basis.dimension)

# Layer by layer: each y-degree contributes a monic divisor of x^s - 1
# and one triangular generating polynomial whose leading column is it.
gs = extract_generators(shape, [g1, g2])
for layer in gs.layers:
    print(f"layer {layer.index}: generator {list(layer.gen.coeffs)}, "
          f"degree {layer.deg}, cofactor {list(layer.cofactor.coeffs)}")

print("\ntriangular generating polynomials (arrays):")
for j, p in enumerate(gs.gens):
    print(f"p[{j}] =")
    print(p.to_array())

# Every coordinate of every generating polynomial is an exact multiple
# of the layer-0 generator; the quotients are stored alongside.
print("\nquotients by the base generator:")
for j, qs in enumerate(gs.quotients):
    print(f"  p[{j}]:", [list(q.coeffs) for q in qs])

# Canonical means canonical: any presentation of the same code gives the
# identical structure, byte for byte.
alt = [g1, g2, g1.shift_x(3) + g2.shift_y(), g2 * g2]
same = canonical_form(shape, alt)
print("\naugmented presentation produces identical output:",
      json.dumps(same.to_json_dict()) == json.dumps(gs.to_json_dict()))
