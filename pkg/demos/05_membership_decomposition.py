#!/usr/bin/env python3
"""Writing a codeword as a combination of the generating polynomials."""

import numpy as np

from tdcyclic import GF, BiPoly, NotMember, RingShape, decompose, extract_generators

shape = RingShape(GF(3), 3, 3)
g = BiPoly(shape, [[1, 2, 0], [0, 1, 0], [0, 0, 0]])
gs = extract_generators(shape, [g])
print("layer degrees:", [L.deg for L in gs.layers])

# Build a member: a random ring multiple of the generator.
rng = np.random.default_rng(4)
mult = BiPoly(shape, rng.integers(0, 3, size=(3, 3)))
f = mult * g
print("\nmember f:")
print(f.to_array())

# Decompose peels one y-layer at a time; the trace shows the remainders,
# each vanishing one layer deeper than the last.
dec = decompose(f, gs, want_trace=True)
print("\ncoefficients q_j:")
for j, q in enumerate(dec.coeffs):
    print(f"  q_{j} = {list(q.coeffs)}")
print("intermediate remainders vanish below the active layer:")
for k, h in enumerate(dec.trace, start=1):
    lead = [h.coord(i).is_zero for i in range(k)]
    print(f"  h_{k}: columns below {k} zero -> {all(lead)}")

# Recombining gives f back exactly.
total = BiPoly.zero(shape)
for p, q in zip(gs.gens, dec.coeffs):
    total = total + p * q
print("\nsum of gens[j] * q_j equals f:", total == f)

# Non-members are rejected with the layer where reduction failed.
outsider = f + BiPoly.one(shape)
try:
    decompose(outsider, gs)
except NotMember as e:
    print("outsider rejected at layer", e.layer)
