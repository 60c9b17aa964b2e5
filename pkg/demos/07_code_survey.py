#!/usr/bin/env python3
"""Survey all single-generator codes of a small shape and tabulate (n, k, d)."""

import json
from collections import Counter

from tdcyclic import GF, BiPoly, RingShape, code_params, extract_generators

shape = RingShape(GF(2), 3, 2)
q = shape.field.q
n = shape.n

# Enumerate every possible generator array, reduce each ideal to its
# canonical generating set, and keep one representative per code.
seen = {}
for idx in range(q**n):
    arr = [[(idx >> (i * shape.ell + j)) & 1 for j in range(shape.ell)]
           for i in range(shape.s)]
    gs = extract_generators(shape, [BiPoly(shape, arr)])
    key = json.dumps(gs.to_json_dict(), sort_keys=True)
    if key not in seen:
        seen[key] = code_params(gs, with_distance=True)

print(f"{q**n} candidate generators over GF({q}), {shape.s}x{shape.ell} arrays")
print(f"{len(seen)} distinct codes\n")
print("  n  k  d")
for p in sorted(seen.values(), key=lambda p: (p.k, p.d or 0)):
    print(f"  {p.n}  {p.k}  {'-' if p.d is None else p.d}")

profile = Counter((p.k, p.d) for p in seen.values())
print("\n(k, d) multiplicities:", dict(profile))

# The same table is available from the command line:
#   tdcyclic enumerate --input problem.json --mode exhaustive
