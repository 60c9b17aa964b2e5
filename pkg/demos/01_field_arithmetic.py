#!/usr/bin/env python3
"""Finite field basics: GF(p) and GF(p^m) with integer-encoded elements."""

from tdcyclic import GF

# Prime field: elements are just integers mod p.
F5 = GF(5)
print("GF(5):", F5)
print("  3 + 4 =", F5.add(3, 4))
print("  3 * 4 =", F5.mul(3, 4))
print("  inverse of 3:", F5.inv(3), "(check: 3 *", F5.inv(3), "=", F5.mul(3, F5.inv(3)), ")")

# Extension field GF(4) = GF(2)[x]/(x^2 + x + 1).  Element n encodes the
# coordinate vector of its base-2 digits: 0, 1, 2 = a, 3 = a + 1 where a
# is the adjoined root.
F4 = GF(2, 2)
print("\nGF(4):", F4)
a = F4.make(2)
print("  a * a =", F4.mul(a, a), " (a^2 = a + 1, encoded 3)")
print("  a + a =", F4.add(a, a), " (characteristic 2)")
print("  coordinates of every element:")
for e in F4.elements():
    print(f"    {e} -> {F4.coords(e)}")

# The modulus is found automatically (smallest encoding that is
# irreducible); any monic irreducible can be supplied instead.
F9 = GF(3, 2)
print("\nGF(9) default modulus coefficients (ascending):", list(F9.modulus))
F9b = GF(3, 2, modulus=[2, 2, 1])  # x^2 + 2x + 2, also irreducible
print("GF(9) with explicit modulus:", F9b)
print("  same arithmetic laws, different labels: inv(5) =", F9b.inv(5))

# Frobenius: (a + b)^p = a^p + b^p holds in characteristic p.
F8 = GF(2, 3)
ok = all(F8.pow(F8.add(x, y), 2) == F8.add(F8.pow(x, 2), F8.pow(y, 2))
         for x in F8.elements() for y in F8.elements())
print("\nFrobenius identity over GF(8):", ok)
