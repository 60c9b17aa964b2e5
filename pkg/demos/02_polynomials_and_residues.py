#!/usr/bin/env python3
"""Polynomial division, gcd machinery, and the cyclic residue ring."""

from tdcyclic import GF, CyclicPoly, Poly, cofactor, gcd, xgcd, xs_minus_one

F = GF(2)

# Dense polynomials; coefficients ascend: [1, 0, 1] is 1 + x^2.
a = Poly(F, [1, 0, 1])
b = Poly(F, [1, 1])
print("a =", a, " b =", b)
q, r = divmod(a, b)
print("a = (", q, ") * b +", r, " -> (1+x)^2 = 1 + x^2 in characteristic 2")

# gcd and the Bezout identity.
g, u, v = xgcd(Poly(F, [1, 1]), Poly(F, [0, 1]))
print("\nxgcd(1+x, x):  g =", g, " u =", u, " v =", v)
print("check u*a + v*b:", u * Poly(F, [1, 1]) + v * Poly(F, [0, 1]))

# x^s - 1 factors drive everything downstream: a monic divisor and its
# cofactor multiply back to the modulus exactly.
F3 = GF(3)
s = 4
m = xs_minus_one(F3, s)
d = gcd(Poly(F3, [1, 1, 1]), m)  # (x-1)^2 shares the factor x-1 with x^4-1
print(f"\nover GF(3): gcd((x-1)^2, x^{s}-1) =", d)
print("cofactor:", cofactor(d, s), " product:", cofactor(d, s) * d)

# The cyclic residue ring F[x]/(x^s - 1): fixed-length vectors where
# multiplication by x rotates the coefficients.
e = CyclicPoly(F, [1, 1, 0, 0])
print("\nresidue e =", e)
print("e shifted (times x):", e.shift(1))
print("e shifted s times is e again:", e.shift(4) == e)

# Folding a high-degree polynomial into the ring wraps exponents mod s.
f = Poly(F, [0, 0, 1, 0, 0, 1])  # x^2 + x^5
print("x^2 + x^5 mod (x^4 - 1):", CyclicPoly.from_poly(f, 4))
