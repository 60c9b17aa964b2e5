"""Exact arithmetic in GF(p^m) for small prime powers.

Field elements are plain integers in [0, p^m): the base-p digits of the
integer are the coordinates of the element in the polynomial basis
(ascending powers of the adjoined root).  For prime fields this is the
usual integer-mod-p representation.  A ``Field`` instance owns the
modulus polynomial and provides every operation, both on scalar
encodings and on numpy arrays of encodings.

Fields are desk scale (p^m <= 2**16).  Construction checks that p is
prime and, for extensions, that the modulus is monic of degree m and
irreducible by exhaustive trial division, so a successfully constructed
``Field`` really is a field.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import BoundsError

MAX_FIELD_SIZE = 1 << 16

# Full q x q add/mul lookup tables are built for extension fields up to
# this many elements; beyond it scalar ops fall back to digit arithmetic.
_TABLE_LIMIT = 256


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# -- raw polynomial helpers over GF(p), little-endian int lists ------------
# polyring builds on this module, so the irreducibility check cannot use it.

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(a: list[int], b: list[int], p: int) -> list[int]:
    """Remainder of a mod b over GF(p); b must be nonzero with nonzero lead."""
    r = _trim([c % p for c in a])
    db = len(b) - 1
    inv_lead = pow(b[-1], -1, p)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        factor = (r[-1] * inv_lead) % p
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - factor * bc) % p
        _trim(r)
    return r


def _is_irreducible(mod: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg(mod)/2."""
    deg = len(mod) - 1
    for d in range(1, deg // 2 + 1):
        for n in range(p**d):
            cand = [0] * (d + 1)
            t = n
            for i in range(d):
                cand[i] = t % p
                t //= p
            cand[d] = 1
            if not _polymod(list(mod), cand, p):
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over GF(p) with the smallest base-p
    integer encoding of its non-leading coefficients.

    Gives the classic choices x^2+x+1, x^3+x+1, x^4+x+1 for GF(4), GF(8)
    and GF(16), and x^2+1 for GF(9).
    """
    for n in range(p**m):
        cand = [0] * (m + 1)
        t = n
        for i in range(m):
            cand[i] = t % p
            t //= p
        cand[m] = 1
        mod = tuple(cand)
        if _is_irreducible(mod, p):
            return mod
    raise ValueError(f"no irreducible polynomial of degree {m} over GF({p})")


class Field:
    """GF(p^m) calculator over integer-encoded elements.

    Parameters
    ----------
    p : prime characteristic.
    m : extension degree (1 for prime fields).
    modulus : optional iterable of m+1 ints over GF(p), ascending degree,
        leading coefficient 1.  Ignored (must be None) for m == 1; defaults
        to ``default_modulus(p, m)`` for extensions.
    """

    __slots__ = ("p", "m", "q", "modulus",
                 "_add_t", "_mul_t", "_inv_t", "_neg_t", "_add_np", "_mul_np")

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if m < 1:
            raise ValueError(f"extension degree must be >= 1, got {m}")
        q = p**m
        if q > MAX_FIELD_SIZE:
            raise BoundsError(f"field size {q} exceeds desk-scale limit {MAX_FIELD_SIZE}")
        self.p, self.m, self.q = p, m, q

        if m == 1:
            if modulus is not None:
                raise ValueError("modulus only applies to extension fields (m > 1)")
            self.modulus = None
        else:
            mod = default_modulus(p, m) if modulus is None else tuple(int(c) % p for c in modulus)
            if len(mod) != m + 1:
                raise ValueError(f"modulus must have m+1 = {m + 1} coefficients, got {len(mod)}")
            if mod[-1] != 1:
                raise ValueError("modulus must be monic")
            if not _is_irreducible(mod, p):
                raise ValueError(f"modulus {mod} is reducible over GF({p})")
            self.modulus = mod

        self._add_t = self._mul_t = self._inv_t = self._add_np = self._mul_np = None
        self._neg_t = [(-a) % p if m == 1 else self._digit_neg(a) for a in range(q)]
        if m > 1 and q <= _TABLE_LIMIT:
            self._build_tables()

    # -- construction helpers ---------------------------------------------

    def _digit_neg(self, a: int) -> int:
        p = self.p
        out, w = 0, 1
        for _ in range(self.m):
            out += ((-(a % p)) % p) * w
            a //= p
            w *= p
        return out

    def _raw_mul(self, a: int, b: int) -> int:
        """Digit-vector convolution reduced by the modulus polynomial."""
        p, m = self.p, self.m
        da, db = self.coords(a), self.coords(b)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(da):
            if ai:
                for j, bj in enumerate(db):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        mod = self.modulus
        for i in range(2 * m - 2, m - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for k in range(m):
                    prod[i - m + k] = (prod[i - m + k] - c * mod[k]) % p
        return self.from_coords(prod[:m])

    def _build_tables(self):
        q = self.q
        self._add_t = [[self._generic_add(a, b) for b in range(q)] for a in range(q)]
        self._mul_t = [[self._raw_mul(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            for b in range(1, q):
                if self._mul_t[a][b] == 1:
                    inv[a] = b
                    break
            else:
                raise ValueError(f"element {a} has no inverse; modulus is not irreducible")
        self._inv_t = inv
        self._add_np = np.array(self._add_t, dtype=np.int64)
        self._mul_np = np.array(self._mul_t, dtype=np.int64)

    def _generic_add(self, a: int, b: int) -> int:
        p = self.p
        out, w = 0, 1
        for _ in range(self.m):
            out += ((a % p) + (b % p)) % p * w
            a //= p
            b //= p
            w *= p
        return out

    # -- scalar operations --------------------------------------------------

    def make(self, n: int) -> int:
        """Canonical element whose base-p digits are the coordinates of n mod p^m."""
        return int(n) % self.q

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        t = self._add_t
        if t is not None:
            return t[a][b]
        return self._generic_add(a, b)

    def neg(self, a: int) -> int:
        return self._neg_t[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg_t[b])

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        t = self._mul_t
        if t is not None:
            return t[a][b]
        return self._raw_mul(a, b)

    def inv(self, a: int) -> int:
        """Multiplicative inverse; raises ZeroDivisionError on 0."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        if self.m == 1:
            return pow(a, -1, self.p)
        if self._inv_t is not None:
            return self._inv_t[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        out, base = 1, a
        while e:
            if e & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            e >>= 1
        return out

    def coords(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coordinate vector (ascending degree, length m)."""
        p = self.p
        out = []
        for _ in range(self.m):
            out.append(a % p)
            a //= p
        return tuple(out)

    def from_coords(self, vec) -> int:
        out, w = 0, 1
        for c in vec:
            out += (int(c) % self.p) * w
            w *= self.p
        return out

    def elements(self) -> list[int]:
        """All p^m elements in canonical order make(0), make(1), ..."""
        return list(range(self.q))

    # -- vectorized operations on numpy arrays of encodings -----------------

    def _digits_array(self, a: np.ndarray) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        out = np.empty(a.shape + (self.m,), dtype=np.int64)
        t = a
        for i in range(self.m):
            out[..., i] = t % self.p
            t = t // self.p
        return out

    def _undigits_array(self, d: np.ndarray) -> np.ndarray:
        w = self.p ** np.arange(self.m, dtype=np.int64)
        return (d * w).sum(axis=-1)

    def add_arrays(self, a, b) -> np.ndarray:
        if self.m == 1:
            return (np.asarray(a) + np.asarray(b)) % self.p
        if self._add_np is not None:
            return self._add_np[np.asarray(a), np.asarray(b)]
        return self._undigits_array((self._digits_array(a) + self._digits_array(b)) % self.p)

    def neg_array(self, a) -> np.ndarray:
        if self.m == 1:
            return (-np.asarray(a)) % self.p
        return self._undigits_array((-self._digits_array(a)) % self.p)

    def sub_arrays(self, a, b) -> np.ndarray:
        return self.add_arrays(a, self.neg_array(b))

    def scale_array(self, c: int, a) -> np.ndarray:
        """Scalar c times every entry of a."""
        a = np.asarray(a, dtype=np.int64)
        if self.m == 1:
            return (c * a) % self.p
        if self._mul_np is not None:
            return self._mul_np[c][a]
        # multiplication by c is GF(p)-linear on the digit vectors
        cmat = np.array([self.coords(self._raw_mul(c, self.p**j)) for j in range(self.m)],
                        dtype=np.int64)
        return self._undigits_array(self._digits_array(a) @ cmat % self.p)

    def mul_arrays(self, a, b) -> np.ndarray:
        """Elementwise (broadcasting) product of two encoding arrays."""
        if self.m == 1:
            return (np.asarray(a) * np.asarray(b)) % self.p
        if self._mul_np is not None:
            return self._mul_np[np.asarray(a), np.asarray(b)]
        ufunc = np.frompyfunc(self._raw_mul, 2, 1)
        return ufunc(np.asarray(a), np.asarray(b)).astype(np.int64)

    # -- misc ---------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Field)
                and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus))

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}; modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _cached_field(p: int, m: int, modulus) -> Field:
    return Field(p, m, modulus)


def GF(p: int, m: int = 1, modulus=None) -> Field:
    """Cached Field factory: GF(2), GF(3, 2), GF(2, 4, modulus=[1,1,0,0,1]), ..."""
    key = tuple(int(c) for c in modulus) if modulus is not None else None
    return _cached_field(p, m, key)


def field_from_descriptor(d: dict) -> Field:
    """Build a Field from the JSON descriptor {"p":..., "m":..., "modulus":[...]?}."""
    p = int(d["p"])
    m = int(d.get("m", 1))
    modulus = d.get("modulus")
    return GF(p, m, modulus)


def field_descriptor(field: Field) -> dict:
    """JSON descriptor for a Field (modulus present iff m > 1)."""
    d = {"p": field.p, "m": field.m}
    if field.m > 1:
        d["modulus"] = list(field.modulus)
    return d
