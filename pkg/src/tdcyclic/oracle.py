"""Brute-force verification path, independent of the construction engine.

Everything here recomputes spans from scratch: the ideal is obtained as a
fixed-point closure of raw codeword vectors under row and column shifts,
tracked by a self-contained incremental elimination routine over the
row-major (codeword) flattening.  None of the reduced-echelon machinery
of the engine is reused: agreement between the two paths is the point
of this module, so the overlap is kept to the shared value types only.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .errors import BoundsError, TooLargeError
from .polyring import divides_xs_minus_one, xs_minus_one
from .ring2d import CODEWORD, BiPoly, RingShape

MAX_ORACLE_LENGTH = 64
MAX_SPAN_ENUMERATION = 1 << 20


class _Reducer:
    """Incremental span tracker: pivot column -> normalized row vector."""

    def __init__(self, fld, n: int):
        self.fld = fld
        self.n = n
        self.pivots: dict[int, np.ndarray] = {}

    def residual(self, vec: np.ndarray) -> np.ndarray:
        r = np.array(vec, dtype=np.int64)
        fld = self.fld
        for c, row in self.pivots.items():
            if r[c]:
                r = fld.sub_arrays(r, fld.scale_array(int(r[c]), row))
        return r

    def contains(self, vec) -> bool:
        return not self.residual(np.asarray(vec, dtype=np.int64)).any()

    def insert(self, vec) -> bool:
        """Add vec to the span; True if it enlarged the span."""
        r = self.residual(np.asarray(vec, dtype=np.int64))
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            return False
        c = int(nz[0])
        if r[c] != 1:
            r = self.fld.scale_array(self.fld.inv(int(r[c])), r)
        self.pivots[c] = r
        return True

    @property
    def dimension(self) -> int:
        return len(self.pivots)

    def reduced_rows(self) -> np.ndarray:
        """Unique reduced-echelon basis: pivot order, back-eliminated."""
        cols = sorted(self.pivots)
        rows = [np.array(self.pivots[c]) for c in cols]
        fld = self.fld
        for i in range(len(rows) - 1, -1, -1):
            for k in range(i):
                f = int(rows[k][cols[i]])
                if f:
                    rows[k] = fld.sub_arrays(rows[k], fld.scale_array(f, rows[i]))
        if not rows:
            return np.zeros((0, self.n), dtype=np.int64)
        return np.stack(rows)


def _shift_rows(vec: np.ndarray, s: int, ell: int) -> np.ndarray:
    return np.roll(vec.reshape(s, ell), 1, axis=0).reshape(-1)


def _shift_cols(vec: np.ndarray, s: int, ell: int) -> np.ndarray:
    return np.roll(vec.reshape(s, ell), 1, axis=1).reshape(-1)


@dataclass(frozen=True, eq=False)
class ClosureBasis:
    """Echelonized basis (codeword order) of a shift-closed span."""

    shape: RingShape
    vectors: np.ndarray
    _reducer: _Reducer = dc_field(repr=False, default=None)

    @property
    def dimension(self) -> int:
        return self.vectors.shape[0]

    def contains(self, vec) -> bool:
        return self._reducer.contains(vec)

    def contains_elem(self, e: BiPoly) -> bool:
        return self._reducer.contains(e.to_vector(CODEWORD))


def bruteforce_ideal(shape: RingShape, generators) -> ClosureBasis:
    """Close the generators under row shift, column shift and linearity.

    Works purely on flattened codeword vectors: every time a vector
    enlarges the span, its two one-step shifts join the worklist; linear
    closure is implicit in the span tracking.  The fixed point is the
    smallest shift-closed subspace containing the generators, i.e. the
    ideal they generate.
    """
    if shape.n > MAX_ORACLE_LENGTH:
        raise BoundsError(f"oracle handles s*ell <= {MAX_ORACLE_LENGTH}, got {shape.n}")
    s, ell = shape.s, shape.ell
    red = _Reducer(shape.field, shape.n)
    work = []
    for g in generators:
        if isinstance(g, BiPoly):
            if g.shape != shape:
                raise ValueError("generator does not match the ring shape")
            work.append(g.to_vector(CODEWORD))
        else:
            work.append(np.asarray(g, dtype=np.int64).reshape(-1))
    while work:
        v = work.pop()
        if red.insert(v):
            work.append(_shift_rows(v, s, ell))
            work.append(_shift_cols(v, s, ell))
    return ClosureBasis(shape, red.reduced_rows(), red)


def enumerate_span(basis: ClosureBasis) -> np.ndarray:
    """All q^dim vectors of the span (full-set mode), in coefficient order."""
    fld = basis.shape.field
    dim = basis.dimension
    total = fld.q**dim
    if total > MAX_SPAN_ENUMERATION:
        raise TooLargeError(f"span has {total} vectors, over cap {MAX_SPAN_ENUMERATION}")
    out = np.zeros((total, basis.shape.n), dtype=np.int64)
    idx = np.arange(total, dtype=np.int64)
    for t in range(dim):
        digit = (idx // fld.q**t) % fld.q
        out = fld.add_arrays(out, fld.mul_arrays(digit[:, None], basis.vectors[t][None, :]))
    return out


def reduced_span(fld, n: int, vectors) -> np.ndarray:
    """Unique reduced-echelon basis of the span of raw length-n vectors,
    computed by this module's own elimination routine."""
    red = _Reducer(fld, n)
    for v in vectors:
        red.insert(np.asarray(v, dtype=np.int64).reshape(-1))
    return red.reduced_rows()


def check_shift_closure(shape: RingShape, vectors) -> bool:
    """True iff the span of the given codeword vectors is closed under
    both shifts.  The span is NOT closed first; that is the point."""
    if isinstance(vectors, ClosureBasis):
        vectors = vectors.vectors
    red = _Reducer(shape.field, shape.n)
    vs = [np.asarray(v, dtype=np.int64).reshape(-1) for v in vectors]
    for v in vs:
        red.insert(v)
    for v in vs:
        if not red.contains(_shift_rows(v, shape.s, shape.ell)):
            return False
        if not red.contains(_shift_cols(v, shape.s, shape.ell)):
            return False
    return True


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: list | None = None


@dataclass(frozen=True)
class Report:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {"checks": [
            {"name": c.name, "pass": c.passed, "counterexample": c.counterexample}
            for c in self.checks]}

    def first_failure(self):
        for c in self.checks:
            if not c.passed:
                return c
        return None


def _span_equal(a: ClosureBasis, b: ClosureBasis):
    """(equal?, offending vector) for two closure spans."""
    if a.dimension != b.dimension:
        return False, None
    for v in a.vectors:
        if not b.contains(v):
            return False, v.tolist()
    return True, None


def verify_generator_set(gs, generators) -> Report:
    """Check a GeneratorSet against the brute-force span of the generators.

    Verifies ideal membership of every generating polynomial, equality of
    the two spans, the triangular layout, divisibility of every layer
    generator into x^s - 1, divisibility of every coordinate by the base
    layer generator (with the stored quotient table), and the canonical
    degree bounds.
    """
    shape = gs.shape
    s = shape.s
    ideal = bruteforce_ideal(shape, generators)
    checks = []

    bad = None
    for p in gs.gens:
        if not ideal.contains_elem(p):
            bad = p.to_vector(CODEWORD).tolist()
            break
    checks.append(CheckResult("gens-in-ideal", bad is None, bad))

    regen = bruteforce_ideal(shape, [p for p in gs.gens if not p.is_zero])
    ok, bad = _span_equal(ideal, regen)
    checks.append(CheckResult("span-equality", ok, bad))

    bad = None
    for j, p in enumerate(gs.gens):
        layer = gs.layers[j]
        if any(not p.coord(i).is_zero for i in range(j)):
            bad = p.to_vector(CODEWORD).tolist()
            break
        if p.coord(j) != layer.gen:
            bad = p.to_vector(CODEWORD).tolist()
            break
    checks.append(CheckResult("triangular", bad is None, bad))

    bad = None
    for layer in gs.layers:
        if layer.is_zero:
            if layer.deg != s:
                bad = [layer.index]
                break
            continue
        g = layer.gen.lift()
        if g.lc != 1 or not divides_xs_minus_one(g, s):
            bad = list(layer.gen.coeffs)
            break
        if layer.cofactor * g != xs_minus_one(shape.field, s):
            bad = list(layer.cofactor.coeffs)
            break
        if layer.deg != g.degree:
            bad = [layer.deg]
            break
    checks.append(CheckResult("layer-divides-xs-1", bad is None, bad))

    bad = None
    has_nonzero = any(not layer.is_zero for layer in gs.layers)
    if has_nonzero and gs.layers[0].is_zero:
        bad = ["layer 0 empty while the ideal is nonzero"]
    elif has_nonzero:
        base = gs.layers[0].gen.lift()
        for j, p in enumerate(gs.gens):
            if gs.layers[j].is_zero:
                continue
            for i in range(j, shape.ell):
                q, r = divmod(p.coord(i).lift(), base)
                if r:
                    bad = list(p.coord(i).coeffs)
                    break
                if gs.quotients[j][i - j] != q:
                    bad = list(gs.quotients[j][i - j].coeffs)
                    break
            if bad:
                break
    checks.append(CheckResult("base-divisibility", bad is None, bad))

    bad = None
    for j, p in enumerate(gs.gens):
        if gs.layers[j].is_zero:
            continue
        for i in range(j + 1, shape.ell):
            li = gs.layers[i]
            if li.is_zero:
                continue
            lift = p.coord(i).lift()
            if lift and lift.degree >= li.deg:
                bad = list(p.coord(i).coeffs)
                break
        if bad:
            break
    checks.append(CheckResult("canonical-degrees", bad is None, bad))

    return Report(tuple(checks))


def verify_matrix(gm, generators) -> Report:
    """Rank, row-space equality with the brute-force span, and per-row
    membership for a generator matrix."""
    shape = gm.shape
    ideal = bruteforce_ideal(shape, generators)
    checks = []

    red = _Reducer(shape.field, shape.n)
    for row in gm.rows:
        red.insert(row)
    ok = red.dimension == len(gm.labels)
    checks.append(CheckResult("rank", ok, None if ok else [red.dimension, len(gm.labels)]))

    bad = None
    if red.dimension != ideal.dimension:
        bad = [red.dimension, ideal.dimension]
    else:
        for v in ideal.vectors:
            if not red.contains(v):
                bad = v.tolist()
                break
    checks.append(CheckResult("row-space-equality", bad is None, bad))

    bad = None
    for row in gm.rows:
        if not ideal.contains(row):
            bad = row.tolist()
            break
    checks.append(CheckResult("rows-in-ideal", bad is None, bad))

    return Report(tuple(checks))
