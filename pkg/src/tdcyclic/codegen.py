"""Generator matrices, encoding, and code parameters.

The rows of the generator matrix are the codeword flattenings of
x^a * gens[j] for every nonzero layer j and 0 <= a < s - deg(layer j),
in (layer, shift) order; they form an F-basis of the code, so the
dimension is the sum of s - deg over the layers.  Minimum distance is
exhaustive message enumeration under a hard cap, desk scale only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TooLargeError
from .ideal import GeneratorSet
from .ring2d import CODEWORD, RingShape

DEFAULT_CAP = 1 << 20
_CHUNK_ROWS = 1 << 14


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """k x (s*ell) matrix over the field in codeword (row-major) order,
    with a (layer, x-shift) label per row."""

    shape: RingShape
    rows: np.ndarray
    labels: tuple[tuple[int, int], ...]

    @property
    def k(self) -> int:
        return len(self.labels)

    @property
    def n(self) -> int:
        return self.shape.n


@dataclass(frozen=True)
class CodeParams:
    n: int
    k: int
    q: int
    d: int | None = None

    def to_json_dict(self) -> dict:
        out = {"n": self.n, "k": self.k, "q": self.q}
        if self.d is not None:
            out["d"] = self.d
        return out


def dimension(gs: GeneratorSet) -> int:
    """Code dimension: sum of (s - layer degree); zero layers contribute 0."""
    return sum(gs.shape.s - L.deg for L in gs.layers)


def generator_matrix(gs: GeneratorSet) -> GeneratorMatrix:
    """Rows x^a * gens[j], layer-major then shift, codeword flattening."""
    shape = gs.shape
    rows = []
    labels = []
    for L in gs.layers:
        if L.is_zero:
            continue
        base = gs.gens[L.index]
        for a in range(shape.s - L.deg):
            rows.append(base.shift_x(a).to_vector(CODEWORD))
            labels.append((L.index, a))
    mat = np.stack(rows) if rows else np.zeros((0, shape.n), dtype=np.int64)
    mat.setflags(write=False)
    return GeneratorMatrix(shape, mat, tuple(labels))


def encode(gm: GeneratorMatrix, msg) -> np.ndarray:
    """F-linear combination of the rows by a length-k message vector."""
    fld = gm.shape.field
    m = np.asarray(msg, dtype=np.int64)
    if m.shape != (gm.k,):
        raise ValueError(f"message length {m.size} != k = {gm.k}")
    out = np.zeros(gm.n, dtype=np.int64)
    for t in range(gm.k):
        c = fld.make(int(m[t]))
        if c:
            out = fld.add_arrays(out, fld.scale_array(c, gm.rows[t]))
    return out


def min_distance(gm: GeneratorMatrix, cap: int = DEFAULT_CAP) -> int:
    """Minimum Hamming weight over all q^k - 1 nonzero codewords, by
    exhaustive message enumeration in canonical element order."""
    fld = gm.shape.field
    k = gm.k
    if k == 0:
        raise ValueError("minimum distance is undefined for a dimension-0 code")
    total = fld.q**k
    if total > cap:
        raise TooLargeError(f"q^k = {total} exceeds cap {cap}")
    best = gm.n + 1
    chunk = max(1, _CHUNK_ROWS)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        if start == 0:
            idx = idx[1:]  # skip the zero message
            if idx.size == 0:
                continue
        words = np.zeros((idx.size, gm.n), dtype=np.int64)
        rest = idx
        for t in range(k):
            digit = rest % fld.q
            rest = rest // fld.q
            words = fld.add_arrays(words, fld.mul_arrays(digit[:, None], gm.rows[t][None, :]))
        w = int(np.count_nonzero(words, axis=1).min())
        if w < best:
            best = w
    return best


def code_params(gs: GeneratorSet, with_distance: bool = False,
                cap: int = DEFAULT_CAP) -> CodeParams:
    """Aggregate (n, k, q) and optionally d for the code of a GeneratorSet."""
    k = dimension(gs)
    d = None
    if with_distance and k > 0:
        d = min_distance(generator_matrix(gs), cap)
    return CodeParams(gs.shape.n, k, gs.shape.field.q, d)


# -- output formats (bit-exact across runs) ----------------------------------

def matrix_json_dict(gm: GeneratorMatrix) -> dict:
    return {"rows": gm.rows.tolist(),
            "labels": [list(lab) for lab in gm.labels]}


def matrix_text(gm: GeneratorMatrix) -> str:
    """One row per line, space-separated element encodings."""
    return "".join(" ".join(str(int(v)) for v in row) + "\n" for row in gm.rows)


def matrix_csv(gm: GeneratorMatrix) -> str:
    return "".join(",".join(str(int(v)) for v in row) + "\n" for row in gm.rows)
