import dataclasses
import random

import numpy as np
import pytest

from tdcyclic import (GF, BiPoly, BoundsError, RingShape, TooLargeError,
                      bruteforce_ideal, check_shift_closure, enumerate_span,
                      extract_generators, generator_matrix, reduced_span,
                      span_basis, verify_generator_set, verify_matrix)
from conftest import random_generators


def fixture_problem():
    sh = RingShape(GF(2), 2, 2)
    return sh, [BiPoly(sh, [[1, 0], [1, 0]])]


def test_closure_of_fixture():
    sh, gens = fixture_problem()
    basis = bruteforce_ideal(sh, gens)
    assert basis.dimension == 2
    assert basis.vectors.tolist() == [[1, 0, 1, 0], [0, 1, 0, 1]]
    # full-set mode: exactly the four words 0000, 1010, 0101, 1111
    words = {tuple(v) for v in enumerate_span(basis).tolist()}
    assert words == {(0, 0, 0, 0), (1, 0, 1, 0), (0, 1, 0, 1), (1, 1, 1, 1)}


def test_closure_trivial_ideals():
    sh = RingShape(GF(2), 2, 2)
    assert bruteforce_ideal(sh, [BiPoly.zero(sh)]).dimension == 0
    assert bruteforce_ideal(sh, [BiPoly.one(sh)]).dimension == 4


def test_closure_bound():
    with pytest.raises(BoundsError):
        bruteforce_ideal(RingShape(GF(2), 9, 9), [])


def test_enumerate_span_cap():
    sh = RingShape(GF(2), 5, 5)
    full = bruteforce_ideal(sh, [BiPoly.one(sh)])
    with pytest.raises(TooLargeError):
        enumerate_span(full)  # 2^25 > 2^20


def test_shift_closure_checks():
    sh, gens = fixture_problem()
    basis = bruteforce_ideal(sh, gens)
    assert check_shift_closure(sh, basis)
    assert check_shift_closure(sh, [np.zeros(4, dtype=int)])
    # the 1-dim span of 1000 is not closed: the row shift leaves it
    assert not check_shift_closure(sh, [np.array([1, 0, 0, 0])])


def test_verify_generator_set_fixture():
    sh, gens = fixture_problem()
    gs = extract_generators(sh, gens)
    rep = verify_generator_set(gs, gens)
    assert rep.passed
    names = [c.name for c in rep.checks]
    assert "span-equality" in names and "base-divisibility" in names


def test_verify_detects_dropped_generator():
    # principal ideal: the surviving generator regenerates the span, but
    # the triangularity and quotient checks still expose the corruption
    sh, gens = fixture_problem()
    gs = extract_generators(sh, gens)
    hollow = dataclasses.replace(gs, gens=(gs.gens[0], BiPoly.zero(sh)))
    rep = verify_generator_set(hollow, gens)
    assert not rep.passed
    failing = {c.name for c in rep.checks if not c.passed}
    assert "triangular" in failing and "base-divisibility" in failing


def test_verify_detects_shrunken_span():
    # two-generator ideal: dropping one layer generator really loses span
    sh = RingShape(GF(2), 2, 2)
    gens = [BiPoly(sh, [[1, 0], [1, 0]]), BiPoly(sh, [[1, 1], [0, 0]])]
    gs = extract_generators(sh, gens)
    hollow = dataclasses.replace(gs, gens=(gs.gens[0], BiPoly.zero(sh)))
    rep = verify_generator_set(hollow, gens)
    failing = {c.name for c in rep.checks if not c.passed}
    assert "span-equality" in failing


def test_verify_zero_ideal():
    sh = RingShape(GF(2), 2, 2)
    gs = extract_generators(sh, [])
    assert verify_generator_set(gs, []).passed
    gm = generator_matrix(gs)
    assert verify_matrix(gm, []).passed


def test_verify_matrix_fixture_and_duplicate_row():
    sh, gens = fixture_problem()
    gm = generator_matrix(extract_generators(sh, gens))
    assert verify_matrix(gm, gens).passed
    dup = dataclasses.replace(gm, rows=np.vstack([gm.rows, gm.rows[0]]),
                              labels=gm.labels + ((9, 9),))
    rep = verify_matrix(dup, gens)
    assert not rep.passed
    assert rep.first_failure().name == "rank"


def test_report_json_shape():
    sh, gens = fixture_problem()
    rep = verify_generator_set(extract_generators(sh, gens), gens)
    doc = rep.to_json_dict()
    assert set(doc) == {"checks"}
    for c in doc["checks"]:
        assert set(c) == {"name", "pass", "counterexample"}
        assert c["pass"] is True


def test_engine_oracle_agreement_random():
    rng = random.Random(71)
    for _ in range(25):
        q = rng.choice([2, 3, 4])
        F = GF(2, 2) if q == 4 else GF(q)
        sh = RingShape(F, rng.randint(1, 4), rng.randint(1, 4))
        gens = random_generators(rng, sh)
        eng = span_basis(sh, gens)
        orc = bruteforce_ideal(sh, gens)
        assert eng.dimension == orc.dimension
        eng_codeword = [r.to_vector("codeword") for r in eng.rows]
        assert np.array_equal(reduced_span(F, sh.n, eng_codeword), orc.vectors)
