"""Torsion tensors, Nijenhuis checks, and exponential identities."""

from fractions import Fraction as F
import random

import pytest

from liepencil.exact import RatMatrix
from liepencil.tensors import classify_operator, derived
from liepencil.constructions import (GradingSpec, assoc_operators,
                                     build_classical, grading_operator,
                                     nilpotent_square)
from liepencil.nijenhuis import (
    torsion, is_nijenhuis, torsion_decomposition, check_N_properties,
    exp_identity_nijenhuis, certified_exp_identity_nijenhuis,
    exp_identity_near, diagonal_torsion_witnesses, assoc_torsion_formula,
)

from helpers import rand_rat, rand_matrix


def sl2():
    return build_classical("sl", 2)


GRADING = grading_operator(GradingSpec((1, 0, 1), "periodic", 2))


def test_grading_operator_torsion():
    t = sl2()
    tor = torsion(t, GRADING)
    assert tor.bracket(0, 2) == {1: F(1)}
    assert tor.bracket(0, 1) == {}
    ok, witness = is_nijenhuis(t, GRADING)
    assert not ok
    assert witness == (0, 2)
    assert diagonal_torsion_witnesses(t, GRADING) == [(0, 2, 1, F(1)), (2, 0, 1, F(-1))]


def test_derivation_torsion_is_bracket_of_images():
    # for a derivation the correction term drops out: torsion(x,y) = [Dx, Dy]
    t = sl2()
    ad_h = RatMatrix.diagonal([F(2), F(0), F(-2)])
    tor = torsion(t, ad_h)
    assert tor.bracket(0, 2) == {1: F(-4)}
    for i in range(3):
        for j in range(3):
            lhs = tor.apply([F(k == i) for k in range(3)], [F(k == j) for k in range(3)])
            rhs = t.apply(ad_h.col(i), ad_h.col(j))
            assert lhs == rhs


def test_torsion_decomposition_random():
    rng = random.Random(23)
    t = sl2()
    for _ in range(20):
        op = rand_matrix(rng, 3)
        split = torsion_decomposition(t, op)
        assert split.ok


def test_left_multiplication_by_idempotent():
    e11 = RatMatrix([[F(1), F(0)], [F(0), F(0)]])
    ops = assoc_operators(2, e11)
    act = classify_operator(ops.gl_tensor, ops.left)
    assert (act.tag, act.a, act.b) == ("near", F(0), F(-1))
    ok, witness = is_nijenhuis(ops.gl_tensor, ops.left)
    assert ok and witness is None
    report = check_N_properties(ops.gl_tensor, ops.left, depth=3)
    assert report.ok and report.pairwise_compatible
    assert [s.k for s in report.steps] == [1, 2, 3]
    for step in report.steps:
        assert step.power_is_nijenhuis
        assert step.iterate_matches_power
        assert step.iterate_is_lie


def test_nilpotent_left_multiplication_exp():
    e12 = RatMatrix([[F(0), F(1)], [F(0), F(0)]])
    ops = assoc_operators(2, e12)
    act = classify_operator(ops.gl_tensor, ops.left)
    assert act.tag == "quasi"
    rep = exp_identity_nijenhuis(ops.gl_tensor, ops.left, F(1, 2))
    assert rep.ok
    cert = certified_exp_identity_nijenhuis(ops.gl_tensor, ops.left)
    assert cert.ok
    assert len(cert.points) == 17   # enough samples to pin the polynomial


def test_exp_identity_near_semisimple():
    t = sl2()
    for v in (F(2), F(3)):
        rep = exp_identity_near(t, GRADING, -2, v)
        assert rep.ok and rep.precondition_ok
    bad = exp_identity_near(t, GRADING, 3, F(2))
    assert not bad.precondition_ok


def test_exp_identity_quasi_nilpotent():
    t = sl2()
    op, _ = nilpotent_square(t, [1, 0, 0])
    for s in (F(1), F(2)):
        rep = exp_identity_near(t, op, 0, s)
        assert rep.ok and rep.precondition_ok


def test_exp_identity_near_requires_integer_diagonal():
    t = sl2()
    op, _ = nilpotent_square(t, [1, 0, 0])   # nilpotent, not diagonal
    with pytest.raises(ValueError):
        exp_identity_near(t, op, -2, F(2))


def test_assoc_torsion_worked_projection():
    a = RatMatrix.diagonal([F(1), F(0), F(0)])
    report = assoc_torsion_formula(3, a)
    assert report.ok
    assert report.torsion_matches and report.derived_matches
    assert not report.nijenhuis
    assert report.torsion.bracket(0, 1) == {2: F(1, 4)}


def test_assoc_torsion_random_symmetric():
    rng = random.Random(31)
    for _ in range(3):
        a = rand_matrix(rng, 3)
        sym = a + a.transpose()
        report = assoc_torsion_formula(3, sym)
        assert report.torsion_matches
        assert report.derived_matches
