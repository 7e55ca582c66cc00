"""Polynomial Poisson layer: linear and frozen brackets, lifts, PC families."""

from fractions import Fraction as F
import random

import pytest

from liepencil.exact import SparsePoly, span_rank
from liepencil.tensors import StructureTensor, derived
from liepencil.constructions import build_classical, GradingSpec, grading_operator, nilpotent_square
from liepencil.exact import RatMatrix
from liepencil.poisson import (
    PoissonStructure, SeedNotCentral, poisson_bracket, from_tensor,
    frozen_bracket, lift_operator, lifted, directional, directional_derivative,
    pc_generate, pc_verify, bihomogeneous_components, centre_candidates,
)

from helpers import rand_rat


def x(i, n=3):
    return SparsePoly.variable(n, i)


def sl2():
    return build_classical("sl", 2)


def casimir():
    # h^2 + 4ef in coordinates (x0, x1, x2) = (e, h, f)
    return x(1) * x(1) + SparsePoly.const(3, 4) * x(0) * x(2)


def rand_poly(rng, n=3, terms=3, deg=2):
    p = SparsePoly.zero(n)
    for _ in range(terms):
        exps = tuple(rng.randrange(deg + 1) for _ in range(n))
        p = p + SparsePoly.monomial(n, exps, rand_rat(rng))
    return p


def test_linear_table_from_tensor():
    struct = from_tensor(sl2())
    assert struct.jacobi_verified
    two = SparsePoly.const(3, 2)
    assert struct.table[(0, 1)] == -(two * x(0))
    assert struct.table[(0, 2)] == x(1)
    assert struct.table[(1, 2)] == -(two * x(2))
    # antisymmetric accessor
    assert struct.entry(1, 0) == two * x(0)
    assert struct.entry(2, 2) == SparsePoly.zero(3)


def test_from_tensor_rejects_non_jacobi():
    bad = StructureTensor(3, {(0, 1): {0: F(1)}, (1, 2): {1: F(1)}})
    with pytest.raises(ValueError):
        from_tensor(bad)


def test_casimir_is_central():
    struct = from_tensor(sl2())
    c = casimir()
    for i in range(3):
        assert poisson_bracket(struct, c, x(i)) == SparsePoly.zero(3)


def test_bracket_leibniz_antisymmetry_bilinear():
    struct = from_tensor(sl2())
    rng = random.Random(11)
    zero = SparsePoly.zero(3)
    for _ in range(8):
        f, g, h = (rand_poly(rng) for _ in range(3))
        assert poisson_bracket(struct, f, g) + poisson_bracket(struct, g, f) == zero
        lhs = poisson_bracket(struct, f * g, h)
        rhs = poisson_bracket(struct, f, h) * g + f * poisson_bracket(struct, g, h)
        assert lhs == rhs
        c = rand_rat(rng)
        scaled = poisson_bracket(struct, f * c + g, h)
        assert scaled == poisson_bracket(struct, f, h) * c + poisson_bracket(struct, g, h)


def test_lift_operator_oracles():
    op = grading_operator(GradingSpec((1, 0, 1), "periodic", 2))
    c = casimir()
    eight = SparsePoly.const(3, 8)
    assert lift_operator(op, c) == eight * x(0) * x(2)
    assert lift_operator(op, lift_operator(op, c)) == (eight + eight) * x(0) * x(2)
    # the identity lifts to the Euler operator: degree-m homogeneous -> m*f
    ident = RatMatrix.identity(3)
    cubic = x(0) * x(1) * x(2)
    assert lift_operator(ident, cubic) == cubic * 3
    assert lift_operator(ident, c) == c * 2


def test_lift_reproduces_derived_bracket_on_generators():
    # the lift defect of the generators' bracket is exactly the derived bracket
    t = sl2()
    struct = from_tensor(t)
    rng = random.Random(5)
    for _ in range(6):
        op = RatMatrix([[rand_rat(rng) for _ in range(3)] for _ in range(3)])
        dhat = lifted(op)
        dt = derived(t, op)
        for i in range(3):
            for j in range(3):
                defect = (dhat(struct.entry(i, j))
                          - poisson_bracket(struct, dhat(x(i)), x(j))
                          - poisson_bracket(struct, x(i), dhat(x(j))))
                expect = SparsePoly.linear([dt.bracket(i, j).get(k, F(0)) for k in range(3)])
                assert defect == expect


def test_pc_generate_grading_orbit():
    struct = from_tensor(sl2())
    op = grading_operator(GradingSpec((1, 0, 1), "periodic", 2))
    fam = pc_generate(struct, lifted(op), [casimir()])
    assert fam.provenance == ["seed0", "seed0:D^1"]
    assert fam.generators[0] == casimir()
    assert fam.generators[1] == SparsePoly.const(3, 8) * x(0) * x(2)
    cert = pc_verify(fam, struct)
    assert cert.ok and fam.verified
    assert cert.witness is None


def test_pc_generate_derivation_orbit_is_trivial():
    # lifting an inner derivation kills the casimir, so the orbit stops at once
    struct = from_tensor(sl2())
    ad_h = RatMatrix.diagonal([F(2), F(0), F(-2)])
    fam = pc_generate(struct, lifted(ad_h), [casimir()])
    assert fam.provenance == ["seed0"]
    assert fam.generators == [casimir()]


def test_pc_generate_directional_family():
    struct = from_tensor(sl2())
    fam = pc_generate(struct, directional([F(0), F(0), F(1)]), [casimir()])
    assert fam.generators == [casimir(), SparsePoly.const(3, 4) * x(0)]
    assert pc_verify(fam, struct).ok


def test_pc_verify_failure_witness():
    struct = from_tensor(sl2())
    from liepencil.poisson import PCFamily
    fam = PCFamily([x(0), x(2)], ["seed0", "seed1"])
    cert = pc_verify(fam, struct)
    assert not cert.ok
    assert cert.witness == (0, 1)
    assert cert.bracket == x(1)
    assert not fam.verified


def test_seed_must_be_central():
    struct = from_tensor(sl2())
    op = grading_operator(GradingSpec((1, 0, 1), "periodic", 2))
    with pytest.raises(SeedNotCentral) as exc:
        pc_generate(struct, lifted(op), [x(0)])
    assert exc.value.seed_index == 0
    assert exc.value.var_index == 1


def test_directional_derivative_contracts():
    g = [F(1), F(2), F(0)]
    p = x(0) * x(1)
    assert directional_derivative(g, p) == x(1) + x(0) * 2


def test_bihomogeneous_components():
    comps = bihomogeneous_components(casimir(), (1, 0, 1))
    assert sorted(comps) == [0, 2]
    assert comps[0] == x(1) * x(1)
    assert comps[2] == SparsePoly.const(3, 4) * x(0) * x(2)
    # components of the orbit span agree with the orbit span itself
    orbit = [casimir(), SparsePoly.const(3, 8) * x(0) * x(2)]
    both = orbit + [comps[0], comps[2]]
    monos = sorted({e for q in both for e in q.terms})
    rank = lambda polys: span_rank([q.coeff_vector(monos) for q in polys])
    assert rank(orbit) == rank(list(comps.values())) == rank(both) == 2


def test_centre_candidates_sl2():
    struct = from_tensor(sl2())
    cands = centre_candidates(struct, max_degree=2)
    assert len(cands) == 1
    assert cands[0].format(["x0", "x1", "x2"]) == "4*x0*x2 + x1^2"
    assert centre_candidates(struct, max_degree=1) == []


def test_centre_candidates_abelian_and_heisenberg():
    abelian = PoissonStructure(2, {})
    cands = centre_candidates(abelian, max_degree=2)
    assert len(cands) == 5   # x0, x1, x0^2, x0*x1, x1^2
    t = sl2()
    op, _report = nilpotent_square(t, [1, 0, 0])
    heis = from_tensor(derived(t, op))
    assert heis.table == {(1, 2): SparsePoly.const(3, 8) * x(0)}
    linear = centre_candidates(heis, max_degree=1)
    assert linear == [x(0)]


def test_frozen_bracket():
    t = sl2()
    struct = frozen_bracket(t, [F(0), F(1), F(0)])
    assert struct.jacobi_verified
    assert struct.table == {(0, 2): SparsePoly.const(3, 1)}
    assert frozen_bracket(t, [F(0)] * 3).table == {}
    bad = StructureTensor(3, {(0, 1): {0: F(1)}, (1, 2): {1: F(1)}})
    with pytest.raises(ValueError):
        frozen_bracket(bad, [F(1), F(0), F(0)])


def test_linear_plus_frozen_is_compatible():
    # the affine combination of the linear table and any frozen shift still
    # satisfies jacobi on generators: cyclic sums of constants vanish
    t = sl2()
    lin = from_tensor(t)
    froz = frozen_bracket(t, [F(1), F(-2), F(3)])
    mixed = {}
    for pair in {(0, 1), (0, 2), (1, 2)}:
        entry = lin.table.get(pair, SparsePoly.zero(3)) + froz.table.get(pair, SparsePoly.zero(3))
        if not entry.is_zero():
            mixed[pair] = entry
    struct = PoissonStructure(3, mixed)
    zero = SparsePoly.zero(3)
    for i, j, k in ((0, 1, 2),):
        total = (poisson_bracket(struct, struct.entry(i, j), x(k))
                 + poisson_bracket(struct, struct.entry(j, k), x(i))
                 + poisson_bracket(struct, struct.entry(k, i), x(j)))
        assert total == zero
