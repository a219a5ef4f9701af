from fractions import Fraction

import pytest

from homlie.linalg import Mat
from homlie.cochains import cochain_matrix, operator_cochain
from homlie.structures import (adjoint_action, adjoint_representation,
                               bracket_action_on_abelian, check_hom_jacobi,
                               check_morphism, check_representation, fixture_b,
                               HomMorphism, RawHomStructure)
from homlie.differentials import delta_hom
from homlie.brackets import theta
from homlie.operators import (ConsistencyError, deformed_bracket_n, induced_structures,
                              is_nijenhuis, is_relative_rb, is_rota_baxter, mc_residual,
                              nijenhuis_defect, nijenhuis_report, rb_deformed_bracket,
                              relative_rb_graph, relative_rb_mc, relative_rb_pointwise,
                              search_nijenhuis, search_relative_rb, search_rota_baxter)
from homlie.theorems import sample_cochain, _stream

B = fixture_b()


def test_deformed_bracket_identity_and_zero():
    assert deformed_bracket_n(B, Mat.identity(3)) == B.mu
    assert deformed_bracket_n(B, Mat.zero(3, 3)).is_zero()


def test_deformed_bracket_equals_adjoint_coboundary_of_operator():
    rng = _stream(31, "op")
    adj = adjoint_representation(B)
    n = sample_cochain(B.space, B.space, 1, rng)
    nm = cochain_matrix(n)
    assert deformed_bracket_n(B, nm) == delta_hom(adj, n)


def test_scalar_multiples_of_identity_are_nijenhuis():
    for c in ("0", "1", "-2", "1/2"):
        assert is_nijenhuis(B, Mat.identity(3).scale(Fraction(c)))


def test_nijenhuis_defect_witness():
    found = None
    rng = _stream(32, "op2")
    for _ in range(30):
        cand = cochain_matrix(sample_cochain(B.space, B.space, 1, rng))
        if not is_nijenhuis(B, cand):
            found = cand
            break
    assert found is not None
    pair, lhs, rhs = nijenhuis_defect(B, found)
    e = [B.space.basis_vec(i) for i in range(3)]
    assert lhs == B.bracket(found @ e[pair[0]], found @ e[pair[1]])
    assert lhs != rhs


def test_non_twist_commuting_operator_rejected():
    bad = Mat.make([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert B.alpha @ bad != bad @ B.alpha
    with pytest.raises(ValueError):
        is_nijenhuis(B, bad)
    with pytest.raises(ValueError):
        is_rota_baxter(B, bad, 1)


def test_nijenhuis_search_and_report():
    found = search_nijenhuis(B)
    assert found, "bounded search found no operators"
    assert any(not m.is_zero() for m in found)
    for m in found:
        report = nijenhuis_report(B, m)
        assert report.ok, report.failed()
        deformed = deformed_bracket_n(B, m)
        assert check_hom_jacobi(RawHomStructure(B.space, deformed))


def test_rb_scalar_cases():
    for lam in ("0", "1", "2", "-1/2"):
        lam = Fraction(lam)
        assert is_rota_baxter(B, Mat.zero(3, 3), lam)
        assert is_rota_baxter(B, Mat.identity(3).scale(-lam), lam)


def test_rb_deformed_bracket_formula():
    rng = _stream(33, "op3")
    r = sample_cochain(B.space, B.space, 1, rng)
    rm = cochain_matrix(r)
    lam = Fraction(3, 2)
    assert rb_deformed_bracket(B, rm, lam) == B.mu.scale(lam) - theta(B, r)


def test_rb_direct_and_mc_agree_on_random_candidates():
    rng = _stream(34, "op4")
    seen_true = seen_false = 0
    for _ in range(25):
        rm = cochain_matrix(sample_cochain(B.space, B.space, 1, rng))
        lam = Fraction(rng.choice([0, 1, 2, -1]))
        verdict = is_rota_baxter(B, rm, lam)  # raises on criteria disagreement
        seen_true += verdict
        seen_false += not verdict
    assert seen_false > 0


def test_rb_search_finds_operators():
    found = search_rota_baxter(B, 1)
    assert found and any(not m.is_zero() for m in found)


def test_search_falls_back_to_full_grid_for_non_aligned_commutants():
    from homlie.operators import _search_matrices
    from homlie.structures import fixture_yau_shear
    shear = fixture_yau_shear()
    mats = _search_matrices(shear.space, shear.space, (-1, 0, 1))
    assert len(mats) == 243  # 5-dim commutant of the unipotent twist
    assert all(shear.alpha @ m == m @ shear.alpha for m in mats)
    found = search_nijenhuis(shear)
    assert found and any(not m.is_zero() for m in found)


def test_theta_of_residual_detects_deformed_jacobi():
    # theta applied to the Maurer-Cartan residual vanishes exactly when the
    # weighted deformed bracket satisfies the twisted Jacobi identity
    from homlie.brackets import derived_bracket, theta
    from homlie.differentials import d_lambda
    from homlie.cochains import operator_cochain
    rng = _stream(37, "op7")
    seen = {True: 0, False: 0}
    for _ in range(25):
        rm = cochain_matrix(sample_cochain(B.space, B.space, 1, rng))
        lam = Fraction(rng.choice([0, 1, 2]))
        rc = operator_cochain(B.space, B.space, rm)
        residual = d_lambda(B, rc, lam) + derived_bracket(B, rc, rc).scale(Fraction(1, 2))
        lhs = theta(B, residual).is_zero()
        deformed = rb_deformed_bracket(B, rm, lam)
        rhs = check_hom_jacobi(RawHomStructure(B.space, deformed))
        assert lhs == rhs
        seen[lhs] += 1
    assert seen[True] > 0


def test_relative_rb_three_criteria_and_specialization():
    act = bracket_action_on_abelian(B)
    rng = _stream(35, "op5")
    for _ in range(15):
        rm = cochain_matrix(sample_cochain(act.acted.space, B.space, 1, rng))
        lam = Fraction(rng.choice([0, 1, 2]))
        a = relative_rb_pointwise(act, rm, lam)
        b = relative_rb_graph(act, rm, lam)
        c = relative_rb_mc(act, rm, lam)
        assert a == b == c
    # adjoint action specializes to the plain Rota-Baxter predicate
    adj_act = adjoint_action(B)
    for _ in range(10):
        rm = cochain_matrix(sample_cochain(B.space, B.space, 1, rng))
        lam = Fraction(rng.choice([0, 1]))
        assert is_relative_rb(adj_act, rm, lam) == is_rota_baxter(B, rm, lam)
    assert is_relative_rb(act, Mat.zero(3, 3), 0)
    assert is_relative_rb(act, Mat.zero(3, 3), 5)


def test_induced_structures_postconditions():
    act = bracket_action_on_abelian(B)
    ops = search_relative_rb(act, 1)
    assert ops
    nonzero = [m for m in ops if not m.is_zero()]
    assert nonzero
    for R in nonzero[:3]:
        induced, rep = induced_structures(act, R, 1)
        assert check_hom_jacobi(induced)
        assert check_representation(rep)
        assert check_morphism(HomMorphism(induced, B, R))
    with pytest.raises(ValueError):
        bad = Mat.make([[1, 0, 0], [0, 1, 0], [0, 1, 1]])
        induced_structures(act, bad, 1)


def test_induced_structures_degenerate():
    act = bracket_action_on_abelian(B)
    induced, rep = induced_structures(act, Mat.zero(3, 3), 0)
    assert induced.mu.is_zero()
    assert all(v.is_zero() for row in rep.table for v in row)


def test_dual_criteria_disagreement_is_a_hard_error(monkeypatch):
    from homlie import operators
    # force the bracket-square route to contradict the pointwise identity
    monkeypatch.setattr(operators, "fn_bracket", lambda alg, a, b: alg.mu)
    with pytest.raises(ConsistencyError):
        operators.is_nijenhuis(B, Mat.identity(3))
    monkeypatch.undo()
    monkeypatch.setattr(operators, "derived_bracket", lambda alg, a, b: alg.mu.scale(2))
    with pytest.raises(ConsistencyError):
        operators.is_rota_baxter(B, Mat.zero(3, 3), 0)


def test_mc_residual_kinds():
    rng = _stream(36, "op6")
    # a verified morphism is a Maurer-Cartan element of the cup algebra
    phi = operator_cochain(B.space, B.space, Mat.identity(3))
    assert mc_residual(phi, "morphism", alg=B, target=B).is_zero()
    # derived kind matches the Rota-Baxter predicate
    rm = cochain_matrix(sample_cochain(B.space, B.space, 1, rng))
    res = mc_residual(operator_cochain(B.space, B.space, rm), "derived", alg=B, lam=1)
    assert res.is_zero() == is_rota_baxter(B, rm, 1)
    if not res.is_zero():
        key = sorted(res.coeffs)[0]
        assert not res.value_on(key).is_zero()
    # relative derived kind matches the relative predicate
    act = bracket_action_on_abelian(B)
    rm2 = cochain_matrix(sample_cochain(act.acted.space, B.space, 1, rng))
    res2 = mc_residual(operator_cochain(act.acted.space, B.space, rm2),
                       "relative_derived", action=act, lam=1)
    assert res2.is_zero() == relative_rb_pointwise(act, rm2, 1)
    # twisted morphism kind: zero perturbation of a morphism is Maurer-Cartan
    hom = HomMorphism(B, B, Mat.identity(3))
    zero = operator_cochain(B.space, B.space, Mat.zero(3, 3))
    assert mc_residual(zero, "morphism_twisted", phi=hom).is_zero()
    with pytest.raises(ValueError):
        mc_residual(phi, "no-such-kind")
    with pytest.raises(ValueError):
        mc_residual(B.mu, "derived", alg=B, lam=0)
