import numpy as np
import pytest

from rankmetric.field import field_for
from rankmetric import trinomial as tri


def test_golden_roots_by_characteristic():
    # char 5: the double root 2
    assert tri.golden_roots(field_for(5, 6)) == [2]
    # q = 3: two conjugate roots found by scanning F_9
    F = field_for(3, 6)
    roots = tri.golden_roots(F)
    assert len(roots) == 2
    for r in roots:
        assert F.add(F.mul(r, r), F.sub(r, 1)) == 0
    assert F.frobenius(roots[0], 1) == roots[1]
    # q even: the two elements of F_4 - F_2 (order 3, fixed by x -> x^4)
    F2 = field_for(2, 6)
    r2 = tri.golden_roots(F2)
    assert len(r2) == 2
    for r in r2:
        assert F2.multiplicative_order(r) == 3
        assert F2.pfrobenius(r, 2) == r and F2.pfrobenius(r, 1) != r


@pytest.mark.parametrize("q", [3, 7])
def test_root_identities_nonsquare_case(q):
    # for q = +-2 mod 5 the two roots are Frobenius conjugates
    F = field_for(q, 6)
    c = tri.golden_roots(F)[0]
    cq = F.frobenius(c, 1)
    assert cq != c
    assert F.mul(c, cq) == F.neg(1)      # c^(q+1) = -1
    assert F.add(c, cq) == F.neg(1)      # c + c^q = -1


def test_roots_fall_into_base_field_when_5_is_square():
    # q = 9 = -1 mod 5: both roots already lie in F_q
    F = field_for(9, 6)
    for r in tri.golden_roots(F):
        assert F.in_subfield(r, 1)


def test_build_instance():
    inst = tri.build_instance(3)
    assert inst.code.dim == 12 and inst.dual_form.dim == 24
    assert inst.ctx.in_subfield(inst.c, 2)
    inst2 = tri.build_instance(2)
    assert inst2.code.dim == 12
    inst9 = tri.build_instance(9)
    assert inst9.ctx.Q == 9 ** 6


def test_system_check_flags():
    inst = tri.build_instance(3)
    rep = tri.system_check(inst, 0, 1, 0)
    assert not rep.ok and 1 in rep.failed
    # random triples essentially never satisfy the system at q = 3
    rng = np.random.default_rng(3)
    for _ in range(50):
        a, b, g = (int(v) for v in rng.integers(0, inst.ctx.Q, 3))
        assert not tri.system_check(inst, a, b, g).ok


def test_dual_word_shape_and_kernels():
    inst = tri.build_instance(3)
    w = tri.dual_word(inst, 1, 0, 0)
    F = inst.ctx
    assert w.coeffs == (inst.c, 1, 0, 0, F.neg(1), 0)
    assert inst.dual_form.contains(w)
    assert w.kernel_dim() <= 2
    # a found witness for even q has kernel dimension exactly 4
    inst2 = tri.build_instance(2)
    ev = tri.even_solution(inst2)
    assert ev.word.kernel_dim() == 4


@pytest.mark.parametrize("q,count", [(3, 13), (7, 57)])
def test_candidate_scan_counts_and_verdict(q, count):
    inst = tri.build_instance(q)
    rep = tri.candidate_scan(inst)
    assert len(rep.candidates) == count
    assert rep.verdict and rep.solutions == []


def test_candidate_scan_rejects_even_q():
    with pytest.raises(ValueError):
        tri.candidate_scan(tri.build_instance(2))


def test_full_gamma_scan_agrees():
    inst = tri.build_instance(3)
    assert tri.full_gamma_scan(inst) == []
    rep = tri.candidate_scan(inst)
    assert bool(rep.solutions) == bool(tri.full_gamma_scan(inst))


def test_unit_norm_lambdas():
    inst = tri.build_instance(3)
    lams = tri.unit_norm_lambdas(inst)
    assert len(lams) == 13
    F = inst.ctx
    for lam in lams:
        assert F.in_subfield(lam, 3)
        assert F.norm(lam, 1) == 1 or F.power(lam, 13) == 1


def test_solve_t_equation_all_lambdas():
    inst = tri.build_instance(3)
    F = inst.ctx
    for lam in tri.unit_norm_lambdas(inst):
        t = tri.solve_t_equation(inst, lam)
        # direct substitution: T^q + c*lam*T = lam
        assert F.add(F.frobenius(t, 1), F.mul(F.mul(inst.c, lam), t)) == lam
        assert F.norm(F.neg(F.mul(lam, inst.c)), 1) == F.neg(1)


@pytest.mark.parametrize("q", [2, 4, 8])
def test_even_solution(q):
    inst = tri.build_instance(q)
    ev = tri.even_solution(inst)
    assert ev.kernel_dim == 4 and ev.gamma == 0 and ev.alpha != 0 and ev.beta != 0
    assert tri.system_check(inst, ev.alpha, ev.beta, 0).ok


def test_even_solution_rejects_odd_q():
    with pytest.raises(ValueError):
        tri.even_solution(tri.build_instance(3))


@pytest.mark.parametrize("q", [3, 7])
def test_even_construction_equations_fail_for_odd_q(q):
    # not just guarded: replaying the gamma = 0 construction at odd q must
    # break down, either at the power equation or in the system itself
    inst = tri.build_instance(q)
    F = inst.ctx
    c = inst.c
    betas = F.solve_power(q + 1, F.inv(F.frobenius(c, 1)))
    for beta in betas:
        alpha = F.mul(F.mul(F.frobenius(c, 1), c), F.frobenius(beta, 2))
        assert not tri.system_check(inst, alpha, beta, 0).ok


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_mrd_xor_kernel4_word(q):
    inst = tri.build_instance(q)
    mrd = inst.code.is_mrd().is_mrd
    w = tri.exists_kernel4_dual_word(inst)
    assert mrd == (w is None)
    if w is not None:
        assert w.kernel_dim() >= 4 and inst.dual_form.contains(w)


def test_both_roots_give_the_same_story():
    # every headline quantity is invariant under c -> c^q
    for idx in (0, 1):
        inst = tri.build_instance(3, root_index=idx)
        assert inst.code.min_distance() == 5
        assert inst.code.is_mrd().is_mrd
        assert inst.code.left_idealiser().dimension == 6
        assert inst.code.right_idealiser().dimension == 2


def test_verify_main_odd_and_even():
    rep3 = tri.verify_main(3)
    assert rep3.is_mrd and rep3.min_distance == 5 and rep3.dim == 12
    assert rep3.left_idealiser["dimension"] == 6
    assert rep3.right_idealiser["dimension"] == 2
    assert rep3.scattered["is_maximum_scattered"]
    assert rep3.dual_dim == 24 and rep3.dual_min_distance == 3 and rep3.dual_is_mrd
    assert rep3.dual_twist_match["found"]
    assert rep3.adjoint_min_distance == 5
    assert rep3.consistent and rep3.witness is None

    rep4 = tri.verify_main(4)
    assert not rep4.is_mrd and rep4.min_distance <= 4
    assert rep4.witness is not None
    from rankmetric.linpoly import LinPoly
    w = LinPoly(field_for(4, 6), rep4.witness)
    assert w.rank() == rep4.min_distance <= 4
    assert not rep4.scattered["is_maximum_scattered"]
    assert rep4.consistent


def test_verify_main_json_schema():
    rep = tri.verify_main(2)
    blob = rep.to_json()
    assert blob["schema"].startswith("rankmetric-report")
    assert blob["kind"] == "verify-main"
    import json
    json.dumps(blob)   # must be serialisable
