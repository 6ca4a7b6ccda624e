import numpy as np
import pytest

from rankmetric.field import field_for
from rankmetric.linpoly import LinPoly
from rankmetric.code import RankCode
from rankmetric.trinomial import build_instance, golden_roots, trinomial_map


F = field_for(3, 6)
F2 = field_for(2, 6)
RNG = np.random.default_rng(17)


def trinomial_code(ctx):
    c = golden_roots(ctx)[0]
    return RankCode.from_semilinear(ctx, [LinPoly.identity(ctx), trinomial_map(ctx, c)])


def random_code(ctx, k, rng=RNG):
    while True:
        try:
            return RankCode(ctx, [LinPoly(ctx, rng.integers(0, ctx.Q, ctx.n))
                                  for _ in range(k)])
        except ValueError:
            continue


def test_from_semilinear_dimensions():
    x = LinPoly.identity(F)
    assert RankCode.from_semilinear(F, [x]).dim == 6
    C = trinomial_code(F)
    assert C.dim == 12
    G = RankCode.from_semilinear(F, [x, LinPoly.monomial(F, 1)])
    assert G.dim == 12
    with pytest.raises(ValueError, match="dependent"):
        RankCode.from_semilinear(F, [x, x.scale(5)])


def test_membership_and_equality():
    C = trinomial_code(F)
    assert C.contains(LinPoly.zero(F))
    x, f = C.gens
    w = x.scale(7) + f.scale(500)
    assert C.contains(w)
    assert not C.contains(LinPoly.monomial(F, 2))
    D = C.delsarte_dual()
    assert D.delsarte_dual() == C
    assert C != D


def test_codeword_iteration():
    x = LinPoly.identity(F2)
    C = RankCode.from_semilinear(F2, [x, LinPoly.monomial(F2, 1)])
    full = list(C.codewords("full"))
    assert len(full) == 2 ** 12 - 1
    proj = list(C.codewords("projective"))
    assert len(proj) == 2 ** 6 + 1
    ranks_full = {w.rank() for w in proj}
    assert min(w.rank() for w in proj) == C.min_distance()


def test_min_distance_trivial_codes():
    x = LinPoly.identity(F)
    assert RankCode.from_semilinear(F, [x]).min_distance() == 6
    assert RankCode.from_semilinear(F, [LinPoly.monomial(F, 1)]).min_distance() == 6
    with pytest.raises(ValueError):
        RankCode(F, []).min_distance()


def test_min_distance_strategies_agree():
    # q = 2 keeps the full path cheap: 4095 words
    C = trinomial_code(F2)
    d_proj, w_proj = C.min_rank_word(strategy="projective")
    d_full, w_full = C.min_rank_word(strategy="full")
    d_scan, w_scan = C.min_rank_word(strategy="kernel-scan")
    assert d_proj == d_full == d_scan
    for w in (w_proj, w_full, w_scan):
        assert C.contains(w) and w.rank() == d_full
    # a rank-3 module code: kernel scan against full enumeration
    gens = [LinPoly.identity(F2), LinPoly.monomial(F2, 1), LinPoly.monomial(F2, 2)]
    M = RankCode.from_semilinear(F2, gens)
    d1, _ = M.min_rank_word(strategy="kernel-scan")
    d2, _ = M.min_rank_word(strategy="full")
    assert d1 == d2


def test_pair_code_without_invertible_generator():
    # both generators singular: the representative loop is the fallback
    x = LinPoly.identity(F2)
    g1 = LinPoly.monomial(F2, 1) - x          # kernel F_2
    g2 = LinPoly.monomial(F2, 2) - x          # kernel F_4
    C = RankCode.from_semilinear(F2, [g1, g2])
    assert g1.inverse() is None and g2.inverse() is None
    d_rep, w = C.min_rank_word()
    d_full, _ = C.min_rank_word(strategy="full")
    assert d_rep == d_full and C.contains(w) and w.rank() == d_rep


def test_early_exit_returns_witness():
    C = trinomial_code(F2)
    d, w = C.min_rank_word(early_exit=4)
    assert w is not None and w.rank() <= 4 and C.contains(w)


def test_is_mrd():
    assert trinomial_code(F).is_mrd().is_mrd
    res = trinomial_code(F2).is_mrd()
    assert not res.is_mrd and res.witness.rank() < res.bound
    res2 = trinomial_code(F2).is_mrd(early_exit=True)
    assert not res2.is_mrd and res2.witness is not None
    # Gabidulin-type code <x, x^q> is MRD for any q
    for ctx in (F, F2):
        G = RankCode.from_semilinear(ctx, [LinPoly.identity(ctx), LinPoly.monomial(ctx, 1)])
        assert G.is_mrd().is_mrd


def test_delsarte_dual_laws():
    C = trinomial_code(F)
    D = C.delsarte_dual()
    assert D.dim == 36 - C.dim == 24
    assert D.gens is not None and len(D.gens) == 4
    # dual of the whole algebra is the zero code
    full = RankCode(F2, [LinPoly.monomial(F2, i, int(c))
                         for i in range(6) for c in F2.power_basis])
    z = full.delsarte_dual()
    assert z.dim == 0 and z.contains(LinPoly.zero(F2))
    assert z.delsarte_dual() == full
    # involution and dimension law on random subcodes
    for _ in range(5):
        k = int(RNG.integers(1, 9))
        E = random_code(F, k)
        Ed = E.delsarte_dual()
        assert Ed.dim == 36 - k
        assert Ed.delsarte_dual() == E
    # the coefficient-constraint description of the dual
    c = golden_roots(F)[0]
    for w in D.basis:
        assert w.coeffs[0] == 0
        acc = F.add(w.coeffs[1], F.add(w.coeffs[3], F.mul(c, w.coeffs[5])))
        assert acc == 0


def test_bilinear_form():
    probe = RankCode(F2, [LinPoly.identity(F2)])
    f = LinPoly(F2, RNG.integers(0, 64, 6))
    g = LinPoly(F2, RNG.integers(0, 64, 6))
    assert probe.bilinear_form(f, g) == probe.bilinear_form(g, f)
    # b(f, g) = 0 for all g forces f = 0 (checked on the monomial basis)
    basis = [LinPoly.monomial(F2, i, int(cc)) for i in range(6) for cc in F2.power_basis]
    if not f.is_zero:
        assert any(probe.bilinear_form(f, g) for g in basis)


def test_adjoint_code():
    C = trinomial_code(F)
    A = C.adjoint_code()
    assert A.dim == C.dim
    assert A.right_gens is not None and len(A.right_gens) == 2
    assert A.min_distance() == C.min_distance() == 5
    L = C.left_idealiser()
    R = A.right_idealiser()
    assert np.array_equal(L.span_rref(C), R.span_rref(A))
    assert A.adjoint_code() == C


def test_idealisers_trinomial():
    C = trinomial_code(F)
    L = C.left_idealiser()
    R = C.right_idealiser()
    assert (L.dimension, L.is_field, L.field_order) == (6, True, 729)
    assert (R.dimension, R.is_field, R.field_order) == (2, True, 9)
    assert L.closed_under_composition and R.closed_under_composition
    # the left idealiser is exactly the scalar maps x -> a*x
    scalars = RankCode(F, [LinPoly.monomial(F, 0, int(c)) for c in F.power_basis])
    assert np.array_equal(L.span_rref(C), scalars._R)
    # the right idealiser is the scalar maps with a in F_{q^2}
    sub2 = [int(a) for a in F.enumerate_subfield(2)]
    exp = RankCode(F, [LinPoly.monomial(F, 0, a) for a in (1, sub2[-1])
                       ])
    assert np.array_equal(R.span_rref(C), exp._R)


def test_idealisers_gabidulin():
    G = RankCode.from_semilinear(F, [LinPoly.identity(F), LinPoly.monomial(F, 1)])
    L = G.left_idealiser()
    assert L.dimension == 6 and L.is_field


def test_idealiser_cap():
    C = trinomial_code(F)
    with pytest.raises(ValueError, match="cap"):
        C.left_idealiser(classify_cap=10)


def test_frobenius_twist():
    C = trinomial_code(F)
    assert C.frobenius_twist(0, 0) == C
    i, j = (int(v) for v in RNG.integers(0, 6, 2))
    T = C.frobenius_twist(i, j)
    assert T.dim == C.dim
    assert T.min_distance() == C.min_distance()
    # the computed dual matches the 4-generator dual form after a twist
    inst = build_instance(3)
    D = inst.code.delsarte_dual()
    hits = [(a, b) for a in range(6) for b in range(6)
            if D.frobenius_twist(a, b) == inst.dual_form]
    assert (0, 5) in hits


def test_serialization_roundtrip(tmp_path):
    import json
    C = trinomial_code(F)
    blob = json.dumps(C.to_json())
    C2 = RankCode.from_json(json.loads(blob))
    assert C2 == C and C2.gens is not None
    D = C.adjoint_code()
    D2 = RankCode.from_json(D.to_json())
    assert D2 == D and D2.right_gens is not None
