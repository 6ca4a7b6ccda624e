import warnings

import numpy as np
import pytest

from rankmetric.field import field_for
from rankmetric.linpoly import LinPoly
from rankmetric import scattered as sc
from rankmetric.trinomial import golden_roots


F = field_for(3, 6)
RNG = np.random.default_rng(23)


def u4(ctx):
    return sc.family_u4(ctx, golden_roots(ctx)[0])


def test_slopes_identity_and_pseudoregulus():
    sx = sc.slopes(sc.PointedSubspace(LinPoly.identity(F)))
    assert sx == {1: 728}
    s1 = sc.slopes(sc.family_u1(F, 1))
    assert len(s1) == 364 and set(s1.values()) == {2}


def test_slopes_even_trinomial_collapse():
    F2 = field_for(2, 6)
    s = sc.slopes(u4(F2))
    assert len(s) < 63


def test_fiber_divisibility():
    for _ in range(10):
        f = LinPoly(F, RNG.integers(0, F.Q, 6))
        s = sc.slopes(sc.PointedSubspace(f))
        assert all(v % (F.q - 1) == 0 for v in s.values())


def test_linear_set_reports():
    rep = sc.linear_set(sc.family_u1(F, 1))
    assert rep.size == 364 and rep.weight_spectrum == {1: 364}
    assert rep.is_scattered and rep.is_maximum_scattered
    rep4 = sc.linear_set(u4(F))
    assert rep4.size == 364 and rep4.is_maximum_scattered
    F4 = field_for(4, 6)
    rep44 = sc.linear_set(u4(F4))
    assert not rep44.is_scattered
    assert rep44.size < (4 ** 6 - 1) // 3
    assert max(rep44.weight_spectrum) >= 2
    assert rep44.check_weight_sum(4, 6)


def test_three_way_scatteredness_agreement():
    # distinct-slope count, weight spectrum and the scattered flag must agree
    for ctx in (F, field_for(2, 6)):
        for U in (sc.family_u1(ctx, 1), u4(ctx),
                  sc.PointedSubspace(LinPoly(ctx, RNG.integers(0, ctx.Q, 6)))):
            s = sc.slopes(U)
            rep = sc.linear_set(U)
            assert rep.size == len(s)
            by_count = len(s) == (ctx.Q - 1) // (ctx.q - 1)
            by_weight = max(rep.weight_spectrum, default=1) == 1
            assert rep.is_scattered == by_count == by_weight


def test_stabiliser_orders_q3():
    assert sc.stabiliser_order(sc.family_u1(F, 1)).order == 728
    assert sc.stabiliser_order(u4(F)).order == 8
    delta = next(d for d in range(2, F.Q) if F.norm(d, 1) not in (0, 1))
    assert sc.stabiliser_order(sc.family_u2(F, 1, delta)).order == 8
    delta3 = next(d for d in range(2, F.Q) if F.norm(d, 3) not in (0, 1))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        U3 = sc.family_u3(F, 1, delta3)
    assert sc.stabiliser_order(U3).order == 26


def test_stabiliser_samples_are_members():
    rep = sc.stabiliser_order(u4(F), sample_limit=3)
    f = u4(F).f
    assert 1 <= len(rep.sample_elements) <= 3
    for (m00, m01), (m10, m11) in rep.sample_elements:
        for x in RNG.integers(0, F.Q, 10):
            x = int(x)
            lhs = f(F.add(F.mul(m00, x), F.mul(m01, f(x))))
            rhs = F.add(F.mul(m10, x), F.mul(m11, f(x)))
            assert lhs == rhs
        det = F.sub(F.mul(m00, m11), F.mul(m01, m10))
        assert det != 0


def test_stabiliser_invariant_under_diagonal_twist():
    # U_{lam * f(mu x)} is GL(2)-conjugate to U_f, so the orders agree
    U = u4(F)
    lam, mu = int(RNG.integers(1, F.Q)), int(RNG.integers(1, F.Q))
    g = U.f.scale(lam).compose(LinPoly.monomial(F, 0, mu))
    assert sc.stabiliser_order(sc.PointedSubspace(g)).order == 8


def test_stabiliser_cap():
    F5 = field_for(5, 6)
    with pytest.raises(ValueError, match="cap"):
        sc.stabiliser_order(u4(F5))
    with pytest.raises(ValueError, match="positive q-degree"):
        sc.stabiliser_order(sc.PointedSubspace(LinPoly.identity(F)))


def test_family_validation():
    with pytest.raises(ValueError):
        sc.family_u1(F, 2)                      # gcd(2, 6) != 1
    with pytest.raises(ValueError):
        sc.family_u1(F, 0)
    with pytest.raises(ValueError, match="norm"):
        sc.family_u2(F, 1, 1)                   # N(1) = 1
    with pytest.raises(ValueError, match="norm"):
        sc.family_u2(F, 1, 0)
    # at q = 2 every delta has norm in {0, 1}: the family is empty
    F2 = field_for(2, 6)
    for d in range(64):
        with pytest.raises(ValueError):
            sc.family_u2(F2, 1, d)
    with pytest.raises(ValueError, match="must be 6 or 8"):
        sc.family_u3(field_for(3, 4), 1, 2)
    with pytest.raises(ValueError, match="c does not satisfy"):
        sc.family_u4(F, 1)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        delta3 = next(d for d in range(2, F.Q) if F.norm(d, 3) not in (0, 1))
        sc.family_u3(F, 1, delta3)
        assert any("norm/gcd" in str(w.message) for w in caught)


def test_u2_is_scattered_at_q3():
    delta = next(d for d in range(2, F.Q) if F.norm(d, 1) not in (0, 1))
    rep = sc.linear_set(sc.family_u2(F, 1, delta))
    assert rep.is_maximum_scattered


def test_code_bridge():
    for q in (2, 3, 4, 5):
        ctx = field_for(q, 6)
        U = u4(ctx)
        C = sc.code_of(U)
        assert sc.subspace_of(C) == U
        assert C.is_mrd().is_mrd == sc.linear_set(U).is_maximum_scattered == (q % 2 == 1)
    # pseudoregulus side: always MRD / maximum scattered
    C1 = sc.code_of(sc.family_u1(F, 1))
    assert C1.is_mrd().is_mrd
    with pytest.raises(ValueError, match="form"):
        sc.subspace_of(C1.delsarte_dual())
