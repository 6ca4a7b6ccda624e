import numpy as np
import pytest

from rankmetric.field import field_for
from rankmetric.linpoly import LinPoly, from_matrix, slope_fiber_counts, fiber_weights
from rankmetric import linalg


F = field_for(3, 6)
RNG = np.random.default_rng(11)


def rand_poly(ctx=F, rng=RNG):
    return LinPoly(ctx, rng.integers(0, ctx.Q, ctx.n))


def golden_root(ctx):
    return next(int(a) for a in ctx.enumerate_subfield(2)
                if ctx.add(ctx.mul(int(a), int(a)), ctx.sub(int(a), 1)) == 0)


def test_construction():
    f = LinPoly(F, [1, 2])
    assert f.coeffs == (1, 2, 0, 0, 0, 0)
    assert LinPoly.zero(F).is_zero
    assert LinPoly.zero(F).q_degree is None
    assert LinPoly(F, [0, 0, 7]).q_degree == 2
    with pytest.raises(ValueError):
        LinPoly(F, [0] * 7)
    with pytest.raises(ValueError):
        LinPoly(F, [10 ** 6])


def test_eval():
    x = LinPoly.identity(F)
    for a in (0, 1, 17, 728):
        assert x(a) == a
    f = LinPoly.monomial(F, 1) - x           # x^q - x
    assert f(1) == 0
    # trinomial at 1 evaluates to 2 + c, and the matrix route agrees
    c = golden_root(F)
    tri = LinPoly.monomial(F, 1) + LinPoly.monomial(F, 3) + LinPoly.monomial(F, 5, c)
    val = tri(1)
    assert val == F.add(2, c)
    # independent route: multiply the matrix by the coordinates of 1
    coords1 = F.to_coords(1)
    col = np.zeros(6, dtype=np.int64)
    M = tri.to_matrix()
    for j in range(6):
        col = F.vadd(col, F.vmul(M[:, j], int(coords1[j])))
    assert F.from_coords(col) == val
    # vector evaluation agrees with scalar evaluation
    xs = RNG.integers(0, F.Q, 100)
    vals = tri.eval_vec(xs)
    assert all(int(vals[i]) == tri(int(xs[i])) for i in range(100))


def test_add_scale_properties():
    zero = LinPoly.zero(F)
    for _ in range(20):
        f = rand_poly()
        assert f + (-f) == zero
        assert f.scale(0) == zero
        lam, xv = int(RNG.integers(0, F.Q)), int(RNG.integers(0, F.Q))
        assert f.scale(lam)(xv) == F.mul(lam, f(xv))


def test_compose():
    xq = LinPoly.monomial(F, 1)
    assert xq.compose(xq) == LinPoly.monomial(F, 2)
    assert LinPoly.monomial(F, 5).compose(LinPoly.monomial(F, 3)) == LinPoly.monomial(F, 2)
    f = rand_poly()
    assert f.compose(LinPoly.identity(F)) == f
    for _ in range(100):
        g, h = rand_poly(), rand_poly()
        xv = int(RNG.integers(0, F.Q))
        assert g.compose(h)(xv) == g(h(xv))
    with pytest.raises(ValueError):
        f.compose(LinPoly.identity(field_for(2, 6)))


def test_adjoint():
    assert LinPoly.identity(F).adjoint() == LinPoly.identity(F)
    a = int(RNG.integers(1, F.Q))
    adj = LinPoly.monomial(F, 1, a).adjoint()
    assert adj == LinPoly.monomial(F, 5, F.frobenius(a, 5))
    for _ in range(100):
        f, g = rand_poly(), rand_poly()
        assert f.adjoint().adjoint() == f
        assert f.compose(g).adjoint() == g.adjoint().compose(f.adjoint())
        xv, yv = (int(v) for v in RNG.integers(0, F.Q, 2))
        # adjointness for the trace form: Tr(x * f^(y)) = Tr(f(x) * y)
        assert F.trace(F.mul(xv, f.adjoint()(yv))) == F.trace(F.mul(f(xv), yv))


def test_matrix_rank_kernel():
    zero = LinPoly.zero(F)
    assert zero.rank() == 0 and len(zero.kernel()) == 6
    f = LinPoly.monomial(F, 1) - LinPoly.identity(F)
    ker = f.kernel()
    assert len(ker) == 1
    assert sorted([0] + [F.mul(s, ker[0]) for s in (1, 2)]) == [0, 1, 2]
    for _ in range(50):
        g = rand_poly()
        assert g.rank() + len(g.kernel()) == 6
        for v in g.kernel():
            assert g(v) == 0
    # rank is preserved by the adjoint
    for _ in range(50):
        g = rand_poly()
        assert g.rank() == g.adjoint().rank()


def test_kernel_bound_by_degree():
    for q in (2, 3, 4):
        ctx = field_for(q, 6)
        rng = np.random.default_rng(q)
        for _ in range(300):
            f = LinPoly(ctx, rng.integers(0, ctx.Q, 6))
            if f.is_zero:
                continue
            assert len(f.kernel()) <= f.q_degree or f.q_degree == 0 and f.rank() == 6


def test_solve_affine():
    x = LinPoly.identity(F)
    assert x.solve_affine(17) == [17]
    f = LinPoly.monomial(F, 1) - x
    assert f.solve_affine(0) == [0, 1, 2]
    for _ in range(10):
        g = rand_poly()
        b = int(RNG.integers(0, F.Q))
        sols = g.solve_affine(b)
        brute = [z for z in range(F.Q) if g(z) == b]
        assert sols == brute
        assert len(sols) in (0, F.q ** len(g.kernel()))


def test_unique_solution_when_norm_condition_holds():
    # T^q + c*lam*T = lam has exactly one solution when N(-lam*c) != 1
    c = golden_root(F)
    lam = 1
    a = F.neg(F.mul(c, lam))
    assert F.norm(a, 1) != 1
    poly = LinPoly.monomial(F, 1) + LinPoly.monomial(F, 0, F.mul(c, lam))
    assert len(poly.solve_affine(lam)) == 1


def test_from_matrix_and_inverse():
    for _ in range(20):
        f = rand_poly()
        assert from_matrix(F, f.to_matrix()) == f
    g = LinPoly(F, [3, 1])
    gi = g.inverse()
    if gi is not None:
        assert g.compose(gi) == LinPoly.identity(F)
        assert gi.compose(g) == LinPoly.identity(F)
    assert LinPoly.zero(F).inverse() is None
    # Frobenius powers invert to complementary powers
    x2 = LinPoly.monomial(F, 2)
    assert x2.inverse() == LinPoly.monomial(F, 4)


def test_slope_fibers():
    xq = LinPoly.monomial(F, 1)
    counts = slope_fiber_counts(xq)
    nz = counts[counts > 0]
    assert nz.size == 364 and np.all(nz == 2)
    _, weights = fiber_weights(F, counts)
    assert np.all(weights == 1)
    # f = x: one slope with full fiber
    counts = slope_fiber_counts(LinPoly.identity(F))
    assert counts[1] == 728 and np.count_nonzero(counts) == 1
    # fibers are unions of punctured F_q-lines
    for _ in range(10):
        f = rand_poly()
        counts = slope_fiber_counts(f)
        nz = counts[counts > 0]
        assert np.all(nz % (F.q - 1) == 0)


def test_batch_rank_matches_scalar_rank():
    rng = np.random.default_rng(13)
    mats = rng.integers(0, 3, size=(300, 6, 6)).astype(np.int64)
    br = linalg.batch_rank(F, mats)
    for i in range(300):
        assert br[i] == linalg.rank(F, mats[i])
