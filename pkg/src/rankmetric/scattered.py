"""Graph subspaces U_f = {(x, f(x))} of F_{q^n} x F_{q^n} and their linear sets.

The projective line PG(1, q^n) sees U_f through the slope map x -> f(x)/x:
the point with slope s has weight dim ker(f - s*x), and the fiber of s is
that kernel minus 0.  A single vectorised pass over the field therefore
yields the whole weight spectrum, the linear set size, scatteredness, and
(together with the Singleton bound on the code side) the minimum distance
of the associated code <x, f>.

Also here: the GL(2, q^n)-stabiliser order of U_f by exhaustive scan over
matrix pairs, and constructors for the standard families of maximum
scattered subspaces.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .field import FieldCtx
from .linpoly import LinPoly, slope_fiber_counts, fiber_weights
from .code import RankCode

LINEAR_SET_CAP = 2 ** 20
STABILISER_PAIR_CAP = 2 ** 24


@dataclass(frozen=True)
class PointedSubspace:
    """U_f = {(x, f(x)) : x in F_{q^n}}, an F_q-subspace of rank n."""

    f: LinPoly

    @property
    def ctx(self) -> FieldCtx:
        return self.f.ctx

    def __repr__(self):
        return f"PointedSubspace({self.f!r})"


@dataclass
class LinearSetReport:
    size: int
    weight_spectrum: dict[int, int]
    is_scattered: bool
    is_maximum_scattered: bool
    max_size: int

    def check_weight_sum(self, q: int, n: int) -> bool:
        total = sum(cnt * (q ** w - 1) // (q - 1) for w, cnt in self.weight_spectrum.items())
        return total == (q ** n - 1) // (q - 1)


@dataclass
class StabiliserReport:
    order: int
    sample_elements: list  # up to 5 matrices [[m00, m01], [m10, m11]]


def slopes(U: PointedSubspace) -> dict[int, int]:
    """Fiber sizes of the slope map: {s: #nonzero x with f(x)/x = s}."""
    counts = slope_fiber_counts(U.f)
    nz = np.flatnonzero(counts)
    return {int(s): int(counts[s]) for s in nz}


def linear_set(U: PointedSubspace) -> LinearSetReport:
    """Size and weight spectrum of the linear set defined by U_f."""
    ctx = U.ctx
    if ctx.Q > LINEAR_SET_CAP:
        raise ValueError(f"field size {ctx.Q} above the linear-set scan cap")
    counts = slope_fiber_counts(U.f)
    slopes_nz, weights = fiber_weights(ctx, counts)
    spectrum: dict[int, int] = {}
    for w in np.unique(weights):
        spectrum[int(w)] = int(np.count_nonzero(weights == w))
    size = int(slopes_nz.size)
    max_size = (ctx.Q - 1) // (ctx.q - 1)
    scattered = bool(weights.size) and int(weights.max()) == 1
    report = LinearSetReport(size, spectrum, scattered, size == max_size, max_size)
    assert report.check_weight_sum(ctx.q, ctx.n)
    assert scattered == (size == max_size)  # both read the same scan
    return report


def is_scattered(U: PointedSubspace) -> bool:
    return linear_set(U).is_scattered


def stabiliser_order(U: PointedSubspace, pair_cap: int = STABILISER_PAIR_CAP,
                     sample_limit: int = 5, chunk: int = 1 << 16) -> StabiliserReport:
    """Order of the GL(2, q^n)-stabiliser of U_f, by scanning all (m00, m01).

    A matrix [[m00, m01], [m10, m11]] stabilises U_f iff
    f(m00*x + m01*f(x)) = m10*x + m11*f(x) identically and the determinant is
    nonzero; (m10, m11) is solved from the composite's coefficients.
    """
    ctx = U.ctx
    n, Q = ctx.n, ctx.Q
    if Q * Q > pair_cap:
        raise ValueError(f"{Q}^2 matrix pairs exceed the stabiliser cap {pair_cap}")
    fc = np.array(U.f.coeffs, dtype=np.int64)
    support = [k for k in range(1, n) if fc[k]]
    if not support:
        raise ValueError("stabiliser scan needs f with a term of positive q-degree")
    k1 = support[0]
    order = 0
    samples = []
    for lo in range(0, Q * Q, chunk):
        idx = np.arange(lo, min(lo + chunk, Q * Q), dtype=np.int64)
        m00 = idx // Q
        m01 = idx % Q
        # coefficients of g = m00*x + m01*f
        b = [ctx.vmul(m01, np.int64(fc[t])) for t in range(n)]
        b[0] = ctx.vadd(b[0], m00)
        # p = f o g
        pk = []
        for k in range(n):
            acc = np.zeros(idx.size, dtype=np.int64)
            for i in range(n):
                if fc[i]:
                    acc = ctx.vadd(acc, ctx.vmul(np.int64(fc[i]), ctx.vfrob(b[(k - i) % n], i)))
            pk.append(acc)
        # solve p = m10*x + m11*f: m11 from the pivot position, m10 from position 0
        m11 = ctx.vdiv(pk[k1], np.int64(fc[k1]))
        ok = np.ones(idx.size, dtype=bool)
        for k in range(1, n):
            ok &= pk[k] == ctx.vmul(m11, np.int64(fc[k]))
        m10 = ctx.vsub(pk[0], ctx.vmul(m11, np.int64(fc[0])))
        det = ctx.vsub(ctx.vmul(m00, m11), ctx.vmul(m01, m10))
        ok &= det != 0
        order += int(np.count_nonzero(ok))
        if len(samples) < sample_limit:
            for b_i in np.flatnonzero(ok)[:sample_limit - len(samples)]:
                samples.append([[int(m00[b_i]), int(m01[b_i])],
                                [int(m10[b_i]), int(m11[b_i])]])
    return StabiliserReport(order, samples)


# ---------------------------------------------------------------------------
# the known families of maximum scattered graph subspaces
# ---------------------------------------------------------------------------

def family_u1(ctx: FieldCtx, s: int) -> PointedSubspace:
    """Pseudoregulus type: f = x^(q^s), gcd(s, n) = 1."""
    n = ctx.n
    if not 1 <= s <= n - 1:
        raise ValueError(f"s = {s} must satisfy 1 <= s <= n-1")
    if np.gcd(s, n) != 1:
        raise ValueError(f"gcd(s, n) = gcd({s}, {n}) != 1")
    return PointedSubspace(LinPoly.monomial(ctx, s))


def family_u2(ctx: FieldCtx, s: int, delta: int) -> PointedSubspace:
    """f = delta*x^(q^s) + x^(q^(n-s)); needs n >= 4, gcd(s,n) = 1 and
    N_{q^n/q}(delta) outside {0, 1}."""
    n = ctx.n
    if n < 4:
        raise ValueError(f"n = {n} must be >= 4")
    if not 1 <= s <= n - 1 or np.gcd(s, n) != 1:
        raise ValueError(f"gcd(s, n) = gcd({s}, {n}) != 1")
    if ctx.norm(delta, 1) in (0, 1):
        raise ValueError("norm of delta over F_q lies in {0, 1}")
    f = LinPoly.monomial(ctx, s, delta) + LinPoly.monomial(ctx, n - s)
    return PointedSubspace(f)


def family_u3(ctx: FieldCtx, s: int, delta: int) -> PointedSubspace:
    """f = delta*x^(q^s) + x^(q^(s + n/2)); needs n in {6, 8},
    gcd(s, n/2) = 1 and N_{q^n/q^(n/2)}(delta) outside {0, 1}.

    The printed norm/gcd conditions are necessary; sharper constraints on
    (delta, q) exist for some parameters and are not enforced here.
    """
    n = ctx.n
    if n not in (6, 8):
        raise ValueError(f"n = {n} must be 6 or 8")
    if np.gcd(s, n // 2) != 1:
        raise ValueError(f"gcd(s, n/2) = gcd({s}, {n // 2}) != 1")
    if ctx.norm(delta, n // 2) in (0, 1):
        raise ValueError("norm of delta over the half-degree subfield lies in {0, 1}")
    warnings.warn("family U3: only the norm/gcd conditions are validated; "
                  "scatteredness for specific (delta, q) is not re-derived",
                  stacklevel=2)
    f = LinPoly.monomial(ctx, s, delta) + LinPoly.monomial(ctx, (s + n // 2) % n)
    return PointedSubspace(f)


def family_u4(ctx: FieldCtx, c: int) -> PointedSubspace:
    """f = x^q + x^(q^3) + c*x^(q^5) with c^2 + c = 1; n must be 6."""
    if ctx.n != 6:
        raise ValueError(f"n = {ctx.n} must be 6")
    if ctx.add(ctx.mul(c, c), ctx.sub(c, 1)) != 0:
        raise ValueError("c does not satisfy c^2 + c = 1")
    f = (LinPoly.monomial(ctx, 1) + LinPoly.monomial(ctx, 3)
         + LinPoly.monomial(ctx, 5, c))
    return PointedSubspace(f)


# ---------------------------------------------------------------------------
# bridge to the code side
# ---------------------------------------------------------------------------

def code_of(U: PointedSubspace) -> RankCode:
    """The code <x, f> generated over F_{q^n} by the graph polynomial."""
    return RankCode.from_semilinear(U.ctx, [LinPoly.identity(U.ctx), U.f])


def subspace_of(C: RankCode) -> PointedSubspace:
    """Inverse of code_of; requires generators [x, f]."""
    if not C.gens or len(C.gens) != 2 or C.gens[0] != LinPoly.identity(C.ctx):
        raise ValueError("code is not in <x, f> form")
    return PointedSubspace(C.gens[1])
