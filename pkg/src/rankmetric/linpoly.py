"""The algebra of q-polynomials (linearized polynomials) over F_{q^n}.

A q-polynomial sum(a_i * x^(q^i), i < n) acts on F_{q^n} as an F_q-linear
map; composition is taken modulo x^(q^n) - x.  A LinPoly stores exactly n
coefficients (zero-padded) as element indices of its field context and is
immutable.

Besides evaluation and the ring operations, this module provides the
F_q-linear-algebra views of a map: its matrix on the power basis, rank,
kernel basis, affine solving, the adjoint with respect to the trace form
Tr(xy), and the fiber spectrum of the slope map x -> f(x)/x that drives
minimum-distance and scatteredness scans elsewhere.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .field import FieldCtx

MAX_SOLUTION_ENUMERATION = 2 ** 16


class LinPoly:
    """A q-polynomial over F_{q^n}; coefficients are element indices."""

    __slots__ = ("ctx", "coeffs", "_mat")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        n = ctx.n
        cs = [int(c) for c in coeffs]
        if len(cs) > n:
            raise ValueError(f"too many coefficients ({len(cs)}) for n = {n}")
        cs += [0] * (n - len(cs))
        for c in cs:
            if not 0 <= c < ctx.Q:
                raise ValueError(f"coefficient {c} out of range for F_{ctx.Q}")
        self.ctx = ctx
        self.coeffs = tuple(cs)
        self._mat = None

    # -- construction helpers ------------------------------------------------

    @classmethod
    def monomial(cls, ctx, i: int, coeff: int = 1) -> "LinPoly":
        """coeff * x^(q^i)."""
        cs = [0] * ctx.n
        cs[i % ctx.n] = coeff
        return cls(ctx, cs)

    @classmethod
    def identity(cls, ctx) -> "LinPoly":
        return cls.monomial(ctx, 0, 1)

    @classmethod
    def zero(cls, ctx) -> "LinPoly":
        return cls(ctx)

    # -- basic structure -------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    @property
    def q_degree(self):
        """Largest i with a_i != 0; None for the zero polynomial."""
        for i in range(self.ctx.n - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return None

    def __eq__(self, other):
        return (isinstance(other, LinPoly) and self.ctx is other.ctx
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.ctx), self.coeffs))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "x" if i == 0 else f"x^q{'^%d' % i if i > 1 else ''}"
                terms.append(mono if c == 1 else f"[{c}]*{mono}")
        return " + ".join(terms) if terms else "0"

    def _require_same_ctx(self, other):
        if self.ctx is not other.ctx:
            raise ValueError("polynomials belong to different field contexts")

    # -- evaluation --------------------------------------------------------------

    def __call__(self, x: int) -> int:
        ctx = self.ctx
        acc = 0
        for i, a in enumerate(self.coeffs):
            if a:
                acc = ctx.add(acc, ctx.mul(a, ctx.frobenius(x, i)))
        return acc

    def eval_vec(self, xs: np.ndarray) -> np.ndarray:
        """Evaluate at an array of elements."""
        ctx = self.ctx
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for i, a in enumerate(self.coeffs):
            if a:
                acc = ctx.vadd(acc, ctx.vmul(np.int64(a), ctx.vfrob(xs, i)))
        return acc

    # -- module / algebra operations ----------------------------------------------

    def __add__(self, other):
        self._require_same_ctx(other)
        ctx = self.ctx
        return LinPoly(ctx, [ctx.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._require_same_ctx(other)
        ctx = self.ctx
        return LinPoly(ctx, [ctx.sub(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        ctx = self.ctx
        return LinPoly(ctx, [ctx.neg(a) for a in self.coeffs])

    def scale(self, lam: int) -> "LinPoly":
        """Left scalar action: (lam*f)(x) = lam * f(x)."""
        ctx = self.ctx
        return LinPoly(ctx, [ctx.mul(lam, a) for a in self.coeffs])

    def compose(self, other: "LinPoly") -> "LinPoly":
        """self o other, reduced mod x^(q^n) - x."""
        self._require_same_ctx(other)
        ctx, n = self.ctx, self.ctx.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                k = (i + j) % n
                out[k] = ctx.add(out[k], ctx.mul(a, ctx.frobenius(b, i)))
        return LinPoly(ctx, out)

    def __matmul__(self, other):
        return self.compose(other)

    def adjoint(self) -> "LinPoly":
        """Transpose w.r.t. the bilinear form Tr(xy): coefficient a_i moves
        to position n-i with a q^(n-i) Frobenius twist."""
        ctx, n = self.ctx, self.ctx.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                out[(n - i) % n] = ctx.frobenius(a, (n - i) % n)
        return LinPoly(ctx, out)

    # -- linear-algebra views ---------------------------------------------------------

    def to_matrix(self) -> np.ndarray:
        """n x n matrix over F_q: column j = coordinates of f(g^j)."""
        if self._mat is None:
            ctx = self.ctx
            vals = self.eval_vec(np.array(ctx.power_basis, dtype=np.int64))
            self._mat = ctx.to_coords(vals).T.copy()
            self._mat.setflags(write=False)
        return self._mat

    def rank(self) -> int:
        return linalg.rank(self.ctx, self.to_matrix())

    def kernel(self) -> list[int]:
        """An F_q-basis of ker f, RREF-normalised, as field elements."""
        ns = linalg.nullspace(self.ctx, self.to_matrix())
        return [int(self.ctx.from_coords(v)) for v in ns]

    def kernel_dim(self) -> int:
        return self.ctx.n - self.rank()

    def solve_affine(self, b: int) -> list[int]:
        """All x with f(x) = b, ascending by element index; [] if none."""
        ctx = self.ctx
        part = linalg.solve(ctx, self.to_matrix(), ctx.to_coords(b))
        if part is None:
            return []
        ker = linalg.nullspace(ctx, self.to_matrix())
        dim = ker.shape[0]
        if ctx.q ** dim > MAX_SOLUTION_ENUMERATION:
            raise ValueError("solution set too large to enumerate")
        sub = ctx.enumerate_subfield(1)
        sols = np.asarray([int(ctx.from_coords(part))], dtype=np.int64)
        for r in range(dim):
            kel = int(ctx.from_coords(ker[r]))
            shifts = ctx.vmul(sub[:, None], np.int64(kel))
            sols = ctx.vadd(sols[None, :], shifts).ravel()
        return sorted(int(s) for s in sols)

    def inverse(self):
        """Compositional inverse, or None when the map is singular."""
        ctx, n = self.ctx, self.ctx.n
        M = self.to_matrix()
        cols = []
        for j in range(n):
            e = np.zeros(n, dtype=np.int64)
            e[j] = 1
            x = linalg.solve(ctx, M, e)
            if x is None:
                return None
            cols.append(x)
        Minv = np.stack(cols, axis=1)
        return from_matrix(ctx, Minv)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def from_matrix(ctx: FieldCtx, mat: np.ndarray) -> LinPoly:
    """The unique q-polynomial whose action on the power basis is ``mat``."""
    n = ctx.n
    vals = ctx.from_coords(np.asarray(mat, dtype=np.int64).T)
    # solve V a = vals with V[j, i] = (g^j)^(q^i)
    V = np.zeros((n, n), dtype=np.int64)
    for j in range(n):
        for i in range(n):
            V[j, i] = ctx.frobenius(ctx.power_basis[j], i)
    aug = np.concatenate([V, np.asarray(vals, dtype=np.int64)[:, None]], axis=1)
    R, pivots = linalg.rref(ctx, aug)
    if n in pivots or len(pivots) < n:
        raise ValueError("interpolation system is singular")
    coeffs = [int(R[r, n]) for r in range(n)]
    return LinPoly(ctx, coeffs)


def slope_fiber_counts(f: LinPoly) -> np.ndarray:
    """Counts, indexed by slope s, of nonzero x with f(x)/x = s.

    The fiber of s is ker(f - s*x) minus 0, so every count is q^w - 1 for
    the weight w of the corresponding point; absent slopes have count 0.
    """
    ctx = f.ctx
    xs = np.arange(1, ctx.Q, dtype=np.int64)
    slopes = ctx.vdiv(f.eval_vec(xs), xs)
    return np.bincount(slopes, minlength=ctx.Q)


def fiber_weights(ctx: FieldCtx, counts: np.ndarray):
    """Map fiber counts (q^w - 1) to weights w; returns (slopes, weights)."""
    slopes = np.flatnonzero(counts)
    sizes = counts[slopes] + 1
    weights = np.round(np.log(sizes) / np.log(ctx.q)).astype(np.int64)
    if not np.array_equal(ctx.q ** weights, sizes):
        raise RuntimeError("fiber size is not a power of q; slope scan corrupt")
    return slopes, weights
