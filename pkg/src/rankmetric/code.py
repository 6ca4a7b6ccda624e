"""Rank-distance codes: F_q-subspaces of the q-polynomial algebra.

A RankCode is stored as an F_q-basis of q-polynomials; codes generated over
F_{q^n} by a few polynomials (semilinear structure) carry their generators
too, which unlocks the cheap minimum-distance strategies:

* ``full``        -- enumerate the q^k - 1 nonzero words, rank each (batched);
* ``projective``  -- for codes <g1, g2> over F_{q^n}: scaling a word does not
                     change its rank, so only the q^n + 1 representatives
                     g1 + mu*g2 and g2 matter.  When a generator is an
                     invertible map the representatives' kernels are exactly
                     the fibers of the slope map x -> h(x)/x of the reduced
                     generator h, and one vectorised pass over the field
                     decides everything;
* ``kernel-scan`` -- for module codes of rank s >= 3 (e.g. Delsarte duals,
                     where q^k words is hopeless): a word with kernel
                     containing an m-dimensional subspace V factors as
                     phi o T_V through the subspace polynomial of V, so
                     scanning the (much fewer) subspaces V decides whether a
                     word of rank <= n - m exists.  The scan window is capped
                     by the Singleton bound, which pins the exact distance.

Delsarte duality, adjoints, idealisers and Frobenius twists are all exact
F_q-linear algebra on coefficient coordinates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import linalg
from .field import FieldCtx
from .linpoly import LinPoly, slope_fiber_counts, fiber_weights

FULL_ENUMERATION_CAP = 2 ** 24
IDEALISER_CLASSIFY_CAP = 2 ** 20
SUBSPACE_CHUNK = 1 << 15


@dataclass
class MrdResult:
    is_mrd: bool
    bound: int                      # the distance an MRD code of this size must have
    min_distance: int | None        # None when an early-exit scan stopped at a witness
    witness: LinPoly | None = None  # a word of smallest found rank when not MRD

    def __bool__(self):
        return self.is_mrd


@dataclass
class IdealiserReport:
    side: str
    dimension: int
    basis: list
    is_field: bool
    field_order: int | None
    closed_under_composition: bool
    singular_witness: LinPoly | None = None

    def span_rref(self, code):
        rows = np.stack([code._poly_row(f) for f in self.basis]) if self.basis else \
            np.zeros((0, code.ctx.n ** 2), dtype=np.int64)
        return linalg.rref(code.ctx, rows)[0]


class RankCode:
    """An F_q-linear rank-metric code inside L_{n,q}."""

    def __init__(self, ctx: FieldCtx, basis, semilinear_gens=None, right_gens=None):
        self.ctx = ctx
        self.basis = tuple(basis)
        for f in self.basis:
            if f.ctx is not ctx:
                raise ValueError("basis polynomial from a different field context")
        self.gens = tuple(semilinear_gens) if semilinear_gens else None
        self.right_gens = tuple(right_gens) if right_gens else None
        if self.basis:
            self._rows = np.stack([self._poly_row(f) for f in self.basis])
        else:
            self._rows = np.zeros((0, ctx.n * ctx.n), dtype=np.int64)
        R, piv = linalg.rref(ctx, self._rows)
        if R.shape[0] != len(self.basis):
            raise ValueError("basis polynomials are F_q-dependent")
        self._R, self._piv = R, piv

    # -- representation ---------------------------------------------------------

    def _poly_row(self, f: LinPoly) -> np.ndarray:
        return self.ctx.to_coords(np.array(f.coeffs, dtype=np.int64)).ravel()

    def _row_poly(self, row: np.ndarray) -> LinPoly:
        n = self.ctx.n
        coeffs = self.ctx.from_coords(row.reshape(n, n))
        return LinPoly(self.ctx, list(coeffs))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.ctx.n

    @classmethod
    def from_semilinear(cls, ctx: FieldCtx, gens) -> "RankCode":
        """The F_{q^n}-span of ``gens`` as a dim n*len(gens) F_q-code."""
        gens = tuple(gens)
        basis = [g.scale(lam) for g in gens for lam in ctx.power_basis]
        return cls(ctx, basis, semilinear_gens=gens)

    def __repr__(self):
        tag = f", gens={len(self.gens)}" if self.gens else ""
        return f"RankCode(n={self.n}, q={self.ctx.q}, dim={self.dim}{tag})"

    # -- membership and equality -------------------------------------------------

    def contains(self, f: LinPoly) -> bool:
        if f.ctx is not self.ctx:
            raise ValueError("polynomial from a different field context")
        return linalg.in_rowspace(self.ctx, self._R, self._piv, self._poly_row(f))

    def __eq__(self, other):
        return (isinstance(other, RankCode) and self.ctx is other.ctx
                and self._piv == other._piv and np.array_equal(self._R, other._R))

    def __hash__(self):
        return hash((id(self.ctx), self.dim, tuple(self._piv)))

    # -- word enumeration ----------------------------------------------------------

    def codewords(self, strategy: str = "full"):
        """Iterate codewords: 'full' -> all q^k - 1 nonzero words;
        'projective' -> the q^n + 1 rank-representatives (needs 2 generators)."""
        ctx = self.ctx
        if strategy == "full":
            sub = [int(v) for v in ctx.enumerate_subfield(1)]
            k = self.dim
            for m in range(1, ctx.q ** k):
                coeffs = LinPoly.zero(ctx)
                mm = m
                for t in range(k):
                    digit = mm % ctx.q
                    mm //= ctx.q
                    if digit:
                        coeffs = coeffs + self.basis[t].scale(sub[digit])
                yield coeffs
        elif strategy == "projective":
            if not self.gens or len(self.gens) != 2:
                raise ValueError("projective enumeration needs exactly 2 semilinear generators")
            g1, g2 = self.gens
            for mu in range(ctx.Q):
                yield g1 + g2.scale(mu)
            yield g2
        else:
            raise ValueError(f"unknown strategy {strategy!r}")

    # -- batched word ranks -----------------------------------------------------------

    def _frob_const(self):
        ctx, n = self.ctx, self.n
        F = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                F[i, j] = ctx.frobenius(ctx.power_basis[j], i)
        return F

    def _ranks_of_word_batch(self, wcoeffs: np.ndarray, fconst=None) -> np.ndarray:
        """Ranks of words given as (B, n) coefficient arrays."""
        ctx, n = self.ctx, self.n
        F = self._frob_const() if fconst is None else fconst
        B = wcoeffs.shape[0]
        vals = np.zeros((B, n), dtype=np.int64)
        for j in range(n):
            acc = np.zeros(B, dtype=np.int64)
            for i in range(n):
                acc = ctx.vadd(acc, ctx.vmul(wcoeffs[:, i], F[i, j]))
            vals[:, j] = acc
        mats = ctx.to_coords(vals).transpose(0, 2, 1)
        return linalg.batch_rank(ctx, mats)

    # -- minimum distance -----------------------------------------------------------

    def min_distance(self, strategy: str = "auto", early_exit: int | None = None) -> int:
        return self._min_rank(strategy, early_exit)[0]

    def min_rank_word(self, strategy: str = "auto", early_exit: int | None = None):
        """(min rank, witness word).  With early_exit=t, the first word found
        of rank <= t is returned instead of the true minimum."""
        return self._min_rank(strategy, early_exit)

    def _min_rank(self, strategy="auto", early_exit=None):
        if self.dim == 0:
            raise ValueError("the zero code has no minimum distance")
        if strategy == "auto":
            if self.gens and len(self.gens) == 1:
                g = self.gens[0]
                return g.rank(), g
            if self.gens and len(self.gens) == 2:
                return self._min_rank_pair(self.gens, side="left", early_exit=early_exit)
            if self.right_gens and len(self.right_gens) == 2:
                return self._min_rank_pair(self.right_gens, side="right", early_exit=early_exit)
            if self.gens and len(self.gens) >= 3:
                return self._min_rank_kernel_scan(early_exit=early_exit)
            return self._min_rank_full(early_exit=early_exit)
        if strategy == "full":
            return self._min_rank_full(early_exit=early_exit)
        if strategy == "projective":
            gens = self.gens if self.gens and len(self.gens) == 2 else self.right_gens
            side = "left" if self.gens and len(self.gens) == 2 else "right"
            if not gens or len(gens) != 2:
                raise ValueError("projective strategy needs exactly 2 generators")
            return self._min_rank_pair(gens, side=side, early_exit=early_exit)
        if strategy == "kernel-scan":
            return self._min_rank_kernel_scan(early_exit=early_exit)
        raise ValueError(f"unknown strategy {strategy!r}")

    def _min_rank_pair(self, gens, side: str, early_exit=None):
        ctx, n = self.ctx, self.n
        g1, g2 = gens
        inv1 = g1.inverse()
        if inv1 is not None:
            h = g2.compose(inv1) if side == "left" else inv1.compose(g2)
        else:
            inv2 = g2.inverse()
            if inv2 is None:
                return self._min_rank_reploop(gens, side, early_exit)
            h = g1.compose(inv2) if side == "left" else inv2.compose(g1)
            g1, g2 = g2, g1
        counts = slope_fiber_counts(h)
        slopes, weights = fiber_weights(ctx, counts)
        wl = np.zeros(ctx.Q, dtype=np.int64)
        wl[slopes] = weights
        mus = np.arange(1, ctx.Q, dtype=np.int64)
        kd_mu = wl[ctx.vneg(ctx.vinv(mus))]
        max_k = int(max(kd_mu.max(initial=0), wl[0]))
        if early_exit is not None and n - max_k > early_exit:
            return n - max_k, None
        hits = np.flatnonzero(kd_mu == max_k)
        if hits.size:
            mu = int(mus[hits[0]])
            if side == "left":
                witness = g1 + g2.scale(mu)
            else:
                witness = g1 + g2.compose(LinPoly.monomial(ctx, 0, mu))
        else:
            witness = g2
        assert witness.rank() == n - max_k
        return n - max_k, witness

    def _min_rank_reploop(self, gens, side, early_exit=None, chunk=4096):
        ctx, n = self.ctx, self.n
        g1, g2 = gens
        fconst = self._frob_const()
        best, best_w = n, None
        g1c = np.array(g1.coeffs, dtype=np.int64)
        g2c = np.array(g2.coeffs, dtype=np.int64)
        for lo in range(0, ctx.Q + 1, chunk):
            mus = np.arange(lo, min(lo + chunk, ctx.Q + 1), dtype=np.int64)
            last = mus[-1] == ctx.Q  # sentinel for the (0, 1) representative
            mus_eff = mus[:-1] if last else mus
            if side == "left":
                wc = ctx.vadd(g1c[None, :], ctx.vmul(mus_eff[:, None], g2c[None, :]))
            else:
                rows = [np.array(g1.__add__(g2.compose(LinPoly.monomial(ctx, 0, int(m)))).coeffs,
                                 dtype=np.int64) for m in mus_eff]
                wc = np.stack(rows) if rows else np.zeros((0, n), dtype=np.int64)
            if last:
                wc = np.concatenate([wc, g2c[None, :]], axis=0)
            ranks = self._ranks_of_word_batch(wc, fconst)
            mn = int(ranks.min())
            if mn < best:
                best = mn
                idx = int(np.argmin(ranks))
                best_w = self._witness_from_coeffs(wc[idx])
                if early_exit is not None and best <= early_exit:
                    return best, best_w
        return best, best_w

    def _witness_from_coeffs(self, coeffs):
        return LinPoly(self.ctx, [int(c) for c in coeffs])

    def _min_rank_full(self, early_exit=None, chunk=8192, cap=FULL_ENUMERATION_CAP):
        ctx, n, k = self.ctx, self.n, self.dim
        total = ctx.q ** k
        if total > cap:
            raise ValueError(
                f"full enumeration needs q^k = {total} words, above the cap {cap}")
        sub = np.asarray(ctx.enumerate_subfield(1), dtype=np.int64)
        bas = np.stack([np.array(f.coeffs, dtype=np.int64) for f in self.basis])
        fconst = self._frob_const()
        best, best_w = n, None
        for lo in range(1, total, chunk):
            ms = np.arange(lo, min(lo + chunk, total), dtype=np.int64)
            digits = (ms[:, None] // (ctx.q ** np.arange(k, dtype=np.int64))) % ctx.q
            lams = sub[digits]
            wc = np.zeros((ms.size, n), dtype=np.int64)
            for t in range(k):
                wc = ctx.vadd(wc, ctx.vmul(lams[:, t:t + 1], bas[t][None, :]))
            ranks = self._ranks_of_word_batch(wc, fconst)
            mn = int(ranks.min())
            if mn < best:
                best = mn
                idx = int(np.argmin(ranks))
                best_w = self._witness_from_coeffs(wc[idx])
                if early_exit is not None and best <= early_exit:
                    return best, best_w
        return best, best_w

    # -- kernel-subspace scan ------------------------------------------------------

    def _module_constraint_rows(self):
        """(n - s) x n matrix over F_{q^n}: w is in the code iff its
        coefficient vector is orthogonal to every row (plain dot product)."""
        if not self.gens:
            raise ValueError("kernel scan needs semilinear generators")
        G = np.stack([np.array(g.coeffs, dtype=np.int64) for g in self.gens])
        return linalg.nullspace(self.ctx, G)

    def _min_rank_kernel_scan(self, early_exit=None):
        ctx, n = self.ctx, self.n
        s = len(self.gens)
        if self.dim != n * s:
            raise ValueError("kernel scan expects a free module code of dim n*s")
        d_max = n - s + 1
        for m in range(n - 1, s - 1, -1):
            hit = self._scan_kernel_dim(m)
            if hit is not None:
                return n - m, hit
        # no kernel of dim >= s, so d >= d_max; Singleton forces d <= d_max
        return d_max, None

    def exists_word_with_kernel_dim(self, m: int):
        """A code word whose kernel contains an m-dim subspace, or None."""
        return self._scan_kernel_dim(m)

    def _scan_kernel_dim(self, m: int):
        ctx, n = self.ctx, self.n
        U = self._module_constraint_rows()      # (n - s, n)
        rows_u, cols_b = U.shape[0], n - m
        sub = np.asarray(ctx.enumerate_subfield(1), dtype=np.int64)
        for pivots in itertools.combinations(range(n), m):
            free_cells = [(r, c) for r in range(m) for c in range(n)
                          if c > pivots[r] and c not in pivots]
            nfree = len(free_cells)
            total = ctx.q ** nfree
            for lo in range(0, total, SUBSPACE_CHUNK):
                idx = np.arange(lo, min(lo + SUBSPACE_CHUNK, total), dtype=np.int64)
                coords = np.zeros((idx.size, m, n), dtype=np.int64)
                for r in range(m):
                    coords[:, r, pivots[r]] = 1
                for t, (r, c) in enumerate(free_cells):
                    coords[:, r, c] = sub[(idx // (ctx.q ** t)) % ctx.q]
                vecs = ctx.from_coords(coords)      # (B, m) subspace bases
                tcoef = self._subspace_poly_batch(vecs)     # (B, m + 1)
                M = self._phi_constraint_batch(U, tcoef, cols_b)
                if cols_b > rows_u:
                    ranks = np.zeros(idx.size, dtype=np.int64)  # always deficient
                else:
                    ranks = linalg.batch_rank(ctx, M)
                bad = np.flatnonzero(ranks < cols_b)
                if bad.size:
                    b = int(bad[0])
                    return self._kernel_scan_witness(U, tcoef[b], cols_b, vecs[b])
        return None

    def _subspace_poly_batch(self, vecs: np.ndarray) -> np.ndarray:
        """Monic polynomials with kernel exactly span(rows of vecs), batched."""
        ctx = self.ctx
        B, m = vecs.shape
        t = np.zeros((B, m + 1), dtype=np.int64)
        t[:, 0] = 1                                 # T_0 = x
        for step in range(m):
            v = vecs[:, step]
            val = np.zeros(B, dtype=np.int64)
            for j in range(step + 1):
                val = ctx.vadd(val, ctx.vmul(t[:, j], ctx.vfrob(v, j)))
            if np.any(val == 0):
                raise RuntimeError("dependent rows in subspace enumeration")
            c = ctx.vpow(val, ctx.q - 1)
            new = np.zeros_like(t)
            for j in range(step + 2):
                shifted = ctx.vfrob(t[:, j - 1], 1) if j >= 1 else np.zeros(B, dtype=np.int64)
                new[:, j] = ctx.vsub(shifted, ctx.vmul(c, t[:, j]))
            t = new
        return t

    def _phi_constraint_batch(self, U, tcoef, cols_b):
        """Constraint matrices M[b, r, j] = sum_k U[r, k] * t[(k - j) mod n]^(q^j)."""
        ctx, n = self.ctx, self.n
        B = tcoef.shape[0] if tcoef.ndim == 2 else 1
        tc = tcoef if tcoef.ndim == 2 else tcoef[None, :]
        m = tc.shape[1] - 1
        M = np.zeros((B, U.shape[0], cols_b), dtype=np.int64)
        for r in range(U.shape[0]):
            for j in range(cols_b):
                acc = np.zeros(B, dtype=np.int64)
                for dd in range(m + 1):
                    u = int(U[r, (j + dd) % n])
                    if u:
                        acc = ctx.vadd(acc, ctx.vmul(np.int64(u), ctx.vfrob(tc[:, dd], j)))
                M[:, r, j] = acc
        return M if tcoef.ndim == 2 else M[0]

    def _kernel_scan_witness(self, U, tcoef, cols_b, vec_basis):
        """Reconstruct the word phi o T_V from the first deficient system."""
        ctx, n = self.ctx, self.n
        M = self._phi_constraint_batch(U, tcoef, cols_b)
        ns = linalg.nullspace(ctx, M)
        assert ns.shape[0] >= 1
        b = ns[0]
        m = tcoef.shape[0] - 1
        wc = [0] * n
        for k in range(n):
            acc = 0
            for j in range(cols_b):
                dd = (k - j) % n
                if dd <= m and tcoef[dd]:
                    acc = ctx.add(acc, ctx.mul(int(b[j]), ctx.frobenius(int(tcoef[dd]), j)))
            wc[k] = acc
        w = LinPoly(ctx, wc)
        assert self.contains(w) and not w.is_zero
        assert w.kernel_dim() >= m
        return w

    # -- MRD ------------------------------------------------------------------------

    def mrd_bound(self) -> int:
        """The minimum distance forced on an MRD code of this dimension."""
        n, k = self.n, self.dim
        if k % n:
            raise ValueError("dimension not divisible by n; no square MRD bound")
        return n - k // n + 1

    def is_mrd(self, early_exit: bool = False) -> MrdResult:
        n, k = self.n, self.dim
        if k % n:
            d, w = self._min_rank()
            return MrdResult(False, 0, d, w)
        bound = self.mrd_bound()
        if early_exit:
            d, w = self._min_rank(early_exit=bound - 1)
            if w is not None and (d is None or d < bound):
                return MrdResult(False, bound, None, w)
            return MrdResult(True, bound, d, None)
        d, w = self._min_rank()
        if d == bound:
            return MrdResult(True, bound, d, None)
        return MrdResult(False, bound, d, w)

    # -- duality, adjoint, twists ------------------------------------------------------

    def _trace_gram(self) -> np.ndarray:
        ctx, n = self.ctx, self.n
        G = np.zeros((n, n), dtype=np.int64)
        for s in range(n):
            for t in range(n):
                G[s, t] = ctx.trace(ctx.mul(ctx.power_basis[s], ctx.power_basis[t]))
        return G

    def bilinear_form(self, f: LinPoly, g: LinPoly) -> int:
        """b(f, g) = Tr(sum_i a_i b_i)."""
        ctx = self.ctx
        acc = 0
        for a, b in zip(f.coeffs, g.coeffs):
            acc = ctx.add(acc, ctx.mul(a, b))
        return ctx.trace(acc)

    def delsarte_dual(self) -> "RankCode":
        """Orthogonal complement under b; dimension n^2 - k."""
        ctx, n = self.ctx, self.n
        G = self._trace_gram()
        cond = np.zeros_like(self._rows)
        for i in range(n):
            block = self._rows[:, i * n:(i + 1) * n]
            cond[:, i * n:(i + 1) * n] = _field_matmul(ctx, block, G)
        ns = linalg.nullspace(ctx, cond)
        basis = [self._row_poly(r) for r in ns]
        dual = RankCode(ctx, basis)
        dual._adopt_module_structure()
        return dual

    def _adopt_module_structure(self):
        """Detect closure under F_{q^n}-scaling and extract free generators."""
        ctx, n = self.ctx, self.n
        g = ctx.generator
        for f in self.basis:
            if not self.contains(f.scale(g)):
                return
        if self.dim % n:
            return
        gens = []
        R, piv = np.zeros((0, n * n), dtype=np.int64), []
        for f in self.basis:
            if linalg.in_rowspace(ctx, R, piv, self._poly_row(f)):
                continue
            gens.append(f)
            block = np.stack([self._poly_row(f.scale(lam)) for lam in ctx.power_basis])
            R, piv = linalg.rref(ctx, np.concatenate([R, block]))
        if gens and len(gens) * n == self.dim:
            self.gens = tuple(gens)

    def adjoint_code(self) -> "RankCode":
        """Image under the adjoint; left generators become right generators."""
        basis = [f.adjoint() for f in self.basis]
        rg = tuple(g.adjoint() for g in self.gens) if self.gens else None
        lg = tuple(g.adjoint() for g in self.right_gens) if self.right_gens else None
        return RankCode(self.ctx, basis, semilinear_gens=lg, right_gens=rg)

    def frobenius_twist(self, i: int, j: int) -> "RankCode":
        """x^(q^i) o f o x^(q^j) applied to every basis element."""
        ctx = self.ctx
        li = LinPoly.monomial(ctx, i)
        rj = LinPoly.monomial(ctx, j)
        basis = [li.compose(f).compose(rj) for f in self.basis]
        gens = tuple(li.compose(g).compose(rj) for g in self.gens) if self.gens else None
        return RankCode(ctx, basis, semilinear_gens=gens)

    # -- idealisers ------------------------------------------------------------------

    def left_idealiser(self, classify_cap: int = IDEALISER_CLASSIFY_CAP) -> IdealiserReport:
        return self._idealiser("left", classify_cap)

    def right_idealiser(self, classify_cap: int = IDEALISER_CLASSIFY_CAP) -> IdealiserReport:
        return self._idealiser("right", classify_cap)

    def _idealiser(self, side: str, classify_cap: int) -> IdealiserReport:
        ctx, n = self.ctx, self.n
        n2 = n * n
        # residual projector rows: v in C iff P @ v = 0
        nonpiv = [c for c in range(n2) if c not in self._piv]
        P = np.zeros((len(nonpiv), n2), dtype=np.int64)
        for r, c in enumerate(nonpiv):
            P[r, c] = 1
            for t, pc in enumerate(self._piv):
                P[r, pc] = ctx.neg(int(self._R[t, c]))
        conditions = []
        for fj in self.basis:
            A = self._composition_action(fj, side)
            conditions.append(_field_matmul(ctx, P, A))
        ns = linalg.nullspace(ctx, np.concatenate(conditions, axis=0))
        basis = [self._coord_vec_poly(v) for v in ns]
        dim = len(basis)
        return self._classify_idealiser(side, basis, dim, classify_cap)

    def _composition_action(self, fj: LinPoly, side: str) -> np.ndarray:
        """(n^2 x n^2) matrix over F_q: coords(phi) -> coords(phi o fj) or (fj o phi)."""
        ctx, n = self.ctx, self.n
        cols = []
        for i in range(n):
            for s in range(n):
                a = ctx.power_basis[s]
                out = [0] * n
                if side == "left":
                    # (a x^{q^i}) o fj
                    for t, b in enumerate(fj.coeffs):
                        if b:
                            k = (i + t) % n
                            out[k] = ctx.add(out[k], ctx.mul(a, ctx.frobenius(b, i)))
                else:
                    # fj o (a x^{q^i})
                    for t, b in enumerate(fj.coeffs):
                        if b:
                            k = (t + i) % n
                            out[k] = ctx.add(out[k], ctx.mul(b, ctx.frobenius(a, t)))
                cols.append(ctx.to_coords(np.array(out, dtype=np.int64)).ravel())
        return np.stack(cols, axis=1)

    def _coord_vec_poly(self, v: np.ndarray) -> LinPoly:
        n = self.ctx.n
        coeffs = self.ctx.from_coords(v.reshape(n, n))
        return LinPoly(self.ctx, list(coeffs))

    def _classify_idealiser(self, side, basis, dim, cap) -> IdealiserReport:
        ctx, n = self.ctx, self.n
        if dim == 0:
            return IdealiserReport(side, 0, [], False, None, True)
        total = ctx.q ** dim - 1
        if total > cap:
            raise ValueError(
                f"idealiser has q^{dim} = {total + 1} span elements, above the cap {cap}")
        sub = np.asarray(ctx.enumerate_subfield(1), dtype=np.int64)
        bas = np.stack([np.array(f.coeffs, dtype=np.int64) for f in basis])
        fconst = self._frob_const()
        is_field = True
        witness = None
        chunk = 8192
        for lo in range(1, total + 1, chunk):
            ms = np.arange(lo, min(lo + chunk, total + 1), dtype=np.int64)
            digits = (ms[:, None] // (ctx.q ** np.arange(dim, dtype=np.int64))) % ctx.q
            lams = sub[digits]
            wc = np.zeros((ms.size, n), dtype=np.int64)
            for t in range(dim):
                wc = ctx.vadd(wc, ctx.vmul(lams[:, t:t + 1], bas[t][None, :]))
            ranks = self._ranks_of_word_batch(wc, fconst)
            bad = np.flatnonzero(ranks < n)
            if bad.size:
                is_field = False
                witness = self._witness_from_coeffs(wc[int(bad[0])])
                break
        closed = True
        span = RankCode(ctx, basis) if basis else None
        for fa in basis:
            for fb in basis:
                if not span.contains(fa.compose(fb)):
                    closed = False
        if not closed:
            is_field = False
        return IdealiserReport(side, dim, basis, is_field,
                               ctx.q ** dim if is_field else None, closed, witness)

    # -- serialization ------------------------------------------------------------------

    def to_json(self) -> dict:
        from .field import FieldSpec  # noqa: F401  (spec type lives on ctx)
        out = {"field": self.ctx.spec.to_json(),
               "basis": [list(f.coeffs) for f in self.basis]}
        if self.gens:
            out["semilinear_gens"] = [list(g.coeffs) for g in self.gens]
        if self.right_gens:
            out["right_semilinear_gens"] = [list(g.coeffs) for g in self.right_gens]
        return out

    @classmethod
    def from_json(cls, obj: dict, cap: int | None = None) -> "RankCode":
        from .field import FieldSpec, build_field, DEFAULT_TABLE_CAP
        spec = FieldSpec.from_json(obj["field"])
        ctx = build_field(spec, cap or DEFAULT_TABLE_CAP)
        gens = obj.get("semilinear_gens")
        if gens and not obj.get("basis"):
            return cls.from_semilinear(ctx, [LinPoly(ctx, g) for g in gens])
        basis = [LinPoly(ctx, c) for c in obj["basis"]]
        g = tuple(LinPoly(ctx, c) for c in gens) if gens else None
        rg = obj.get("right_semilinear_gens")
        rg = tuple(LinPoly(ctx, c) for c in rg) if rg else None
        return cls(ctx, basis, semilinear_gens=g, right_gens=rg)


def _field_matmul(ctx, A, B):
    """Exact matrix product over the field (entries are element indices)."""
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for k in range(A.shape[1]):
        out = ctx.vadd(out, ctx.vmul(A[:, k:k + 1], B[k:k + 1, :]))
    return out
