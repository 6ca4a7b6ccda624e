"""Exact Gaussian elimination over a FieldCtx.

Matrices are numpy int64 arrays of element indices.  The routines work over
whatever subfield the entries generate, since field operations are closed;
rank/kernel computations for codes call them with entries in F_q inside
F_{q^n}.  Reduced row echelon form is canonical (pivots 1, pivot columns
ascending), so rref equality doubles as subspace equality.
"""

from __future__ import annotations

import numpy as np


def rref(ctx, mat):
    """Reduced row echelon form.  Returns (R, pivot_columns)."""
    A = np.array(mat, dtype=np.int64, copy=True)
    if A.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = A[r:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = ctx.vmul(A[r], ctx.inv(int(A[r, c])))
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            A[others] = ctx.vsub(A[others], ctx.vmul(A[others, c][:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(ctx, mat) -> int:
    return rref(ctx, mat)[0].shape[0]


def nullspace(ctx, mat):
    """Rows form a canonical basis of {v : mat @ v = 0} (RREF-normalised)."""
    A = np.asarray(mat, dtype=np.int64)
    rows, cols = A.shape
    R, pivots = rref(ctx, A)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = ctx.neg(int(R[r, fc]))
    return basis


def solve(ctx, A, b):
    """One solution of A @ x = b, or None if inconsistent."""
    A = np.asarray(A, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    aug = np.concatenate([A, b[:, None]], axis=1)
    R, pivots = rref(ctx, aug)
    cols = A.shape[1]
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, pc in enumerate(pivots):
        x[pc] = R[r, cols]
    return x


def in_rowspace(ctx, R, pivots, v):
    """Membership test against a precomputed RREF (R, pivots)."""
    v = np.array(v, dtype=np.int64, copy=True)
    for r, pc in enumerate(pivots):
        c = int(v[pc])
        if c:
            v = ctx.vsub(v, ctx.vmul(np.int64(c), R[r]))
    return not v.any()


def batch_rank(ctx, mats, chunk: int = 8192):
    """Ranks of a stack of small matrices, shape (B, r, c) -> (B,)."""
    mats = np.asarray(mats, dtype=np.int64)
    B = mats.shape[0]
    if B > chunk:
        return np.concatenate([batch_rank(ctx, mats[i:i + chunk], chunk)
                               for i in range(0, B, chunk)])
    A = mats.copy()
    _, r, c = A.shape
    nb = np.zeros(B, dtype=np.int64)
    rows = np.arange(r)
    bidx = np.arange(B)
    for col in range(c):
        colv = A[:, :, col]
        cand = (colv != 0) & (rows[None, :] >= nb[:, None])
        has = cand.any(axis=1)
        if not has.any():
            continue
        sel = np.flatnonzero(has)
        first = np.argmax(cand[sel], axis=1)
        pivrow = nb[sel]
        # swap first <-> pivrow
        tmp = A[sel, first, :].copy()
        A[sel, first, :] = A[sel, pivrow, :]
        A[sel, pivrow, :] = tmp
        piv = A[sel, pivrow, col]
        A[sel, pivrow, :] = ctx.vmul(A[sel, pivrow, :], ctx.vinv(piv)[:, None])
        colv2 = A[sel, :, col]
        elim = colv2 != 0
        elim[np.arange(sel.size), pivrow] = False
        prod = ctx.vmul(np.where(elim, colv2, 0)[:, :, None], A[sel, pivrow, :][:, None, :])
        A[sel] = ctx.vsub(A[sel], prod)
        nb[sel] += 1
        if (nb == min(r, c)).all():
            break
    return nb
