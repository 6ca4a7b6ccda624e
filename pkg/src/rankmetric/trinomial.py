"""The benchmark trinomial code family and its verification apparatus.

Everything here concerns the code C = <x, x^q + x^(q^3) + c*x^(q^5)> over
F_{q^6} with c^2 + c = 1, its companion 4-generator dual form D, and the
explicit solvability questions that decide whether C is MRD:

* a word of the dual with kernel dimension 4 exists iff a six-condition
  system in (alpha, beta, gamma) over F_{q^6} is solvable;
* for odd q the gamma-candidates are parameterized by the q^2+q+1 unit-norm
  elements of F_{q^3}, through the unique solution of T^q + c*lam*T = lam;
* for even q an explicit solution with gamma = 0 always exists.

verify_main assembles the full cross-checked report for one q.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .field import FieldCtx, field_for, DEFAULT_TABLE_CAP
from .linpoly import LinPoly
from .code import RankCode, IdealiserReport
from . import scattered

import numpy as np


def golden_roots(ctx: FieldCtx) -> list[int]:
    """All roots of x^2 + x - 1 in F_{q^6}, ascending by element index.

    The roots always lie in F_{q^2}: two conjugate roots for most q, the
    double root 2 in characteristic 5, the two elements of F_4 - F_2 in
    characteristic 2.
    """
    out = []
    for a in ctx.enumerate_subfield(2):
        a = int(a)
        if ctx.add(ctx.mul(a, a), ctx.sub(a, 1)) == 0:
            out.append(a)
    return out


def trinomial_map(ctx: FieldCtx, c: int) -> LinPoly:
    """x^q + x^(q^3) + c*x^(q^5)."""
    return (LinPoly.monomial(ctx, 1) + LinPoly.monomial(ctx, 3)
            + LinPoly.monomial(ctx, 5, c))


@dataclass
class TrinomialInstance:
    q: int
    ctx: FieldCtx
    c: int
    code: RankCode        # <x, f> with f the trinomial, dim 12
    dual_form: RankCode   # <x^q, x^(q^3), -x + x^(q^2), c*x - x^(q^4)>, dim 24

    @property
    def f(self) -> LinPoly:
        return self.code.gens[1]


def build_instance(q: int, root_index: int = 0,
                   cap: int = DEFAULT_TABLE_CAP) -> TrinomialInstance:
    """Construct the instance over F_{q^6}; picks the smallest root of
    x^2 + x - 1 unless root_index selects the other one."""
    ctx = field_for(q, 6, cap)
    roots = golden_roots(ctx)
    assert roots, "x^2 + x - 1 always has a root in F_{q^2}"
    c = roots[root_index % len(roots)]
    assert ctx.in_subfield(c, 2)
    if q % 5 in (2, 3):
        # x^2 + x - 1 is irreducible over F_q exactly when 5 is a non-square
        assert not ctx.in_subfield(c, 1)
    x = LinPoly.identity(ctx)
    code = RankCode.from_semilinear(ctx, [x, trinomial_map(ctx, c)])
    d_gens = [LinPoly.monomial(ctx, 1),
              LinPoly.monomial(ctx, 3),
              LinPoly.monomial(ctx, 2) - x,
              LinPoly.monomial(ctx, 0, c) - LinPoly.monomial(ctx, 4)]
    dual_form = RankCode.from_semilinear(ctx, d_gens)
    assert code.dim == 12 and dual_form.dim == 24
    return TrinomialInstance(q, ctx, c, code, dual_form)


# ---------------------------------------------------------------------------
# the six-condition system deciding kernel-dimension-4 dual words
# ---------------------------------------------------------------------------

@dataclass
class SystemReport:
    ok: bool
    failed: list[int]     # 1-based indices of violated conditions


def system_check(inst: TrinomialInstance, alpha: int, beta: int, gamma: int) -> SystemReport:
    """Evaluate the six conditions exactly; ok iff all hold."""
    F, q, c = inst.ctx, inst.q, inst.c
    t = F.sub(c, gamma)                      # (-gamma + c)
    failed = []

    def tpow(*exps):
        acc = 1
        for e in exps:
            acc = F.mul(acc, F.frobenius(t, e))
        return acc

    def bpow(*exps):
        acc = 1
        for e in exps:
            acc = F.mul(acc, F.frobenius(beta, e))
        return acc

    if alpha == 0:
        failed.append(1)
    if F.power(t, (F.Q - 1) // (q - 1)) != 1 if t else True:
        failed.append(2)
    inner = F.add(F.neg(tpow(4, 2)), F.add(F.mul(bpow(5, 4), tpow(4, 3, 2)), bpow(2, 1)))
    if F.mul(t, inner) != 1:
        failed.append(3)
    if alpha != F.neg(F.mul(tpow(1, 0), F.frobenius(beta, 2))):
        failed.append(4)
    if gamma != F.add(F.neg(tpow(2, 0)), F.mul(bpow(3, 2), tpow(2, 1, 0))):
        failed.append(5)
    rhs = F.add(F.mul(tpow(3, 2, 0), F.frobenius(beta, 4)),
                F.sub(F.mul(F.frobenius(beta, 2), tpow(3, 1, 0)),
                      F.mul(bpow(4, 3, 2), tpow(3, 2, 1, 0))))
    if beta != rhs:
        failed.append(6)
    return SystemReport(not failed, failed)


def dual_word(inst: TrinomialInstance, alpha: int, beta: int, gamma: int) -> LinPoly:
    """(-gamma + c)x + alpha*x^q + gamma*x^(q^2) + beta*x^(q^3) - x^(q^4)."""
    F = inst.ctx
    return LinPoly(F, [F.sub(inst.c, gamma), alpha, gamma, beta, F.neg(1), 0])


# ---------------------------------------------------------------------------
# odd q: candidate scan and the closed-form T-equation
# ---------------------------------------------------------------------------

def unit_norm_lambdas(inst: TrinomialInstance) -> list[int]:
    """The q^2+q+1 elements of F_{q^3}^* with lambda^(q^2+q+1) = 1, ascending."""
    F, q = inst.ctx, inst.q
    k = q * q + q + 1
    out = [int(l) for l in F.enumerate_subfield(3) if l != 0 and F.power(int(l), k) == 1]
    assert len(out) == k
    return out


@dataclass
class CandidateReport:
    candidates: list[tuple[int, int]]   # (lambda, x) pairs, zero denominators skipped
    solutions: list[int]                # x values satisfying the reduced two-condition system
    verdict: bool                       # True iff no solution exists


def _rel4_holds(inst: TrinomialInstance, x: int) -> bool:
    """The two-power-condition system in the single variable gamma = x."""
    F, q = inst.ctx, inst.q
    t = F.sub(inst.c, x)                 # (-x + c)
    if t == 0 or x == 0:
        return False
    lhs = F.neg(F.mul(F.power(x, q - 1), t))
    if F.power(lhs, q * q + q + 1) != 1:
        return False
    u = F.sub(F.inv(t), F.frobenius(x, 2))
    if u == 0:
        return False
    return F.power(u, (F.Q - 1) // (q + 1)) == 1


def candidate_scan(inst: TrinomialInstance) -> CandidateReport:
    """Enumerate the parameterized gamma-candidates and test them.

    For odd q every solution of the reduced system has the form
    x = 2/(lam^(q^2+q)(c+2) - lam^(q^2)*c + c) for a unit-norm lam in
    F_{q^3}^*; for odd q the scan must come back empty (the code is MRD there).
    """
    F, q, c = inst.ctx, inst.q, inst.c
    if q % 2 == 0:
        raise ValueError("the candidate parameterization requires odd q")
    two = F.add(1, 1)
    cands, sols = [], []
    for lam in unit_norm_lambdas(inst):
        lq2q = F.mul(F.frobenius(lam, 2), F.frobenius(lam, 1))
        denom = F.add(F.sub(F.mul(lq2q, F.add(c, two)),
                            F.mul(F.frobenius(lam, 2), c)), c)
        if denom == 0:
            continue
        x = F.div(two, denom)
        cands.append((lam, x))
        if _rel4_holds(inst, x):
            sols.append(x)
    return CandidateReport(cands, sols, not sols)


def full_gamma_scan(inst: TrinomialInstance) -> list[int]:
    """Independent brute-force check: scan every nonzero gamma in F_{q^6}
    against the reduced system (first equation in its polynomial form).
    Returns the solutions found (empty for odd q)."""
    F, q = inst.ctx, inst.q
    c = inst.c
    gam = np.arange(1, F.Q, dtype=np.int64)
    t = F.vsub(np.int64(c), gam)
    ok = t != 0
    tq2q1 = F.vmul(F.vmul(F.vfrob(t, 2), F.vfrob(t, 1)), t)
    eq1 = F.vadd(gam, F.vmul(F.vfrob(gam, 3), tq2q1)) == 0   # gamma = -gamma^(q^3) * t^(q^2+q+1)
    ok &= eq1
    tt = np.where(t == 0, 1, t)
    u = F.vsub(F.vinv(tt), F.vfrob(gam, 2))
    ok &= u != 0
    uu = np.where(u == 0, 1, u)
    ok &= F.vpow(uu, (F.Q - 1) // (q + 1)) == 1
    return [int(g) for g in gam[ok]]


def solve_t_equation(inst: TrinomialInstance, lam: int) -> int:
    """Unique solution of T^q + c*lam*T = lam for a unit-norm lam, odd q.

    Computed three ways and cross-checked: the telescoped closed form
    sum / (1 - N(-lam*c)), the simplified quotient
    (c + lam^(q^2+q)(c+2) - c*lam^(q^2)) / 2, and the F_q-linear system
    solver.  The norm condition N(-lam*c) = -1 is asserted.
    """
    F, q, c = inst.ctx, inst.q, inst.c
    if q % 2 == 0:
        raise ValueError("requires odd q")
    a = F.neg(F.mul(c, lam))
    na = F.norm(a, 1)
    if na == 1:
        raise ArithmeticError("norm precondition fails: N(-lam*c) = 1")
    assert na == F.neg(1), "norm of -lam*c should be -1 for unit-norm lam"
    total = 0
    for i in range(6):
        term = F.frobenius(lam, i)
        for j in range(i + 1, 6):
            term = F.mul(term, F.frobenius(a, j))
        total = F.add(total, term)
    t_closed = F.div(total, F.sub(1, na))
    two = F.add(1, 1)
    lq2q = F.mul(F.frobenius(lam, 2), F.frobenius(lam, 1))
    t_simple = F.div(F.sub(F.add(c, F.mul(lq2q, F.add(c, two))),
                           F.mul(c, F.frobenius(lam, 2))), two)
    poly = LinPoly.monomial(F, 1) + LinPoly.monomial(F, 0, F.mul(c, lam))
    sols = poly.solve_affine(lam)
    assert len(sols) == 1, "the T-equation must have exactly one solution"
    assert t_closed == t_simple == sols[0]
    return t_closed


# ---------------------------------------------------------------------------
# even q: the explicit solution with gamma = 0
# ---------------------------------------------------------------------------

@dataclass
class EvenSolution:
    alpha: int
    beta: int
    gamma: int
    word: LinPoly
    kernel_dim: int


def even_solution(inst: TrinomialInstance) -> EvenSolution:
    """For even q, produce (alpha, beta, 0) solving the system, plus the
    resulting dual word of kernel dimension 4."""
    F, q, c = inst.ctx, inst.q, inst.c
    if q % 2:
        raise ValueError("requires even q")
    assert F.power(c, 3) == 1 and c != 1, "c should be a primitive cube root of unity"
    betas = F.solve_power(q + 1, F.inv(F.frobenius(c, 1)))
    if not betas:
        raise ArithmeticError("no beta with beta^(q+1) = 1/c^q exists")
    beta = betas[0]
    alpha = F.mul(F.mul(F.frobenius(c, 1), c), F.frobenius(beta, 2))   # c^(q+1) * beta^(q^2)
    # the three reduced equations
    e2 = F.mul(F.mul(F.frobenius(beta, 3), F.frobenius(beta, 2)), F.frobenius(c, 1))
    assert e2 == 1
    inner = F.add(F.mul(F.frobenius(c, 4), F.frobenius(c, 2)),
                  F.add(F.mul(F.mul(F.frobenius(beta, 5), F.frobenius(beta, 4)),
                              F.mul(F.frobenius(c, 4), F.mul(F.frobenius(c, 3), F.frobenius(c, 2)))),
                        F.mul(F.frobenius(beta, 2), F.frobenius(beta, 1))))
    assert F.mul(c, inner) == 1
    rep = system_check(inst, alpha, beta, 0)
    assert rep.ok, f"system conditions failed: {rep.failed}"
    w = dual_word(inst, alpha, beta, 0)
    kd = w.kernel_dim()
    assert kd == 4
    assert inst.dual_form.contains(w)
    return EvenSolution(alpha, beta, 0, w, kd)


def exists_kernel4_dual_word(inst: TrinomialInstance) -> LinPoly | None:
    """Search the dual form for a word with kernel dimension >= 4."""
    return inst.dual_form.exists_word_with_kernel_dim(4)


# ---------------------------------------------------------------------------
# the one-shot report
# ---------------------------------------------------------------------------

@dataclass
class MainReport:
    q: int
    field: dict
    c: int
    dim: int
    min_distance: int
    witness: list[int] | None
    is_mrd: bool
    left_idealiser: dict
    right_idealiser: dict
    scattered: dict
    adjoint_min_distance: int
    dual_dim: int
    dual_twist_match: dict
    dual_min_distance: int | None
    dual_is_mrd: bool | None
    consistent: bool
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        from .report import SCHEMA_VERSION
        out = {"schema": SCHEMA_VERSION, "kind": "verify-main"}
        out.update(self.__dict__)
        return out


def _ideal_json(rep: IdealiserReport) -> dict:
    return {"side": rep.side, "dimension": rep.dimension, "is_field": rep.is_field,
            "field_order": rep.field_order,
            "closed_under_composition": rep.closed_under_composition}


# [6,4]_q + [6,5]_q subspace counts stay below this for q <= 5; beyond that
# the dual distance scan is skipped unless forced.
DUAL_SCAN_SUBSPACE_LIMIT = 600_000


def _gauss_binomial(q: int, n: int, m: int) -> int:
    num = den = 1
    for i in range(m):
        num *= q ** (n - i) - 1
        den *= q ** (m - i) - 1
    return num // den


def verify_main(q: int, dual_distance: str = "auto",
                idealisers: bool = True,
                cap: int = DEFAULT_TABLE_CAP) -> MainReport:
    """Full verification report for one q: distance/MRD of C, idealisers,
    scatteredness of the graph subspace, the dual's parameters, and the
    twist match between the computed dual and the 4-generator dual form.

    dual_distance: 'auto' runs the dual kernel scans only when the subspace
    counts are small enough; 'always'/'never' force the choice.
    """
    inst = build_instance(q, cap=cap)
    F = inst.ctx
    notes = []
    d, w = inst.code.min_rank_word()
    mrd = inst.code.is_mrd()
    assert mrd.min_distance == d

    U = scattered.PointedSubspace(inst.f)
    lrep = scattered.linear_set(U)
    adj_d = inst.code.adjoint_code().min_distance()

    dual = inst.code.delsarte_dual()
    twist_hit = next(((i, j) for i in range(6) for j in range(6)
                      if dual.frobenius_twist(i, j) == inst.dual_form), None)
    if twist_hit is None:
        notes.append("no Frobenius twist maps the computed dual onto the 4-generator form")

    scan_cost = _gauss_binomial(q, 6, 4) + _gauss_binomial(q, 6, 5)
    run_dual = dual_distance == "always" or (
        dual_distance == "auto" and scan_cost <= DUAL_SCAN_SUBSPACE_LIMIT)
    dual_d = dual_mrd = None
    if run_dual:
        dual_d = dual.min_distance()
        dual_mrd = dual.is_mrd().is_mrd
    else:
        notes.append(f"dual distance scan skipped ({scan_cost} subspaces)")

    if idealisers:
        li = _ideal_json(inst.code.left_idealiser())
        ri = _ideal_json(inst.code.right_idealiser())
    else:
        li = ri = {"skipped": True}

    consistent = (mrd.is_mrd == lrep.is_maximum_scattered
                  and adj_d == d
                  and (dual_mrd is None or dual_mrd == mrd.is_mrd)
                  and dual.delsarte_dual() == inst.code)
    return MainReport(
        q=q, field=F.spec.to_json(), c=inst.c, dim=inst.code.dim,
        min_distance=d,
        witness=None if mrd.is_mrd else list(w.coeffs),
        is_mrd=mrd.is_mrd,
        left_idealiser=li, right_idealiser=ri,
        scattered={"size": lrep.size, "max_size": lrep.max_size,
                   "weight_spectrum": {str(k): v for k, v in lrep.weight_spectrum.items()},
                   "is_scattered": lrep.is_scattered,
                   "is_maximum_scattered": lrep.is_maximum_scattered},
        adjoint_min_distance=adj_d,
        dual_dim=dual.dim,
        dual_twist_match={"found": twist_hit is not None,
                          "i": twist_hit[0] if twist_hit else None,
                          "j": twist_hit[1] if twist_hit else None},
        dual_min_distance=dual_d,
        dual_is_mrd=dual_mrd,
        consistent=consistent,
        notes=notes,
    )
