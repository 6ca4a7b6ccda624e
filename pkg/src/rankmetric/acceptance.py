"""The acceptance suite: twelve numbered criteria, each an independent check.

Each criterion returns a CriterionResult; run_all executes a subset and
prints one PASS/FAIL line per criterion.  The same functions back the
pytest acceptance module and the command-line ``repro-all`` entry point.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import linalg, scattered, search, trinomial
from .field import field_for
from .linpoly import LinPoly, slope_fiber_counts
from .code import RankCode


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] criterion {self.number:2d} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _filter(qs, q_subset):
    return [q for q in qs if q_subset is None or q in q_subset]


# ---------------------------------------------------------------------------

def criterion_1(q_subset=None, workers=1) -> CriterionResult:
    """Odd q in {3,5,7,9}: the trinomial code has dim 12, distance 5, MRD."""
    t0 = time.time()
    parts = []
    ok = True
    for q in _filter([3, 5, 7, 9], q_subset):
        rep = trinomial.verify_main(q, idealisers=False)
        good = rep.dim == 12 and rep.min_distance == 5 and rep.is_mrd
        ok &= good
        parts.append(f"q={q}: dim={rep.dim} d={rep.min_distance} mrd={rep.is_mrd}")
    return CriterionResult(1, "odd q is MRD", ok, "; ".join(parts) or "skipped",
                           time.time() - t0)


def criterion_2(q_subset=None, workers=1) -> CriterionResult:
    """Even q in {2,4,8}: not MRD, with a rank <= 4 witness, and the
    explicit gamma = 0 construction gives a dual word of kernel dim 4."""
    t0 = time.time()
    parts = []
    ok = True
    for q in _filter([2, 4, 8], q_subset):
        inst = trinomial.build_instance(q)
        mrd = inst.code.is_mrd()
        wrank = mrd.witness.rank() if mrd.witness is not None else None
        ev = trinomial.even_solution(inst)
        good = (not mrd.is_mrd and wrank is not None and wrank <= 4
                and inst.code.contains(mrd.witness) and ev.kernel_dim == 4)
        ok &= good
        parts.append(f"q={q}: mrd={mrd.is_mrd} witness_rank={wrank} even_kernel={ev.kernel_dim}")
    return CriterionResult(2, "even q fails with witnesses", ok,
                           "; ".join(parts) or "skipped", time.time() - t0)


def criterion_3(q_subset=None, workers=1) -> CriterionResult:
    """Idealisers: left F_{q^6} (dim 6), right F_{q^2} (dim 2), all invertible."""
    t0 = time.time()
    parts = []
    ok = True
    for q in _filter([3, 5, 7], q_subset):
        inst = trinomial.build_instance(q)
        L = inst.code.left_idealiser()
        R = inst.code.right_idealiser()
        good = (L.dimension == 6 and L.is_field and L.field_order == q ** 6
                and R.dimension == 2 and R.is_field and R.field_order == q ** 2)
        ok &= good
        parts.append(f"q={q}: L=({L.dimension},{L.is_field}) R=({R.dimension},{R.is_field})")
    return CriterionResult(3, "idealisers", ok, "; ".join(parts) or "skipped",
                           time.time() - t0)


def criterion_4(q_subset=None, workers=1) -> CriterionResult:
    """Dual law: dim 24, distance 3, MRD, and involution, for q in {3,5}."""
    t0 = time.time()
    parts = []
    ok = True
    for q in _filter([3, 5], q_subset):
        inst = trinomial.build_instance(q)
        dual = inst.code.delsarte_dual()
        d = dual.min_distance()
        mrd = dual.is_mrd().is_mrd
        invol = dual.delsarte_dual() == inst.code
        good = dual.dim == 24 and d == 3 and mrd and invol
        ok &= good
        parts.append(f"q={q}: dim={dual.dim} d={d} mrd={mrd} dual^2=C:{invol}")
    return CriterionResult(4, "Delsarte dual law", ok, "; ".join(parts) or "skipped",
                           time.time() - t0)


def criterion_5(q_subset=None, workers=1) -> CriterionResult:
    """Adjoint law at q = 3: same distance; L(C) = R(adjoint C)."""
    t0 = time.time()
    if q_subset is not None and 3 not in q_subset:
        return CriterionResult(5, "adjoint law", True, "skipped", 0.0)
    inst = trinomial.build_instance(3)
    adj = inst.code.adjoint_code()
    d = adj.min_distance()
    L = inst.code.left_idealiser()
    R = adj.right_idealiser()
    same = np.array_equal(L.span_rref(inst.code), R.span_rref(adj))
    ok = d == 5 and same
    return CriterionResult(5, "adjoint law", ok,
                           f"q=3: d(adj)={d} L(C)==R(C^T):{same}", time.time() - t0)


def criterion_6(q_subset=None, workers=1) -> CriterionResult:
    """Scatteredness: slope counts (q^6-1)/(q-1) with all weights 1 for odd q;
    strictly fewer slopes and a weight >= 2 for q in {2,4}."""
    t0 = time.time()
    parts = []
    ok = True
    expect = {3: 364, 5: 3906, 7: 19608}
    for q in _filter([3, 5, 7], q_subset):
        inst = trinomial.build_instance(q)
        rep = scattered.linear_set(scattered.PointedSubspace(inst.f))
        good = rep.size == expect[q] and rep.weight_spectrum == {1: expect[q]}
        ok &= good
        parts.append(f"q={q}: slopes={rep.size}")
    for q in _filter([2, 4], q_subset):
        inst = trinomial.build_instance(q)
        rep = scattered.linear_set(scattered.PointedSubspace(inst.f))
        good = rep.size < rep.max_size and max(rep.weight_spectrum) >= 2
        ok &= good
        parts.append(f"q={q}: slopes={rep.size}<{rep.max_size} maxw={max(rep.weight_spectrum)}")
    return CriterionResult(6, "scatteredness", ok, "; ".join(parts) or "skipped",
                           time.time() - t0)


def criterion_7(q_subset=None, workers=1) -> CriterionResult:
    """MRD <=> maximum scattered, on every (q, f) pair from criteria 1, 2, 9."""
    t0 = time.time()
    pairs = []
    for q in _filter([2, 3, 4, 5, 7, 9], q_subset):
        inst = trinomial.build_instance(q)
        pairs.append((f"tri q={q}", inst.ctx, inst.f))
    if q_subset is None or 4 in q_subset:
        hit = search.exhaustive_search(search.job_for_row(1, 4), workers=workers).hits[0]
        ctx = field_for(4, 6)
        pairs.append(("row1 q=4", ctx, LinPoly(ctx, hit.coeffs)))
    if q_subset is None or 3 in q_subset:
        for row in (2, 3):
            hit = search.exhaustive_search(search.job_for_row(row, 3), workers=workers).hits[0]
            ctx = field_for(3, 6)
            pairs.append((f"row{row} q=3", ctx, LinPoly(ctx, hit.coeffs)))
        for q in _filter([3, 5], q_subset):
            ctx8 = field_for(q, 8)
            f8 = (LinPoly.monomial(ctx8, 1) + LinPoly.monomial(ctx8, 3)
                  + LinPoly.monomial(ctx8, 5) - LinPoly.monomial(ctx8, 7))
            pairs.append((f"row4 q={q}", ctx8, f8))
    ok = True
    checked = 0
    for name, ctx, f in pairs:
        U = scattered.PointedSubspace(f)
        code = scattered.code_of(U)
        mrd = code.is_mrd().is_mrd
        maxsc = scattered.linear_set(U).is_maximum_scattered
        if ctx.q ** code.dim <= 2 ** 13:
            mrd_full = code.min_distance(strategy="full") == code.mrd_bound()
            ok &= mrd_full == mrd
        ok &= mrd == maxsc
        checked += 1
    return CriterionResult(7, "MRD <=> maximum scattered", ok,
                           f"{checked} (q, f) pairs agree", time.time() - t0)


def criterion_8(q_subset=None, workers=1) -> CriterionResult:
    """Stabiliser orders at q = 3: 728, 8, 26, 8 for U1, U2, U3, U4."""
    t0 = time.time()
    if q_subset is not None and 3 not in q_subset:
        return CriterionResult(8, "stabiliser orders", True, "skipped", 0.0)
    F = field_for(3, 6)
    import warnings
    c = trinomial.golden_roots(F)[0]
    delta2 = next(d for d in range(2, F.Q) if F.norm(d, 1) not in (0, 1))
    delta3 = next(d for d in range(2, F.Q) if F.norm(d, 3) not in (0, 1))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        subspaces = [("U1", scattered.family_u1(F, 1), 728),
                     ("U2", scattered.family_u2(F, 1, delta2), 8),
                     ("U3", scattered.family_u3(F, 1, delta3), 26),
                     ("U4", scattered.family_u4(F, c), 8)]
    parts = []
    ok = True
    for name, U, want in subspaces:
        got = scattered.stabiliser_order(U).order
        ok &= got == want
        parts.append(f"{name}={got}")
    return CriterionResult(8, "stabiliser orders", ok, ", ".join(parts),
                           time.time() - t0)


def criterion_9(q_subset=None, workers=1) -> CriterionResult:
    """Search table at desk scale: rows 1, 2, 3 searches; row 4 verification;
    row 5 time-boxed search."""
    t0 = time.time()
    parts = []
    ok = True
    for q in _filter([2, 4], q_subset):
        res = search.exhaustive_search(search.job_for_row(1, q), workers=workers)
        good = len(res.hits) >= 1
        ok &= good
        parts.append(f"row1 q={q}: {len(res.hits)} hits")
    if q_subset is None or 3 in q_subset:
        for row in (2, 3):
            res = search.exhaustive_search(search.job_for_row(row, 3), workers=workers)
            good = len(res.hits) >= 1
            ok &= good
            parts.append(f"row{row} q=3: {len(res.hits)} hits")
        for q in _filter([3, 5], q_subset):
            rep = search.verify_candidate(4, q, _row4_coeffs(q), idealisers=False)
            ok &= rep.is_mrd
            parts.append(f"row4 q={q}: mrd={rep.is_mrd}")
    if q_subset is None or 4 in q_subset:
        res = search.exhaustive_search(search.job_for_row(5, 4), workers=workers)
        good = len(res.hits) >= 1
        ok &= good
        parts.append(f"row5 q=4: {len(res.hits)} hits")
    return CriterionResult(9, "search table rows", ok, "; ".join(parts) or "skipped",
                           time.time() - t0)


def _row4_coeffs(q):
    ctx = field_for(q, 8)
    return [0, 1, 0, 1, 0, 1, 0, ctx.neg(1)]


def criterion_10(q_subset=None, workers=1) -> CriterionResult:
    """No-solution scans: parameterized candidates fail for q in {3,7};
    the independent full-gamma scan agrees at q = 3."""
    t0 = time.time()
    parts = []
    ok = True
    for q in _filter([3, 7], q_subset):
        inst = trinomial.build_instance(q)
        rep = trinomial.candidate_scan(inst)
        want = q * q + q + 1
        good = len(rep.candidates) == want and rep.verdict
        ok &= good
        parts.append(f"q={q}: {len(rep.candidates)} candidates, solutions={len(rep.solutions)}")
        if q == 3:
            full = trinomial.full_gamma_scan(inst)
            ok &= full == []
            parts.append(f"full-gamma q=3: {len(full)} solutions")
    return CriterionResult(10, "no-solution scans", ok, "; ".join(parts) or "skipped",
                           time.time() - t0)


def criterion_11(q_subset=None, workers=1) -> CriterionResult:
    """Closed-form solution of the T-equation for all 13 unit-norm lambdas at q=3."""
    t0 = time.time()
    if q_subset is not None and 3 not in q_subset:
        return CriterionResult(11, "closed form", True, "skipped", 0.0)
    inst = trinomial.build_instance(3)
    lams = trinomial.unit_norm_lambdas(inst)
    count = 0
    ok = len(lams) == 13
    for lam in lams:
        try:
            trinomial.solve_t_equation(inst, lam)
            count += 1
        except AssertionError:
            ok = False
    return CriterionResult(11, "closed form", ok and count == 13,
                           f"q=3: {count}/13 lambdas verified", time.time() - t0)


def criterion_12(q_subset=None, workers=1) -> CriterionResult:
    """Property suites: randomized plus exhaustive-at-tiny-size runs of the
    algebraic laws; zero failures expected."""
    t0 = time.time()
    failures = []
    rng = np.random.default_rng(20240811)

    # field axioms: exhaustive triples in F_8, random triples in F_729
    F8 = field_for(2, 3)
    for a in range(8):
        for b in range(8):
            for c in range(8):
                if F8.mul(a, F8.add(b, c)) != F8.add(F8.mul(a, b), F8.mul(a, c)):
                    failures.append("distributivity F8")
    F = field_for(3, 6)
    a, b, c = (rng.integers(0, F.Q, 10000) for _ in range(3))
    if not np.array_equal(F.vmul(a, F.vmul(b, c)), F.vmul(F.vmul(a, b), c)):
        failures.append("mul associativity")
    if not np.array_equal(F.vadd(a, F.vadd(b, c)), F.vadd(F.vadd(a, b), c)):
        failures.append("add associativity")
    if not np.array_equal(F.vmul(a, F.vadd(b, c)), F.vadd(F.vmul(a, b), F.vmul(a, c))):
        failures.append("distributivity")

    # composition associativity: exhaustive at (q, n) = (2, 2); random at (3, 6)
    F22 = field_for(2, 2)
    polys = [LinPoly(F22, [i, j]) for i in range(4) for j in range(4)]
    for f in polys[:8]:
        for g in polys[:8]:
            for h in polys[:8]:
                if f.compose(g).compose(h) != f.compose(g.compose(h)):
                    failures.append("compose associativity (2,2)")
    for _ in range(200):
        f, g, h = (LinPoly(F, rng.integers(0, F.Q, 6)) for _ in range(3))
        if f.compose(g).compose(h) != f.compose(g.compose(h)):
            failures.append("compose associativity")
        if f.compose(g + h) != f.compose(g) + f.compose(h):
            failures.append("compose distributivity")

    # adjoint involution / anti-homomorphism / rank preservation
    for _ in range(200):
        f = LinPoly(F, rng.integers(0, F.Q, 6))
        g = LinPoly(F, rng.integers(0, F.Q, 6))
        if f.adjoint().adjoint() != f:
            failures.append("adjoint involution")
        if f.compose(g).adjoint() != g.adjoint().compose(f.adjoint()):
            failures.append("adjoint anti-hom")
    fs = rng.integers(0, F.Q, (2000, 6))
    mats = _poly_matrices(F, fs)
    mats_adj = _poly_matrices(F, np.stack(
        [np.array(LinPoly(F, row).adjoint().coeffs) for row in fs]))
    r1 = linalg.batch_rank(F, mats)
    r2 = linalg.batch_rank(F, mats_adj)
    if not np.array_equal(r1, r2):
        failures.append("adjoint rank")

    # kernel bound dim ker f <= q-degree, 10^4 random polynomials per (q, n)
    for q in (2, 3, 4):
        Fq = field_for(q, 6)
        cs = rng.integers(0, Fq.Q, (10000, 6))
        cs[:, 5] = np.where(cs[:, 5] == 0, 1, cs[:, 5])  # force q-degree 5
        ranks = linalg.batch_rank(Fq, _poly_matrices(Fq, cs))
        if np.any(6 - ranks > 5):
            failures.append(f"kernel bound q={q}")
        degs = np.array([max(i for i in range(6) if row[i]) for row in cs])
        if np.any((6 - ranks) > degs):
            failures.append(f"kernel bound vs degree q={q}")

    # slope fiber divisibility by q - 1
    for q in (3, 4):
        Fq = field_for(q, 6)
        for _ in range(20):
            f = LinPoly(Fq, rng.integers(0, Fq.Q, 6))
            counts = slope_fiber_counts(f)
            nz = counts[counts > 0]
            if np.any(nz % (q - 1)):
                failures.append("fiber divisibility")

    # dual involution and dimension law on random subcodes
    for _ in range(10):
        k = int(rng.integers(1, 8))
        polys = []
        code = None
        while code is None:
            try:
                polys = [LinPoly(F, rng.integers(0, F.Q, 6)) for _ in range(k)]
                code = RankCode(F, polys)
            except ValueError:
                code = None
        dual = code.delsarte_dual()
        if dual.dim != 36 - code.dim or dual.delsarte_dual() != code:
            failures.append("dual involution")

    # bilinear form symmetry + non-degeneracy, exhaustive for (q, n) = (2, 3)
    F23 = field_for(2, 3)
    gram_rows = []
    basis = [LinPoly.monomial(F23, i, int(c))
             for i in range(3) for c in F23.power_basis]
    probe = RankCode(F23, [LinPoly.identity(F23)])
    for f in basis:
        gram_rows.append([probe.bilinear_form(f, g) for g in basis])
        for g in basis:
            if probe.bilinear_form(f, g) != probe.bilinear_form(g, f):
                failures.append("form symmetry")
    if linalg.rank(F23, np.array(gram_rows, dtype=np.int64)) != 9:
        failures.append("form degenerate")

    # full vs projective minimum distance at q = 2
    inst2 = trinomial.build_instance(2)
    if inst2.code.min_distance(strategy="full") != inst2.code.min_distance(strategy="projective"):
        failures.append("full vs projective")

    ok = not failures
    detail = "all property suites clean" if ok else f"failures: {sorted(set(failures))}"
    return CriterionResult(12, "property suites", ok, detail, time.time() - t0)


def _poly_matrices(ctx, coeff_rows):
    """Matrices of a batch of q-polynomials given as (B, n) coefficient rows."""
    coeff_rows = np.asarray(coeff_rows, dtype=np.int64)
    B, n = coeff_rows.shape
    vals = np.zeros((B, n), dtype=np.int64)
    for j in range(n):
        acc = np.zeros(B, dtype=np.int64)
        for i in range(n):
            acc = ctx.vadd(acc, ctx.vmul(coeff_rows[:, i],
                                         ctx.frobenius(ctx.power_basis[j], i)))
        vals[:, j] = acc
    return ctx.to_coords(vals).transpose(0, 2, 1)


CRITERIA = {i: globals()[f"criterion_{i}"] for i in range(1, 13)}


def run_all(numbers=None, q_subset=None, workers: int = 1, out=print):
    results = []
    for i in sorted(CRITERIA):
        if numbers is not None and i not in numbers:
            continue
        res = CRITERIA[i](q_subset=q_subset, workers=workers)
        results.append(res)
        out(res.line())
    return results
