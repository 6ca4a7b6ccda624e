"""Search harness for MRD codes <x, f> with f supported on odd q-powers.

Candidates are q-polynomials f = x^q + sum a_{2i+1} x^(q^(2i+1)) over
F_{q^(2n)}; the code <x, f> has dimension 4n, so it is MRD exactly when no
nonzero word has a kernel of dimension >= 2, i.e. when every fiber of the
slope map x -> f(x)/x has exactly q - 1 elements.  The scan over a
candidate walks the field in chunks and aborts as soon as any fiber count
proves a kernel of the rejection dimension (default 2), which disposes of
almost all candidates after the first chunk.

Coefficient patterns fix position 1 to the coefficient 1 and let the other
odd positions be free, fixed (1 or -1), or tied to the square of another
position.  Exhaustive mode enumerates free positions over the nonzero field
elements ascending; random mode draws them from a multiplicative
congruential generator specified exactly below, so hits are reproducible
from (seed, trial index).

MCG stream: state_0 = (2*seed + 1) mod 2^64, state_{k+1} =
(0xf1357aea2e62a9c5 * state_k) mod 2^64; each draw consumes one state and
yields 1 + ((state >> 16) mod (Q - 1)).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .field import field_for, DEFAULT_TABLE_CAP
from .linpoly import LinPoly
from .code import RankCode

EXHAUSTIVE_CAP = 2 ** 24
MCG_MULTIPLIER = 0xF1357AEA2E62A9C5
MCG_MASK = (1 << 64) - 1

# pattern atoms: ("free",) | ("fixed", 1 | -1 | element index) | ("square", pos)
Pattern = dict[int, tuple]


@dataclass
class SearchJob:
    n: int                      # half extension degree: the field is F_{q^(2n)}
    q: int
    pattern: Pattern
    mode: str = "exhaustive"    # or "random"
    seed: int = 0
    trials: int = 1000
    reject_kernel_dim: int = 2
    max_hits: int | None = None

    def __post_init__(self):
        for pos in self.pattern:
            if pos % 2 == 0 or not 3 <= pos <= 2 * self.n - 1:
                raise ValueError(f"pattern position {pos} must be an odd q-degree >= 3")


@dataclass
class SearchHit:
    index: int                  # candidate index within the job's enumeration
    coeffs: list[int]           # full coefficient vector of f, length 2n
    free_values: list[int]
    subfields: list[int]        # proper s | 2n with all coefficients in F_{q^s}


@dataclass
class SearchResult:
    job: SearchJob
    candidates_scanned: int
    hits: list[SearchHit] = field(default_factory=list)


# rows of the published search table; position 1 is implicitly fixed to 1
TABLE_ROWS: dict[int, tuple[int, Pattern]] = {
    1: (3, {3: ("fixed", 1), 5: ("free",)}),
    2: (3, {3: ("fixed", -1), 5: ("free",)}),
    3: (3, {3: ("free",), 5: ("square", 3)}),
    4: (4, {3: ("fixed", 1), 5: ("fixed", 1), 7: ("fixed", -1)}),
    5: (4, {3: ("square", 5), 5: ("free",), 7: ("fixed", 1)}),
    6: (5, {3: ("free",), 5: ("free",), 7: ("free",), 9: ("free",)}),
}


def job_for_row(row: int, q: int, **kw) -> SearchJob:
    n, pattern = TABLE_ROWS[row]
    return SearchJob(n=n, q=q, pattern=dict(pattern), **kw)


# ---------------------------------------------------------------------------
# candidate construction
# ---------------------------------------------------------------------------

def _free_positions(pattern: Pattern) -> list[int]:
    return sorted(pos for pos, spec in pattern.items() if spec[0] == "free")


def _resolve_coeffs(ctx, n: int, pattern: Pattern, free_values) -> list[int]:
    coeffs = [0] * (2 * n)
    coeffs[1] = 1
    free = dict(zip(_free_positions(pattern), free_values))
    for pos, spec in sorted(pattern.items()):
        if spec[0] == "free":
            coeffs[pos] = free[pos]
        elif spec[0] == "fixed":
            v = spec[1]
            coeffs[pos] = ctx.neg(1) if v == -1 else int(v)
        elif spec[0] == "square":
            src = pattern[spec[1]]
            base = free[spec[1]] if src[0] == "free" else coeffs[spec[1]]
            coeffs[pos] = ctx.mul(base, base)
        else:
            raise ValueError(f"unknown pattern atom {spec!r}")
    return coeffs


def _subfields_of(ctx, coeffs) -> list[int]:
    out = []
    n = ctx.n
    for s in range(1, n):
        if n % s == 0 and all(ctx.in_subfield(c, s) for c in coeffs if c):
            out.append(s)
    return out


# ---------------------------------------------------------------------------
# the per-candidate scan
# ---------------------------------------------------------------------------

def scan_is_mrd(ctx, coeffs, reject_kernel_dim: int = 2, chunk: int = 1 << 14) -> bool:
    """Exact MRD decision for <x, f> via the chunked slope-fiber scan."""
    f = LinPoly(ctx, coeffs)
    Q, q = ctx.Q, ctx.q
    counts = np.zeros(Q, dtype=np.int64)
    abort_at = q ** (reject_kernel_dim - 1)  # partial count >= this forces kernel >= reject dim
    xs_all = np.arange(1, Q, dtype=np.int64)
    for lo in range(0, Q - 1, chunk):
        xs = xs_all[lo:lo + chunk]
        slopes = ctx.vdiv(f.eval_vec(xs), xs)
        counts += np.bincount(slopes, minlength=Q)
        if counts.max() >= abort_at:
            # a fiber of final size >= q^(t-1) means weight >= t >= 2: not MRD
            return False
    return int(counts.max()) == q - 1


def _scan_range(q, n, pattern, start, stop, reject_kernel_dim, cap):
    """Worker body: scan candidate indices [start, stop) of the exhaustive order."""
    ctx = field_for(q, 2 * n, cap)
    free = _free_positions(pattern)
    Qm1 = ctx.Q - 1
    hits = []
    for m in range(start, stop):
        vals = []
        mm = m
        for _ in free:
            vals.append(1 + mm % Qm1)
            mm //= Qm1
        coeffs = _resolve_coeffs(ctx, n, pattern, vals)
        if scan_is_mrd(ctx, coeffs, reject_kernel_dim):
            hits.append((m, coeffs, vals, _subfields_of(ctx, coeffs)))
    return hits


def exhaustive_search(job: SearchJob, workers: int = 1,
                      cap: int = DEFAULT_TABLE_CAP) -> SearchResult:
    """Scan the full free-coefficient space; deterministic hit order."""
    ctx = field_for(job.q, 2 * job.n, cap)
    free = _free_positions(job.pattern)
    total = max((ctx.Q - 1) ** len(free), 1)
    if total > EXHAUSTIVE_CAP:
        raise ValueError(f"{total} candidates exceed the exhaustive cap {EXHAUSTIVE_CAP}")
    args = (job.q, job.n, job.pattern, job.reject_kernel_dim, cap)
    if workers <= 1:
        raw = _scan_range(args[0], args[1], args[2], 0, total, args[3], args[4])
    else:
        shard = -(-total // workers)
        futs = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for w in range(workers):
                lo, hi = w * shard, min((w + 1) * shard, total)
                if lo < hi:
                    futs.append(pool.submit(_scan_range, args[0], args[1], args[2],
                                            lo, hi, args[3], args[4]))
            raw = [h for f in futs for h in f.result()]
        raw.sort(key=lambda h: h[0])
    hits = [SearchHit(m, coeffs, vals, subs) for m, coeffs, vals, subs in raw]
    if job.max_hits is not None:
        hits = hits[:job.max_hits]
    return SearchResult(job, total, hits)


def mcg_stream(seed: int):
    """The documented 64-bit multiplicative congruential stream."""
    state = (2 * seed + 1) & MCG_MASK
    while True:
        state = (MCG_MULTIPLIER * state) & MCG_MASK
        yield state


def random_search(job: SearchJob, cap: int = DEFAULT_TABLE_CAP) -> SearchResult:
    """Draw ``trials`` candidates from the seeded MCG stream."""
    if job.mode != "random":
        raise ValueError("job mode is not 'random'")
    ctx = field_for(job.q, 2 * job.n, cap)
    free = _free_positions(job.pattern)
    Qm1 = ctx.Q - 1
    stream = mcg_stream(job.seed)
    hits = []
    for t in range(job.trials):
        vals = [1 + ((next(stream) >> 16) % Qm1) for _ in free]
        coeffs = _resolve_coeffs(ctx, job.n, job.pattern, vals)
        if scan_is_mrd(ctx, coeffs, job.reject_kernel_dim):
            hits.append(SearchHit(t, coeffs, vals, _subfields_of(ctx, coeffs)))
            if job.max_hits is not None and len(hits) >= job.max_hits:
                break
    return SearchResult(job, job.trials, hits)


# ---------------------------------------------------------------------------
# single-candidate verification
# ---------------------------------------------------------------------------

@dataclass
class VerifyReport:
    q: int
    n: int
    coeffs: list[int]
    dim: int
    min_distance: int
    is_mrd: bool
    left_idealiser_dim: int | None
    right_idealiser_dim: int | None
    subfields: list[int]

    def to_json(self):
        from .report import SCHEMA_VERSION
        out = {"schema": SCHEMA_VERSION, "kind": "verify-candidate"}
        out.update(self.__dict__)
        return out


def verify_candidate(n: int, q: int, coeffs, idealisers: bool = True,
                     cap: int = DEFAULT_TABLE_CAP) -> VerifyReport:
    """Full (non-early-exit) check of one coefficient vector over F_{q^(2n)}."""
    ctx = field_for(q, 2 * n, cap)
    coeffs = [int(c) for c in coeffs] + [0] * (2 * n - len(list(coeffs)))
    f = LinPoly(ctx, coeffs)
    code = RankCode.from_semilinear(ctx, [LinPoly.identity(ctx), f])
    d, _ = code.min_rank_word()
    mrd = d == code.mrd_bound()
    li = ri = None
    if idealisers:
        li = code.left_idealiser().dimension
        ri = code.right_idealiser().dimension
    return VerifyReport(q, n, list(f.coeffs), code.dim, d, mrd, li, ri,
                        _subfields_of(ctx, f.coeffs))
