"""Command-line interface.

Exit codes: 0 = success / property holds, 1 = a checked mathematical
property fails (a witness is printed), 2 = usage or system error.  Reports
are JSON (written with --json, '-' for stdout); a human-readable summary
always goes to standard output.  Runs are deterministic for a fixed
(command, seed, config), independent of the worker count.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import acceptance, scattered, search, trinomial
from .code import RankCode
from .field import DEFAULT_TABLE_CAP, FieldSpec, build_field, factor_prime_power, field_for
from .linpoly import LinPoly
from .report import SCHEMA_VERSION


def _read_config(path):
    cfg = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, _, val = line.partition("=")
            cfg[key.strip()] = val.strip()
    return cfg


def _apply_config(args):
    if getattr(args, "config", None):
        cfg = _read_config(args.config)
        for key in ("cap", "workers", "seed", "trials", "early_exit"):
            if key in cfg and getattr(args, key, None) is None:
                setattr(args, key, int(cfg[key]))
    for key, default in (("cap", DEFAULT_TABLE_CAP), ("workers", 1),
                         ("seed", 0), ("trials", 1000), ("early_exit", None)):
        if getattr(args, key, None) is None and hasattr(args, key):
            setattr(args, key, default)


def _emit(args, payload, summary_lines):
    payload = {"schema": SCHEMA_VERSION, **payload}
    for line in summary_lines:
        print(line)
    if getattr(args, "json", None):
        text = json.dumps(payload, indent=2, sort_keys=True)
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w") as fh:
                fh.write(text + "\n")


def _ctx_from_args(args):
    if getattr(args, "field", None):
        with open(args.field) as fh:
            return build_field(FieldSpec.from_json(json.load(fh)), args.cap)
    if args.q is None:
        raise ValueError("either --q or --field is required")
    if args.modulus:
        p, e = factor_prime_power(args.q)
        mod = tuple(int(c) for c in args.modulus.split(","))
        return build_field(FieldSpec(p, e, args.n, mod), args.cap)
    return field_for(args.q, args.n, args.cap)


def _coeffs(text):
    return [int(c) for c in text.split(",")]


# ---------------------------------------------------------------------------
# subcommand bodies
# ---------------------------------------------------------------------------

def cmd_field_info(args):
    _apply_config(args)
    p, e = factor_prime_power(args.q) if args.q else (args.p, args.e)
    if args.modulus:
        spec = FieldSpec(p, e, args.n, tuple(_coeffs(args.modulus)))
    else:
        spec = FieldSpec.canonical(p, e, args.n)
    ctx = build_field(spec, args.cap)
    subfields = [s for s in range(1, ctx.n + 1) if ctx.n % s == 0]
    _emit(args, {"kind": "field-info", "field": spec.to_json(), "Q": ctx.Q,
                 "q": ctx.q, "generator": ctx.generator,
                 "subfield_degrees": subfields},
          [f"F_{ctx.Q} = F_{ctx.q}^{ctx.n}, modulus {list(spec.modulus)}",
           f"generator index {ctx.generator} ({ctx.element_str(ctx.generator)})",
           f"subfields F_q^s for s in {subfields}"])
    return 0


def cmd_linpoly(args):
    _apply_config(args)
    ctx = _ctx_from_args(args)
    f = LinPoly(ctx, _coeffs(args.coeffs))
    if args.op == "rank":
        r = f.rank()
        _emit(args, {"kind": "linpoly-rank", "rank": r, "kernel_dim": ctx.n - r},
              [f"rank {r}, kernel dimension {ctx.n - r}"])
    elif args.op == "kernel":
        ker = f.kernel()
        _emit(args, {"kind": "linpoly-kernel", "basis": ker},
              [f"kernel dimension {len(ker)}: basis {ker}"])
    elif args.op == "adjoint":
        g = f.adjoint()
        _emit(args, {"kind": "linpoly-adjoint", "coeffs": list(g.coeffs)},
              [f"adjoint coefficients {list(g.coeffs)}"])
    elif args.op == "compose":
        g = LinPoly(ctx, _coeffs(args.coeffs2))
        h = f.compose(g)
        _emit(args, {"kind": "linpoly-compose", "coeffs": list(h.coeffs)},
              [f"composition coefficients {list(h.coeffs)}"])
    elif args.op == "eval":
        y = f(args.x)
        _emit(args, {"kind": "linpoly-eval", "value": y}, [f"f({args.x}) = {y}"])
    return 0


def cmd_code(args):
    _apply_config(args)
    with open(args.infile) as fh:
        code = RankCode.from_json(json.load(fh), cap=args.cap)
    strategy = "projective" if args.strategy == "proj" else args.strategy
    if args.op == "mindist":
        d, w = code.min_rank_word(strategy=strategy, early_exit=args.early_exit)
        _emit(args, {"kind": "code-mindist", "min_distance": d,
                     "witness": list(w.coeffs) if w else None},
              [f"minimum distance {d}"])
        return 0
    if args.op == "mrd":
        res = code.is_mrd(early_exit=args.early_exit is not None)
        lines = [f"MRD: {res.is_mrd} (bound d = {res.bound}, "
                 f"found d = {res.min_distance})"]
        if res.witness is not None:
            lines.append(f"witness of rank {res.witness.rank()}: {list(res.witness.coeffs)}")
        _emit(args, {"kind": "code-mrd", "is_mrd": res.is_mrd, "bound": res.bound,
                     "min_distance": res.min_distance,
                     "witness": list(res.witness.coeffs) if res.witness else None}, lines)
        return 0 if res.is_mrd else 1
    if args.op == "dual":
        dual = code.delsarte_dual()
        _emit(args, {"kind": "code-dual", "code": dual.to_json()},
              [f"dual dimension {dual.dim}"])
        return 0
    if args.op == "adjoint":
        adj = code.adjoint_code()
        _emit(args, {"kind": "code-adjoint", "code": adj.to_json()},
              [f"adjoint code dimension {adj.dim}"])
        return 0
    if args.op == "idealisers":
        L = code.left_idealiser()
        R = code.right_idealiser()
        _emit(args, {"kind": "code-idealisers",
                     "left": {"dimension": L.dimension, "is_field": L.is_field,
                              "field_order": L.field_order},
                     "right": {"dimension": R.dimension, "is_field": R.is_field,
                               "field_order": R.field_order}},
              [f"left idealiser: dim {L.dimension}, field {L.is_field}",
               f"right idealiser: dim {R.dimension}, field {R.is_field}"])
        return 0
    if args.op == "twist":
        t = code.frobenius_twist(args.i, args.j)
        _emit(args, {"kind": "code-twist", "code": t.to_json()},
              [f"twist by (i, j) = ({args.i}, {args.j})"])
        return 0
    raise ValueError(f"unknown code op {args.op}")


def cmd_subspace(args):
    _apply_config(args)
    if args.op == "family":
        ctx = field_for(args.q, args.n, args.cap)
        if args.name == "U1":
            U = scattered.family_u1(ctx, args.s)
        elif args.name == "U2":
            U = scattered.family_u2(ctx, args.s, args.delta)
        elif args.name == "U3":
            U = scattered.family_u3(ctx, args.s, args.delta)
        elif args.name == "U4":
            c = args.c if args.c is not None else trinomial.golden_roots(ctx)[0]
            U = scattered.family_u4(ctx, c)
        else:
            raise ValueError(f"unknown family {args.name}")
        _emit(args, {"kind": "subspace-family", "name": args.name,
                     "coeffs": list(U.f.coeffs)},
              [f"{args.name}: f coefficients {list(U.f.coeffs)}"])
        return 0
    ctx = _ctx_from_args(args)
    if getattr(args, "coeff_file", None):
        with open(args.coeff_file) as fh:
            coeffs = [int(c) for c in json.load(fh)]
    elif args.coeffs:
        coeffs = _coeffs(args.coeffs)
    else:
        raise ValueError("one of --coeffs or --f is required")
    U = scattered.PointedSubspace(LinPoly(ctx, coeffs))
    if args.op == "scattered":
        rep = scattered.linear_set(U)
        _emit(args, {"kind": "subspace-scattered",
                     "is_scattered": rep.is_scattered,
                     "is_maximum_scattered": rep.is_maximum_scattered},
              [f"scattered: {rep.is_scattered} (maximum: {rep.is_maximum_scattered})"])
        return 0 if rep.is_scattered else 1
    if args.op == "linear-set":
        rep = scattered.linear_set(U)
        _emit(args, {"kind": "subspace-linear-set", "size": rep.size,
                     "max_size": rep.max_size,
                     "weight_spectrum": {str(k): v for k, v in rep.weight_spectrum.items()},
                     "is_scattered": rep.is_scattered,
                     "is_maximum_scattered": rep.is_maximum_scattered},
              [f"linear set size {rep.size}/{rep.max_size}, "
               f"weights {rep.weight_spectrum}"])
        return 0
    if args.op == "stabiliser":
        rep = scattered.stabiliser_order(U)
        _emit(args, {"kind": "subspace-stabiliser", "order": rep.order,
                     "sample_elements": rep.sample_elements},
              [f"stabiliser order {rep.order}"])
        return 0
    raise ValueError(f"unknown subspace op {args.op}")


def cmd_paper(args):
    _apply_config(args)
    if args.op == "verify-main":
        rep = trinomial.verify_main(args.q, cap=args.cap)
        lines = [f"q={args.q}: dim {rep.dim}, min distance {rep.min_distance}, "
                 f"MRD {rep.is_mrd}",
                 f"idealisers: left {rep.left_idealiser}, right {rep.right_idealiser}",
                 f"scattered: {rep.scattered['is_maximum_scattered']}; "
                 f"dual dim {rep.dual_dim}, twist match {rep.dual_twist_match['found']}"]
        if rep.witness:
            lines.append(f"witness word coefficients: {rep.witness}")
        _emit(args, rep.to_json(), lines)
        return 0 if rep.is_mrd else 1
    if args.op == "even-cex":
        inst = trinomial.build_instance(args.q, cap=args.cap)
        try:
            ev = trinomial.even_solution(inst)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
        _emit(args, {"kind": "even-cex", "q": args.q, "alpha": ev.alpha,
                     "beta": ev.beta, "gamma": ev.gamma,
                     "word": list(ev.word.coeffs), "kernel_dim": ev.kernel_dim},
              [f"q={args.q}: (alpha, beta, gamma) = ({ev.alpha}, {ev.beta}, 0), "
               f"dual word kernel dimension {ev.kernel_dim}"])
        return 0
    if args.op == "relscan":
        inst = trinomial.build_instance(args.q, cap=args.cap)
        rep = trinomial.candidate_scan(inst)
        payload = {"kind": "relscan", "q": args.q,
                   "candidates": len(rep.candidates),
                   "solutions": rep.solutions, "no_solution": rep.verdict}
        lines = [f"q={args.q}: {len(rep.candidates)} parameterized candidates, "
                 f"{len(rep.solutions)} solutions"]
        if args.full_gamma:
            full = trinomial.full_gamma_scan(inst)
            payload["full_gamma_solutions"] = full
            lines.append(f"full-gamma scan: {len(full)} solutions")
            if bool(full) != bool(rep.solutions):
                lines.append("WARNING: scans disagree")
        _emit(args, payload, lines)
        return 0 if rep.verdict else 1
    if args.op == "table1":
        job = search.job_for_row(args.row, args.q, mode=args.mode,
                                 seed=args.seed, trials=args.trials)
        if args.mode == "random":
            res = search.random_search(job, cap=args.cap)
        else:
            res = search.exhaustive_search(job, workers=args.workers, cap=args.cap)
        payload = {"kind": "table1", "row": args.row, "q": args.q,
                   "mode": args.mode, "seed": args.seed,
                   "candidates_scanned": res.candidates_scanned,
                   "hits": [{"index": h.index, "coeffs": h.coeffs,
                             "subfields": h.subfields} for h in res.hits]}
        _emit(args, payload,
              [f"row {args.row}, q={args.q}: {len(res.hits)} MRD hits "
               f"over {res.candidates_scanned} candidates"])
        return 0 if res.hits else 1
    raise ValueError(f"unknown paper op {args.op}")


def cmd_repro_all(args):
    _apply_config(args)
    numbers = set(int(x) for x in args.criteria.split(",")) if args.criteria else None
    q_subset = set(int(x) for x in args.q_set.split(",")) if args.q_set else None
    results = acceptance.run_all(numbers=numbers, q_subset=q_subset,
                                 workers=args.workers)
    payload = {"kind": "repro-all",
               "results": [{"number": r.number, "name": r.name, "passed": r.passed,
                            "detail": r.detail, "seconds": round(r.seconds, 2)}
                           for r in results]}
    _emit(args, payload, [f"{sum(r.passed for r in results)}/{len(results)} criteria passed"])
    return 0 if all(r.passed for r in results) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_common(p):
    p.add_argument("--cap", type=int, default=None, help="field table cap")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--json", help="write the JSON report here ('-' for stdout)")


def _add_field_args(p):
    p.add_argument("--q", type=int, help="subfield size q = p^e")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--modulus", help="comma-separated modulus, little-endian")
    p.add_argument("--field", help="JSON field spec file")


def build_parser():
    ap = argparse.ArgumentParser(prog="rankmetric",
                                 description="exact rank-metric code computations")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="field utilities")
    fsub = p.add_subparsers(dest="op", required=True)
    pi = fsub.add_parser("info")
    pi.add_argument("--p", type=int)
    pi.add_argument("--e", type=int, default=1)
    pi.add_argument("--q", type=int, help="alternative to --p/--e")
    pi.add_argument("--n", type=int, required=True)
    pi.add_argument("--modulus")
    _add_common(pi)
    pi.set_defaults(func=cmd_field_info)

    p = sub.add_parser("linpoly", help="q-polynomial operations")
    lsub = p.add_subparsers(dest="op", required=True)
    for op in ("rank", "kernel", "adjoint", "compose", "eval"):
        pl = lsub.add_parser(op)
        _add_field_args(pl)
        pl.add_argument("--coeffs", required=True)
        if op == "compose":
            pl.add_argument("--coeffs2", required=True)
        if op == "eval":
            pl.add_argument("--x", type=int, required=True)
        _add_common(pl)
        pl.set_defaults(func=cmd_linpoly)

    p = sub.add_parser("code", help="rank-distance code operations")
    csub = p.add_subparsers(dest="op", required=True)
    for op in ("mindist", "mrd", "dual", "adjoint", "idealisers", "twist"):
        pc = csub.add_parser(op)
        pc.add_argument("--in", dest="infile", required=True, help="code JSON file")
        pc.add_argument("--strategy", default="auto",
                        choices=["auto", "full", "proj", "projective", "kernel-scan"])
        pc.add_argument("--early-exit", dest="early_exit", type=int, default=None)
        if op == "twist":
            pc.add_argument("--i", type=int, required=True)
            pc.add_argument("--j", type=int, required=True)
        _add_common(pc)
        pc.set_defaults(func=cmd_code)

    p = sub.add_parser("subspace", help="graph subspaces and linear sets")
    ssub = p.add_subparsers(dest="op", required=True)
    for op in ("scattered", "linear-set", "stabiliser"):
        ps = ssub.add_parser(op)
        _add_field_args(ps)
        ps.add_argument("--coeffs", help="comma-separated coefficients")
        ps.add_argument("--f", dest="coeff_file", help="JSON file with the coefficient array")
        _add_common(ps)
        ps.set_defaults(func=cmd_subspace)
    pf = ssub.add_parser("family")
    pf.add_argument("--name", required=True, choices=["U1", "U2", "U3", "U4"])
    pf.add_argument("--q", type=int, required=True)
    pf.add_argument("--n", type=int, default=6)
    pf.add_argument("--s", type=int, default=1)
    pf.add_argument("--delta", type=int)
    pf.add_argument("--c", type=int)
    _add_common(pf)
    pf.set_defaults(func=cmd_subspace)

    p = sub.add_parser("paper", help="headline verifications for the trinomial family")
    psub = p.add_subparsers(dest="op", required=True)
    pv = psub.add_parser("verify-main")
    pv.add_argument("--q", type=int, required=True)
    _add_common(pv)
    pv.set_defaults(func=cmd_paper)
    pe = psub.add_parser("even-cex")
    pe.add_argument("--q", type=int, required=True)
    _add_common(pe)
    pe.set_defaults(func=cmd_paper)
    pr = psub.add_parser("relscan")
    pr.add_argument("--q", type=int, required=True)
    pr.add_argument("--full-gamma", dest="full_gamma", action="store_true")
    _add_common(pr)
    pr.set_defaults(func=cmd_paper)
    pt = psub.add_parser("table1")
    pt.add_argument("--row", type=int, required=True)
    pt.add_argument("--q", type=int, required=True)
    pt.add_argument("--mode", default="exhaustive", choices=["exhaustive", "random"])
    pt.add_argument("--seed", type=int, default=None)
    pt.add_argument("--trials", type=int, default=None)
    pt.add_argument("--workers", type=int, default=None)
    _add_common(pt)
    pt.set_defaults(func=cmd_paper)

    p = sub.add_parser("repro-all", help="run the acceptance criteria")
    p.add_argument("--criteria", help="comma-separated criterion numbers")
    p.add_argument("--q-set", dest="q_set", help="restrict to these q values")
    p.add_argument("--workers", type=int, default=None)
    _add_common(p)
    p.set_defaults(func=cmd_repro_all)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ArithmeticError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
