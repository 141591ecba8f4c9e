"""Command-line front end.

Subcommands: verify, paper-examples, bound, lemma, sturm, spin, fock,
rdiff. Exit codes: 0 success, 1 inequality violation / holds=false, 2
usage or input errors. With ``--out BASE`` commands write BASE.json plus,
where applicable, BASE.csv and BASE.png.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import applications, bounds, lemmas, reporting
from .bounds import BoundId, BoundParams, ParamGrid, VerifyConfig
from .errors import SemiHilbertError
from .lemmas import LemmaId
from .matio import load_matrix, load_vector
from .refexamples import reference_rows
from .space import make_space


def _fmt(x) -> str:
    if isinstance(x, float):
        if math.isinf(x):
            return "INFINITE"
        return f"{x:.6g}"
    return str(x)


def _parse_dims(text: str) -> tuple:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return tuple(range(int(lo), int(hi) + 1))
    return tuple(int(v) for v in text.split(","))


def _out_base(out: str) -> Path:
    base = Path(out)
    if base.suffix:
        base = base.with_suffix("")
    base.parent.mkdir(parents=True, exist_ok=True)
    return base


def _print_report(rep) -> None:
    p = rep.params
    print(
        f"{rep.id.value}  alpha={_fmt(p.alpha)} beta={_fmt(p.beta)} r={_fmt(p.r)} n={p.n}\n"
        f"  lhs   = {_fmt(rep.lhs)}\n"
        f"  rhs   = {_fmt(rep.rhs)}\n"
        f"  slack = {_fmt(rep.slack)}\n"
        f"  holds = {rep.holds}"
    )


def cmd_verify(args) -> int:
    grid = ParamGrid(
        alphas=tuple(args.alphas), betas=tuple(args.betas), rs=tuple(args.rs), ns=tuple(args.ns)
    )
    bound_cfg = VerifyConfig(
        dims=_parse_dims(args.dims),
        trials=args.trials,
        seed=args.seed,
        singular_prob=args.singular_prob,
        grid=grid,
    )
    lemma_cfg = VerifyConfig(
        dims=_parse_dims(args.dims),
        trials=args.lemma_trials if args.lemma_trials is not None else 5 * args.trials,
        seed=args.seed,
        singular_prob=args.singular_prob,
        grid=grid,
    )
    writer = None
    if args.out:
        base = _out_base(args.out)
        writer = reporting.CsvWriter(base.with_suffix(".csv"))
        on_report = lambda trial, rep: writer.writerow(reporting.report_csv_row(rep))
    else:
        on_report = None
    bsum = bounds.verify_random(bound_cfg, on_report=on_report)
    lsum = lemmas.verify_lemmas_random(lemma_cfg, on_report=on_report)
    if writer is not None:
        writer.close()
    print(f"bounds : {bsum.total} evaluations, {bsum.violations} violations, "
          f"worst slack {_fmt(bsum.worst_slack)}")
    print(f"lemmas : {lsum.total} evaluations, {lsum.violations} violations, "
          f"worst slack {_fmt(lsum.worst_slack)}")
    if args.out:
        doc = {"bounds": bsum.to_dict(), "lemmas": lsum.to_dict()}
        reporting.write_json(base.with_suffix(".json"), doc)
        reporting.render_slack_figure({"bound": bsum, "lemma": lsum}, base.with_suffix(".png"))
        print(f"wrote {base.with_suffix('.json')}, {base.with_suffix('.csv')}, {base.with_suffix('.png')}")
    return 0 if bsum.violations == 0 and lsum.violations == 0 else 1


def cmd_paper_examples(args) -> int:
    rows = reference_rows()
    width = max(len(r["name"]) for r in rows)
    ok = True
    for r in rows:
        ok &= r["passed"]
        rel = r.get("relation", "~")
        print(
            f"{r['name']:<{width}}  computed={_fmt(r['computed']):>12}  "
            f"claimed{rel}{_fmt(r['claimed']):>10}  "
            f"{'ok' if r['passed'] else 'FAIL'}"
        )
    if args.out:
        base = _out_base(args.out)
        reporting.write_json(base.with_suffix(".json"), {"rows": rows})
        reporting.write_rows_csv(
            base.with_suffix(".csv"),
            ["name", "computed", "claimed", "tol", "passed"],
            [[r["name"], r["computed"], r["claimed"], r["tol"], r["passed"]] for r in rows],
        )
    return 0 if ok else 1


def _load_params(args) -> BoundParams:
    return BoundParams(
        alpha=args.alpha, beta=args.beta, r=args.r, n=args.n
    ).validate()


def cmd_bound(args) -> int:
    bound_id = BoundId(args.id)
    A = load_matrix(args.A)
    space = make_space(A)
    T = load_matrix(args.T)
    params = _load_params(args)
    if bound_id in bounds.PAIR_IDS:
        if not args.S:
            print("error: this bound needs a second operator (-S)", file=sys.stderr)
            return 2
        rep = bounds.eval_pair(space, T, load_matrix(args.S), bound_id, params)
    else:
        rep = bounds.eval_single(space, T, bound_id, params)
    _print_report(rep)
    if args.out:
        base = _out_base(args.out)
        reporting.write_json(
            base.with_suffix(".json"),
            {"id": rep.id.value, "alpha": params.alpha, "beta": params.beta, "r": params.r,
             "n": params.n, "lhs": rep.lhs, "rhs": rep.rhs, "slack": rep.slack, "holds": rep.holds},
        )
    return 0 if rep.holds else 1


def cmd_lemma(args) -> int:
    lemma_id = LemmaId(args.id)
    space = make_space(load_matrix(args.A))
    a = load_vector(args.vec_a)
    b = load_vector(args.vec_b)
    e = load_vector(args.vec_e)
    op = load_matrix(args.op) if args.op else None
    rep = lemmas.eval_lemma(space, a, b, e, lemma_id, _load_params(args), op=op)
    _print_report(rep)
    return 0 if rep.holds else 1


def cmd_sturm(args) -> int:
    rows = []
    reports = []
    for n in args.n:
        rep = applications.sturm_report(applications.SturmConfig(N=n))
        reports.append(rep)
        rows.append(rep["row"])
    print(f"{'N':>5} {'h':>10} {'computed':>14} {'exact':>14} {'rel_err':>12}")
    for r in rows:
        exact = _fmt(r["exact"]) if r["exact"] is not None else "-"
        rel = _fmt(r["rel_err"]) if r["rel_err"] is not None else "-"
        print(f"{r['N']:>5} {_fmt(r['h']):>10} {_fmt(r['computed']):>14} {exact:>14} {rel:>12}")
    if args.out:
        base = _out_base(args.out)
        reporting.write_json(base.with_suffix(".json"), {"reports": reports})
        reporting.write_rows_csv(
            base.with_suffix(".csv"),
            ["N", "h", "computed", "exact", "rel_err"],
            [[r["N"], r["h"], r["computed"], r["exact"], r["rel_err"]] for r in rows],
        )
        reporting.render_sturm_figure(rows, base.with_suffix(".png"))
    return 0


def _print_claim_rows(rows) -> None:
    for c in rows:
        flag = "  DISCREPANCY vs claimed" if c["discrepancy"] else ""
        print(f"  {c['name']}: computed={_fmt(c['computed'])} claimed={_fmt(c['claimed'])}{flag}")


def cmd_spin(args) -> int:
    rep = applications.spin_report(applications.SpinConfig(J=args.j, B=args.b, beta=args.beta))
    print(f"w_rho(S) = {_fmt(rep['w_S'])}")
    print(f"THM31 rhs^(1/4) = {_fmt(rep['thm31']['rhs_quarter_root'])} (holds={rep['thm31']['holds']})")
    _print_claim_rows(rep["claimed_chain"])
    if args.out:
        reporting.write_json(_out_base(args.out).with_suffix(".json"), rep)
    return 0


def cmd_fock(args) -> int:
    rep = applications.fock_report(applications.FockConfig(nmax=args.nmax))
    print(f"in B_A^1/2 membership: {rep['in_b_a_half']}")
    print(f"w_A(a + adag) = {_fmt(rep['radius'])}")
    _print_claim_rows([rep["first_excited_pairing"]])
    if args.out:
        reporting.write_json(_out_base(args.out).with_suffix(".json"), rep)
    return 0


def cmd_rdiff(args) -> int:
    rng = np.random.default_rng(args.seed)
    V = rng.uniform(-1.0, 1.0, args.n)
    fp = rng.uniform(-2.0, 2.0, args.n)
    rep = applications.reaction_diffusion_check(args.n, V, fp)
    print(f"w_A(T) = {_fmt(rep['w_T'])}  <=  w_A(Lap) + sup|f'| = {_fmt(rep['rhs'])}  "
          f"(holds={rep['holds']})")
    if args.out:
        reporting.write_json(_out_base(args.out).with_suffix(".json"), rep)
    return 0 if rep["holds"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semihilbert",
        description="Weighted numerical radius inequalities: evaluate, verify, report.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="fuzz every inequality over random spaces/operators")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--lemma-trials", type=int, default=None)
    p.add_argument("--dims", default="2..6")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--singular-prob", type=float, default=0.3)
    p.add_argument("--alphas", type=float, nargs="+", default=list(bounds.DEFAULT_ALPHAS))
    p.add_argument("--betas", type=float, nargs="+", default=list(bounds.DEFAULT_BETAS))
    p.add_argument("--rs", type=float, nargs="+", default=list(bounds.DEFAULT_RS))
    p.add_argument("--ns", type=int, nargs="+", default=list(bounds.DEFAULT_NS))
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-examples", help="claimed-vs-computed table for the worked examples")
    p.add_argument("--out")
    p.set_defaults(func=cmd_paper_examples)

    p = sub.add_parser("bound", help="evaluate one operator inequality on matrix files")
    p.add_argument("id", choices=[b.value for b in BoundId])
    p.add_argument("-A", required=True, help="weight matrix file")
    p.add_argument("-T", required=True, help="operator file")
    p.add_argument("-S", help="second operator file (pair bounds)")
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("lemma", help="evaluate one vector inequality on vector files")
    p.add_argument("id", choices=[l.value for l in LemmaId])
    p.add_argument("-A", required=True, help="weight matrix file")
    p.add_argument("--vec-a", required=True)
    p.add_argument("--vec-b", required=True)
    p.add_argument("--vec-e", required=True)
    p.add_argument("--op", help="operator file (HOLDER_QHB)")
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--n", type=int, default=2)
    p.set_defaults(func=cmd_lemma)

    p = sub.add_parser("sturm", help="finite-difference operator vs the closed-form radius")
    p.add_argument("--n", type=int, nargs="+", default=[1, 3, 7, 15, 31, 63])
    p.add_argument("--out")
    p.set_defaults(func=cmd_sturm)

    p = sub.add_parser("spin", help="thermal two-qubit demo")
    p.add_argument("--j", type=float, default=1.0)
    p.add_argument("--b", type=float, default=0.0)
    p.add_argument("--beta", type=float, default=0.0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_spin)

    p = sub.add_parser("fock", help="truncated ladder-operator demo with singular weight")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fock)

    p = sub.add_parser("rdiff", help="reaction-diffusion subadditivity check")
    p.add_argument("--n", type=int, default=32)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_rdiff)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SemiHilbertError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
