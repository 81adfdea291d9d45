"""Command-line front end: ``rmtcount <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction

from . import lattice_paths as lp, plane_partitions as pp, wigner
from .group_moments import GroupId, MomentSpec, bisymmetric_coeff, exact_moment, parse_extra, point_symmetric_coeff
from .haar import mc_moment
from .matrix_enum import CLASSES, DiagonalRule, MatrixClassSpec, count, normalize_sums
from .verify import FAIL, SUITES, format_table, verify

GROUPS = {"u": "U", "o": "O", "o+": "O_plus", "o-": "O_minus", "sp": "USp", "usp": "USp"}


def _ints(text: str | None) -> list[int]:
    if not text:
        return []
    return [int(x) for x in text.split(",") if x.strip()]


def _plain(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _emit(obj: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(obj, sort_keys=True, default=_plain))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def cmd_count(args) -> int:
    spec = CLASSES[args.cls]
    mu = _ints(args.mu)
    if args.cls in ("bisym", "point"):
        mut = _ints(args.mutilde) if args.mutilde is not None else None
    else:
        mu = list(normalize_sums(mu))
        mut = list(normalize_sums(_ints(args.mutilde))) if args.mutilde is not None else None
    if args.cls == "bisym":
        spec = MatrixClassSpec(symmetry=spec.symmetry, chi0=args.chi0, chi1=args.chi1)
    if args.diag_sum is not None:
        if args.cls != "sym":
            raise ValueError("--diag-sum applies to --class sym")
        spec = MatrixClassSpec(symmetry=spec.symmetry, diagonal_rule=DiagonalRule.PRESCRIBED_SUM, diag_sum=args.diag_sum)
    nu = _ints(args.nu) if args.nu is not None else None
    nut = _ints(args.nutilde) if args.nutilde is not None else None
    result = count(spec, mu, mut, nu, nut).to_dict()
    if args.method == "genfunc":
        if args.cls == "bisym":
            result["genfunc"] = bisymmetric_coeff(0, mu, args.chi0, args.chi1)
        elif args.cls == "point":
            result["genfunc"] = point_symmetric_coeff(0, mu, mut)
        else:
            raise ValueError("--method genfunc is available for bisym and point")
    _emit(result, args.json)
    return 0


def _moment_spec(args) -> MomentSpec:
    return MomentSpec(tuple(_ints(args.sc)), tuple(_ints(args.csc)), tuple(_ints(args.rc)), tuple(_ints(args.crc)),
                      parse_extra(args.extra))


def cmd_avg(args) -> int:
    group = GroupId(GROUPS[args.group.lower()], args.N)
    spec = _moment_spec(args)
    if args.mode == "exact":
        _emit(exact_moment(group, spec).to_dict(), args.json)
        return 0
    res = mc_moment(group, spec, args.samples, args.seed, args.threads)
    _emit({"estimate_re": res.estimate, "estimate_im": res.estimate_im, "stderr_re": res.stderr,
           "stderr_im": res.stderr_im, "samples": args.samples, "seed": args.seed}, args.json)
    return 0


def cmd_paths(args) -> int:
    mu = _ints(args.mu)
    if args.model == "return":
        value = lp.count_returning(args.walkers, args.halfsteps, mu, _ints(args.mutilde))
    else:
        value = lp.count_wall(args.walkers, args.halfsteps, mu)
    _emit({"model": args.model, "walkers": args.walkers, "halfsteps": args.halfsteps, "mu": mu,
           "mutilde": _ints(args.mutilde) if args.model == "return" else None, "value": value}, args.json)
    return 0


def cmd_pp(args) -> int:
    out: dict = {"class": args.kind, "method": args.method}
    if args.kind == "box":
        out.update(a=args.a, b=args.b, c=args.c)
        if args.qpoly:
            poly = pp.macmahon_qgen(args.a, args.b, args.c) if args.method != "brute" else pp.box_qgen_brute(args.a, args.b, args.c)
            out["qpoly"] = poly.dump()
        out["value"] = pp.count_box(args.a, args.b, args.c, args.method)
    elif args.kind == "sym-even":
        out.update(a=args.a, c=args.c)
        out["value"] = pp.count_sym_even_diag(args.a, args.c, args.method)
        if args.qpoly:
            out["qpoly"] = pp.sym_even_qgen_product(args.a, args.c).dump()
    else:
        out.update(a=args.a, c=args.c)
        method = "schur" if args.method == "product" else args.method
        out["method"] = method
        out["value"] = pp.count_sym(args.a, args.c, method)
        if args.qpoly:
            out["qpoly"] = pp.sym_qgen_schur(args.a, args.c, even=False).dump()
    _emit(out, args.json)
    return 0


def cmd_wigner(args) -> int:
    kind = args.kind
    n = args.N if kind == "hermitian" else args.n
    if n is None:
        raise ValueError("--N is required for hermitian, --n for chiral and wishart")
    p = None if kind == "hermitian" else args.p
    if kind != "hermitian" and p is None:
        raise ValueError("--p is required for chiral and wishart")
    out: dict = {"kind": kind, "n": n, "p": p, "lambda": args.lam, "sigma": args.sigma,
                 "closed_form": wigner.closed_form(kind, n, p, args.sigma, args.lam),
                 "closed_poly": str(wigner.closed_poly(kind, n, p).clean())}
    dim = n if kind == "hermitian" else (n + p if kind == "chiral" else p)
    if dim <= 7:
        out["oracle_poly"] = str(wigner.permutation_expansion_oracle(kind, n, p).poly.clean())
    if args.mc:
        res = wigner.mc_expected_charpoly(kind, n, p, args.lam, args.sigma, args.dist, args.diag_dist,
                                          args.samples, args.seed)
        out.update(mc_estimate=res.estimate, stderr=res.stderr, dist=args.dist, samples=args.samples, seed=args.seed)
    _emit(out, args.json)
    return 0


def cmd_verify(args) -> int:
    timings: dict = {}
    report = verify(args.suite, args.cap, args.N, args.samples, args.seed, args.threads, timings)
    text = json.dumps(report, sort_keys=True, indent=1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if args.json:
        print(text)
    else:
        print(format_table(report))
    if args.timing:
        for name, ms in timings.items():
            print(f"{name}: {ms} ms", file=sys.stderr)
    return 1 if report["summary"][FAIL] else 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print JSON instead of key: value lines")
    common.add_argument("--seed", type=int, default=42)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="rmtcount", description="Exact and Monte Carlo checks of secular-coefficient counting identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("count", parents=[common], help="brute-force count of a constrained matrix class")
    c.add_argument("--class", dest="cls", choices=sorted(CLASSES), required=True)
    c.add_argument("--mu", required=True, help="row sums, comma separated")
    c.add_argument("--mutilde")
    c.add_argument("--nu")
    c.add_argument("--nutilde")
    c.add_argument("--chi0", type=int, choices=(0, 1), default=1)
    c.add_argument("--chi1", type=int, choices=(0, 1), default=1)
    c.add_argument("--diag-sum", type=int)
    c.add_argument("--method", choices=("brute", "genfunc"), default="brute")
    c.set_defaults(func=cmd_count)

    a = sub.add_parser("avg", help="group averages of secular coefficients")
    asub = a.add_subparsers(dest="mode", required=True)
    for mode in ("exact", "mc"):
        m = asub.add_parser(mode, parents=[common])
        m.add_argument("--group", required=True, choices=sorted(GROUPS))
        m.add_argument("--N", type=int, required=True)
        m.add_argument("--sc", help="exponents of Sc_1, Sc_2, ...")
        m.add_argument("--csc")
        m.add_argument("--rc")
        m.add_argument("--crc")
        m.add_argument("--extra", help="det1plusm or scp:p")
        if mode == "mc":
            m.add_argument("--samples", type=int, default=100_000)
        m.set_defaults(func=cmd_avg)

    p = sub.add_parser("paths", parents=[common], help="vicious walker counts")
    p.add_argument("--model", choices=("return", "wall"), required=True)
    p.add_argument("--walkers", type=int, required=True)
    p.add_argument("--halfsteps", type=int, required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--mutilde", default="")
    p.set_defaults(func=cmd_paths)

    q = sub.add_parser("pp", help="plane partition counts")
    qsub = q.add_subparsers(dest="kind", required=True)
    box = qsub.add_parser("box", parents=[common])
    for dim in ("a", "b", "c"):
        box.add_argument(f"--{dim}", type=int, required=True)
    box.add_argument("--method", choices=("brute", "product", "gamma", "barnes", "qgen", "schur"), default="product")
    for name, methods in (("sym", ("product", "schur", "brute")), ("sym-even", ("product", "brute", "schur", "gamma", "barnes"))):
        s = qsub.add_parser(name, parents=[common])
        s.add_argument("--a", type=int, required=True)
        s.add_argument("--c", type=int, required=True)
        s.add_argument("--method", choices=methods, default="product")
    for s in qsub.choices.values():
        s.add_argument("--qpoly", action="store_true", help="also dump the q-generating polynomial")
        s.set_defaults(func=cmd_pp)

    w = sub.add_parser("wigner", parents=[common], help="expected characteristic polynomials")
    w.add_argument("--kind", choices=wigner.KINDS, required=True)
    w.add_argument("--N", type=int)
    w.add_argument("--n", type=int)
    w.add_argument("--p", type=int)
    w.add_argument("--lambda", dest="lam", type=float, default=0.0)
    w.add_argument("--sigma", type=float, default=1.0)
    w.add_argument("--dist", choices=sorted(wigner.DISTRIBUTIONS), default="gaussian")
    w.add_argument("--diag-dist", choices=sorted(wigner.DISTRIBUTIONS))
    w.add_argument("--mc", action="store_true")
    w.add_argument("--samples", type=int, default=100_000)
    w.set_defaults(func=cmd_wigner)

    v = sub.add_parser("verify", parents=[common], help="cross-method agreement suites")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--cap", type=int, help="weight cap (suite default when omitted)")
    v.add_argument("--N", type=int, help="override the group size threshold")
    v.add_argument("--samples", type=int, help="Monte Carlo samples (suite default when omitted)")
    v.add_argument("--out", help="also write the JSON report to this file")
    v.add_argument("--timing", action="store_true", help="print per-suite wall time to stderr")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
