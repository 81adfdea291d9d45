"""Cross-method agreement sweeps.

Each suite computes one quantity by independent routes over a parameter
grid, recording a case per comparison.  Exact routes must
agree as integers; Monte Carlo routes must land within ``4 * stderr + 1e-3``.
"""

from __future__ import annotations

import itertools
import time
from collections.abc import Callable
from dataclasses import dataclass

from . import genfuncs, lattice_paths as lp, plane_partitions as pp, wigner
from .group_moments import (
    GroupId,
    MomentSpec,
    bisymmetric_coeff,
    block_symmetric_moment,
    mixed_moment,
    orthogonal_free_diag_moment,
    orthogonal_prescribed_diag_moment,
    orthogonal_sc_moment,
    point_symmetric_coeff,
    symplectic_sc_moment,
    unitary_sc_moment,
    zero_one_moment,
)
from .haar import mc_char_poly_power, mc_moment, within_tolerance
from .matrix_enum import CLASSES, DiagonalRule, MatrixClassSpec, Symmetry, count, count_magic
from .partitions import frequencies, iterate_partitions
from .polyring import Caps, MultiPoly
from .symfunc import hook_schur, outer_product, restricted_cauchy_sum

EXACT, WITHIN, FAIL = "Exact", "WithinTolerance", "FAIL"


@dataclass
class Context:
    cap: int | None = None
    N: int | None = None
    samples: int | None = None
    seed: int = 42
    threads: int = 1

    def weight_cap(self, default: int) -> int:
        return default if self.cap is None else self.cap

    def size(self, threshold: int) -> int:
        return max(1, threshold if self.N is None else self.N)

    def n_samples(self, default: int) -> int:
        return default if self.samples is None else self.samples


class Collector:
    def __init__(self, suite: str):
        self.suite = suite
        self.cases: list[dict] = []
        self.notes: list[str] = []

    def exact(self, params: dict, lhs: tuple[str, object], rhs: tuple[str, object]) -> None:
        ok = lhs[1] == rhs[1]
        self.cases.append({
            "identity_id": self.suite,
            "params": params,
            "lhs": {"method": lhs[0], "value": lhs[1]},
            "rhs": {"method": rhs[0], "value": rhs[1]},
            "verdict": EXACT if ok else FAIL,
        })

    def identity(self, params: dict, lhs_method: str, f: MultiPoly, rhs_method: str, g: MultiPoly) -> None:
        """Polynomial identity: the values reported are term counts."""
        ok = f == g
        self.cases.append({
            "identity_id": self.suite,
            "params": params,
            "lhs": {"method": lhs_method, "value": len(f)},
            "rhs": {"method": rhs_method, "value": len(g)},
            "verdict": EXACT if ok else FAIL,
        })

    def mc(self, params: dict, lhs: tuple[str, float], res) -> None:
        ok = within_tolerance(res.estimate, res.stderr, lhs[1])
        self.cases.append({
            "identity_id": self.suite,
            "params": params,
            "lhs": {"method": lhs[0], "value": lhs[1]},
            "rhs": {"method": "monte-carlo", "estimate": res.estimate, "stderr": res.stderr,
                    "estimate_im": res.estimate_im, "stderr_im": res.stderr_im},
            "verdict": WITHIN if ok else FAIL,
        })


def _parts(w: int, **kw):
    return [tuple(p) for p in iterate_partitions(w, **kw)]


def _compositions(total: int, n: int):
    for cut in itertools.combinations(range(total + n - 1), n - 1):
        prev, out = -1, []
        for c in cut + (total + n - 1,):
            out.append(c - prev - 1)
            prev = c
        yield tuple(out)


# --- suites ------------------------------------------------------------------

def suite_eq1(ctx: Context, col: Collector) -> None:
    cap = ctx.weight_cap(5)
    samples = ctx.n_samples(10_000)
    for w in range(1, cap + 1):
        for mu in _parts(w):
            for mut in _parts(w):
                N = ctx.size(w)
                n = max(len(mu), len(mut))
                p = {"mu": list(mu), "mutilde": list(mut), "N": N}
                brute = count(CLASSES["nonneg"], mu, mut).value
                char = unitary_sc_moment(N, frequencies(mu), frequencies(mut))
                col.exact(p, ("brute", brute), ("character-sum", char))
                col.exact(p, ("brute", brute), ("lgv-coefficient", lp.lgv_coefficient(N, n, mu, mut)))
                if N <= 6:
                    res = mc_moment(GroupId("U", N), MomentSpec(sc=frequencies(mu), conj_sc=frequencies(mut)),
                                    samples, ctx.seed, ctx.threads)
                    col.mc(p, ("character-sum", char), res)


def suite_magic(ctx: Context, col: Collector) -> None:
    for k, j in [(2, j) for j in range(6)] + [(3, 0), (3, 1)]:
        freqs = [0] * j
        if j:
            freqs[j - 1] = k
        N = ctx.size(k * j)
        p = {"k": k, "j": j, "N": N}
        brute = count_magic(k, j).value
        col.exact(p, ("brute", brute), ("character-sum", unitary_sc_moment(N, freqs, freqs)))
        ref = j + 1 if k == 2 else (6 if j == 1 else 1)
        col.exact(p, ("brute", brute), ("closed-form", ref))


def suite_eq2(ctx: Context, col: Collector) -> None:
    for w in range(2, ctx.weight_cap(6) + 1, 2):
        for mu in _parts(w):
            N = ctx.size(w)
            p = {"mu": list(mu), "N": N, "group": "O"}
            brute = count(CLASSES["sym-zero"], mu).value
            col.exact(p, ("brute", brute), ("character-sum", orthogonal_sc_moment(N, frequencies(mu))))
            col.exact(p, ("brute", brute), ("genfunc-coefficient", genfuncs.symmetric_zero_diag_coeff(mu)))


def suite_eq3(ctx: Context, col: Collector) -> None:
    for w in range(1, ctx.weight_cap(6) + 1):
        for mu in _parts(w):
            N = ctx.size(w)
            p = {"mu": list(mu), "N": N, "group": "USp"}
            brute = count(CLASSES["sym-even"], mu).value
            col.exact(p, ("brute", brute), ("character-sum", symplectic_sc_moment(N, frequencies(mu))))
            col.exact(p, ("brute", brute), ("genfunc-coefficient", genfuncs.symmetric_even_diag_coeff(mu)))


def suite_eq81(ctx: Context, col: Collector) -> None:
    for w in range(1, ctx.weight_cap(6) + 1):
        for mu in _parts(w):
            N = ctx.size(w)
            p = {"mu": list(mu), "N": N, "group": "O", "extra": "det1plusm"}
            brute = count(CLASSES["sym"], mu).value
            col.exact(p, ("brute", brute), ("character-sum", orthogonal_free_diag_moment(N, frequencies(mu))))
            col.exact(p, ("brute", brute), ("genfunc-coefficient", genfuncs.symmetric_free_diag_coeff(mu)))


def suite_prescribed(ctx: Context, col: Collector) -> None:
    for w in range(1, ctx.weight_cap(6) + 1):
        for mu in _parts(w):
            N = ctx.size(w)
            total = 0
            for trace in range(w % 2, w + 1, 2):
                p = {"mu": list(mu), "p": trace, "N": N}
                spec = MatrixClassSpec(symmetry=Symmetry.SYMMETRIC, diagonal_rule=DiagonalRule.PRESCRIBED_SUM, diag_sum=trace)
                brute = count(spec, mu).value
                total += brute
                col.exact(p, ("brute", brute), ("character-sum", orthogonal_prescribed_diag_moment(N, frequencies(mu), trace)))
                col.exact(p, ("brute", brute), ("genfunc-coefficient", genfuncs.symmetric_prescribed_diag_coeff(mu, trace)))
            col.exact({"mu": list(mu), "sum_over": "p"}, ("sum of prescribed", total), ("free-diagonal brute", count(CLASSES["sym"], mu).value))


def suite_prop2(ctx: Context, col: Collector) -> None:
    cap = ctx.weight_cap(6)
    for n in (1, 2):
        for w in range(cap + 1):
            for mu in _compositions(w, n):
                for c0, c1 in itertools.product((0, 1), repeat=2):
                    p = {"n": n, "mu": list(mu), "chi0": c0, "chi1": c1}
                    spec = MatrixClassSpec(symmetry=Symmetry.DIAG_ANTIDIAG, chi0=c0, chi1=c1)
                    brute = count(spec, mu).value
                    col.exact(p, ("brute", brute), ("genfunc-coefficient", bisymmetric_coeff(0, mu, c0, c1)))
                    if w <= 4:
                        N = ctx.size(w)
                        col.exact(dict(p, N=N), ("brute", brute), ("hook-schur-average", bisymmetric_coeff(N, mu, c0, c1, "hook")))


def suite_prop3(ctx: Context, col: Collector) -> None:
    cap = ctx.weight_cap(6)
    for n in (1, 2):
        for w in range(cap + 1):
            for mu in _compositions(w, n):
                p = {"n": n, "mu": list(mu)}
                brute = count(CLASSES["point"], mu).value
                col.exact(p, ("brute", brute), ("genfunc-coefficient", point_symmetric_coeff(0, mu)))
                N = ctx.size(w)
                col.exact(dict(p, N=N), ("brute", brute), ("squared-cauchy-sum", point_symmetric_coeff(N, mu, method="cauchy")))


def suite_prop4(ctx: Context, col: Collector) -> None:
    cap = ctx.weight_cap(4)
    for w in range(1, cap + 1):
        for mu in _parts(w):
            for mut in _parts(w):
                N = ctx.size(len(mu))
                p = {"mu": list(mu), "mutilde": list(mut), "N": N}
                brute = count(CLASSES["zeroone"], mu, mut).value
                col.exact(p, ("brute", brute), ("kostka-sum", zero_one_moment(N, frequencies(mu), frequencies(mut))))
                col.exact(p, ("brute", brute), ("genfunc-coefficient", genfuncs.zero_one_coeff(mu, mut)))
    for nrows in (1, 2, 3):
        for w in range(1, cap + 1):
            for mu in _parts(w, max_length=nrows):
                for mut in _parts(w):
                    ref = zero_one_moment(nrows, frequencies(mu), frequencies(mut))
                    for N in (nrows + 1, nrows + 2):
                        col.exact({"mu": list(mu), "mutilde": list(mut), "N": N, "stable_from": nrows},
                                  ("kostka-sum at N=rows", ref), ("kostka-sum", zero_one_moment(N, frequencies(mu), frequencies(mut))))
    low = zero_one_moment(1, [2], [0, 1])
    true = count(CLASSES["zeroone"], (1, 1), (2,)).value
    col.notes.append(f"mu=(1,1), mutilde=(2): N=1 gives {low} against {true} matrices; N >= number of rows of mu is needed")


def _block_tuples(cap: int):
    for w in range(1, cap + 1):
        for w1 in range(w + 1):
            for w2 in range(w + 1):
                for mu in _parts(w1):
                    for nu in _parts(w - w1):
                        for mut in _parts(w2):
                            for nut in _parts(w - w2):
                                yield w, mu, nu, mut, nut


def suite_prop5(ctx: Context, col: Collector) -> None:
    for w, mu, nu, mut, nut in _block_tuples(ctx.weight_cap(4)):
        N = ctx.size(w)
        p = {"mu": list(mu), "nu": list(nu), "mutilde": list(mut), "nutilde": list(nut), "N": N}
        brute = count(CLASSES["block"], mu, mut, nu, nut).value
        col.exact(p, ("brute", brute), ("hook-schur-sum", mixed_moment(N, frequencies(mu), frequencies(mut), frequencies(nu), frequencies(nut))))
        col.exact(p, ("brute", brute), ("genfunc-coefficient", genfuncs.block_coeff(mu, mut, nu, nut)))
    low = mixed_moment(1, [1], [1], [1], [1])
    col.notes.append(f"mu=nu=mutilde=nutilde=(1): N=1 gives {low} against 2 matrices; N >= |mu|+|nu| is needed")
    _anchors(ctx, col)


def _anchors(ctx: Context, col: Collector) -> None:
    samples = ctx.n_samples(20_000)
    anchors = [
        ("E|Tr U|^4", GroupId("U", 4), MomentSpec(sc=(2,), conj_sc=(2,)), mixed_moment(4, [2], [2], [], []), 2),
        ("E|Tr U|^4 via Sc and Rc", GroupId("U", 2), MomentSpec(sc=(1,), conj_sc=(1,), rc=(1,), conj_rc=(1,)),
         mixed_moment(2, [1], [1], [1], [1]), 2),
        ("E (Tr M)^2 on USp", GroupId("USp", 2), MomentSpec(sc=(1,), rc=(1,)), block_symmetric_moment(2, [1], [1], "Sp"), 1),
        ("E (Tr M)^2 on O", GroupId("O", 2), MomentSpec(sc=(1,), rc=(1,)), block_symmetric_moment(2, [1], [1], "O"), 1),
    ]
    for name, group, spec, exact, expected in anchors:
        p = {"anchor": name, "group": group.family, "N": group.size}
        col.exact(p, ("expected", expected), ("character-sum", exact))
        col.mc(p, ("character-sum", exact), mc_moment(group, spec, samples, ctx.seed, ctx.threads))


def suite_prop6(ctx: Context, col: Collector) -> None:
    cap = ctx.weight_cap(4)
    for variant in ("Sp", "O"):
        for w in range(1, cap + 1):
            for w1 in range(w + 1):
                for mu in _parts(w1):
                    for nu in _parts(w - w1):
                        N = ctx.size(w)
                        p = {"variant": variant, "mu": list(mu), "nu": list(nu), "N": N}
                        brute = count(CLASSES["blocksym-" + variant.lower()], mu, nu=nu).value
                        col.exact(p, ("brute", brute), ("hook-schur-sum", block_symmetric_moment(N, frequencies(mu), frequencies(nu), variant)))
                        col.exact(p, ("brute", brute), ("genfunc-coefficient", genfuncs.block_symmetric_coeff(mu, nu, variant)))


def suite_prop7(ctx: Context, col: Collector) -> None:
    for w in range(1, ctx.weight_cap(5) + 1):
        for mu in _parts(w):
            for mut in _parts(w):
                N = ctx.size(w)
                n = max(len(mu), len(mut))
                p = {"mu": list(mu), "mutilde": list(mut), "N": N, "n": n}
                col.exact(p, ("walkers", lp.count_returning(N, n, mu, mut)),
                          ("character-sum", unitary_sc_moment(N, frequencies(mu), frequencies(mut))))


def suite_prop8(ctx: Context, col: Collector) -> None:
    for w in range(1, ctx.weight_cap(5) + 1):
        for mu in _parts(w):
            N = ctx.size(w)
            p = {"mu": list(mu), "N": N, "n": len(mu)}
            col.exact(p, ("walkers", lp.count_wall(N, len(mu), mu)), ("character-sum", symplectic_sc_moment(N, frequencies(mu))))


def suite_lgv(ctx: Context, col: Collector) -> None:
    for N in range(1, 5):
        for n in range(1, 4):
            caps = Caps(total=2 * n * N)
            col.identity({"N": N, "n": n}, "lgv-determinant", lp.lgv_generating(N, n, caps),
                         "restricted-cauchy-sum", restricted_cauchy_sum(N, n, n, n * N, caps))


def suite_hs2(ctx: Context, col: Collector) -> None:
    """Generalized Cauchy identity for hook Schur functions, both index conventions."""
    for dims, deg in (((1, 1, 1, 1), 4), ((2, 1, 1, 2), 3), ((1, 2, 2, 1), 3), ((2, 2, 2, 2), 2)):
        k1, l1, k2, l2 = dims
        caps = Caps(total=2 * deg)
        rhs = genfuncs.block_genfunc(k1, l1, k2, l2, caps)
        for index in ("standard", "printed"):
            lhs = MultiPoly(k1 + l1 + k2 + l2, {}, caps)
            for w in range(deg + 1):
                for lam in iterate_partitions(w):
                    a = hook_schur(lam, k1, l1, Caps(total=w), index)
                    b = hook_schur(lam, k2, l2, Caps(total=w), index)
                    lhs = lhs + outer_product(a, b, caps)
            ok = lhs == rhs
            if index == "standard":
                col.identity({"dims": list(dims), "degree": deg}, "sum of hook Schur products", lhs, "block product", rhs)
            elif not ok:
                col.notes.append(f"index a_(lambda_i+j-1) breaks the identity at dims {list(dims)}, degree {deg}")


def suite_pp_box(ctx: Context, col: Collector) -> None:
    for a in range(1, 10):
        for b in range(1, 10 // a + 1):
            if a * b > 9:
                continue
            for c in range(1, 7):
                p = {"a": a, "b": b, "c": c}
                brute = pp.count_box_brute(a, b, c)
                for m in ("product", "gamma", "barnes", "qgen"):
                    col.exact(p, ("brute", brute), (m, pp.count_box(a, b, c, m)))
    col.notes.append("gamma and Barnes forms use Gamma(1+j) and G(1+c); Gamma(2+j) and G(2+c) overcount by c!")


def suite_mm3(ctx: Context, col: Collector) -> None:
    for a, b, c in itertools.product(range(1, 4), repeat=3):
        col.identity({"a": a, "b": b, "c": c}, "macmahon-product", pp.macmahon_qgen(a, b, c),
                     "schur-specialization", pp.qgen_via_schur(a, b, c))


def suite_pp_sym(ctx: Context, col: Collector) -> None:
    for a in range(1, 4):
        for c in range(1, 4):
            p = {"a": a, "c": c, "class": "sym-even"}
            ref = pp.count_sym_even_diag(a, c, "product")
            for m in ("brute", "schur", "gamma", "barnes"):
                col.exact(p, ("product", ref), (m, pp.count_sym_even_diag(a, c, m)))
            col.identity(p, "brute (upper triangle)", pp.sym_qgen_brute(a, 2 * c, True), "product", pp.sym_even_qgen_product(a, c))
            col.identity(p, "schur-sum", pp.sym_qgen_schur(a, c, True), "product", pp.sym_even_qgen_product(a, c))
            p = {"a": a, "c": c, "class": "sym"}
            col.exact(p, ("brute", pp.count_sym(a, c, "brute")), ("schur", pp.count_sym(a, c, "schur")))
    for a in range(1, 5):
        for c in range(1, 5):
            col.exact({"a": a, "c": c, "class": "sym-even", "route": "gamma-exact"},
                      ("product", pp.count_sym_even_product(a, c)), ("gamma", pp.count_sym_even_diag(a, c, "gamma")))


def suite_prop9(ctx: Context, col: Collector) -> None:
    samples = ctx.n_samples(20_000)
    for a, b, c in itertools.product((1, 2), (1, 2), (1, 2, 3)):
        res = mc_char_poly_power(c, 1.0, b, a, samples, ctx.seed, ctx.threads, "U")
        col.mc({"a": a, "b": b, "c": c, "z": 1}, ("macmahon-product", pp.macmahon_product(a, b, c)), res)


def suite_prop10(ctx: Context, col: Collector) -> None:
    samples = ctx.n_samples(20_000)
    for a, c in itertools.product((1, 2), (1, 2)):
        res = mc_char_poly_power(c, -1.0, 0, a, samples, ctx.seed, ctx.threads, "USp")
        col.mc({"a": a, "c": c, "group": "USp"}, ("product", pp.count_sym_even_product(a, c)), res)


def suite_o_bridge(ctx: Context, col: Collector) -> None:
    samples = ctx.n_samples(20_000)
    for a, c in itertools.product((1, 2), (1, 2)):
        res = mc_char_poly_power(c, -1.0, 0, a, samples, ctx.seed, ctx.threads, "O")
        col.mc({"a": a, "c": c, "group": "O"}, ("schur-sum", pp.count_sym(a, c)), res)


def suite_p6(ctx: Context, col: Collector) -> None:
    for N in range(1, 7):
        r = wigner.permutation_expansion_oracle("hermitian", N)
        col.exact({"N": N}, ("oracle", str(r.poly.clean())), ("hermite", str(wigner.hermitian_closed_poly(N).clean())))
        if r.residual_symbols:
            col.notes.append(f"uncancelled higher moments at N={N}")


def _sign_note(col: Collector) -> None:
    law = wigner.calibrate_sign_law()
    consistent = all(s == (-1) ** p for (_, _, p), s in law.items())
    o = wigner.permutation_expansion_oracle("chiral", 1, 1).poly.clean()
    u = wigner.unsigned_chiral_poly(1, 1).clean()
    col.notes.append(f"sign law s(n,p)=(-1)^p consistent at calibration points: {consistent}")
    col.notes.append(f"n=p=1: oracle {o} vs unsigned formula {u}")


def suite_f2(ctx: Context, col: Collector) -> None:
    for n in range(0, 8):
        for p in range(0, n + 1):
            if n + p > 7:
                continue
            r = wigner.permutation_expansion_oracle("chiral", n, p)
            col.exact({"n": n, "p": p}, ("oracle", str(r.poly.clean())), ("laguerre", str(wigner.chiral_closed_poly(n, p).clean())))
    _sign_note(col)


def suite_corollary(ctx: Context, col: Collector) -> None:
    for n in range(1, 7):
        for p in range(1, n + 1):
            if n + p > 7:
                continue
            w = wigner.permutation_expansion_oracle("wishart", n, p).poly.clean()
            col.exact({"n": n, "p": p}, ("oracle", str(w)), ("laguerre", str(wigner.wishart_closed_poly(n, p).clean())))
            c = wigner.permutation_expansion_oracle("chiral", n, p).poly.clean()
            lifted = wigner.LSPoly({(n - p + 2 * i, j): v for (i, j), v in w.items()})
            col.exact({"n": n, "p": p, "check": "chiral from wishart"}, ("chiral oracle", str(c)), ("lambda^(n-p) W(lambda^2)", str(lifted)))
    _sign_note(col)


def suite_universality(ctx: Context, col: Collector) -> None:
    samples = ctx.n_samples(100_000)
    dists = ("gaussian", "rademacher", "uniform", "skewed")
    configs = [("hermitian", 2, None, 0.0, 1.0), ("hermitian", 3, None, 0.5, 1.2), ("hermitian", 4, None, 0.7, 1.0),
               ("chiral", 2, 1, 0.8, 1.0), ("wishart", 3, 2, 1.5, 1.0)]
    for kind, n, p, lam, sigma in configs:
        exact = wigner.closed_form(kind, n, p, sigma, lam)
        for d in dists:
            res = wigner.mc_expected_charpoly(kind, n, p, lam, sigma, d, num_samples=samples, seed=ctx.seed)
            col.mc({"kind": kind, "n": n, "p": p, "lambda": lam, "sigma": sigma, "dist": d}, ("closed-form", exact), res)


SUITES: dict[str, Callable[[Context, Collector], None]] = {
    "eq1": suite_eq1,
    "magic": suite_magic,
    "eq2": suite_eq2,
    "eq3": suite_eq3,
    "eq81": suite_eq81,
    "prescribed": suite_prescribed,
    "prop2": suite_prop2,
    "prop3": suite_prop3,
    "prop4": suite_prop4,
    "prop5": suite_prop5,
    "prop6": suite_prop6,
    "prop7": suite_prop7,
    "prop8": suite_prop8,
    "lgv": suite_lgv,
    "hs2": suite_hs2,
    "pp-box": suite_pp_box,
    "mm3": suite_mm3,
    "pp-sym": suite_pp_sym,
    "prop9": suite_prop9,
    "prop10": suite_prop10,
    "o-bridge": suite_o_bridge,
    "p6": suite_p6,
    "f2": suite_f2,
    "corollary": suite_corollary,
    "universality": suite_universality,
}


def verify(suite: str, cap: int | None = None, N: int | None = None, samples: int | None = None,
           seed: int = 42, threads: int = 1, timings: dict | None = None) -> dict:
    """Run a suite (or ``"all"``) and return the report as a JSON-ready dict.

    Wall-clock times go into ``timings`` when given; they are kept out of the
    report so that reports are reproducible byte for byte.
    """
    names = list(SUITES) if suite == "all" else [suite]
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    ctx = Context(cap, N, samples, seed, threads)
    cases, notes = [], []
    for name in names:
        col = Collector(name)
        t0 = time.perf_counter()
        SUITES[name](ctx, col)
        if timings is not None:
            timings[name] = round(1000 * (time.perf_counter() - t0))
        cases.extend(col.cases)
        notes.extend(f"{name}: {n}" for n in col.notes)
    for i, case in enumerate(cases):
        case["case_id"] = i
    summary = {v: sum(c["verdict"] == v for c in cases) for v in (EXACT, WITHIN, FAIL)}
    return {
        "suite": suite,
        "seed": seed,
        "flags": {"cap": cap, "N": N, "samples": samples},
        "summary": summary,
        "notes": notes,
        "cases": cases,
    }


def format_table(report: dict) -> str:
    lines = []
    for c in report["cases"]:
        rhs = c["rhs"]
        shown = rhs.get("value", None)
        if shown is None:
            shown = f"{rhs['estimate']:.5g} +- {rhs['stderr']:.2g}"
        lines.append(f"{c['case_id']:5d} {c['identity_id']:<12} {c['verdict']:<16} "
                     f"{c['lhs']['method']}={c['lhs']['value']}  {rhs['method']}={shown}  {c['params']}")
    s = report["summary"]
    lines.extend(f"note: {n}" for n in report["notes"])
    lines.append(f"Exact: {s[EXACT]}  WithinTolerance: {s[WITHIN]}  FAIL: {s[FAIL]}")
    return "\n".join(lines)
