"""Command-line front end.

Every run prints its resolved configuration first (a ``# config:`` line, or a
``config`` key in JSON), then the result. Exit codes: 0 success, 2 input error,
3 budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from diagforms import detmethod as dm
from diagforms import enumeration as en
from diagforms import experiments as ex
from diagforms import special as sp
from diagforms.detmethod.vandermonde import monomial_polys
from diagforms.errors import BudgetError, DiagformsError, InputError, RankError
from diagforms.forms import DiagonalForm, Region, SearchRegion

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 2, 3

log = logging.getLogger("diagforms")


class Output:
    """A result: JSON-able payload, text lines, and an optional table for CSV."""

    def __init__(self, payload, lines: List[str], table=None):
        self.payload = payload
        self.lines = lines
        self.table = table  # (header, rows)


# ------------------------------------------------------------------ parsing

def int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}") from None


def read_points(path: str, parse=int) -> List[tuple]:
    pts = []
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read points file: {exc}") from None
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            pts.append(tuple(parse(t) for t in line.replace(",", " ").split()))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"{path}:{lineno}: cannot parse {line!r}") from None
    return pts


def _budget(args) -> en.Budget:
    return en.Budget.from_gib(args.mem_gib, args.time_s, args.threads)


def _form(args, n: Optional[int] = None) -> DiagonalForm:
    if args.coeffs is None:
        raise InputError("--coeffs is required")
    if n is not None and len(args.coeffs) != n:
        raise InputError(f"--coeffs needs {n} entries, got {len(args.coeffs)}")
    return DiagonalForm(args.k, tuple(args.coeffs))


def _tuples(args) -> List[tuple]:
    pts = []
    if getattr(args, "x", None):
        pts.append(tuple(args.x))
    if getattr(args, "points", None):
        pts.extend(read_points(args.points))
    if not pts:
        raise InputError("give a tuple with --x or a file with --points")
    return pts


def _fmt_num(v):
    if isinstance(v, bool):
        return str(v).lower()
    if v is None:
        return "null"
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, float):
        return repr(v)
    return v


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, Region):
        return obj.value
    return obj


# ------------------------------------------------------------------ handlers

def cmd_eval(args) -> Output:
    form = _form(args)
    rows = [(list(x), form(x)) for x in _tuples(args)]
    return Output(
        {"values": [{"x": x, "value": v} for x, v in rows]},
        [f"{' '.join(map(str, x))} -> {v}" for x, v in rows],
        (["x", "value"], [[" ".join(map(str, x)), v] for x, v in rows]),
    )


def cmd_enumerate(args) -> Output:
    form = _form(args, 4)
    recs = en.enumerate_solutions(form, args.N, SearchRegion(args.B, args.region), _budget(args))
    lines = [f"{' '.join(map(str, r.x))}  {r.cls}" for r in recs]
    lines.append(f"count {len(recs)}")
    return Output(
        {"count": len(recs), "solutions": [{"x": list(r.x), "class": str(r.cls)} for r in recs]},
        lines,
        (["x1", "x2", "x3", "x4", "class"], [list(r.x) + [str(r.cls)] for r in recs]),
    )


def cmd_count(args) -> Output:
    form = _form(args, 4)
    cs = en.count_representations(form, args.N, SearchRegion(args.B, args.region), _budget(args))
    d = {"total": cs.total, "special": cs.special, "nonspecial": cs.nonspecial}
    return _kv(d)


def _kv(d: Dict) -> Output:
    return Output(d, [f"{k} {_fmt_num(v)}" for k, v in d.items()],
                  (["key", "value"], [[k, _fmt_num(v)] for k, v in d.items()]))


def cmd_classify(args) -> Output:
    form = _form(args, 4)
    out = []
    for x in _tuples(args):
        cls = sp.classify(form, args.N, x)
        out.append({"x": list(x), "class": str(cls), "lines": sp.standard_line_memberships(form, args.N, x)})
    return Output(
        {"classifications": out},
        [f"{' '.join(map(str, o['x']))}  {o['class']}  lines={','.join(o['lines']) or '-'}" for o in out],
        (["x", "class", "lines"], [[" ".join(map(str, o["x"])), o["class"], ";".join(o["lines"])] for o in out]),
    )


def cmd_thue(args) -> Output:
    res = sp.solve_thue(args.a, args.b, args.k, args.h, args.bound)
    lines = [f"solution {x} {y}" for x, y in res.solutions]
    lines += [f"count {len(res)}", f"certified_complete {str(res.complete).lower()}"]
    return Output(
        {"solutions": [list(s) for s in res.solutions], "count": len(res), "certified_complete": res.complete},
        lines,
        (["x", "y"], [list(s) for s in res.solutions]),
    )


def cmd_zeros(args) -> Output:
    form = _form(args, 3)
    c = sp.count_zero_form(form, args.B, primitive_only=args.primitive)
    return _kv({"primitive" if args.primitive else "nonzero": c})


def cmd_moebius(args) -> Output:
    form = _form(args, 3)
    total = sp.count_zero_form(form, args.B)
    prim = sp.primitive_height_profile(form, args.B)
    rhs = sum(prim[args.B // d] for d in range(1, args.B + 1))
    return _kv({"total": total, "moebius_sum": rhs, "primitive": prim[args.B],
                "identity_holds": sp.moebius_identity_check(form, args.B)})


def cmd_rk(args) -> Output:
    if args.sweep:
        rep = ex.rk_sweep(args.k, args.N)
        return _kv({"N_max": rep.N_max, "exponent": rep.exponent, "max_ratio": rep.max_ratio,
                    "argmax_N": rep.argmax_N, "max_count": rep.max_count})
    return _kv({"R": en.count_Rk(args.N, args.k, _budget(args))})


def cmd_rkl(args) -> Output:
    return _kv({"R": en.count_Rkl(args.N, args.k, args.l)})


def cmd_r0(args) -> Output:
    form = _form(args, 3)
    return _kv({"r0": en.count_r0(form, args.M, args.B, _budget(args))})


def cmd_dm_exponent(args) -> Output:
    e = dm.exponent_main(args.k)
    return _kv({"exponent": e, "nontrivial": e < 2, "at_most_linear": e <= 1,
                "ternary_exponent": dm.exponent_ternary(args.k), "Rk_exponent": dm.exponent_Rk(args.k)})


def cmd_dm_params(args) -> Output:
    if args.tau is not None:
        p = dm.select_parameters_bigN(args.k, float(args.tau), float(args.eps), args.N, args.B, args.m0)
    else:
        p = dm.select_parameters(args.k, float(args.eps), args.N, args.B, args.m0)
    d = p.to_dict()
    d["alpha_identity_residual"] = p.alpha_identity_residual()
    return _kv(d)


def cmd_dm_tetra(args) -> Output:
    t = dm.tetra_stats(args.nu, args.alpha)
    return _kv({
        "nu": t.nu, "alpha": t.alpha, "alpha_exact": t.alpha_exact,
        "count": t.count, "count_at_nu": t.count_at_nu, "fsum": t.fsum,
        "lower": t.lower, "upper": t.upper, "integral": t.integral, "f_lower": t.f_lower,
        "sandwich_ok": t.sandwich_ok, "integral_chain_ok": t.integral_chain_ok,
    })


def cmd_dm_order(args) -> Output:
    base = Fraction(1, args.m0 * args.M)
    X3 = base ** args.alpha if args.alpha.denominator == 1 else Fraction(float(base) ** float(args.alpha))
    s = dm.s_from_delta(args.delta)
    monos = dm.monomial_order(base, base, X3, s)
    rows = [[m.n1, m.n2, m.n3, repr(m.size)] for m in monos]
    return Output(
        {"s": s, "X": [str(base), str(base), str(X3)],
         "monomials": [{"n": list(m.exponents), "size": m.size} for m in monos]},
        [f"u1^{a} u2^{b} xi^{c}  {sz}" for a, b, c, sz in rows],
        (["n1", "n2", "n3", "size"], rows),
    )


def cmd_dm_nullspace(args) -> Output:
    pts = read_points(args.points)
    A = dm.auxiliary_form(pts, args.delta)
    coeffs = [{"exponent": list(e), "coefficient": c} for e, c in A.coefficients.items()]
    return Output(
        {"delta": A.delta, "coefficients": coeffs, "form": str(A)},
        [str(A)],
        (["e1", "e2", "e3", "e4", "coefficient"], [list(e) + [c] for e, c in A.coefficients.items()]),
    )


def cmd_dm_goodcubes(args) -> Output:
    form = _form(args, 4)
    scans = [dm.good_cube_scan(form, M, args.m0) for M in args.M]
    if args.figure:
        from diagforms.plotting import goodcube_figure
        goodcube_figure(scans, args.figure)
    rows = [[s.M, s.total_cells, s.flagged_count, repr(s.ratio),
             "" if s.min_max_gradient is None else repr(s.min_max_gradient)] for s in scans]
    return Output(
        {"scans": [{"M": s.M, "cells": s.total_cells, "flagged": s.flagged_count, "ratio": s.ratio,
                    "min_max_gradient": s.min_max_gradient, "threshold": s.threshold} for s in scans]},
        [f"M={r[0]} cells={r[1]} flagged={r[2]} flagged/M^2={r[3]} min_grad={r[4] or '-'}" for r in rows],
        (["M", "cells", "flagged", "ratio", "min_max_gradient"], rows),
    )


def cmd_dm_vdm(args) -> Output:
    pts = read_points(args.points, parse=Fraction)
    if not pts:
        raise InputError("no points given")
    n = len(pts[0])
    X = [max(abs(p[i]) for p in pts) for i in range(n)]
    chk = dm.vandermonde_bound_check(monomial_polys(n, len(pts)), pts, X)
    return _kv({"H": chk.H, "D": chk.D, "n": chk.n, "det": chk.det, "bound": chk.bound, "ok": chk.ok})


def _ladder(text: str) -> List[int]:
    if ":" in text:
        lo, hi = (int(t) for t in text.split(":"))
        return ex.dyadic_ladder(lo, hi)
    return int_list(text)


def cmd_scaling(args):
    target = args.N if args.op == "count" else args.M
    if target is None:
        raise InputError("--N is required for count, --M for r0")
    cfg = ex.ScalingConfig(
        operation=args.op, k=args.k, coeffs=args.coeffs or [], target=target,
        ladder=_ladder(args.B), region=args.region, fit_column=args.fit,
        budget=_budget(args), timing=args.timing,
    )
    rep = ex.scaling_study(cfg)
    if args.figure:
        from diagforms.plotting import scaling_figure
        scaling_figure(rep, args.figure)
    return rep


# ------------------------------------------------------------------ parser

def _add_budget(p):
    g = p.add_argument_group("budget")
    g.add_argument("--threads", type=int, default=1, help="worker threads for the join (default 1)")
    g.add_argument("--mem-gib", type=float, default=4.0, help="memory cap in GiB (default 4)")
    g.add_argument("--time-s", type=float, default=300.0, help="time cap in seconds (default 300)")


def _add_output(p, formats=("text", "json", "csv")):
    g = p.add_argument_group("output")
    g.add_argument("--format", choices=formats, default=formats[0], help="output format")
    g.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")
    g.add_argument("--verbose", action="store_true", help="log progress to stderr")


def _form_args(p, N=False, region=False):
    p.add_argument("--k", type=int, required=True, help="degree k >= 3")
    p.add_argument("--coeffs", type=int_list, help="comma-separated coefficients (use --coeffs=-1,2 for a leading minus)")
    if N:
        p.add_argument("--N", type=int, required=True, help="target value N")
    if region:
        p.add_argument("--B", type=int, required=True, help="box radius B")
        p.add_argument("--region", type=Region, choices=list(Region), default=Region.SIGNED,
                       help="signed [-B,B] or nonneg [0,B] (default signed)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="diagforms", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help_, budget=False):
        p = sub.add_parser(name, help=help_, description=help_)
        p.set_defaults(func=func)
        if budget:
            _add_budget(p)
        return p

    p = add("eval", cmd_eval, "evaluate a form at integer tuples")
    _form_args(p)
    p.add_argument("--x", type=int_list, help="one comma-separated tuple")
    p.add_argument("--points", metavar="FILE", help="tuples, one whitespace-separated per line")
    _add_output(p)

    p = add("enumerate", cmd_enumerate, "list every solution in the box, classified", budget=True)
    _form_args(p, N=True, region=True)
    _add_output(p)

    p = add("count", cmd_count, "count total, special and nonspecial solutions", budget=True)
    _form_args(p, N=True, region=True)
    _add_output(p)

    p = add("classify", cmd_classify, "classify solutions and list the standard lines through them")
    _form_args(p, N=True)
    p.add_argument("--x", type=int_list, help="one comma-separated tuple")
    p.add_argument("--points", metavar="FILE", help="tuples, one whitespace-separated per line")
    _add_output(p)

    p = add("thue", cmd_thue, "bounded search for solutions of a x^k + b y^k = h")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--bound", type=int, required=True, help="search |x|, |y| <= bound")
    _add_output(p)

    p = add("zeros", cmd_zeros, "count nonzero solutions of a ternary form = 0 in [-B,B]^3")
    _form_args(p)
    p.add_argument("--B", type=int, required=True)
    p.add_argument("--primitive", action="store_true", help="count only gcd-1 triples")
    _add_output(p)

    p = add("moebius-check", cmd_moebius, "check total(B) = sum_d primitive(B // d)")
    _form_args(p)
    p.add_argument("--B", type=int, required=True)
    _add_output(p)

    p = add("rk", cmd_rk, "R_k(N): ordered sums of four nonnegative k-th powers", budget=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--sweep", action="store_true", help="treat N as N_max and report max R_k(N)/N^e")
    _add_output(p)

    p = add("rkl", cmd_rkl, "R_{k,l}(N) by slicing on the l-th power")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    _add_output(p)

    p = add("r0", cmd_r0, "ternary solutions with no term equal to M", budget=True)
    _form_args(p)
    p.add_argument("--M", type=int, required=True)
    p.add_argument("--B", type=int, required=True)
    _add_output(p)

    p = add("scaling", cmd_scaling, "dyadic scaling study with fitted log-log slope", budget=True)
    p.add_argument("--op", choices=ex.OPERATIONS, default="count", help="counting operation (default count)")
    _form_args(p)
    p.add_argument("--N", type=int, help="target for --op count")
    p.add_argument("--M", type=int, help="target for --op r0")
    p.add_argument("--B", required=True, help="ladder: comma list, or LO:HI for LO, 2LO, ... <= HI")
    p.add_argument("--region", type=Region, choices=list(Region), default=Region.SIGNED)
    p.add_argument("--fit", choices=("total", "special", "nonspecial"), default="nonspecial",
                   help="column to fit (default nonspecial)")
    p.add_argument("--timing", action="store_true", help="record runtime_ms (makes output nondeterministic)")
    p.add_argument("--figure", metavar="PATH", help="also render a matplotlib figure (png/pdf/svg)")
    _add_output(p, formats=("text", "csv", "json", "svg"))

    dmp = sub.add_parser("detmethod", help="determinant-method calculators")
    dsub = dmp.add_subparsers(dest="action", required=True, metavar="action")

    def dadd(name, func, help_):
        q = dsub.add_parser(name, help=help_, description=help_)
        q.set_defaults(func=func)
        return q

    q = dadd("exponent", cmd_dm_exponent, "eps-free exponent of B for nonspecial solutions")
    q.add_argument("--k", type=int, required=True)
    _add_output(q)

    q = dadd("params", cmd_dm_params, "select lambda, alpha, M, delta, nu, beta")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--eps", type=float, required=True)
    q.add_argument("--N", type=int, default=1)
    q.add_argument("--B", type=float, required=True)
    q.add_argument("--m0", type=int, default=1, help="cube constant M0 (default 1)")
    q.add_argument("--tau", type=float, help="allow N <= B^(k - tau), 4/3 < tau < k")
    _add_output(q)

    q = dadd("tetra", cmd_dm_tetra, "lattice points of n1 + n2 + alpha n3 <= nu - 1")
    q.add_argument("--nu", type=rational, required=True)
    q.add_argument("--alpha", type=rational, required=True, help="rational, e.g. 3/2")
    _add_output(q)

    q = dadd("order", cmd_dm_order, "monomials in (u1, u2, xi) by size, X1 = X2 = 1/(M0 M), X3 = X1^alpha")
    q.add_argument("--M", type=int, required=True)
    q.add_argument("--m0", type=int, default=1)
    q.add_argument("--alpha", type=rational, required=True)
    q.add_argument("--delta", type=int, required=True, help="list s = C(delta+3, 3) monomials")
    _add_output(q)

    q = dadd("nullspace", cmd_dm_nullspace, "auxiliary form of degree delta vanishing on points")
    q.add_argument("--points", metavar="FILE", required=True, help="integer 4-tuples, one per line")
    q.add_argument("--delta", type=int, required=True)
    _add_output(q)

    q = dadd("goodcubes", cmd_dm_goodcubes, "flag subcubes of [-1,1]^3 near F(t, 1) = 0")
    _form_args(q)
    q.add_argument("--M", type=int_list, required=True, help="one M or a comma list")
    q.add_argument("--m0", type=int, default=1)
    q.add_argument("--figure", metavar="PATH", help="also render flagged/M^2 against M")
    _add_output(q)

    q = dadd("vdm-check", cmd_dm_vdm, "determinant of the first H monomials at H points vs the explicit bound")
    q.add_argument("--points", metavar="FILE", required=True, help="rational n-tuples with |x_i| <= 1")
    _add_output(q)
    return ap


def _config(args) -> dict:
    skip = {"func", "format", "out", "verbose"}
    return _jsonable({k: v for k, v in sorted(vars(args).items()) if k not in skip})


def _render(args, res) -> str:
    cfg = _config(args)
    head = "# config: " + json.dumps(cfg, sort_keys=True, separators=(",", ":")) + "\n"
    if isinstance(res, ex.ScalingReport):
        if args.format == "text":
            lines = [f"{r.B} {r.total} {r.special} {r.nonspecial}" for r in res.rows]
            lines += [f"fitted_slope {_fmt_num(res.fitted_slope)}",
                      f"theoretical_exponent {_fmt_num(res.theoretical_exponent)} ({res.theoretical_label})",
                      f"complete {str(res.complete).lower()}"]
            if res.note:
                lines.append(f"note {res.note}")
            return head + "\n".join(lines) + "\n"
        body = ex.render(res, args.format)
        if args.out:
            return body
        if args.format == "json":
            return json.dumps({"config": cfg, "result": res.to_dict()}, indent=2, sort_keys=True) + "\n"
        return (head if args.format == "csv" else "") + body
    if args.format == "json":
        return json.dumps({"config": cfg, "result": _jsonable(res.payload)}, indent=2, sort_keys=True) + "\n"
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header, rows = res.table
        w.writerow(header)
        w.writerows([[_fmt_num(v) for v in r] for r in rows])
        return head + buf.getvalue()
    return head + "\n".join(res.lines) + "\n"


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        res = args.func(args)
        text = _render(args, res)
        if args.out:
            Path(args.out).write_text(text, encoding="utf-8")
            print(f"# config: {json.dumps(_config(args), sort_keys=True, separators=(',', ':'))}")
            print(f"wrote {args.out}")
        else:
            sys.stdout.write(text)
    except RankError as exc:
        print(f"rank error: rank {exc.rank} = s = {exc.size}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (DiagformsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main() -> None:
    sys.exit(dispatch())

