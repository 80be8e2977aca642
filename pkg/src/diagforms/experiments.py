"""Scaling studies over dyadic ladders of box sizes, and their report files.

A study runs one counting operation for ``B = B0, 2 B0, 4 B0, ...``. It fits
the slope of ``log2 count`` against ``log2 B`` and stores it next to the
exponent the theory predicts. The bounds are upper bounds, so the two numbers
are for comparison, not for agreement.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence
from xml.sax.saxutils import escape

import numpy as np

from diagforms.detmethod.params import exponent_main, exponent_Rk, exponent_Rkl, exponent_ternary
from diagforms.enumeration import DEFAULT_BUDGET, Budget, count_representations, count_ternary
from diagforms.errors import BudgetError, InputError
from diagforms.forms import DiagonalForm, Region, SearchRegion

log = logging.getLogger(__name__)

CSV_COLUMNS = ("B", "total", "special", "nonspecial", "runtime_ms")
OPERATIONS = ("count", "r0")


def dyadic_ladder(B_min: int, B_max: int) -> List[int]:
    if B_min < 1 or B_max < B_min:
        return []
    out = []
    B = B_min
    while B <= B_max:
        out.append(B)
        B *= 2
    return out


@dataclass
class ScalingRow:
    B: int
    total: int
    special: int
    nonspecial: int
    runtime_ms: Optional[float] = None


@dataclass
class ScalingReport:
    descriptor: Dict[str, object]
    rows: List[ScalingRow] = field(default_factory=list)
    fit_column: str = "nonspecial"
    fitted_slope: Optional[float] = None
    fitted_intercept: Optional[float] = None
    theoretical_exponent: Optional[float] = None
    theoretical_label: str = ""
    complete: bool = True
    note: str = ""

    def points(self):
        """``(B, count)`` pairs of the fitted column with positive counts."""
        return [(r.B, getattr(r, self.fit_column)) for r in self.rows if getattr(r, self.fit_column) > 0]

    def refit(self):
        self.rows.sort(key=lambda r: r.B)
        pts = self.points()
        if len(pts) >= 3:
            self.fitted_slope, self.fitted_intercept = fit_loglog([b for b, _ in pts], [c for _, c in pts])
        else:
            self.fitted_slope = self.fitted_intercept = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "ScalingReport":
        d = dict(d)
        d["rows"] = [ScalingRow(**r) for r in d["rows"]]
        return cls(**d)


def fit_loglog(Bs: Sequence[float], counts: Sequence[float]):
    """Least-squares ``(slope, intercept)`` of ``log2 count`` on ``log2 B``."""
    x = np.log2(np.asarray(Bs, dtype=float))
    y = np.log2(np.asarray(counts, dtype=float))
    slope, intercept = np.polyfit(x, y, 1)
    return float(slope), float(intercept)


@dataclass
class ScalingConfig:
    operation: str
    k: int
    coeffs: Sequence[int]
    target: int                  # N for "count", M for "r0"
    ladder: Sequence[int]
    region: Region = Region.SIGNED
    fit_column: str = "nonspecial"
    budget: Budget = DEFAULT_BUDGET
    timing: bool = True


def _theory(cfg: ScalingConfig):
    if cfg.operation == "count":
        e = exponent_main(cfg.k)
        if e < 2:
            return e, "nonspecial bound (eps-free)"
        return 2.0, "trivial bound B^(2+eps)"
    return exponent_ternary(cfg.k), "2/sqrt(k) (ternary, eps-free)"


def scaling_study(cfg: ScalingConfig) -> ScalingReport:
    if cfg.operation not in OPERATIONS:
        raise InputError(f"unknown operation {cfg.operation!r}; expected one of {OPERATIONS}")
    if not cfg.ladder:
        raise InputError("empty B ladder")
    if cfg.fit_column not in ("total", "special", "nonspecial"):
        raise InputError(f"cannot fit column {cfg.fit_column!r}")
    form = DiagonalForm(cfg.k, tuple(cfg.coeffs))
    expo, label = _theory(cfg)
    rep = ScalingReport(
        descriptor={
            "operation": cfg.operation,
            "k": form.k,
            "coeffs": list(form.coeffs),
            "target": cfg.target,
            "region": Region(cfg.region).value,
        },
        fit_column=cfg.fit_column,
        theoretical_exponent=expo,
        theoretical_label=label,
    )
    deadline = time.monotonic() + cfg.budget.time_s
    for B in sorted(cfg.ladder):
        remaining = deadline - time.monotonic()
        t0 = time.perf_counter()
        try:
            if remaining <= 0:
                raise BudgetError("time budget exhausted")
            budget = Budget(cfg.budget.mem_bytes, remaining, cfg.budget.threads)
            if cfg.operation == "count":
                cs = count_representations(form, cfg.target, SearchRegion(B, cfg.region), budget)
                row = ScalingRow(B, cs.total, cs.special, cs.nonspecial)
            else:
                total, avoiding = count_ternary(form, cfg.target, B, budget)
                row = ScalingRow(B, total, total - avoiding, avoiding)
        except BudgetError as exc:
            rep.complete = False
            rep.note = f"stopped at B={B}: {exc}"
            log.info("budget exhausted at B=%d: %s", B, exc)
            break
        if cfg.timing:
            row.runtime_ms = (time.perf_counter() - t0) * 1000
        rep.rows.append(row)
        log.info("B=%d total=%d special=%d nonspecial=%d", B, row.total, row.special, row.nonspecial)
    rep.refit()
    return rep


def representation_histogram(k: int, N_max: int, l: Optional[int] = None) -> np.ndarray:
    """``r[N]`` for all ``N <= N_max``: nonnegative solutions of ``x1^k+x2^k+x3^k+x4^l = N``.

    Built by three sparse shifts-and-adds of the k-th power indicator, then
    one with the l-th powers (``l = k`` by default).
    """
    if N_max < 0:
        raise InputError("N_max must be >= 0")
    l = k if l is None else l

    def powers(e):
        out = []
        x = 0
        while x ** e <= N_max:
            out.append(x ** e)
            x += 1
        return out

    acc = np.zeros(N_max + 1, dtype=np.int64)
    acc[0] = 1
    for p_list in (powers(k), powers(k), powers(k), powers(l)):
        nxt = np.zeros_like(acc)
        for p in p_list:
            nxt[p:] += acc[: N_max + 1 - p]
        acc = nxt
    return acc


@dataclass
class SweepReport:
    k: int
    l: int
    N_max: int
    exponent: float
    max_ratio: float
    argmax_N: int
    max_count: int


def rk_sweep(k: int, N_max: int, l: Optional[int] = None) -> SweepReport:
    """Largest ``R(N) / N^e`` over ``1 <= N <= N_max`` with ``e`` the eps-free bound exponent."""
    if N_max < 1:
        raise InputError("N_max must be >= 1")
    l_ = k if l is None else l
    e = exponent_Rk(k) if l_ == k else exponent_Rkl(k, l_)
    r = representation_histogram(k, N_max, l_)[1:]
    Ns = np.arange(1, N_max + 1, dtype=float)
    ratio = r / Ns ** e
    i = int(np.argmax(ratio))
    return SweepReport(k, l_, N_max, e, float(ratio[i]), i + 1, int(r.max()))


# ---------------------------------------------------------------- emitters

def _num(v) -> str:
    if v is None:
        return ""
    return repr(float(v)) if isinstance(v, float) else str(v)


def to_csv(rep: ScalingReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in rep.rows:
        w.writerow([_num(getattr(r, c)) for c in CSV_COLUMNS])
    return buf.getvalue()


def to_json(rep: ScalingReport) -> str:
    return json.dumps(rep.to_dict(), indent=2, sort_keys=True) + "\n"


def from_json(text: str) -> ScalingReport:
    return ScalingReport.from_dict(json.loads(text))


_W, _H, _PAD = 640, 420, 60


def to_svg(rep: ScalingReport) -> str:
    """Log-log scatter of the fitted column with the fitted and theoretical lines."""
    pts = rep.points()
    xs = [math.log2(b) for b, _ in pts] or [0.0, 1.0]
    ys = [math.log2(c) for _, c in pts] or [0.0, 1.0]
    x0, x1 = min(xs), max(xs)
    lines = {}
    if rep.fitted_slope is not None:
        lines["fitted"] = [(x, rep.fitted_slope * x + rep.fitted_intercept) for x in (x0, x1)]
    if rep.theoretical_exponent is not None and pts:
        ax, ay = xs[0], ys[0]
        lines["theory"] = [(x, ay + rep.theoretical_exponent * (x - ax)) for x in (x0, x1)]
    all_y = ys + [y for seg in lines.values() for _, y in seg]
    y0, y1 = min(all_y), max(all_y)
    if x1 == x0:
        x1 = x0 + 1
    if y1 == y0:
        y1 = y0 + 1

    def sx(x):
        return _PAD + (x - x0) / (x1 - x0) * (_W - 2 * _PAD)

    def sy(y):
        return _H - _PAD - (y - y0) / (y1 - y0) * (_H - 2 * _PAD)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" viewBox="0 0 {_W} {_H}">',
        f'<title>{escape(json.dumps(rep.descriptor, sort_keys=True))}</title>',
        f'<line x1="{_PAD}" y1="{_H - _PAD}" x2="{_W - _PAD}" y2="{_H - _PAD}" stroke="black"/>',
        f'<line x1="{_PAD}" y1="{_PAD}" x2="{_PAD}" y2="{_H - _PAD}" stroke="black"/>',
        f'<text x="{_W / 2}" y="{_H - 15}" text-anchor="middle">log2 B</text>',
        f'<text x="15" y="{_H / 2}" transform="rotate(-90 15 {_H / 2})" text-anchor="middle">'
        f'log2 {escape(rep.fit_column)}</text>',
    ]
    for (b, c), x, y in zip(pts, xs, ys):
        out.append(f'<circle cx="{sx(x):.3f}" cy="{sy(y):.3f}" r="4" fill="black" data-B="{b}" data-count="{c}"/>')
    styles = {"fitted": ("steelblue", ""), "theory": ("firebrick", ' stroke-dasharray="6,4"')}
    for name, seg in lines.items():
        colour, dash = styles[name]
        coords = " ".join(f"{sx(x):.3f},{sy(y):.3f}" for x, y in seg)
        slope = rep.fitted_slope if name == "fitted" else rep.theoretical_exponent
        out.append(
            f'<polyline class="{name}" points="{coords}" fill="none" stroke="{colour}"{dash} '
            f'data-slope="{_num(float(slope))}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


_RENDER = {"csv": to_csv, "json": to_json, "svg": to_svg}


def render(rep: ScalingReport, fmt: str) -> str:
    try:
        return _RENDER[fmt](rep)
    except KeyError:
        raise InputError(f"unknown format {fmt!r}; expected csv, json or svg") from None


def emit(rep: ScalingReport, fmt: str, path) -> None:
    """Write the report in ``fmt`` to ``path``. Raises ``OSError`` if unwritable."""
    text = render(rep, fmt)
    Path(path).write_text(text, encoding="utf-8")
