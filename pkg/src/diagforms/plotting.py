"""Matplotlib figures written next to the delimited reports."""

from __future__ import annotations

import math

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

RC = {
    "font.size": 10,
    "axes.labelsize": 10,
    "legend.fontsize": 8,
    "xtick.labelsize": 8,
    "ytick.labelsize": 8,
    "axes.spines.top": False,
    "axes.spines.right": False,
    "svg.hashsalt": "diagforms",
    "figure.figsize": (5.0, 3.4),
}


def _save(fig, path):
    # fixed metadata keeps reruns byte-stable where the backend allows it
    meta = {"Software": None} if str(path).endswith(".png") else None
    fig.savefig(path, bbox_inches="tight", metadata=meta)
    plt.close(fig)


def scaling_figure(rep, path):
    """Log-log plot of every count column with the fitted and theoretical slopes."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        for col, marker in (("total", "o"), ("special", "s"), ("nonspecial", "^")):
            pts = [(r.B, getattr(r, col)) for r in rep.rows if getattr(r, col) > 0]
            if pts:
                ax.plot(*zip(*pts), marker=marker, ls="none", label=col, ms=4)
        pts = rep.points()
        if pts:
            b0, b1 = pts[0][0], pts[-1][0]
            if rep.fitted_slope is not None:
                f = lambda b: 2 ** (rep.fitted_intercept + rep.fitted_slope * math.log2(b))  # noqa: E731
                ax.plot([b0, b1], [f(b0), f(b1)], color="steelblue",
                        label=f"fit ({rep.fit_column}): {rep.fitted_slope:.3f}")
            if rep.theoretical_exponent is not None:
                c0 = pts[0][1]
                e = rep.theoretical_exponent
                ax.plot([b0, b1], [c0, c0 * (b1 / b0) ** e], color="firebrick", ls="--",
                        label=f"theory: {e:.3f}")
        ax.set_xscale("log", base=2)
        ax.set_yscale("log", base=2)
        ax.set_xlabel("B")
        ax.set_ylabel("count")
        ax.legend(frameon=False)
        _save(fig, path)


def goodcube_figure(scans, path):
    """Flagged cubes divided by ``M^2`` along a ladder of ``M``."""
    with plt.rc_context(RC):
        fig, ax = plt.subplots()
        Ms = [s.M for s in scans]
        ax.plot(Ms, [s.ratio for s in scans], marker="o")
        ax.set_xscale("log", base=2)
        ax.set_xlabel("M")
        ax.set_ylabel("flagged / M$^2$")
        ax.set_ylim(bottom=0)
        _save(fig, path)
