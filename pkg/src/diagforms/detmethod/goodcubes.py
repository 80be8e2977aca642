"""Empirical good-cube scan on ``[-1, 1]^3``.

The cube is cut into ``(2*M0*M)^3`` subcubes of side ``h = 1/(M0*M)``. A
subcube is flagged when its center ``c`` satisfies

    |F(c, 1)| <= h + L * sqrt(3)/2 * h,

where ``L`` bounds the Euclidean gradient of ``F(., 1)`` on ``[-1, 1]^3``.
Every point of the subcube is within ``sqrt(3)/2 * h`` of ``c``, so this flags
every subcube that contains a point with ``|F(t, 1)| <= h``, plus possibly
some that do not.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from diagforms.errors import BudgetError, InputError
from diagforms.forms import DiagonalForm

MAX_CELLS = 1 << 28


@dataclass
class GoodCubeScan:
    M: int
    M0: int
    per_axis: int
    total_cells: int
    lipschitz: float
    threshold: float
    flagged_count: int
    min_max_gradient: Optional[float]   # min over flagged cubes of max_i |dF/dx_i| at the lower corner
    flagged: Optional[np.ndarray] = None  # (m, 3) lower-corner indices, when requested

    @property
    def ratio(self) -> float:
        """``flagged_count / M^2``, the quantity expected to stay bounded."""
        return self.flagged_count / self.M ** 2


def default_lipschitz(form: DiagonalForm) -> float:
    """``k * ||(a1, a2, a3)||_2``, since ``|d/dt_i a_i t_i^k| <= k |a_i|`` on ``[-1, 1]``."""
    return form.k * math.sqrt(sum(a * a for a in form.coeffs[:3]))


def good_cube_scan(form: DiagonalForm, M: int, M0: int = 1, L: Optional[float] = None,
                   keep_cubes: bool = False, max_cells: int = MAX_CELLS) -> GoodCubeScan:
    if form.n != 4:
        raise InputError("good-cube scan needs a quaternary form")
    if M < 1 or M0 < 1 or int(M) != M or int(M0) != M0:
        raise InputError("M and M0 must be positive integers")
    if L is None:
        L = default_lipschitz(form)
    elif L < default_lipschitz(form) * (1 - 1e-12):
        raise InputError(f"L={L} is below the gradient bound {default_lipschitz(form):.6g}")
    m = int(M0) * int(M)
    n = 2 * m
    if n ** 3 > max_cells:
        raise BudgetError(f"{n}^3 cubes exceed the scan budget of {max_cells} cells")
    k = form.k
    a1, a2, a3, a4 = (float(a) for a in form.coeffs)
    h = 1.0 / m
    threshold = h + L * math.sqrt(3) / 2 * h
    idx = np.arange(n)
    centers = -1.0 + (idx + 0.5) * h
    corners = -1.0 + idx * h
    p2 = a2 * centers ** k
    p3 = a3 * centers ** k
    # |dF/dx_i| at the lower corner, per coordinate
    g = np.abs(k * corners ** (k - 1))
    g1, g2, g3 = abs(a1) * g, abs(a2) * g, abs(a3) * g
    flagged = 0
    min_grad = math.inf
    keep = []
    plane = p2[:, None] + p3[None, :] + a4
    gplane = np.maximum(g2[:, None], g3[None, :])
    for i in range(n):
        mask = np.abs(a1 * centers[i] ** k + plane) <= threshold
        c = int(mask.sum())
        if not c:
            continue
        flagged += c
        min_grad = min(min_grad, float(np.maximum(g1[i], gplane[mask]).min()))
        if keep_cubes:
            j, l = np.nonzero(mask)
            keep.append(np.stack([np.full_like(j, i), j, l], axis=1))
    cubes = None
    if keep_cubes:
        cubes = np.concatenate(keep) if keep else np.empty((0, 3), dtype=np.int64)
    return GoodCubeScan(
        M=int(M), M0=int(M0), per_axis=n, total_cells=n ** 3, lipschitz=float(L),
        threshold=threshold, flagged_count=flagged,
        min_max_gradient=None if flagged == 0 else min_grad, flagged=cubes,
    )
