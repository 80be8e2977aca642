"""Lattice points in the tetrahedron ``n1 + n2 + alpha*n3 <= T``.

For fixed ``n3`` the remaining points form a triangle ``n1 + n2 <= t`` with
``t = floor(T - alpha*n3)``. That triangle holds ``(t+1)(t+2)/2`` points, and
their ``n1 + n2`` values sum to ``t(t+1)(t+2)/3``. With ``alpha = p/q`` rational
the floor is plain integer arithmetic, so counts and sums are exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Tuple, Union

from diagforms.errors import InputError

Real = Union[int, float, Fraction]


def _as_fraction(x: Real) -> Fraction:
    if isinstance(x, float) and x != x:
        raise InputError("NaN parameter")
    return Fraction(x)


def tetra_count_sum(T: Real, alpha: Real) -> Tuple[int, Fraction]:
    """Point count and the sum of ``n1 + n2 + alpha*n3`` over the tetrahedron."""
    a = _as_fraction(alpha)
    if a <= 0:
        raise InputError("alpha must be positive")
    T = _as_fraction(T)
    if T < 0:
        return 0, Fraction(0)
    p, q = a.numerator, a.denominator
    tn, td = T.numerator, T.denominator
    count = 0
    tri_sum = 0      # sum over n3 of t(t+1)(t+2)/3
    weighted = 0     # sum over n3 of n3 * (t+1)(t+2)/2
    n3 = 0
    while True:
        # t = floor(T - alpha*n3) = floor((tn*q - p*n3*td) / (td*q))
        num = tn * q - p * n3 * td
        if num < 0:
            break
        t = num // (td * q)
        tri = (t + 1) * (t + 2) // 2
        count += tri
        tri_sum += t * (t + 1) * (t + 2) // 3
        weighted += n3 * tri
        n3 += 1
    return count, tri_sum + a * weighted


def tetra_count(T: Real, alpha: Real) -> int:
    return tetra_count_sum(T, alpha)[0]


@dataclass(frozen=True)
class TetraStats:
    """Exact data for the tetrahedra at thresholds ``nu - 1`` (T1) and ``nu``.

    ``lower``/``upper`` are the volumes of the inner and outer tetrahedra
    bracketing ``count``. ``integral`` is the integral of ``n1 + n2 + alpha*n3``
    over T1, and ``f_lower`` is the resulting lower bound on the weighted sum.
    """

    nu: Fraction
    alpha: Fraction
    alpha_exact: bool
    count: int
    count_at_nu: int
    fsum: Fraction
    lower: Fraction
    upper: Fraction
    upper_at_nu: Fraction
    integral: Fraction
    f_lower: Fraction

    @property
    def sandwich_ok(self) -> bool:
        return self.lower < self.count < self.upper

    @property
    def integral_chain_ok(self) -> bool:
        return self.integral < self.fsum + (2 + self.alpha) * self.count


def tetra_stats(nu: Real, alpha: Real) -> TetraStats:
    if nu < 1:
        raise InputError("nu must be >= 1")
    if alpha <= 0:
        raise InputError("alpha must be positive")
    alpha_exact = not isinstance(alpha, float) or float(alpha).is_integer()
    a = _as_fraction(alpha)
    v = _as_fraction(nu)
    count, fsum = tetra_count_sum(v - 1, a)
    count_at_nu = tetra_count(v, a)
    upper = (v + 1 + a) ** 3 / (6 * a)
    integral = (v - 1) ** 4 / (8 * a)
    return TetraStats(
        nu=v,
        alpha=a,
        alpha_exact=alpha_exact,
        count=count,
        count_at_nu=count_at_nu,
        fsum=fsum,
        lower=(v - 1) ** 3 / (6 * a),
        upper=upper,
        upper_at_nu=(v + 2 + a) ** 3 / (6 * a),
        integral=integral,
        f_lower=integral - (2 + a) * upper,
    )


def s_from_delta(delta: int) -> int:
    """Number of degree-``delta`` monomials in four variables."""
    if delta < 1:
        raise InputError("delta must be >= 1")
    return comb(delta + 3, 3)


def nu_from_s(s: int, alpha: Real, start: int = 0) -> int:
    """Smallest integer ``nu >= start`` with ``tetra_count(nu) >= s``.

    For ``start = 0`` this also gives ``tetra_count(nu - 1) < s``. A larger
    ``start`` is only a search hint for callers whose ``s`` is increasing.
    """
    if s < 1:
        raise InputError("s must be >= 1")
    a = _as_fraction(alpha)
    lo = max(0, start)
    if tetra_count(lo, a) >= s:
        return lo
    step = 1
    hi = lo + step
    while tetra_count(hi, a) < s:
        lo = hi
        step *= 2
        hi = lo + step
    # invariant: count(lo) < s <= count(hi)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tetra_count(mid, a) >= s:
            hi = mid
        else:
            lo = mid
    return hi


def nu_estimate(delta: int, alpha: Real) -> float:
    """Leading-order threshold ``delta * alpha^(1/3)`` for comparison plots."""
    return delta * float(alpha) ** (1 / 3)
