"""Explicit form of the monomial-size determinant bound.

Write each ``f_i`` as ``sum_m c_{i,m} m`` over the ``L = C(n+D, n)`` monomials
of degree at most ``D``. By Cauchy-Binet,

    det(f_i(x_j)) = sum over H-subsets S of det(c[:, S]) * det(m(x_j))_{m in S}.

Each coefficient minor is at most ``H! * max|c|^H``. Each monomial minor is at
most ``H! * prod_{m in S} ||m||``, and that product never exceeds the product
of the ``H`` largest sizes over all monomials. Summing gives

    |det| <= C(L, H) * H! * max|c|^H * H! * prod_{i<=H} ||m_i||.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import List, Mapping, Sequence

from diagforms.detmethod.linalg import det_rational
from diagforms.detmethod.monomials import Exponent, largest_monomials, monomials_up_to_degree
from diagforms.errors import InputError

Poly = Mapping[Exponent, Fraction]


def eval_poly(f: Poly, x: Sequence[Fraction]) -> Fraction:
    out = Fraction(0)
    for e, c in f.items():
        term = Fraction(c)
        for xi, t in zip(x, e):
            term *= xi ** t
        out += term
    return out


@dataclass(frozen=True)
class VandermondeCheck:
    det: Fraction
    bound: Fraction
    ok: bool
    H: int
    D: int
    n: int


def vandermonde_bound_check(polys: Sequence[Poly], points: Sequence[Sequence], X: Sequence) -> VandermondeCheck:
    H = len(polys)
    if H == 0 or len(points) != H:
        raise InputError(f"need H polynomials and H points, got {H} and {len(points)}")
    n = len(X)
    Xf = [Fraction(x) for x in X]
    if any(not 0 <= x <= 1 for x in Xf):
        raise InputError("bounds X_i must lie in [0, 1]")
    pts = []
    for p in points:
        if len(p) != n:
            raise InputError(f"point {p} does not have {n} coordinates")
        q = [Fraction(v) for v in p]
        if any(abs(v) > x for v, x in zip(q, Xf)):
            raise InputError(f"point {p} violates |x_i| <= X_i")
        pts.append(q)
    D = 0
    height = Fraction(0)
    for f in polys:
        for e, c in f.items():
            if len(e) != n:
                raise InputError(f"exponent {e} does not have {n} entries")
            if c:
                D = max(D, sum(e))
                height = max(height, abs(Fraction(c)))
    det = det_rational([[eval_poly(f, x) for x in pts] for f in polys])
    L = comb(n + D, n)
    sizes = Fraction(1)
    for _, sz in largest_monomials(Xf, H):
        sizes *= sz
    bound = comb(L, H) * factorial(H) ** 2 * height ** H * sizes
    return VandermondeCheck(det, bound, abs(det) <= bound, H, D, n)


def monomial_polys(n: int, H: int) -> List[Poly]:
    """The first ``H`` monomials in graded-lex order, as polynomials."""
    d = 0
    monos = []
    while len(monos) < H:
        monos = monomials_up_to_degree(n, d)
        d += 1
    return [{e: Fraction(1)} for e in monos[:H]]
