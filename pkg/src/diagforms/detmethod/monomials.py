"""Monomials ordered by size ``X_1^n_1 ... X_r^n_r``.

Sizes are compared exactly. Float inputs are converted with ``Fraction(x)``,
which is exact, so ``X**2 * X`` and ``X * X**2`` can never compare unequal.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple

from diagforms.errors import InputError

Exponent = Tuple[int, ...]


def graded_lex_key(e: Exponent):
    """Sort key: lower total degree first, then lex with the first variable largest."""
    return (sum(e), tuple(-t for t in e))


def monomial_size(X: Sequence[Fraction], e: Exponent) -> Fraction:
    out = Fraction(1)
    for x, t in zip(X, e):
        out *= x ** t
    return out


def _exact(X) -> List[Fraction]:
    out = [Fraction(x) for x in X]
    if any(not 0 <= x <= 1 for x in out):
        raise InputError(f"monomial sizes need 0 <= X_i <= 1, got {[float(x) for x in out]}")
    return out


def iter_by_size(X: Sequence) -> Iterator[Tuple[Exponent, Fraction]]:
    """All monomials in ``len(X)`` variables by nonincreasing size.

    Ties are broken by :func:`graded_lex_key`. Raising any exponent never
    increases the size or decreases the key, so best-first search from the
    constant monomial yields the global order.
    """
    X = _exact(X)
    r = len(X)
    start = (0,) * r
    heap = [(-Fraction(1), graded_lex_key(start), start)]
    seen = {start}
    while heap:
        neg, _, e = heapq.heappop(heap)
        yield e, -neg
        for i in range(r):
            nxt = e[:i] + (e[i] + 1,) + e[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                heapq.heappush(heap, (-monomial_size(X, nxt), graded_lex_key(nxt), nxt))


def largest_monomials(X: Sequence, count: int) -> List[Tuple[Exponent, Fraction]]:
    """The ``count`` largest monomials as ``(exponent, exact size)`` pairs."""
    out = []
    if count <= 0:
        return out
    for item in iter_by_size(X):
        out.append(item)
        if len(out) == count:
            break
    return out


@dataclass(frozen=True)
class MonomialExp:
    """A monomial ``u1^n1 u2^n2 xi^n3`` together with its size."""

    n1: int
    n2: int
    n3: int
    size: float
    exact_size: Fraction

    @property
    def exponents(self) -> Tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)


def monomial_order(X1, X2, X3, s: int) -> List[MonomialExp]:
    """First ``s`` monomials in ``(u1, u2, xi)`` by nonincreasing size."""
    if s < 1:
        raise InputError("s must be >= 1")
    if any(x <= 0 for x in (X1, X2, X3)):
        raise InputError("X_i must be positive")
    return [MonomialExp(*e, float(sz), sz) for e, sz in largest_monomials((X1, X2, X3), s)]


def monomials_of_degree(nvars: int, degree: int) -> List[Exponent]:
    """Exponent vectors of total degree ``degree``, in graded-lex order (``x1^d`` first)."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for t in range(left, -1, -1):
            rec(prefix + (t,), left - t, slots - 1)

    rec((), degree, nvars)
    return out


def monomials_up_to_degree(nvars: int, degree: int) -> List[Exponent]:
    return [e for d in range(degree + 1) for e in monomials_of_degree(nvars, d)]
