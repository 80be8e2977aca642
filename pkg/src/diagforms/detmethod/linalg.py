"""Fraction-free (Bareiss) elimination over the integers.

Every intermediate entry is a minor of the input, so the divisions by the
previous pivot are exact and no rationals appear.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def _copy(m: Sequence[Sequence[int]]) -> Matrix:
    return [[int(v) for v in row] for row in m]


def bareiss_rref(m: Sequence[Sequence[int]]) -> Tuple[Matrix, List[int]]:
    """Fraction-free Gauss-Jordan form and the list of pivot columns.

    The returned rows are integer multiples of the reduced row echelon form.
    Each pivot row has its pivot entry nonzero and every other pivot column
    entry zero.
    """
    a = _copy(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    prev = 1
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(rows):
            if i == r:
                continue
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(cols):
                v = p * row_i[j] - f * row_r[j]
                q, rem = divmod(v, prev)
                assert rem == 0, "Bareiss division must be exact"
                row_i[j] = q
        prev = p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Sequence[Sequence[int]]) -> int:
    if not m:
        return 0
    return len(bareiss_rref(m)[1])


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    a = _copy(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            swap = next((i for i in range(c + 1, n) if a[i][c] != 0), None)
            if swap is None:
                return 0
            a[c], a[swap] = a[swap], a[c]
            sign = -sign
        p = a[c][c]
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                a[i][j] = (p * a[i][j] - a[i][c] * a[c][j]) // prev
            a[i][c] = 0
        prev = p
    return sign * a[n - 1][n - 1]


def det_rational(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix: clear row denominators, then Bareiss."""
    scaled = []
    scale = Fraction(1)
    for row in m:
        fr = [Fraction(v) for v in row]
        d = reduce(math.lcm, (v.denominator for v in fr), 1)
        scaled.append([int(v * d) for v in fr])
        scale *= d
    return Fraction(det_int(scaled)) / scale


def integer_kernel_vector(m: Sequence[Sequence[int]]) -> Optional[List[int]]:
    """A nonzero integer vector ``v`` with ``m @ v == 0``, or ``None``.

    ``v`` is built from the first free column of the fraction-free reduced
    form and divided by its content, so its entries are coprime.
    """
    cols = len(m[0])
    red, pivots = bareiss_rref(m)
    free = next((c for c in range(cols) if c not in set(pivots)), None)
    if free is None:
        return None
    piv_vals = [red[r][c] for r, c in enumerate(pivots)]
    L = reduce(math.lcm, (abs(p) for p in piv_vals), 1)
    v = [0] * cols
    v[free] = L
    for r, c in enumerate(pivots):
        v[c] = -red[r][free] * L // piv_vals[r]
    g = reduce(math.gcd, v, 0)
    return [t // g for t in v]
