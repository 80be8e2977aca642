"""Shared brute-force oracles, kept independent of the library code paths."""

import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

ACCEPTANCE_LINES = []


def oracle_solutions(k, coeffs, N, B, nonneg=False):
    """All tuples in the box with sum a_i x_i^k == N, by evaluating every tuple."""
    lo = 0 if nonneg else -B
    v = np.arange(lo, B + 1, dtype=np.int64)
    p = v ** k
    a1, a2, a3, a4 = coeffs
    rest = (a2 * p)[:, None, None] + (a3 * p)[None, :, None] + (a4 * p)[None, None, :]
    out = set()
    for i, x1 in enumerate(v):
        hit = np.argwhere(rest == N - a1 * p[i])
        out.update((int(x1), int(v[a]), int(v[b]), int(v[c])) for a, b, c in hit)
    return out


def loop_solutions(k, coeffs, N, B, nonneg=False):
    """Pure-Python four-loop oracle for tiny boxes."""
    lo = 0 if nonneg else -B
    r = range(lo, B + 1)
    return {x for x in itertools.product(r, repeat=len(coeffs))
            if sum(a * t ** k for a, t in zip(coeffs, x)) == N}


def oracle_special(k, coeffs, N, x):
    t = [a * v ** k for a, v in zip(coeffs, x)]
    return N in t or any(t[i] + t[j] == N for i, j in itertools.combinations(range(len(t)), 2))


def oracle_Rk(N, k):
    top = int(round(N ** (1 / k))) + 1
    return sum(1 for x in itertools.product(range(top + 1), repeat=4) if sum(t ** k for t in x) == N)


def oracle_Rkl(N, k, l):
    top = int(round(N ** (1 / min(k, l)))) + 1
    return sum(1 for x in itertools.product(range(top + 1), repeat=4)
               if x[0] ** k + x[1] ** k + x[2] ** k + x[3] ** l == N)


def oracle_thue(a, b, k, h, bound):
    out = []
    for x in range(-bound, bound + 1):
        for y in oracle_root(h - a * x ** k, b, k) or ():
            if abs(y) <= bound:
                out.append((x, y))
    return sorted(out)


def oracle_root(rem, b, k):
    """All integers y with b*y^k == rem, by float seed and exact check."""
    if rem % b:
        return None
    q = rem // b
    if q == 0:
        return [0]
    if q < 0 and k % 2 == 0:
        return None
    r = round(abs(q) ** (1 / k))
    for c in (r - 1, r, r + 1):
        if c > 0 and c ** k == abs(q):
            if k % 2 == 0:
                return [-c, c]
            return [c if q > 0 else -c]
    return None


def oracle_tetra(T, alpha):
    """Lattice points and weighted sum of n1 + n2 + alpha n3 <= T by triple loop."""
    T, alpha = Fraction(T), Fraction(alpha)
    count, total = 0, Fraction(0)
    if T < 0:
        return 0, total
    n3 = 0
    while alpha * n3 <= T:
        for n1 in range(math.floor(T) + 1):
            for n2 in range(math.floor(T) + 1):
                f = n1 + n2 + alpha * n3
                if f <= T:
                    count += 1
                    total += f
        n3 += 1
    return count, total


def oracle_rank(rows):
    m = [[Fraction(v) for v in r] for r in rows]
    rk, ncols = 0, len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rk, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for i in range(len(m)):
            if i != rk and m[i][c]:
                f = m[i][c] / m[rk][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[rk])]
        rk += 1
    return rk


@pytest.fixture
def acceptance():
    def record(n, ok, detail=""):
        ACCEPTANCE_LINES.append(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
