"""Box enumeration and representation counts.

The workhorse is a meet-in-the-middle join. The last two coordinates form a
sorted half table of ``a_{n-1} x^k + a_n y^k`` values. The remaining
coordinates stream past it in blocks, and each block looks up its targets by
binary search. This costs Theta(B^2 log B) time and Theta(B^2) memory instead
of Theta(B^4).

When every partial sum fits in int64 the join runs on numpy arrays. Otherwise
it falls back to a dict keyed by Python integers.
"""

from __future__ import annotations

import itertools
import logging
import time
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, List, Tuple

import numpy as np

from diagforms.errors import BudgetError, InputError
from diagforms.forms import (
    DiagonalForm,
    Region,
    SearchRegion,
    SolutionRecord,
    iroot_floor,
)
from diagforms.special import classify

log = logging.getLogger(__name__)

_INT64_SAFE = 1 << 62
# bytes per half-table entry: value + permutation + sorted copy (numpy), or dict/list/tuple overhead
_BYTES_NUMPY = 32
_BYTES_PYTHON = 160
# target number of (left tuple) lookups per block
_BLOCK_TARGETS = 1 << 18


@dataclass(frozen=True)
class Budget:
    """Resource caps for a counting run. ``threads`` caps join workers."""

    mem_bytes: int = 4 << 30
    time_s: float = 300.0
    threads: int = 1

    @classmethod
    def from_gib(cls, mem_gib: float = 4.0, time_s: float = 300.0, threads: int = 1) -> "Budget":
        return cls(int(mem_gib * (1 << 30)), time_s, max(1, threads))

    def max_signed_B(self) -> int:
        """Largest signed box radius whose half table fits (numpy path)."""
        side = int((self.mem_bytes / _BYTES_NUMPY) ** 0.5)
        return max(0, (side - 1) // 2)


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class CountSummary:
    total: int
    special: int
    nonspecial: int
    form: DiagonalForm
    N: int
    region: SearchRegion

    def __post_init__(self):
        assert self.total == self.special + self.nonspecial


def _fits_int64(coeffs, k, N, B) -> bool:
    return abs(N) + sum(abs(a) for a in coeffs) * B ** k < _INT64_SAFE


class _Join:
    """Solutions of ``sum a_i x_i^k = N`` with every ``x_i`` in ``values``."""

    def __init__(self, form: DiagonalForm, N: int, region: SearchRegion, budget: Budget):
        if form.n not in (3, 4):
            raise InputError("the join handles 3 or 4 variables")
        self.form, self.N, self.region, self.budget = form, N, region, budget
        self.values = region.values()
        L = len(self.values)
        self.fast = _fits_int64(form.coeffs, form.k, N, region.B)
        per = _BYTES_NUMPY if self.fast else _BYTES_PYTHON
        need = L * L * per
        if need > budget.mem_bytes:
            raise BudgetError(
                f"half table for B={region.B} needs ~{need / 2**30:.2f} GiB, "
                f"budget is {budget.mem_bytes / 2**30:.2f} GiB"
            )
        self.deadline = time.monotonic() + budget.time_s
        log.debug("half table: %d entries, %s path", L * L, "numpy" if self.fast else "python")
        self._build()

    def _build(self):
        k, coeffs = self.form.k, self.form.coeffs
        L = len(self.values)
        if self.fast:
            v = np.arange(self.values.start, self.values.stop, dtype=np.int64)
            p = v ** k
            self.coord = v
            self.terms = [a * p for a in coeffs]
            tr1, tr2 = self.terms[-2], self.terms[-1]
            h = (tr1[:, None] + tr2[None, :]).ravel()
            self.order = np.argsort(h, kind="stable")
            self.sorted = h[self.order]
        else:
            self.half = defaultdict(list)
            a1, a2 = coeffs[-2:]
            for y in self.values:
                ty = a1 * y ** k
                for z in self.values:
                    self.half[ty + a2 * z ** k].append((y, z))
        self.L = L

    def _check_time(self):
        if time.monotonic() > self.deadline:
            raise BudgetError(f"time budget of {self.budget.time_s}s exceeded at B={self.region.B}")

    def blocks(self) -> Iterator[np.ndarray]:
        """Yield ``(m, n)`` int64 coordinate arrays of matches, block by block."""
        L, n = self.L, self.form.n
        if n == 3:
            starts = [0]
            rows = L
        else:
            rows = max(1, _BLOCK_TARGETS // max(L, 1))
            starts = list(range(0, L, rows))
        work = self._fast_block if self.fast else self._slow_block
        if self.budget.threads > 1 and len(starts) > 1:
            with ThreadPoolExecutor(self.budget.threads) as pool:
                yield from pool.map(lambda s: work(s, rows), starts)
        else:
            for s in starts:
                yield work(s, rows)

    def _fast_block(self, start: int, rows: int) -> np.ndarray:
        self._check_time()
        L, n = self.L, self.form.n
        if n == 3:
            left = self.terms[0]
            lidx = [np.arange(L)]
        else:
            stop = min(L, start + rows)
            left = (self.terms[0][start:stop, None] + self.terms[1][None, :]).ravel()
            flat = np.arange(left.size)
            lidx = [start + flat // L, flat % L]
        target = self.N - left
        lo = np.searchsorted(self.sorted, target, "left")
        hi = np.searchsorted(self.sorted, target, "right")
        cnt = hi - lo
        total = int(cnt.sum())
        if total == 0:
            return np.empty((0, n), dtype=np.int64)
        which = np.repeat(np.arange(cnt.size), cnt)
        offs = np.arange(total) - np.repeat(np.cumsum(cnt) - cnt, cnt)
        right = self.order[lo[which] + offs]
        idx = [li[which] for li in lidx] + [right // L, right % L]
        return self.coord[np.stack(idx, axis=1)]

    def _slow_block(self, start: int, rows: int) -> np.ndarray:
        self._check_time()
        k, coeffs, N = self.form.k, self.form.coeffs, self.N
        out = []
        if self.form.n == 3:
            for x in self.values:
                for y, z in self.half.get(N - coeffs[0] * x ** k, ()):
                    out.append((x, y, z))
        else:
            for x1 in self.values[start:start + rows]:
                t1 = coeffs[0] * x1 ** k
                for x2 in self.values:
                    for y, z in self.half.get(N - t1 - coeffs[1] * x2 ** k, ()):
                        out.append((x1, x2, y, z))
        return np.array(out, dtype=np.int64).reshape(-1, self.form.n)


def _special_mask(form: DiagonalForm, N: int, pts: np.ndarray, fast: bool) -> np.ndarray:
    if not fast:
        return np.array([classify(form, N, tuple(map(int, p))).is_special for p in pts], dtype=bool)
    T = np.asarray(form.coeffs, dtype=np.int64) * pts ** form.k
    mask = (T == N).any(axis=1)
    for i, j in itertools.combinations(range(form.n), 2):
        mask |= T[:, i] + T[:, j] == N
    return mask


def _require4(form: DiagonalForm):
    if form.n != 4:
        raise InputError(f"expected a form in 4 variables, got {form.n}")


def enumerate_solutions(form: DiagonalForm, N: int, region: SearchRegion,
                        budget: Budget = DEFAULT_BUDGET) -> List[SolutionRecord]:
    """Every tuple in ``region`` with ``form(x) == N``, classified, in lex order."""
    _require4(form)
    join = _Join(form, N, region, budget)
    pts = [tuple(map(int, p)) for blk in join.blocks() for p in blk]
    pts.sort()
    return [SolutionRecord(p, N, classify(form, N, p)) for p in pts]


def count_representations(form: DiagonalForm, N: int, region: SearchRegion,
                          budget: Budget = DEFAULT_BUDGET) -> CountSummary:
    """Total, special and nonspecial counts without building records."""
    _require4(form)
    join = _Join(form, N, region, budget)
    total = special = 0
    for blk in join.blocks():
        total += len(blk)
        if len(blk):
            special += int(_special_mask(form, N, blk, join.fast).sum())
    return CountSummary(total, special, total - special, form, N, region)


def count_Rk(N: int, k: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Ordered nonnegative solutions of ``x1^k + x2^k + x3^k + x4^k = N``."""
    if N < 1:
        raise InputError("N must be positive")
    if k < 3:
        raise InputError("k must be >= 3")
    B = iroot_floor(N, k)
    form = DiagonalForm(k, (1, 1, 1, 1))
    return count_representations(form, N, SearchRegion(B, Region.NONNEG), budget).total


def count_ternary_nonneg(M: int, k: int) -> int:
    """Ordered nonnegative solutions of ``x1^k + x2^k + x3^k = M``."""
    if M < 0:
        return 0
    B = iroot_floor(M, k)
    powers = {x ** k: x for x in range(B + 1)}
    count = 0
    for x1 in range(B + 1):
        r1 = M - x1 ** k
        for x2 in range(B + 1):
            r2 = r1 - x2 ** k
            if r2 < 0:
                break
            count += r2 in powers
    return count


def count_Rkl(N: int, k: int, l: int) -> int:
    """Nonnegative solutions of ``x1^k + x2^k + x3^k + x4^l = N``, summed over slices ``x4 = a``."""
    if N < 1:
        raise InputError("N must be positive")
    if k < 3 or l < 3:
        raise InputError("k and l must be >= 3")
    total = 0
    for a in range(iroot_floor(N, l) + 1):
        total += count_ternary_nonneg(N - a ** l, k)
    return total


def count_ternary(form: DiagonalForm, M: int, B: int, budget: Budget = DEFAULT_BUDGET) -> Tuple[int, int]:
    """``(all, avoiding)``: signed solutions of a ternary form ``= M`` in ``[-B, B]^3``,
    and those with no single term equal to ``M``."""
    if form.n != 3:
        raise InputError(f"expected a ternary form, got {form.n} variables")
    if M == 0:
        raise InputError("M must be nonzero")
    join = _Join(form, M, SearchRegion(B, Region.SIGNED), budget)
    total = avoiding = 0
    for blk in join.blocks():
        if not len(blk):
            continue
        total += len(blk)
        if join.fast:
            T = np.asarray(form.coeffs, dtype=np.int64) * blk ** form.k
            avoiding += int((~(T == M).any(axis=1)).sum())
        else:
            avoiding += sum(1 for p in blk if M not in form.terms(tuple(map(int, p))))
    return total, avoiding


def count_r0(form: DiagonalForm, M: int, B: int, budget: Budget = DEFAULT_BUDGET) -> int:
    """Signed solutions of a ternary form ``= M`` in ``[-B, B]^3`` with no term equal to ``M``."""
    return count_ternary(form, M, B, budget)[1]
