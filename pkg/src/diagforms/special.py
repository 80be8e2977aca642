"""Special solutions, standard lines, Thue equations and primitive counts.

A solution of ``F(x) = N`` is special when one term ``a_i x_i^k`` or the sum
of two terms already equals ``N``. On the projective closure
``-N x_0^k + sum a_i x_i^k = 0`` these are exactly the points on standard
lines, which come from splitting ``{0,...,4}`` into a pair and a triple whose
partial sums both vanish.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from diagforms.errors import InputError
from diagforms.forms import DiagonalForm, SolutionClass, integer_kth_root, iroot_floor


def _require_n(form: DiagonalForm, n: int):
    if form.n != n:
        raise InputError(f"expected a form in {n} variables, got {form.n}")


def classify(form: DiagonalForm, N: int, x: Sequence[int]) -> SolutionClass:
    """Classify a solution of ``form(x) == N``.

    Single terms are checked before pairs and the smallest index (pair) wins.
    """
    terms = form.terms(x)
    if sum(terms) != N:
        raise InputError(f"{tuple(x)} is not a solution: value {sum(terms)} != {N}")
    for i, t in enumerate(terms, 1):
        if t == N:
            return SolutionClass.single(i)
    for (i, ti), (j, tj) in itertools.combinations(enumerate(terms, 1), 2):
        if ti + tj == N:
            return SolutionClass.pair(i, j)
    return SolutionClass.nonspecial()


@dataclass(frozen=True)
class LinePartition:
    """A split ``{0..n} = pair | triple``; index 0 is the homogenising variable."""

    pair: Tuple[int, int]
    triple: Tuple[int, ...]

    def __post_init__(self):
        idx = set(self.pair) | set(self.triple)
        if len(self.pair) != 2 or len(idx) != len(self.pair) + len(self.triple):
            raise InputError(f"not a partition: {self.pair} | {self.triple}")

    def label(self) -> str:
        """``V_i`` or ``W_{i,j}`` name of the affine piece this partition cuts out."""
        if 0 in self.pair:
            return f"V{max(self.pair)}"
        i, j = (t for t in self.triple if t != 0)
        return f"W{i},{j}"


def standard_partitions(n: int = 4) -> List[LinePartition]:
    """All pair/triple splits of ``{0, ..., n}`` (10 of them for n = 4)."""
    full = range(n + 1)
    out = []
    for pair in itertools.combinations(full, 2):
        triple = tuple(i for i in full if i not in pair)
        out.append(LinePartition(pair, triple))
    return out


def standard_line_memberships(form: DiagonalForm, N: int, x: Sequence[int]) -> List[str]:
    """Labels of every ``V_i`` / ``W_{i,j}`` containing ``x`` (empty if none)."""
    _require_n(form, 4)
    k = form.k
    # homogenised coordinates with x_0 = 1 and coefficient -N
    coeffs = (-N,) + form.coeffs
    point = (1,) + tuple(x)
    terms = [c * p ** k for c, p in zip(coeffs, point)]
    hits = []
    for part in standard_partitions(4):
        if sum(terms[i] for i in part.pair) == 0 and sum(terms[i] for i in part.triple) == 0:
            hits.append(part.label())
    return hits


def on_standard_line(form: DiagonalForm, N: int, x: Sequence[int]) -> bool:
    """True iff ``x`` lies in some ``V_i`` or ``W_{i,j}``."""
    return bool(standard_line_memberships(form, N, x))


def degree_thresholds(k: int) -> Tuple[Fraction, Fraction]:
    """Degree gates ``((k+1)/3, (k+3)/6)`` for surfaces and threefolds."""
    if k < 3:
        raise InputError("k must be >= 3")
    return Fraction(k + 1, 3), Fraction(k + 3, 6)


@dataclass
class ThueResult:
    """Solutions of ``a x^k + b y^k = h`` inside ``|x|, |y| <= bound``.

    ``complete`` is True only when the bound provably contains every solution
    (even ``k`` with ``a``, ``b`` of the same sign); otherwise nothing outside
    the box is certified.
    """

    a: int
    b: int
    k: int
    h: int
    bound: int
    solutions: List[Tuple[int, int]]
    complete: bool

    def __len__(self):
        return len(self.solutions)


def _thue_height_bound(a: int, b: int, k: int, h: int):
    # both terms share a sign: |a| |x|^k <= |h|
    if k % 2 == 0 and (a > 0) == (b > 0):
        return max(iroot_floor(abs(h) // abs(a), k), iroot_floor(abs(h) // abs(b), k))
    return None


def solve_thue(a: int, b: int, k: int, h: int, search_bound: int) -> ThueResult:
    """Bounded search for integer solutions of ``a x^k + b y^k = h``."""
    if a == 0 or b == 0 or h == 0:
        raise InputError("a, b and h must be nonzero")
    if k < 3:
        raise InputError("k must be >= 3")
    if search_bound < 0:
        raise InputError("search bound must be >= 0")
    sols = []
    for x in range(-search_bound, search_bound + 1):
        rest = h - a * x ** k
        if rest % b:
            continue
        r = integer_kth_root(rest // b, k)
        if r is None:
            continue
        ys = {r, -r} if k % 2 == 0 else {r}
        sols.extend((x, y) for y in ys if abs(y) <= search_bound)
    hb = _thue_height_bound(a, b, k, h)
    return ThueResult(a, b, k, h, search_bound, sorted(sols), hb is not None and search_bound >= hb)


def omega(h: int) -> int:
    """Number of distinct primes dividing ``|h|`` (trial division)."""
    if h == 0:
        raise InputError("omega(0) is undefined")
    h = abs(h)
    count = 0
    p = 2
    while p * p <= h:
        if h % p == 0:
            count += 1
            while h % p == 0:
                h //= p
        p += 1 if p == 2 else 2
    return count + (h > 1)


@dataclass
class EvertseReport:
    a: int
    b: int
    k: int
    C: float
    search_bound: int
    rows: List[Tuple[int, int, int]] = field(default_factory=list)  # (h, count, omega)
    violations: List[int] = field(default_factory=list)
    max_ratio: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


def _thue_counts(a: int, b: int, k: int, hs: Sequence[int], bound: int) -> Dict[int, int]:
    # one pass over x for all h: look up h - a x^k among the values b y^k
    by: Dict[int, int] = defaultdict(int)
    for y in range(-bound, bound + 1):
        by[b * y ** k] += 1
    counts = dict.fromkeys(hs, 0)
    for x in range(-bound, bound + 1):
        ax = a * x ** k
        for h in hs:
            counts[h] += by.get(h - ax, 0)
    return counts


def evertse_check(a: int, b: int, k: int, hs: Iterable[int], search_bound: int, C: float) -> EvertseReport:
    """Compare bounded Thue counts with ``C^(1 + omega(h))`` for each ``h``."""
    if C <= 1:
        raise InputError("C must exceed 1")
    hs = [h for h in hs]
    if any(h == 0 for h in hs):
        raise InputError("h must be nonzero")
    counts = _thue_counts(a, b, k, hs, search_bound)
    rep = EvertseReport(a, b, k, C, search_bound)
    for h in hs:
        w = omega(h)
        cap = C ** (1 + w)
        c = counts[h]
        rep.rows.append((h, c, w))
        rep.max_ratio = max(rep.max_ratio, c / cap)
        if c > cap:
            rep.violations.append(h)
    return rep


def _zero_form_solutions(form: DiagonalForm, B: int) -> Iterable[Tuple[int, int, int]]:
    """Nonzero triples in ``[-B, B]^3`` on ``form = 0`` (half-table join)."""
    _require_n(form, 3)
    k = form.k
    a1, a2, a3 = form.coeffs
    rng = range(-B, B + 1)
    half: Dict[int, List[Tuple[int, int]]] = defaultdict(list)
    for y in rng:
        ty = a2 * y ** k
        for z in rng:
            half[ty + a3 * z ** k].append((y, z))
    for x in rng:
        for y, z in half.get(-a1 * x ** k, ()):
            if x or y or z:
                yield x, y, z


def _gcd3(x: int, y: int, z: int) -> int:
    return math.gcd(math.gcd(abs(x), abs(y)), abs(z))


def count_zero_form(form: DiagonalForm, B: int, primitive_only: bool = False) -> int:
    """Count nonzero triples in ``[-B, B]^3`` with ``form = 0``."""
    if B < 0:
        raise InputError("B must be >= 0")
    if primitive_only:
        return sum(1 for t in _zero_form_solutions(form, B) if _gcd3(*t) == 1)
    return sum(1 for _ in _zero_form_solutions(form, B))


def primitive_height_profile(form: DiagonalForm, B: int) -> List[int]:
    """``out[b]`` = number of primitive nonzero solutions with max norm ``<= b``, ``b <= B``."""
    hist = [0] * (B + 1)
    for t in _zero_form_solutions(form, B):
        if _gcd3(*t) == 1:
            hist[max(map(abs, t))] += 1
    return list(itertools.accumulate(hist))


def moebius_identity_check(form: DiagonalForm, B: int) -> bool:
    """Check ``total(B) == sum_{d=1..B} primitive(B // d)`` exactly.

    Every nonzero solution is uniquely ``d`` times a primitive one, which is
    the scaling relation the identity expresses.
    """
    if B < 1:
        raise InputError("B must be >= 1")
    total = count_zero_form(form, B)
    prim = primitive_height_profile(form, B)
    return total == sum(prim[B // d] for d in range(1, B + 1))


def moebius_identity_sweep(form: DiagonalForm, B_max: int) -> List[int]:
    """Every ``B <= B_max`` where the identity fails (empty when it always holds).

    One enumeration at ``B_max`` gives the height profiles for all smaller boxes.
    """
    if B_max < 1:
        raise InputError("B must be >= 1")
    allh = [0] * (B_max + 1)
    primh = [0] * (B_max + 1)
    for t in _zero_form_solutions(form, B_max):
        m = max(map(abs, t))
        allh[m] += 1
        if _gcd3(*t) == 1:
            primh[m] += 1
    total = list(itertools.accumulate(allh))
    prim = list(itertools.accumulate(primh))
    return [B for B in range(1, B_max + 1) if total[B] != sum(prim[B // d] for d in range(1, B + 1))]
