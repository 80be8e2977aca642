"""Diagonal forms, exact evaluation and integer k-th roots.

Everything here works on Python integers, so no input size overflows.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from diagforms.errors import InputError


@dataclass(frozen=True)
class DiagonalForm:
    """The form ``a_1 x_1^k + ... + a_n x_n^k`` with 2 <= n <= 4."""

    k: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if int(self.k) != self.k or self.k < 3:
            raise InputError(f"degree k must be an integer >= 3, got {self.k}")
        object.__setattr__(self, "k", int(self.k))
        if not 2 <= len(coeffs) <= 4:
            raise InputError(f"need 2 to 4 coefficients, got {len(coeffs)}")
        if any(a == 0 for a in coeffs):
            raise InputError(f"coefficients must be nonzero, got {coeffs}")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def terms(self, x: Sequence[int]) -> Tuple[int, ...]:
        """The individual summands ``a_i x_i^k``."""
        if len(x) != self.n:
            raise InputError(f"expected {self.n} coordinates, got {len(x)}")
        k = self.k
        return tuple(a * int(xi) ** k for a, xi in zip(self.coeffs, x))

    def __call__(self, x: Sequence[int]) -> int:
        return sum(self.terms(x))

    def __str__(self):
        parts = []
        for i, a in enumerate(self.coeffs, 1):
            parts.append(f"{a}*x{i}^{self.k}")
        return " + ".join(parts)


def evaluate(form: DiagonalForm, x: Sequence[int]) -> int:
    """Return ``sum(a_i * x_i**k)`` exactly."""
    return form(x)


class Region(str, enum.Enum):
    SIGNED = "signed"
    NONNEG = "nonneg"


@dataclass(frozen=True)
class SearchRegion:
    """The box ``[-B, B]^n`` (signed) or ``[0, B]^n`` (nonneg)."""

    B: int
    mode: Region = Region.SIGNED

    def __post_init__(self):
        if int(self.B) != self.B or self.B < 0:
            raise InputError(f"box radius B must be a nonnegative integer, got {self.B}")
        object.__setattr__(self, "B", int(self.B))
        object.__setattr__(self, "mode", Region(self.mode))

    @property
    def lo(self) -> int:
        return -self.B if self.mode is Region.SIGNED else 0

    def values(self) -> range:
        return range(self.lo, self.B + 1)

    def __contains__(self, x) -> bool:
        return all(self.lo <= xi <= self.B for xi in x)


@dataclass(frozen=True, order=True)
class SolutionClass:
    """Classification of a solution.

    ``kind`` is ``"nonspecial"``, ``"single"`` or ``"pair"``; ``indices`` holds
    the 1-based coordinate index (single) or index pair (pair).
    """

    kind: str
    indices: Tuple[int, ...] = ()

    NONSPECIAL = "nonspecial"
    SINGLE = "single"
    PAIR = "pair"

    @classmethod
    def nonspecial(cls) -> "SolutionClass":
        return cls(cls.NONSPECIAL)

    @classmethod
    def single(cls, i: int) -> "SolutionClass":
        return cls(cls.SINGLE, (i,))

    @classmethod
    def pair(cls, i: int, j: int) -> "SolutionClass":
        return cls(cls.PAIR, (i, j))

    @property
    def is_special(self) -> bool:
        return self.kind != self.NONSPECIAL

    def __str__(self):
        if self.kind == self.NONSPECIAL:
            return "nonspecial"
        return f"special-{self.kind}(" + ",".join(map(str, self.indices)) + ")"

    @classmethod
    def parse(cls, text: str) -> "SolutionClass":
        if text == "nonspecial":
            return cls.nonspecial()
        head, _, rest = text.partition("(")
        kind = head.removeprefix("special-")
        return cls(kind, tuple(int(t) for t in rest.rstrip(")").split(",")))


@dataclass(frozen=True)
class SolutionRecord:
    x: Tuple[int, ...]
    value: int
    cls: SolutionClass


# floats carry ~53 bits; above this the float seed is replaced by a bit-length seed
_FLOAT_SEED_LIMIT = 1 << 1000


def iroot_floor(a: int, k: int) -> int:
    """Largest integer ``r >= 0`` with ``r**k <= a`` for ``a >= 0``."""
    if a < 0:
        raise InputError("iroot_floor needs a >= 0")
    if k < 1:
        raise InputError("root degree must be >= 1")
    if a < 2 or k == 1:
        return a
    if k == 2:
        return math.isqrt(a)
    if a < _FLOAT_SEED_LIMIT:
        x = int(a ** (1.0 / k)) + 2
    else:
        x = 1 << (a.bit_length() // k + 1)
    # Newton from above is monotone once x >= true root
    while x ** k <= a:
        x <<= 1
    while True:
        y = ((k - 1) * x + a // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x ** k > a:
        x -= 1
    while (x + 1) ** k <= a:
        x += 1
    return x


def integer_kth_root(v: int, k: int) -> Optional[int]:
    """Exact k-th root of ``v`` or ``None``.

    Odd ``k`` accepts either sign. Even ``k`` only has the nonnegative root of
    ``v >= 0``; a negative ``v`` gives ``None`` rather than raising, since this
    is probed in hot loops.
    """
    if k < 1:
        raise InputError("root degree must be >= 1")
    if v < 0:
        if k % 2 == 0:
            return None
        r = iroot_floor(-v, k)
        return -r if r ** k == -v else None
    r = iroot_floor(v, k)
    return r if r ** k == v else None
