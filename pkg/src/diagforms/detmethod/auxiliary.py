"""Auxiliary forms: degree-``delta`` forms vanishing on a given point set."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from diagforms.detmethod.linalg import integer_kernel_vector, rank
from diagforms.detmethod.monomials import Exponent, monomials_of_degree
from diagforms.errors import InputError, RankError


def _mono(e: Exponent, x: Sequence[int]) -> int:
    out = 1
    for xi, t in zip(x, e):
        out *= xi ** t
    return out


@dataclass(frozen=True)
class AuxiliaryForm:
    delta: int
    coefficients: Dict[Exponent, int]   # nonzero entries only, graded-lex order

    def __call__(self, x: Sequence[int]) -> int:
        return sum(c * _mono(e, x) for e, c in self.coefficients.items())

    def __str__(self):
        parts = []
        for e, c in self.coefficients.items():
            mono = "*".join(f"x{i}^{t}" if t > 1 else f"x{i}" for i, t in enumerate(e, 1) if t)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts).replace("+ -", "- ")


def evaluation_matrix(points: Sequence[Sequence[int]], delta: int) -> Tuple[List[Exponent], List[List[int]]]:
    """Monomials of degree ``delta`` and the ``s x J`` matrix of their values at the points."""
    monos = monomials_of_degree(4, delta)
    return monos, [[_mono(e, p) for p in points] for e in monos]


def auxiliary_form(points: Sequence[Sequence[int]], delta: int) -> AuxiliaryForm:
    """A primitive integer form of degree ``delta`` vanishing at every point.

    Solves ``c^T A = 0`` for the evaluation matrix ``A`` by fraction-free
    elimination of ``A^T``. The coefficient vector has gcd 1 and its first
    nonzero entry in graded-lex order is positive.
    Raises :class:`RankError` when ``A`` has full row rank ``s``.
    """
    if not points:
        raise InputError("need at least one point")
    if delta < 1:
        raise InputError("delta must be >= 1")
    pts = [tuple(int(v) for v in p) for p in points]
    if any(len(p) != 4 for p in pts):
        raise InputError("points must have 4 coordinates")
    monos, A = evaluation_matrix(pts, delta)
    At = [list(col) for col in zip(*A)]    # J x s
    v = integer_kernel_vector(At)
    if v is None:
        raise RankError(rank(At), len(monos))
    lead = next(t for t in v if t)
    if lead < 0:
        v = [-t for t in v]
    return AuxiliaryForm(delta, {e: c for e, c in zip(monos, v) if c})
