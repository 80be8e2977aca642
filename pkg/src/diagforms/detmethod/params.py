"""Parameter selection for the auxiliary-form construction, and exponent formulas.

``alpha`` ties the cube side to the height: ``(M0*M)^alpha = N^-1 (B/2)^k``.
``lambda`` is pinned so that ``2k/alpha = 16/(3 sqrt(3k)) + eps`` exactly.
The degree ``delta`` is the smallest one for which the determinant exponent

    beta = s*delta - (f/alpha) * (k - log N / log B)

drops below -1. Here ``s`` and ``f`` are the exact monomial count and
tetrahedron sum, not their asymptotic forms.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Tuple

from diagforms.detmethod.tetra import nu_from_s, s_from_delta, tetra_count_sum
from diagforms.errors import ParameterError

MAX_DELTA = 20000


def auxiliary_exponent(k: int) -> float:
    """Exponent ``16/(3 sqrt(3k))`` of ``B`` in the count of auxiliary forms."""
    return 16 / (3 * math.sqrt(3 * k))


def exponent_main(k: int) -> float:
    """Epsilon-free exponent of ``B`` bounding the nonspecial count."""
    if k < 3:
        raise ParameterError("k must be >= 3")
    return auxiliary_exponent(k) + max(2 / math.sqrt(k), 1 / math.sqrt(k) + 6 / (k + 3))


def exponent_ternary(k: int) -> float:
    """Exponent ``2/sqrt(k)`` for ternary solutions avoiding special terms."""
    return 2 / math.sqrt(k)


def exponent_Rk(k: int) -> float:
    """Exponent of ``N`` bounding sums of four nonnegative k-th powers."""
    return 1 / k + 2 / k ** 1.5


def exponent_Rkl(k: int, l: int) -> float:
    return 1 / l + 2 / k ** 1.5


def exponent_bigN(k: int, tau: float) -> Tuple[float, float]:
    """Epsilon-free ``(B exponent of the form count, N exponent)`` when ``N <= B^(k - tau)``."""
    return auxiliary_exponent(k), 24 / (3 * tau) ** 1.5 - 16 / (3 * k) ** 1.5


@dataclass(frozen=True)
class ParameterSelection:
    k: int
    eps: float
    N: int
    B: float
    M0: int
    t: float                   # effective degree in alpha; equals k unless N grows with B
    lam: float
    alpha: float
    M: float
    M_int: int
    delta: int
    s: int
    nu: int
    fsum: Fraction
    beta: float
    leading_coefficient: float
    predicted_exponent: float  # of B in the number of auxiliary forms
    main_exponent: float       # that plus the surface/curve contribution
    N_exponent: Optional[float] = None
    tau: Optional[float] = None

    def to_dict(self) -> dict:
        d = asdict(self)
        d["fsum"] = str(self.fsum)
        return d

    def alpha_identity_residual(self) -> float:
        """``(M0*M)^alpha * N / (B/2)^k - 1`` evaluated in log space."""
        logv = self.alpha * math.log(self.M0 * self.M) + math.log(self.N) - self.k * math.log(self.B / 2)
        return math.expm1(logv)


def beta_exact(delta: int, alpha: float, k: int, N: int, B: float) -> Tuple[float, int, int, Fraction]:
    """``(beta, s, nu, f)`` at degree ``delta``, with ``s`` and ``f`` exact."""
    s = s_from_delta(delta)
    nu = nu_from_s(s, alpha)
    _, f = tetra_count_sum(nu - 1, alpha)
    return _beta(s, delta, f, alpha, k, N, B), s, nu, f


def _beta(s, delta, f, alpha, k, N, B) -> float:
    height = k - math.log(N) / math.log(B)
    # f can be huge; divide in exact arithmetic before converting
    return float(s * delta - f / Fraction(alpha) * Fraction(height))


def leading_coefficient(alpha: float, k: int, N: int, B: float) -> float:
    """Coefficient of ``delta^4`` in the asymptotic expansion of ``beta``."""
    return 1 / 6 - (k - math.log(N) / math.log(B)) / (8 * alpha ** (2 / 3))


def beta_asymptotic(delta: int, alpha: float, k: int, N: int, B: float) -> float:
    return leading_coefficient(alpha, k, N, B) * delta ** 4


def _select_delta(alpha, k, N, B, max_delta):
    lc = leading_coefficient(alpha, k, N, B)
    if lc >= 0:
        raise ParameterError(
            f"leading coefficient {lc:.6g} of beta is not negative; "
            f"B is too small relative to N for these parameters"
        )
    nu = 0
    for delta in range(1, max_delta + 1):
        s = s_from_delta(delta)
        nu = nu_from_s(s, alpha, start=nu)
        _, f = tetra_count_sum(nu - 1, alpha)
        beta = _beta(s, delta, f, alpha, k, N, B)
        if beta < -1:
            return delta, s, nu, f, beta, lc
    raise ParameterError(f"beta stayed >= -1 for every delta <= {max_delta}")


def _check_common(k, eps, N, B, M0):
    if k < 3:
        raise ParameterError("k must be >= 3")
    if not eps > 0:
        raise ParameterError("eps must be positive")
    if N < 1:
        raise ParameterError("N must be >= 1")
    if B < 2:
        raise ParameterError("B must be >= 2")
    if M0 < 1:
        raise ParameterError("M0 must be >= 1")


def _lambda_for(t: float, eps: float) -> float:
    c = auxiliary_exponent(t)
    return eps / (c + eps)


def _M(alpha, k, N, B, M0) -> float:
    return math.exp(-math.log(M0) - math.log(N) / alpha + (k / alpha) * math.log(B / 2))


def select_parameters(k: int, eps: float, N: int, B: float, M0: int = 1,
                      max_delta: int = MAX_DELTA) -> ParameterSelection:
    """Parameters for fixed ``N``: ``alpha = (1 - lambda)(3k/4)^(3/2)``."""
    _check_common(k, eps, N, B, M0)
    lam = _lambda_for(k, eps)
    alpha = (1 - lam) * (3 * k / 4) ** 1.5
    if alpha <= 1:
        raise ParameterError(f"(1 - lambda)(3k/4)^(3/2) = {alpha:.6g} <= 1; eps too large for k={k}")
    M = _M(alpha, k, N, B, M0)
    delta, s, nu, f, beta, lc = _select_delta(alpha, k, N, B, max_delta)
    return ParameterSelection(
        k=k, eps=eps, N=N, B=B, M0=M0, t=float(k), lam=lam, alpha=alpha,
        M=M, M_int=max(1, math.floor(M)), delta=delta, s=s, nu=nu, fsum=f, beta=beta,
        leading_coefficient=lc,
        predicted_exponent=auxiliary_exponent(k) + eps,
        main_exponent=exponent_main(k) + eps,
    )


def select_parameters_bigN(k: int, tau: float, eps: float, N: int, B: float, M0: int = 1,
                           max_delta: int = MAX_DELTA) -> ParameterSelection:
    """Parameters when ``N <= B^(k - tau)`` may grow with ``B``.

    ``alpha`` uses ``t = k - log N / log B``, clamped to ``[tau, k]``, in place
    of ``k``.
    """
    if not 4 / 3 < tau < k:
        raise ParameterError(f"need 4/3 < tau < k, got tau={tau}, k={k}")
    _check_common(k, eps, N, B, M0)
    if math.log(N) > (k - tau) * math.log(B) * (1 + 1e-12):
        raise ParameterError(f"N={N} exceeds B^(k - tau) = {B}^{k - tau}")
    t = min(float(k), max(float(tau), k - math.log(N) / math.log(B)))
    lam = _lambda_for(t, eps)
    if lam >= 0.5:
        raise ParameterError(f"lambda = {lam:.6g} must stay below 1/2; reduce eps")
    alpha = (1 - lam) * (3 * t / 4) ** 1.5
    if alpha <= 1:
        raise ParameterError(f"(1 - lambda)(3t/4)^(3/2) = {alpha:.6g} <= 1")
    M = _M(alpha, k, N, B, M0)
    delta, s, nu, f, beta, lc = _select_delta(alpha, k, N, B, max_delta)
    b_exp, n_exp = exponent_bigN(k, tau)
    return ParameterSelection(
        k=k, eps=eps, N=N, B=B, M0=M0, t=t, lam=lam, alpha=alpha,
        M=M, M_int=max(1, math.floor(M)), delta=delta, s=s, nu=nu, fsum=f, beta=beta,
        leading_coefficient=lc,
        predicted_exponent=b_exp + eps,
        main_exponent=exponent_main(k) + eps,
        N_exponent=n_exp, tau=tau,
    )
