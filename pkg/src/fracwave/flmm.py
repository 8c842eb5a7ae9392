"""Fractional linear multistep coefficients and fractional-integral quadrature.

All sequences are Taylor coefficients of generating functions in ``z``:

* ``alpha(z) = (1 - z)**beta``
* ``theta(z)`` -- one of the three second-order numerators
  (fractional trapezoidal, Newton-Gregory, modified Newton-Gregory)
* ``omega(z) = theta(z) / alpha(z)`` -- the convolution quadrature weights
  for the Riemann-Liouville integral of order ``beta``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exceptions import DegenerateSystemError, DomainError, SingularDeconvolutionError

__all__ = [
    "CoefficientKind",
    "CoefficientSequence",
    "StartingWeightPair",
    "validate_beta",
    "gamma_fn",
    "alpha_coeffs",
    "theta_coeffs",
    "omega_from_ratio",
    "newton_gregory2_weights",
    "starting_weights_forcing",
    "starting_weight_table",
    "frac_integral_poly",
    "frac_integral_forcing",
]

# below this distance from beta=1 the two starting-weight exponents collide
DEGENERATE_BETA_GAP = 1e-6


class CoefficientKind(enum.Enum):
    ALPHA = "alpha"
    THETA_TRAP = "theta_trap"
    THETA_NG = "theta_ng"
    THETA_MOD_NG = "theta_mod_ng"
    OMEGA_TRAP = "omega_trap"
    OMEGA_NG2 = "omega_ng2"


@dataclass(frozen=True)
class CoefficientSequence:
    """Finite prefix ``c_0 .. c_n`` of a generating function's Taylor series."""

    kind: CoefficientKind
    beta: float
    coeffs: np.ndarray

    def __post_init__(self):
        arr = np.array(self.coeffs, dtype=float)
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1


@dataclass(frozen=True)
class StartingWeightPair:
    n: int
    w1: float
    w2: float
    exponents: tuple[float, float]


def validate_beta(beta: float) -> float:
    beta = float(beta)
    if not (1.0 < beta <= 2.0):
        raise DomainError(f"fractional order must satisfy 1 < beta <= 2, got {beta!r}")
    return beta


def gamma_fn(x: float) -> float:
    """Gamma function for positive real arguments."""
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"gamma_fn is defined here for x > 0 only, got {x!r}")
    return math.gamma(x)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@lru_cache(maxsize=64)
def _alpha_array(beta: float, n: int) -> np.ndarray:
    out = np.empty(n + 1)
    out[0] = 1.0
    for k in range(1, n + 1):
        out[k] = out[k - 1] * (k - 1 - beta) / k
    return _frozen(out)


def alpha_coeffs(beta: float, n: int) -> CoefficientSequence:
    """Coefficients of ``(1 - z)**beta``, i.e. ``(-1)**k * binom(beta, k)``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return CoefficientSequence(CoefficientKind.ALPHA, beta, _alpha_array(float(beta), int(n)))


def theta_coeffs(kind: CoefficientKind, beta: float, n: int) -> CoefficientSequence:
    """Numerator coefficients of the three second-order generating functions.

    ``THETA_TRAP`` gives ``2**-beta * (1 + z)**beta``; ``THETA_NG`` gives
    ``1 - beta/2 + beta/2 z``; ``THETA_MOD_NG`` gives
    ``1 - beta/4 + beta/4 z**2``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    beta = float(beta)
    out = np.zeros(n + 1)
    if kind is CoefficientKind.THETA_TRAP:
        alpha = _alpha_array(beta, n)
        signs = np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
        out[:] = 2.0 ** (-beta) * signs * alpha
    elif kind is CoefficientKind.THETA_NG:
        out[0] = 1.0 - beta / 2.0
        if n >= 1:
            out[1] = beta / 2.0
    elif kind is CoefficientKind.THETA_MOD_NG:
        out[0] = 1.0 - beta / 4.0
        if n >= 2:
            out[2] = beta / 4.0
    else:
        raise ValueError(f"{kind} is not a theta kind")
    return CoefficientSequence(kind, beta, out)


_OMEGA_KIND = {
    CoefficientKind.THETA_TRAP: CoefficientKind.OMEGA_TRAP,
    CoefficientKind.THETA_NG: CoefficientKind.OMEGA_NG2,
}


def omega_from_ratio(
    alpha: CoefficientSequence, theta: CoefficientSequence, n: int
) -> CoefficientSequence:
    """Series division: coefficients of ``theta(z) / alpha(z)`` up to ``z**n``.

    Uses the deconvolution recurrence, so ``(alpha * omega)_k == theta_k``
    holds to rounding for every ``k <= n``.
    """
    if len(alpha) < n + 1 or len(theta) < n + 1:
        raise ValueError("input sequences are shorter than the requested length")
    if alpha.coeffs[0] == 0.0:
        raise SingularDeconvolutionError("leading alpha coefficient is zero")
    # extended precision keeps the identity at rounding level for n in the thousands
    a = alpha.coeffs[: n + 1].astype(np.longdouble)
    th = theta.coeffs[: n + 1].astype(np.longdouble)
    om = np.empty(n + 1, dtype=np.longdouble)
    om[0] = th[0] / a[0]
    for m in range(1, n + 1):
        om[m] = (th[m] - np.dot(a[1 : m + 1], om[m - 1 :: -1])) / a[0]
    kind = _OMEGA_KIND.get(theta.kind, theta.kind)
    return CoefficientSequence(kind, alpha.beta, om.astype(float))


@lru_cache(maxsize=64)
def _ng2_array(beta: float, n: int) -> np.ndarray:
    # c_k: coefficients of (1 - z)**(-beta)
    c = np.empty(n + 1)
    c[0] = 1.0
    for k in range(1, n + 1):
        c[k] = c[k - 1] * (k - 1 + beta) / k
    out = (1.0 - beta / 2.0) * c
    out[1:] += (beta / 2.0) * c[:-1]
    return _frozen(out)


def newton_gregory2_weights(beta: float, n: int) -> CoefficientSequence:
    """Second-order generalized Newton-Gregory quadrature weights.

    Coefficients of ``(1 - z)**-beta * (1 - beta/2 + beta/2 z)``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return CoefficientSequence(CoefficientKind.OMEGA_NG2, float(beta), _ng2_array(float(beta), int(n)))


def _starting_exponents(beta: float) -> tuple[float, float]:
    if beta - 1.0 < DEGENERATE_BETA_GAP:
        raise DegenerateSystemError(
            f"starting weights degenerate for beta={beta!r}: exponents 2-beta and 1 coincide"
        )
    return (2.0 - beta, 1.0)


def starting_weight_table(beta: float, n_max: int, omega: CoefficientSequence):
    """Starting weights ``w_{n,1}, w_{n,2}`` for every ``n = 0 .. n_max``.

    Row ``n = 0`` is zero (the integral vanishes at ``t = 0``). Returns two
    arrays of length ``n_max + 1``. The history sum runs over ``k = 0..n``
    with ``0**0 = 1``, which only matters at ``beta = 2``.
    """
    beta = float(beta)
    q1, q2 = _starting_exponents(beta)
    if len(omega) < n_max + 1:
        raise ValueError("omega is shorter than n_max + 1")
    det = 2.0**q2 - 2.0**q1
    if abs(det) < 1e-12:
        raise DegenerateSystemError(f"starting-weight determinant {det:.3e} too small")
    om = omega.coeffs[: n_max + 1]
    k = np.arange(n_max + 1, dtype=float)
    rhs = []
    for q in (q1, q2):
        # 0**0 == 1: at beta=2 the q=0 condition is exactness on the constant
        # including its t=0 sample; for q>0 the k=0 term vanishes anyway
        kq = k**q
        conv = np.convolve(om, kq)[: n_max + 1]
        exact = gamma_fn(q + 1.0) / gamma_fn(q + beta + 1.0) * k ** (q + beta)
        rhs.append(exact - conv)
    r1, r2 = rhs
    # [[1, 2**q1], [1, 2**q2]] @ (w1, w2) = (r1, r2)
    w2 = (r2 - r1) / det
    w1 = r1 - 2.0**q1 * w2
    w1[0] = 0.0
    w2[0] = 0.0
    return w1, w2


def starting_weights_forcing(beta: float, n: int, omega: CoefficientSequence) -> StartingWeightPair:
    """Starting weights making the forcing quadrature exact on ``t**(2-beta)`` and ``t``."""
    if n < 1:
        raise ValueError("starting weights are defined for n >= 1")
    w1, w2 = starting_weight_table(beta, n, omega)
    return StartingWeightPair(n, float(w1[n]), float(w2[n]), _starting_exponents(float(beta)))


def frac_integral_poly(beta: float, nu: float, t):
    """Riemann-Liouville integral of order ``beta`` of ``t**nu``, evaluated at ``t``."""
    coef = gamma_fn(nu + 1.0) / gamma_fn(nu + beta + 1.0)
    return coef * np.power(t, nu + beta)


def frac_integral_forcing(beta: float, f_samples, f0, tau: float) -> np.ndarray:
    """Second-order approximation of ``D^{-beta} f`` at ``t_0 .. t_n``.

    Parameters
    ----------
    beta : float
        Integration order.
    f_samples : array_like, shape (n+1, ...)
        ``f(t_k)`` for ``k = 0..n`` along axis 0; trailing axes are
        independent series (e.g. grid points).
    f0 : array_like
        ``f(0)``, broadcastable against ``f_samples[0]``.
    tau : float
        Time step.

    Returns
    -------
    ndarray
        Same shape as ``f_samples``; row 0 is zero. Exact whenever
        ``f - f0`` lies in ``span{t**(2-beta), t}``.
    """
    beta = float(beta)
    f = np.asarray(f_samples, dtype=float)
    n_max = f.shape[0] - 1
    if n_max < 2:
        raise ValueError("forcing quadrature needs samples at t_0, t_1, t_2 at least")
    diff = f - np.asarray(f0, dtype=float)
    omega = newton_gregory2_weights(beta, n_max)
    w1, w2 = starting_weight_table(beta, n_max, omega)

    # lower-triangular Toeplitz of omega applied along axis 0
    idx = np.arange(n_max + 1)
    lag = idx[:, None] - idx[None, :]
    toeplitz = np.where(lag >= 0, omega.coeffs[np.clip(lag, 0, None)], 0.0)
    flat = diff.reshape(n_max + 1, -1)
    conv = toeplitz @ flat
    conv += w1[:, None] * flat[1] + w2[:, None] * flat[2]

    t = tau * idx
    base = t**beta / gamma_fn(1.0 + beta)
    out = tau**beta * conv.reshape(f.shape)
    out += base.reshape((-1,) + (1,) * (f.ndim - 1)) * np.asarray(f0, dtype=float)
    out[0] = 0.0
    return out
