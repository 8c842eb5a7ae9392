"""Von Neumann stability diagnostics for the multistep schemes."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .flmm import CoefficientKind, alpha_coeffs, gamma_fn, theta_coeffs, validate_beta
from .solver import Scheme

__all__ = [
    "FourierSymbol",
    "ABnDiagnostic",
    "Verdict",
    "StabilityReport",
    "fourier_symbol",
    "theta_generating_function",
    "boundary_locus",
    "negative_axis_bound",
    "cfl_ratio",
    "an_bn",
    "probe_trajectory",
    "empirical_stability_probe",
    "stability_report",
]

PROBE_BOUND = 1e3
POLE = complex(np.inf, 0.0)


@dataclass(frozen=True)
class FourierSymbol:
    sigma: float
    S_star: complex


@dataclass(frozen=True)
class ABnDiagnostic:
    n: int
    A_n: float
    B_n: float


class Verdict(enum.Enum):
    STABLE = "Stable"
    CONDITIONALLY_STABLE = "ConditionallyStable"
    UNSTABLE = "Unstable"


@dataclass(frozen=True)
class StabilityReport:
    scheme: Scheme
    beta: float
    verdict: Verdict
    locus: np.ndarray
    r: Optional[float] = None
    negative_axis_bound: float = -np.inf

    def render(self) -> str:
        lines = [f"scheme:  {self.scheme.value}", f"beta:    {self.beta:g}"]
        if self.r is not None:
            lines.append(f"r:       {self.r:.4f}")
        verdict = self.verdict.value
        if self.verdict is Verdict.CONDITIONALLY_STABLE:
            verdict += " (stable iff 0 < r <= 1)"
        lines.append(f"verdict: {verdict}")
        finite = self.locus[np.isfinite(self.locus)]
        n_poles = len(self.locus) - len(finite)
        lines.append(
            f"locus:   {len(self.locus)} samples, {n_poles} pole(s), "
            f"min Re = {finite.real.min():.5e}, max |Im| = {np.abs(finite.imag).max():.5e}"
        )
        if np.isfinite(self.negative_axis_bound):
            lines.append(f"stable on negative real axis for S* in [{self.negative_axis_bound:.5e}, 0)")
        else:
            lines.append("stable on the whole negative real axis")
        return "\n".join(lines)


def fourier_symbol(mu, K1, K2, tau, h, beta, sigma) -> FourierSymbol:
    """Amplification symbol of the spatial operator times ``tau**beta``.

    ``S* = -(4 mu tau^b / h^2) sin^2(sigma h / 2) - K1 tau^b - i (K2 tau^b / h) sin(sigma h)``
    """
    tb = tau**beta
    s_half = math.sin(sigma * h / 2.0)
    real = -4.0 * mu * tb / h**2 * s_half**2 - K1 * tb
    imag = -K2 * tb / h * math.sin(sigma * h)
    return FourierSymbol(float(sigma), complex(real, imag))


def theta_generating_function(scheme, beta: float, z):
    """Closed form of ``theta(z)`` for the given scheme."""
    kind = Scheme.parse(scheme).theta_kind
    z = np.asarray(z, dtype=complex)
    if kind is CoefficientKind.THETA_TRAP:
        return 2.0 ** (-beta) * (1.0 + z) ** beta
    if kind is CoefficientKind.THETA_NG:
        return 1.0 - beta / 2.0 + beta / 2.0 * z
    return 1.0 - beta / 4.0 + beta / 4.0 * z**2


def boundary_locus(variant, beta: float, samples: int = 1024) -> np.ndarray:
    """``alpha(z) / theta(z)`` at ``z = exp(2 pi i k / samples)``.

    Zeros of ``theta`` are returned as ``POLE`` (complex infinity).
    """
    if samples < 8:
        raise ValueError("need at least 8 samples")
    beta = validate_beta(beta)
    phi = 2.0 * np.pi * np.arange(samples) / samples
    z = np.exp(1j * phi)
    z[0] = 1.0
    if samples % 2 == 0:
        z[samples // 2] = -1.0
    alpha = (1.0 - z) ** beta
    theta = theta_generating_function(variant, beta, z)
    out = np.empty(samples, dtype=complex)
    pole = np.abs(theta) < 1e-14
    out[pole] = POLE
    out[~pole] = alpha[~pole] / theta[~pole]
    return out


def negative_axis_bound(locus: np.ndarray) -> float:
    """Most negative real-axis crossing of a sampled closed locus, or ``-inf``.

    ``-inf`` means the sampled curve never meets the negative real axis at a
    finite point.
    """
    pts = np.asarray(locus)
    crossings = []
    m = len(pts)
    for k in range(m):
        p, q = pts[k], pts[(k + 1) % m]
        if not (np.isfinite(p) and np.isfinite(q)):
            continue
        if p.imag == 0.0 and p.real < 0.0:
            crossings.append(p.real)
        elif p.imag * q.imag < 0.0:
            s = p.imag / (p.imag - q.imag)
            x = p.real + s * (q.real - p.real)
            if x < 0.0:
                crossings.append(x)
    return min(crossings) if crossings else -np.inf


def cfl_ratio(mu, beta, tau, h) -> float:
    """``r = mu (beta - 1) tau^beta / (2^(beta - 2) h^2)``; Newton-Gregory is stable iff ``0 < r <= 1``."""
    if tau <= 0 or h <= 0:
        raise ValueError("tau and h must be positive")
    return mu * (beta - 1.0) * tau**beta / (2.0 ** (beta - 2.0) * h**2)


def an_bn(variant, beta: float, n: int) -> ABnDiagnostic:
    """Initial-data residual sums ``A_n`` and ``B_n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    scheme = Scheme.parse(variant)
    alpha = alpha_coeffs(beta, n).coeffs
    theta = theta_coeffs(scheme.theta_kind, beta, n).coeffs
    # the terms grow like n**(beta+1) and cancel almost completely; extended
    # precision keeps the rounding floor well below the O(1/n) values
    ld = np.longdouble
    k = np.arange(n + 1, dtype=ld)
    rev = alpha[::-1].astype(ld)
    A = np.dot(rev, k ** ld(beta)) / ld(gamma_fn(beta + 1.0)) - theta.astype(ld).sum()
    B = np.dot(rev, k ** ld(beta + 1.0)) / ld(gamma_fn(beta + 2.0)) - np.dot(theta[::-1].astype(ld), k)
    return ABnDiagnostic(n, float(A), float(B))


def probe_trajectory(variant, beta: float, S_star, n_steps: int) -> np.ndarray:
    """Iterate the scalar Fourier-mode recurrence with ``rho^0 = d_0 = tau = 1``.

    Returns ``rho^0 .. rho^{n_steps}``.
    """
    scheme = Scheme.parse(variant)
    alpha = alpha_coeffs(beta, n_steps).coeffs
    theta = theta_coeffs(scheme.theta_kind, beta, n_steps).coeffs
    S = complex(S_star)
    dtype = complex if S.imag else float
    S = S if S.imag else S.real
    rho = np.zeros(n_steps + 1, dtype=dtype)
    rho[0] = 1.0
    k = np.arange(n_steps + 1, dtype=float)
    denom = alpha[0] - S * theta[0]
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, n_steps + 1):
            ab = an_bn(scheme, beta, n)
            hist = rho[:n] - 1.0 - k[:n]
            val = alpha[0] * (1.0 + n) - np.dot(alpha[n:0:-1], hist)
            val += S * (np.dot(theta[n:0:-1], rho[:n]) + ab.A_n + ab.B_n)
            rho[n] = val / denom
    return rho


def empirical_stability_probe(variant, beta: float, S_star, n_steps: int) -> bool:
    """True when the scalar recurrence stays within ``PROBE_BOUND`` over ``n_steps``."""
    if n_steps < 16:
        raise ValueError("n_steps must be at least 16")
    rho = probe_trajectory(variant, beta, S_star, n_steps)
    return bool(np.all(np.isfinite(rho)) and np.max(np.abs(rho)) <= PROBE_BOUND)


def stability_report(
    variant,
    beta: float,
    mu: float = 1.0,
    tau: Optional[float] = None,
    h: Optional[float] = None,
    samples: int = 1024,
) -> StabilityReport:
    scheme = Scheme.parse(variant)
    beta = validate_beta(beta)
    locus = boundary_locus(scheme, beta, samples)
    bound = negative_axis_bound(locus)
    r = None
    if scheme is Scheme.NG:
        if tau is None or h is None:
            verdict = Verdict.CONDITIONALLY_STABLE
        else:
            r = cfl_ratio(mu, beta, tau, h)
            verdict = Verdict.STABLE if 0.0 < r <= 1.0 else Verdict.UNSTABLE
    else:
        verdict = Verdict.STABLE
    return StabilityReport(scheme, beta, verdict, locus, r, bound)
