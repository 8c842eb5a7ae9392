"""Fully discrete schemes for the time-fractional diffusion-wave equation.

Every scheme shares one update. With ``w^k = u^k - varphi^k`` (``varphi`` the
linear Taylor polynomial of the initial data) and the discrete spatial
operator ``L v = mu d2 v - K2 d1 v - K1 v`` (central differences), level ``n``
solves the tridiagonal system::

    (I - tau^beta theta_0 L) u^n = (I - tau^beta theta_0 L) varphi^n
        - sum_{k<n} alpha_{n-k} w^k + tau^beta sum_{k<n} theta_{n-k} L w^k
        + sum_{k<=n} alpha_{n-k} (L Phi^k + F^k)

Schemes differ only in the ``theta`` sequence.
"""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .exceptions import SingularSystemError
from .flmm import (
    CoefficientKind,
    alpha_coeffs,
    frac_integral_forcing,
    frac_integral_poly,
    theta_coeffs,
)
from .problems import ManufacturedProblem, ProblemSpec

__all__ = [
    "Scheme",
    "Discretization",
    "SolutionHistory",
    "TridiagonalSystem",
    "precompute_tables",
    "assemble_step",
    "thomas_solve",
    "march",
    "l2_error",
    "error_norms",
    "solve",
]

# a level counts as blown up once max|u| exceeds this multiple of the data scale
BLOWUP_FACTOR = 100.0


class Scheme(enum.Enum):
    """Time discretization variants, keyed by their CLI names."""

    I = "I"
    NG = "NG"
    II = "II"
    III1 = "III1"
    III2 = "III2"

    @property
    def theta_kind(self) -> CoefficientKind:
        return _THETA_KIND[self]

    @property
    def allows_reaction_advection(self) -> bool:
        return self in (Scheme.III1, Scheme.III2)

    @classmethod
    def parse(cls, value) -> "Scheme":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value))
        except ValueError:
            names = ", ".join(s.value for s in cls)
            raise ValueError(f"unknown scheme {value!r}; choose from {names}") from None


_THETA_KIND = {
    Scheme.I: CoefficientKind.THETA_TRAP,
    Scheme.NG: CoefficientKind.THETA_NG,
    Scheme.II: CoefficientKind.THETA_MOD_NG,
    Scheme.III1: CoefficientKind.THETA_TRAP,
    Scheme.III2: CoefficientKind.THETA_MOD_NG,
}


@dataclass(frozen=True)
class Discretization:
    N: int
    n_T: int
    h: float
    tau: float
    a: float = 0.0
    T: float = 1.0

    @classmethod
    def for_problem(cls, spec: ProblemSpec, N: int, n_T: int) -> "Discretization":
        N, n_T = int(N), int(n_T)
        if N < 2 or n_T < 2:
            raise ValueError(f"need N >= 2 and n_T >= 2, got N={N}, n_T={n_T}")
        a, b = spec.domain
        return cls(N=N, n_T=n_T, h=(b - a) / N, tau=spec.T / n_T, a=a, T=spec.T)

    @property
    def x(self) -> np.ndarray:
        return self.a + self.h * np.arange(self.N + 1)

    @property
    def t(self) -> np.ndarray:
        return self.tau * np.arange(self.n_T + 1)


@dataclass
class TridiagonalSystem:
    """``sub[i] x[i-1] + diag[i] x[i] + sup[i] x[i+1] = rhs[i]``.

    ``sub[0]`` and ``sup[-1]`` are ignored.
    """

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray

    def to_dense(self) -> np.ndarray:
        m = len(self.diag)
        A = np.diag(self.diag)
        if m > 1:
            A += np.diag(self.sub[1:], -1) + np.diag(self.sup[:-1], 1)
        return A


@dataclass
class SolutionHistory:
    """All time levels of one run plus the tables the update draws on.

    ``u[k, j]`` is the numerical solution at ``(x_j, t_k)``; ``varphi``,
    ``Phi`` and ``F`` share that layout.
    """

    problem: ProblemSpec
    disc: Discretization
    scheme: Scheme
    x: np.ndarray
    t: np.ndarray
    u: np.ndarray
    varphi: np.ndarray
    Phi: np.ndarray
    F: np.ndarray
    alpha: np.ndarray
    theta: np.ndarray
    diverged: bool = False
    first_divergent_level: Optional[int] = None
    # derived per-level data for the convolution sums (interior points only)
    _w: np.ndarray = field(default=None, repr=False)
    _Lw: np.ndarray = field(default=None, repr=False)
    _G: np.ndarray = field(default=None, repr=False)
    _theta_support: int = field(default=0, repr=False)
    _levels_done: int = field(default=0, repr=False)
    _blowup_bound: float = field(default=np.inf, repr=False)

    @property
    def levels_done(self) -> int:
        return self._levels_done

    def spatial_operator(self, v: np.ndarray) -> np.ndarray:
        """``mu d2 v - K2 d1 v - K1 v`` at interior points (last axis)."""
        p, h = self.problem, self.disc.h
        left, mid, right = v[..., :-2], v[..., 1:-1], v[..., 2:]
        out = p.mu * (right - 2.0 * mid + left) / h**2
        if p.K2:
            out -= p.K2 * (right - left) / (2.0 * h)
        if p.K1:
            out -= p.K1 * mid
        return out

    def _record(self, k: int) -> None:
        self._w[k] = self.u[k] - self.varphi[k]
        self._Lw[k] = self.spatial_operator(self._w[k])
        level = self.u[k]
        if not self.diverged and not (
            np.all(np.isfinite(level)) and np.max(np.abs(level)) <= self._blowup_bound
        ):
            self.diverged = True
            self.first_divergent_level = k
        self._levels_done = k + 1


def _spec_of(problem) -> ProblemSpec:
    return problem.spec if isinstance(problem, ManufacturedProblem) else problem


def precompute_tables(problem, disc: Discretization, variant) -> SolutionHistory:
    """Fill ``varphi``, ``Phi`` and ``F`` and set level 0 to the initial data."""
    spec = _spec_of(problem)
    scheme = Scheme.parse(variant)
    if spec.has_reaction_advection and not scheme.allows_reaction_advection:
        raise ValueError(f"scheme {scheme.value} has no reaction/advection terms; use III1 or III2")
    beta = spec.beta
    x, t = disc.x, disc.t
    phi0 = np.broadcast_to(np.asarray(spec.phi0(x), dtype=float), x.shape)
    psi0 = np.broadcast_to(np.asarray(spec.psi0(x), dtype=float), x.shape)
    tt = t[:, None]
    varphi = phi0 + psi0 * tt
    Phi = phi0 * frac_integral_poly(beta, 0.0, tt) + psi0 * frac_integral_poly(beta, 1.0, tt)
    f_samples = np.broadcast_to(np.asarray(spec.f(x[None, :], tt), dtype=float), varphi.shape)
    F = frac_integral_forcing(beta, f_samples, f_samples[0], disc.tau)

    n_T, N = disc.n_T, disc.N
    alpha = alpha_coeffs(beta, n_T).coeffs
    theta = theta_coeffs(scheme.theta_kind, beta, n_T).coeffs
    nonzero = np.nonzero(theta)[0]
    support = int(nonzero[-1]) if len(nonzero) else 0

    u = np.full((n_T + 1, N + 1), np.nan)
    u[0] = phi0
    u[:, 0] = spec.Ua(t)
    u[:, N] = spec.Ub(t)
    hist = SolutionHistory(
        problem=spec,
        disc=disc,
        scheme=scheme,
        x=x,
        t=t,
        u=u,
        varphi=varphi,
        Phi=Phi,
        F=F,
        alpha=alpha,
        theta=theta,
    )
    hist._theta_support = support
    data_scale = max(np.max(np.abs(u[0])), np.max(np.abs(u[:, [0, N]])), 1.0)
    hist._blowup_bound = BLOWUP_FACTOR * data_scale
    hist._w = np.zeros((n_T + 1, N + 1))
    hist._Lw = np.zeros((n_T + 1, N - 1))
    hist._G = hist.spatial_operator(Phi) + F[:, 1:-1]
    hist._record(0)
    return hist


def assemble_step(history: SolutionHistory, n: int, variant=None) -> TridiagonalSystem:
    """Build the tridiagonal system for the interior unknowns of level ``n``.

    Levels ``0 .. n-1`` must already be in ``history``.
    """
    scheme = history.scheme if variant is None else Scheme.parse(variant)
    if scheme.theta_kind is not history.scheme.theta_kind:
        raise ValueError("history tables were built for a different theta sequence")
    if not 1 <= n < history.levels_done + 1:
        raise ValueError(f"cannot assemble level {n}: only {history.levels_done} levels known")
    p, disc = history.problem, history.disc
    h, tau, N = disc.h, disc.tau, disc.N
    tb = tau**p.beta
    alpha, theta = history.alpha, history.theta
    c = tb * theta[0]

    m = N - 1
    lower = -c * (p.mu / h**2 + p.K2 / (2.0 * h))
    upper = -c * (p.mu / h**2 - p.K2 / (2.0 * h))
    centre = 1.0 + c * (2.0 * p.mu / h**2 + p.K1)
    if p.K2 * h / 2.0 > p.mu:
        warnings.warn(
            "K2*h/2 > mu: the step matrix is not diagonally dominant", RuntimeWarning, stacklevel=2
        )

    phi_n = history.varphi[n]
    rhs = phi_n[1:-1] - c * history.spatial_operator(phi_n)
    rhs -= alpha[n:0:-1] @ history._w[:n, 1:-1]
    s = min(n, history._theta_support)
    if s > 0:
        rhs += tb * (theta[s:0:-1] @ history._Lw[n - s : n])
    rhs += alpha[n::-1] @ history._G[: n + 1]

    rhs[0] -= lower * history.u[n, 0]
    rhs[-1] -= upper * history.u[n, N]
    return TridiagonalSystem(
        sub=np.full(m, lower),
        diag=np.full(m, centre),
        sup=np.full(m, upper),
        rhs=rhs,
    )


def thomas_solve(system: TridiagonalSystem) -> np.ndarray:
    """Thomas algorithm (no pivoting)."""
    a = system.sub.tolist()
    b = system.diag.tolist()
    c = system.sup.tolist()
    d = system.rhs.tolist()
    m = len(b)
    if m == 0:
        return np.empty(0)
    tiny = 1e-14 * max(abs(v) for v in b)
    cp = [0.0] * m
    dp = [0.0] * m
    piv = b[0]
    if abs(piv) <= tiny:
        raise SingularSystemError("zero pivot at row 0")
    cp[0] = c[0] / piv
    dp[0] = d[0] / piv
    for i in range(1, m):
        piv = b[i] - a[i] * cp[i - 1]
        if abs(piv) <= tiny:
            raise SingularSystemError(f"zero pivot at row {i}")
        cp[i] = c[i] / piv
        dp[i] = (d[i] - a[i] * dp[i - 1]) / piv
    x = dp
    for i in range(m - 2, -1, -1):
        x[i] = dp[i] - cp[i] * x[i + 1]
    return np.array(x)


def march(problem, disc: Discretization, variant) -> SolutionHistory:
    """Compute levels ``1 .. n_T``.

    Blow-up is not an error. A level that is non-finite, or whose magnitude
    exceeds ``BLOWUP_FACTOR`` times the largest initial/boundary value, sets
    ``diverged``; marching carries on regardless.
    """
    hist = precompute_tables(problem, disc, variant)
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, disc.n_T + 1):
            system = assemble_step(hist, n)
            hist.u[n, 1:-1] = thomas_solve(system)
            hist._record(n)
    return hist


def l2_error(history: SolutionHistory, exact: Optional[Callable] = None, n: int = -1) -> float:
    """``sqrt(h * sum_{j=0}^{N-1} e_j^2)`` at level ``n``."""
    exact = history.problem.exact if exact is None else exact
    if exact is None:
        raise ValueError("no exact solution available")
    n = range(history.disc.n_T + 1)[n]
    e = np.asarray(exact(history.x, history.t[n]), dtype=float) - history.u[n]
    with np.errstate(over="ignore", invalid="ignore"):
        return float(np.sqrt(history.disc.h * np.sum(e[:-1] ** 2)))


def error_norms(history: SolutionHistory, exact: Optional[Callable] = None) -> np.ndarray:
    """L2 error at every level."""
    return np.array([l2_error(history, exact, n) for n in range(history.disc.n_T + 1)])


def solve(problem, N: int, n_T: int, scheme) -> SolutionHistory:
    """Convenience wrapper: build the grid for ``problem`` and march."""
    spec = _spec_of(problem)
    return march(spec, Discretization.for_problem(spec, N, n_T), scheme)
