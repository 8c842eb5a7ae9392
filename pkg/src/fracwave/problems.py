"""Manufactured test problems with closed-form solutions on (0, 1) x (0, 1]."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .flmm import gamma_fn, validate_beta

__all__ = [
    "ProblemSpec",
    "ManufacturedProblem",
    "example1",
    "example2",
    "series_forcing_eval",
    "get_problem",
    "PROBLEMS",
]

SERIES_MAX_TERMS = 200


@dataclass(frozen=True)
class ProblemSpec:
    """Data of ``D^beta U + K1 U + K2 U_x = mu U_xx + f`` with Dirichlet ends.

    All callables must accept numpy arrays and broadcast.
    """

    beta: float
    mu: float
    K1: float
    K2: float
    domain: tuple[float, float]
    T: float
    phi0: Callable
    psi0: Callable
    Ua: Callable
    Ub: Callable
    f: Callable
    exact: Optional[Callable] = None

    def __post_init__(self):
        object.__setattr__(self, "beta", validate_beta(self.beta))
        a, b = self.domain
        if not a < b:
            raise ValueError(f"domain must satisfy a < b, got {self.domain}")
        if self.mu <= 0:
            raise ValueError("mu must be positive")
        if self.K1 < 0 or self.K2 < 0:
            raise ValueError("K1, K2 must be non-negative")
        if self.T <= 0:
            raise ValueError("T must be positive")
        for end, bc in ((a, self.Ua), (b, self.Ub)):
            if abs(float(self.phi0(end)) - float(bc(0.0))) > 1e-12:
                raise ValueError(f"initial and boundary data disagree at x={end}")

    @property
    def has_reaction_advection(self) -> bool:
        return self.K1 > 0 or self.K2 > 0


@dataclass(frozen=True)
class ManufacturedProblem:
    name: str
    spec: ProblemSpec

    @property
    def exact(self) -> Callable:
        return self.spec.exact


def _const_like(x, value):
    return np.full_like(np.asarray(x, dtype=float), value)


def example1(beta: float) -> ManufacturedProblem:
    """``U = (t**(2+beta) + t**2 + t + 2) exp(x)`` with ``mu = 1``, ``K1 = K2 = 0``."""
    beta = validate_beta(beta)
    g_hi = gamma_fn(beta + 3.0) / 2.0
    g_lo = 2.0 / gamma_fn(3.0 - beta)

    def time_part(t):
        t = np.asarray(t, dtype=float)
        return t ** (2.0 + beta) + t**2 + t + 2.0

    def exact(x, t):
        return time_part(t) * np.exp(x)

    def f(x, t):
        t = np.asarray(t, dtype=float)
        caputo = g_hi * t**2 + g_lo * t ** (2.0 - beta)
        return np.exp(x) * (caputo - time_part(t))

    spec = ProblemSpec(
        beta=beta,
        mu=1.0,
        K1=0.0,
        K2=0.0,
        domain=(0.0, 1.0),
        T=1.0,
        phi0=lambda x: 2.0 * np.exp(x),
        psi0=lambda x: np.exp(x),
        Ua=lambda t: time_part(t),
        Ub=lambda t: time_part(t) * math.e,
        f=f,
        exact=exact,
    )
    return ManufacturedProblem("example1", spec)


def series_forcing_eval(x, t, beta: float, tol: float = 1e-15):
    """``x**2 t**(2-beta) sum_k (-x t)**k / Gamma(k + 3 - beta)``.

    This is the Caputo derivative in ``t`` of ``exp(-x t)``. The alternating
    series is summed until ``|term| < tol |partial sum|`` everywhere, for at
    most ``SERIES_MAX_TERMS`` terms.
    """
    x = np.asarray(x, dtype=float)
    t = np.asarray(t, dtype=float)
    z = -x * t
    term = np.ones(np.broadcast(x, t).shape) / gamma_fn(3.0 - beta)
    total = term.copy()
    for k in range(1, SERIES_MAX_TERMS):
        term = term * z / (k + 2.0 - beta)
        total = total + term
        if np.all(np.abs(term) < tol * np.abs(total) + 1e-300):
            break
    out = x**2 * np.power(t, 2.0 - beta) * total
    return out if out.ndim else float(out)


def example2(beta: float) -> ManufacturedProblem:
    """``U = exp(-x t)`` with ``mu = K1 = K2 = 1``."""
    beta = validate_beta(beta)

    def exact(x, t):
        return np.exp(-np.asarray(x, dtype=float) * t)

    def f(x, t):
        e = exact(x, t)
        return series_forcing_eval(x, t, beta) + e - t * e - t**2 * e

    spec = ProblemSpec(
        beta=beta,
        mu=1.0,
        K1=1.0,
        K2=1.0,
        domain=(0.0, 1.0),
        T=1.0,
        phi0=lambda x: _const_like(x, 1.0),
        psi0=lambda x: -np.asarray(x, dtype=float),
        Ua=lambda t: _const_like(t, 1.0),
        Ub=lambda t: np.exp(-np.asarray(t, dtype=float)),
        f=f,
        exact=exact,
    )
    return ManufacturedProblem("example2", spec)


PROBLEMS = {"example1": example1, "example2": example2}


def get_problem(name: str, beta: float) -> ManufacturedProblem:
    try:
        factory = PROBLEMS[name]
    except KeyError:
        raise KeyError(f"unknown problem {name!r}; choose from {sorted(PROBLEMS)}") from None
    return factory(beta)
