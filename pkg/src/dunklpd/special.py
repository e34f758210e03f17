"""Special-function evaluations used by the kernel and the function catalog.

Thin wrappers over scipy.special that pin down the domains this package
relies on.  Accuracy targets (checked against integral representations in
the test suite):

  gamma_fn   relative error <= 1e-13 on (0, 170)
  bessel_j   absolute error <= 1e-12 for 0 <= x <= 50, alpha >= -1/2
  bessel_k   relative error <= 1e-10 for 1e-3 <= x <= 50, |alpha| <= 10
"""

from __future__ import annotations

import numpy as np
from scipy import special as sps

from .errors import DomainError


def gamma_fn(x) -> float | np.ndarray:
    """Euler gamma function on the positive half line."""
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0.0) or not np.all(np.isfinite(arr)):
        raise DomainError(f"gamma_fn requires x > 0, got {x!r}")
    out = sps.gamma(arr)
    return float(out) if out.ndim == 0 else out


def bessel_j(alpha: float, x) -> float | np.ndarray:
    """Bessel function of the first kind J_alpha(x) for alpha >= -1/2, x >= 0.

    Half-integer orders reduce to trigonometric closed forms, e.g.
    J_{1/2}(x) = sqrt(2/(pi x)) sin x and J_{-1/2}(x) = sqrt(2/(pi x)) cos x.
    """
    if alpha < -0.5:
        raise DomainError(f"bessel_j requires alpha >= -1/2, got {alpha}")
    arr = np.asarray(x, dtype=float)
    if np.any(arr < 0.0):
        raise DomainError("bessel_j requires x >= 0")
    out = sps.jv(alpha, arr)
    return float(out) if out.ndim == 0 else out


def bessel_k(alpha: float, x) -> float | np.ndarray:
    """Modified Bessel function of the second kind K_alpha(x), x > 0.

    Symmetric in the order: K_alpha = K_{-alpha}.  Equivalent integral forms
    used as oracles in the tests:

      K_alpha(x) = int_0^inf exp(-x cosh t) cosh(alpha t) dt
      K_alpha(r) = r^(-alpha) 2^(alpha-1) int_0^inf u^(alpha-1) e^(-u) e^(-r^2/(4u)) du
    """
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0.0):
        raise DomainError("bessel_k requires x > 0")
    out = sps.kv(alpha, arr)
    return float(out) if out.ndim == 0 else out
