"""Rank-1 Dunkl kernel for Z_2 and its tensor product over axes.

With z = x*y, the kernel at imaginary second argument splits into even and
odd parts,

  E_k(x, -iy) = A_k(z) - i B_k(z)
  A_k(z) = Gamma(k+1/2) (|z|/2)^(1/2-k) J_{k-1/2}(|z|)
  B_k(z) = sign(z) Gamma(k+1/2) (|z|/2)^(1/2-k) J_{k+1/2}(|z|),

and the real-argument kernel E_k(x, y) is the same pair with the Bessel J
replaced by the modified Bessel I (equivalently, the power series without
alternating signs).  Small arguments go through the normalized power
series; beyond the cutoff the Bessel product form is used, with explicit
sine/cosine ladders replacing the generic Bessel routine whenever 2k is an
integer (the ladder is stable there because the cutoff keeps |z| above the
largest order).  At k = 0 they reduce to exp(-i z) and exp(z).  The
d-dimensional kernel is the coordinatewise product.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy import special as sps

from .errors import DomainError
from .root_system import MultiplicityConfig

_SERIES_TERMS = 30
_SERIES_CUTOFF = 6.0
_LADDER_MAX_KAPPA = 8.0


def _check_kappa(kappa: float) -> float:
    k = float(kappa)
    if not math.isfinite(k) or k < 0.0:
        raise DomainError(f"multiplicity must be finite and >= 0, got {kappa!r}")
    return k


@lru_cache(maxsize=128)
def _series_coeffs(kappa: float) -> tuple[np.ndarray, np.ndarray]:
    g = math.gamma(kappa + 0.5)
    even = np.empty(_SERIES_TERMS)
    odd = np.empty(_SERIES_TERMS)
    for m in range(_SERIES_TERMS):
        fact = math.factorial(m)
        even[m] = g / (fact * math.gamma(m + kappa + 0.5))
        odd[m] = g / (fact * math.gamma(m + kappa + 1.5))
    return even, odd


def _bessel_pair_ladder(kappa: float, az: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(J_{k-1/2}(az), J_{k+1/2}(az)) by forward recurrence, for az above
    the series cutoff so every order stays below the argument."""
    target = kappa + 0.5
    if (round(2.0 * kappa)) % 2 == 1:
        lo, hi = sps.j0(az), sps.j1(az)
        order = 1.0
    else:
        pref = np.sqrt(2.0 / (np.pi * az))
        lo, hi = pref * np.cos(az), pref * np.sin(az)
        order = 0.5
    while order < target - 0.25:
        lo, hi = hi, (2.0 * order / az) * hi - lo
        order += 1.0
    return lo, hi


def _parts(kappa: float, z: np.ndarray, modified: bool) -> tuple[np.ndarray, np.ndarray]:
    """(even, odd) parts of the rank-1 kernel as functions of z = x*y."""
    z = np.asarray(z, dtype=float)
    if kappa == 0.0:
        return (np.cosh(z), np.sinh(z)) if modified else (np.cos(z), np.sin(z))
    even = np.empty_like(z)
    odd = np.empty_like(z)
    ce, co = _series_coeffs(kappa)
    if not modified:
        signs = (-1.0) ** np.arange(_SERIES_TERMS)
        ce = ce * signs
        co = co * signs
    ladder = not modified and kappa <= _LADDER_MAX_KAPPA and (2.0 * kappa).is_integer()
    cutoff = max(_SERIES_CUTOFF, 2.0 * kappa + 2.0) if ladder else _SERIES_CUTOFF
    small = np.abs(z) <= cutoff
    if small.any():
        zs = z[small] / 2.0
        q = zs * zs
        even[small] = np.polynomial.polynomial.polyval(q, ce)
        odd[small] = zs * np.polynomial.polynomial.polyval(q, co)
    big = ~small
    if big.any():
        az = np.abs(z[big])
        pref = math.gamma(kappa + 0.5) * (az / 2.0) ** (0.5 - kappa)
        if ladder:
            lo, hi = _bessel_pair_ladder(kappa, az)
        elif modified and kappa == 0.5:
            lo, hi = sps.i0(az), sps.i1(az)
        else:
            fn = sps.iv if modified else sps.jv
            lo, hi = fn(kappa - 0.5, az), fn(kappa + 0.5, az)
        even[big] = pref * lo
        odd[big] = np.sign(z[big]) * pref * hi
    return even, odd


def _phase_1d(kappa: float, z: np.ndarray, sign: int) -> np.ndarray:
    """E_k(x, sign * i * y) on an array of products z = x*y."""
    even, odd = _parts(kappa, z, modified=False)
    return even + 1j * sign * odd


def _real_1d(kappa: float, z: np.ndarray) -> np.ndarray:
    even, odd = _parts(kappa, z, modified=True)
    return even + odd


def _real_1d_scaled(kappa: float, z: np.ndarray) -> np.ndarray:
    """exp(-|z|) * E_k(x, y) on z = x*y, safe for large arguments."""
    z = np.asarray(z, dtype=float)
    out = np.empty_like(z)
    small = np.abs(z) <= _SERIES_CUTOFF
    if small.any():
        out[small] = np.exp(-np.abs(z[small])) * _real_1d(kappa, z[small])
    big = ~small
    if big.any():
        az = np.abs(z[big])
        pref = math.gamma(kappa + 0.5) * (az / 2.0) ** (0.5 - kappa)
        out[big] = pref * (sps.ive(kappa - 0.5, az) + np.sign(z[big]) * sps.ive(kappa + 0.5, az))
    return out


def kernel_1d(kappa: float, x: float, y: float) -> complex:
    """Rank-1 kernel E_kappa(x, -iy); |value| <= 1 for real x, y."""
    k = _check_kappa(kappa)
    return complex(_phase_1d(k, np.asarray(float(x) * float(y)), -1))


def kernel_real_1d(kappa: float, x: float, y: float) -> float:
    """Rank-1 kernel at real arguments, E_kappa(x, y); positive."""
    k = _check_kappa(kappa)
    return float(_real_1d(k, np.asarray(float(x) * float(y))))


def _point_pair(config: MultiplicityConfig, x, y) -> tuple[np.ndarray, np.ndarray]:
    xa = np.asarray(x, dtype=float).reshape(-1)
    ya = np.asarray(y, dtype=float).reshape(-1)
    if xa.shape != (config.dimension,) or ya.shape != (config.dimension,):
        raise DomainError(
            f"points must have shape ({config.dimension},), got {np.shape(x)} and {np.shape(y)}"
        )
    return xa, ya


def kernel_nd(config: MultiplicityConfig, x, y) -> complex:
    """Product kernel E_kappa(x, -iy) = prod_i E_{kappa_i}(x_i, -i y_i)."""
    xa, ya = _point_pair(config, x, y)
    val = complex(1.0)
    for i, k in enumerate(config.kappa):
        val *= complex(_phase_1d(k, np.asarray(xa[i] * ya[i]), -1))
    return val


def kernel_real_nd(config: MultiplicityConfig, x, y) -> float:
    """Product kernel at real arguments, E_kappa(x, y)."""
    xa, ya = _point_pair(config, x, y)
    val = 1.0
    for i, k in enumerate(config.kappa):
        val *= float(_real_1d(k, np.asarray(xa[i] * ya[i])))
    return val


def dunkl_operator_1d(kappa: float, f: Callable[[float], complex], x: float, h: float = 0.01) -> complex:
    """Rank-1 Dunkl operator T f(x) = f'(x) + kappa * (f(x) - f(-x)) / x.

    The derivative is a Richardson-extrapolated central difference with
    steps h and h/2 (error O(h^4)).  Satisfies the eigenrelation
    T E(., -iy)(x) = -iy E(x, -iy).
    """
    k = _check_kappa(kappa)
    xv = float(x)
    if xv == 0.0:
        raise DomainError("dunkl_operator_1d is undefined at x = 0 (reflection difference quotient)")
    if not (h > 0.0) or not math.isfinite(h):
        raise DomainError(f"step h must be positive and finite, got {h}")
    eval_f = getattr(f, "evaluate_scalar", f)

    def central(step):
        return (eval_f(xv + step) - eval_f(xv - step)) / (2.0 * step)

    deriv = (4.0 * central(h / 2.0) - central(h)) / 3.0
    return deriv + k * (eval_f(xv) - eval_f(-xv)) / xv
