"""Root system data for the sign-flip reflection group Z_2^d on R^d.

The group acts by flipping coordinate signs; the positive roots are the
standard basis vectors, one per axis, each carrying a nonnegative
multiplicity kappa_i.  Everything downstream (weight, kernel, transform)
is parametrized by a MultiplicityConfig built here.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ConfigurationError, DomainError

MAX_DIMENSION = 3


@dataclass(frozen=True)
class Reflection:
    """Sign flip of one coordinate axis.  Axes are numbered 1..d."""

    axis: int

    def __post_init__(self):
        if not isinstance(self.axis, int) or self.axis < 1:
            raise ConfigurationError(f"reflection axis must be a positive integer, got {self.axis!r}")


@dataclass(frozen=True)
class MultiplicityConfig:
    """Dimension, per-axis multiplicities, and derived constants.

    gamma        sum of the multiplicities
    lambda_index gamma + (d - 2)/2, the Hankel-type index of radial reductions
    mehta        normalization constant c = prod_i [2^(k_i+1/2) Gamma(k_i+1/2)]^(-1),
                 the reciprocal of int h^2(x) exp(-|x|^2/2) dx
    """

    dimension: int
    kappa: tuple[float, ...]
    gamma: float
    lambda_index: float
    mehta: float

    def to_json(self) -> str:
        # derived fields are recomputed on load, never serialized
        return json.dumps({"dimension": self.dimension, "kappa": list(self.kappa)})

    @staticmethod
    def from_json(text: str) -> "MultiplicityConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ConfigurationError(f"config is not valid JSON: {exc}") from exc
        if not isinstance(data, dict) or set(data) - {"dimension", "kappa"}:
            raise ConfigurationError("config JSON must be an object with keys 'dimension' and 'kappa'")
        return make_config(data.get("dimension"), data.get("kappa"))


def make_config(dimension: int, kappa: Sequence[float]) -> MultiplicityConfig:
    if not isinstance(dimension, int) or isinstance(dimension, bool):
        raise ConfigurationError(f"dimension must be an integer, got {dimension!r}")
    if dimension < 1:
        raise ConfigurationError(f"dimension must be >= 1, got {dimension}")
    if dimension > MAX_DIMENSION:
        raise ConfigurationError(
            f"dimension {dimension} unsupported: tensor quadrature is capped at d <= {MAX_DIMENSION}"
        )
    try:
        kap = tuple(float(k) for k in kappa)
    except (TypeError, ValueError) as exc:
        raise ConfigurationError(f"kappa must be a sequence of numbers, got {kappa!r}") from exc
    if len(kap) != dimension:
        raise ConfigurationError(f"kappa has length {len(kap)}, expected {dimension}")
    if any(not math.isfinite(k) or k < 0 for k in kap):
        raise ConfigurationError(f"multiplicities must be finite and >= 0, got {kap}")
    gamma = float(sum(kap))
    lam = gamma + (dimension - 2) / 2.0
    mehta = 1.0
    for k in kap:
        mehta /= 2.0 ** (k + 0.5) * math.gamma(k + 0.5)
    return MultiplicityConfig(dimension, kap, gamma, lam, mehta)


def weight(config: MultiplicityConfig, x) -> float | np.ndarray:
    """Group-invariant weight h^2(x) = prod_i |x_i|^(2 kappa_i), with 0^0 = 1.

    Accepts a single point of shape (d,) or a batch of shape (n, d).
    """
    pts = np.asarray(x, dtype=float)
    if pts.shape[-1] != config.dimension:
        raise DomainError(f"point has {pts.shape[-1]} coordinates, config has dimension {config.dimension}")
    out = np.ones(pts.shape[:-1], dtype=float)
    for i, k in enumerate(config.kappa):
        if k != 0.0:
            out = out * np.abs(pts[..., i]) ** (2.0 * k)
    if out.ndim == 0:
        return float(out)
    return out


def reflect(config: MultiplicityConfig, x, reflection: Reflection) -> np.ndarray:
    """Apply the sign flip of the given axis to a point."""
    if reflection.axis > config.dimension:
        raise ConfigurationError(
            f"reflection axis {reflection.axis} out of range for dimension {config.dimension}"
        )
    pts = np.array(x, dtype=float, copy=True)
    pts[..., reflection.axis - 1] *= -1.0
    return pts
