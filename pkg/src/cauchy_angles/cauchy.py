"""Cauchy distribution primitives.

The density with scale a > 0 and location b is

    f(x) = a / (pi * ((x - b)**2 + a**2))

and the characteristic function is exp(i*b*t - a*|t|).  Sampling goes
through the quantile map b + a*tan(pi*(u - 1/2)) applied to uniforms
drawn strictly inside (0, 1); a second, algorithmically unrelated
sampler uses the planar Brownian hitting representation x + y*G1/G2
with independent standard normals G1, G2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rng import RngSeed, generator, open_uniform

__all__ = [
    "CauchyParams",
    "STANDARD",
    "density",
    "cdf",
    "quantile",
    "char_fn",
    "sample",
    "sample_brownian_hitting",
]


@dataclass(frozen=True)
class CauchyParams:
    """Scale/location pair identifying one Cauchy law."""

    scale: float
    location: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "scale", float(self.scale))
        object.__setattr__(self, "location", float(self.location))
        if not math.isfinite(self.scale) or self.scale <= 0.0:
            raise ValueError("scale must be finite and > 0")
        if not math.isfinite(self.location):
            raise ValueError("location must be finite")


STANDARD = CauchyParams(1.0, 0.0)


def _as_finite_array(x, name: str) -> np.ndarray:
    arr = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must be finite")
    return arr


def _match(x, arr: np.ndarray):
    return float(arr) if np.isscalar(x) or np.ndim(x) == 0 else arr


def density(p: CauchyParams, x) -> float | np.ndarray:
    """Density a / (pi * ((x - b)**2 + a**2)); strictly positive."""
    xa = _as_finite_array(x, "x")
    out = p.scale / (np.pi * ((xa - p.location) ** 2 + p.scale**2))
    return _match(x, out)


def cdf(p: CauchyParams, x) -> float | np.ndarray:
    """Distribution function 1/2 + arctan((x - b)/a)/pi.

    Accepts +-inf and maps them to exactly 1 and 0.
    """
    xa = np.asarray(x, dtype=float)
    if np.any(np.isnan(xa)):
        raise ValueError("x must not contain NaN")
    out = 0.5 + np.arctan((xa - p.location) / p.scale) / np.pi
    return _match(x, out)


def quantile(p: CauchyParams, q) -> float | np.ndarray:
    """Inverse CDF b + a*tan(pi*(q - 1/2)) for q strictly in (0, 1).

    The tangent argument is clamped one epsilon inside +-pi/2 so the
    result is always finite; quantile(p, 0.5) is exactly the location.
    """
    qa = np.asarray(q, dtype=float)
    if not np.all(np.isfinite(qa)) or np.any(qa <= 0.0) or np.any(qa >= 1.0):
        raise ValueError("q must lie strictly inside (0, 1)")
    cap = 0.5 * np.pi - np.finfo(float).eps
    arg = np.clip(np.pi * (qa - 0.5), -cap, cap)
    out = p.location + p.scale * np.tan(arg)
    return _match(q, out)


def char_fn(p: CauchyParams, t) -> complex | np.ndarray:
    """Characteristic function exp(i*b*t - a*|t|)."""
    ta = _as_finite_array(t, "t")
    out = np.exp(1j * p.location * ta - p.scale * np.abs(ta))
    return complex(out) if np.isscalar(t) or np.ndim(t) == 0 else out


def sample(p: CauchyParams, seed: RngSeed, n: int) -> np.ndarray:
    """n inverse-CDF draws; every value is finite."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    u = open_uniform(generator(seed), n)
    return p.location + p.scale * np.tan(np.pi * (u - 0.5))


def sample_brownian_hitting(x: float, y: float, seed: RngSeed, n: int) -> np.ndarray:
    """Draws from the law of the abscissa where planar Brownian motion
    started at (x, y), y > 0, first hits the horizontal axis.

    That law is Cauchy with scale y and location x, realised here as
    x + y * G1/G2 with independent standard normals, a route that never
    touches the inverse CDF.
    """
    x = float(x)
    y = float(y)
    if not math.isfinite(x) or not math.isfinite(y) or y <= 0.0:
        raise ValueError("need finite x and y > 0")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    g = generator(seed).standard_normal((2, n))
    # P(G2 == 0.0) is vanishingly small but not structurally impossible;
    # redraw any such pair deterministically from the same stream.
    bad = g[1] == 0.0
    while np.any(bad):
        g[:, bad] = generator(seed.child(1)).standard_normal((2, int(bad.sum())))
        bad = g[1] == 0.0
    return x + y * g[0] / g[1]
