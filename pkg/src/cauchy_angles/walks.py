"""Angular random walks driven by Cauchy-distributed tangents.

A walk accumulates signed angles S_n = sum_j Theta_j with each
Theta_j = arctan(C_j) for an independent Cauchy step variable C_j.  The
tangent addition law keeps tan(S_n) Cauchy at every step, with
parameters given by the pairwise fold in ``transforms``.  In the
hyperbolic variant the step angle is the acute angle of a right
triangle with legs eta, eta_hat, for which tan(Theta) =
tanh(eta_hat)/sinh(eta) and the angular defect (the triangle area) has
a closed stable form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .cauchy import CauchyParams, STANDARD, sample
from .rng import RngSeed, generator, open_uniform
from .transforms import arctan_sum_params

__all__ = [
    "EuclideanStepSpec",
    "HyperbolicStep",
    "WalkPath",
    "AnglePair",
    "step_law",
    "euclidean_fold_params",
    "euclidean_walk",
    "euclidean_tangent_ensemble",
    "hyperbolic_angle",
    "hyperbolic_triangle_area",
    "hyperbolic_walk",
    "hyperbolic_tangent_ensemble",
    "uniform_angle_tangent",
]


@dataclass(frozen=True)
class EuclideanStepSpec:
    """One walk step whose tangent is (b + a*C)/d for standard Cauchy C,
    i.e. Cauchy with scale a/d and location b/d."""

    d: float
    a: float
    b: float = 0.0

    def __post_init__(self) -> None:
        for name in ("d", "a"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v <= 0.0:
                raise ValueError(f"{name} must be finite and > 0")
        if not math.isfinite(float(self.b)):
            raise ValueError("b must be finite")


def step_law(spec: EuclideanStepSpec) -> CauchyParams:
    return CauchyParams(spec.a / spec.d, spec.b / spec.d)


@dataclass(frozen=True, eq=False)
class WalkPath:
    """Angles per step, their running sums, and tan of each running sum."""

    angles: np.ndarray
    partial_sums: np.ndarray
    tangents: np.ndarray

    def __post_init__(self) -> None:
        if not (len(self.angles) == len(self.partial_sums) == len(self.tangents)):
            raise ValueError("path arrays must have equal length")


def _path_from_angles(angles: np.ndarray) -> WalkPath:
    sums = np.cumsum(angles)
    return WalkPath(angles=angles, partial_sums=sums, tangents=np.tan(sums))


def euclidean_fold_params(steps: Sequence[EuclideanStepSpec]) -> CauchyParams:
    """Law of tan(S_n) for the given steps, by folding the step laws."""
    return arctan_sum_params([step_law(s) for s in steps])


def _step_angles(laws: Sequence[CauchyParams], seed: RngSeed, m: int) -> np.ndarray:
    # One sub-stream per step index keeps steps independent and makes a
    # single walk the first column of any ensemble with the same seed.
    rows = [np.arctan(sample(law, seed.child(j), m)) for j, law in enumerate(laws)]
    return np.vstack(rows)


def _final_tangent(angles: np.ndarray) -> np.ndarray:
    # Sequential accumulation, same rounding order as cumsum on a single
    # path, so a walk is bitwise the first column of its ensemble.
    total = angles[0].copy()
    for row in angles[1:]:
        total += row
    return np.tan(total)


def euclidean_walk(steps: Sequence[EuclideanStepSpec], seed: RngSeed) -> WalkPath:
    """One sampled walk; angles are arctan of per-step Cauchy draws, so
    each lies in (-pi/2, pi/2)."""
    if len(steps) == 0:
        raise ValueError("need at least one step")
    angles = _step_angles([step_law(s) for s in steps], seed, 1)[:, 0]
    return _path_from_angles(angles)


def euclidean_tangent_ensemble(
    steps: Sequence[EuclideanStepSpec], seed: RngSeed, m: int
) -> np.ndarray:
    """m independent samples of tan(S_n) for the given steps."""
    if len(steps) == 0:
        raise ValueError("need at least one step")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError("m must be a positive integer")
    return _final_tangent(_step_angles([step_law(s) for s in steps], seed, m))


@dataclass(frozen=True)
class HyperbolicStep:
    """Leg lengths (eta, eta_hat) of one hyperbolic right triangle."""

    eta: float
    eta_hat: float

    def __post_init__(self) -> None:
        for name in ("eta", "eta_hat"):
            v = float(getattr(self, name))
            if not math.isfinite(v) or v <= 0.0:
                raise ValueError(f"{name} must be finite and > 0")


class AnglePair(NamedTuple):
    theta: float
    theta_hat: float


def hyperbolic_angle(step: HyperbolicStep) -> AnglePair:
    """Acute angles of the triangle: tan(theta) = tanh(eta_hat)/sinh(eta)
    and symmetrically for theta_hat.  Both lie in (0, pi/2), and for
    eta = eta_hat the shared angle tan(theta) = 1/cosh(eta) never
    exceeds pi/4."""
    theta = math.atan2(math.tanh(step.eta_hat), math.sinh(step.eta))
    theta_hat = math.atan2(math.tanh(step.eta), math.sinh(step.eta_hat))
    return AnglePair(theta, theta_hat)


def hyperbolic_triangle_area(step: HyperbolicStep) -> float:
    """Angular defect pi/2 - theta - theta_hat, evaluated as
    arccot(coth(eta)/sinh(eta_hat) + coth(eta_hat)/sinh(eta)).

    The arccot form avoids cancellation when the defect is tiny (long
    legs) and stays exact for short legs; the result is in (0, pi/2).
    """
    s = 1.0 / (math.tanh(step.eta) * math.sinh(step.eta_hat)) + 1.0 / (
        math.tanh(step.eta_hat) * math.sinh(step.eta)
    )
    return math.atan2(1.0, s)


def hyperbolic_walk(n: int, angle_seed: RngSeed) -> WalkPath:
    """One walk of n signed hyperbolic angles Theta_j = arctan(C_j) with
    independent standard Cauchy C_j, one sub-stream per step."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    angles = _step_angles([STANDARD] * n, angle_seed, 1)[:, 0]
    return _path_from_angles(angles)


def hyperbolic_tangent_ensemble(n: int, seed: RngSeed, m: int) -> np.ndarray:
    """m independent samples of tan(S_n) for the n-step standard walk."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError("m must be a positive integer")
    return _final_tangent(_step_angles([STANDARD] * n, seed, m))


def uniform_angle_tangent(seed: RngSeed, m: int) -> np.ndarray:
    """m samples of tan(Theta1 + Theta2) with the angles independent and
    uniform on (-pi/2, pi/2); the result is standard Cauchy."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError("m must be a positive integer")
    th = np.pi * (open_uniform(generator(seed), (2, m)) - 0.5)
    return np.tan(th[0] + th[1])
