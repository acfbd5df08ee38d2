"""Continued-fraction chains of Cauchy and arcsine-type laws.

Repeatedly mapping V -> 1/(1 + V) keeps a Cauchy law Cauchy.  Starting
from the standard law, the parameters after n steps are exactly

    a_n = 1 / F(2n+1),    b_n = F(2n) / F(2n+1)

with F the Fibonacci sequence, so b_n climbs to the golden ratio minus
one while a_n collapses to zero: the chain condenses onto the classical
continued-fraction expansion of 1/phi.  A weighted variant
W -> 1/(c + d*W) follows the same algebra with general coefficients.

The squared-seed chain U1 = 1/(1 + C^2), U(n+1) = 1/(1 + U(n)) leaves
Cauchy territory: U1 has the arcsine density on (0, 1), and each
subsequent law is a bounded arcsine-type density supported between two
consecutive Fibonacci ratio convergents.  All parameter arithmetic here
is exact over the rationals; only sampling touches floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

from .cauchy import STANDARD, sample
from .rng import RngSeed

__all__ = [
    "PHI",
    "RationalPair",
    "ChainStepCoeffs",
    "ArcsineChainCoeffs",
    "fibonacci",
    "v_chain_step",
    "v_chain_params",
    "w_chain_step",
    "u_chain_coeffs",
    "u_chain_support",
    "u_chain_density",
    "sample_v_chain",
    "sample_u_chain",
    "golden_gap",
    "golden_gap_within_bound",
]

PHI = (1.0 + math.sqrt(5.0)) / 2.0


def fibonacci(k: int) -> int:
    """F(0) = 0, F(1) = 1, F(k) = F(k-1) + F(k-2); exact for any k >= 0."""
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ValueError("k must be a nonnegative integer")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, float):
        if not math.isfinite(v):
            raise ValueError("value must be finite")
        return Fraction(v)
    if isinstance(v, str):
        return Fraction(v)
    raise ValueError(f"cannot interpret {v!r} as an exact rational")


@dataclass(frozen=True)
class RationalPair:
    """Exact (scale, location) state of a Cauchy chain after n steps.

    n = 0 denotes a seed law that has not been stepped yet.
    """

    a: Fraction
    b: Fraction
    n: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if self.a <= 0:
            raise ValueError("scale a must be > 0")
        if not isinstance(self.n, int) or isinstance(self.n, bool) or self.n < 0:
            raise ValueError("step index n must be >= 0")


@dataclass(frozen=True)
class ChainStepCoeffs:
    """Coefficients (c, d) of one weighted step W -> 1/(c + d*W)."""

    c: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", _as_fraction(self.c))
        object.__setattr__(self, "d", _as_fraction(self.d))
        if self.d == 0:
            raise ValueError("d must be nonzero")


def v_chain_step(state: RationalPair) -> RationalPair:
    """One exact step of V -> 1/(1 + V) on the parameter pair:

        a' = a / ((1 + b)**2 + a**2),    b' = (b + 1) / ((1 + b)**2 + a**2)
    """
    den = (1 + state.b) ** 2 + state.a**2
    if den == 0:
        raise ValueError("chain step hit a parameter pole: (1 + b)**2 + a**2 = 0")
    return RationalPair(state.a / den, (state.b + 1) / den, state.n + 1)


def v_chain_params(n: int) -> RationalPair:
    """Closed form for the standard chain: (1/F(2n+1), F(2n)/F(2n+1))."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    f = fibonacci(2 * n + 1)
    return RationalPair(Fraction(1, f), Fraction(fibonacci(2 * n), f), n)


def w_chain_step(state: RationalPair, k: ChainStepCoeffs) -> RationalPair:
    """One exact weighted step W -> 1/(c + d*W):

        den = (c + d*b)**2 + (d*a)**2
        a'  = |d| * a / den,    b' = (c + d*b) / den

    Reduces to ``v_chain_step`` at c = d = 1.
    """
    den = (k.c + k.d * state.b) ** 2 + (k.d * state.a) ** 2
    if den == 0:
        raise ValueError("chain step hit a parameter pole: (c + d*b)**2 + (d*a)**2 = 0")
    return RationalPair(abs(k.d) * state.a / den, (k.c + k.d * state.b) / den, state.n + 1)


@dataclass(frozen=True)
class ArcsineChainCoeffs:
    """Integer coefficient pair (alpha, beta) of the n-th squared-seed law."""

    alpha: int
    beta: int
    n: int

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "n"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                raise ValueError(f"{name} must be a nonnegative integer")
        if self.n < 1:
            raise ValueError("step index n must be >= 1")


def u_chain_coeffs(n: int) -> ArcsineChainCoeffs:
    """Coefficients after n steps: (1, 0) at n = 1, then
    (alpha, beta) -> (beta, alpha + beta).

    Equivalently alpha_n = F(n-2), beta_n = F(n-1) with F(-1) = 1.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    alpha, beta = 1, 0
    for _ in range(n - 1):
        alpha, beta = beta, alpha + beta
    return ArcsineChainCoeffs(alpha, beta, n)


def u_chain_support(n: int) -> tuple[Fraction, Fraction]:
    """Open support interval of the n-th squared-seed law.

    The endpoints are the consecutive convergents beta/(alpha + beta)
    and (alpha + beta)/(alpha + 2*beta), returned in increasing order;
    their gap is exactly 1/((alpha + beta)*(alpha + 2*beta)).
    """
    k = u_chain_coeffs(n)
    e1 = Fraction(k.beta, k.alpha + k.beta)
    e2 = Fraction(k.alpha + k.beta, k.alpha + 2 * k.beta)
    return (e1, e2) if e1 < e2 else (e2, e1)


def u_chain_density(n: int, u: float) -> float:
    """Density of the n-th squared-seed law at an interior point u.

    With s = (-1)**n the value is 1/(pi * L * sqrt(Q1 * Q2)) where

        L  = s * (beta*u - alpha)
        Q1 = s * (beta - (alpha + beta)*u)
        Q2 = s * ((alpha + 2*beta)*u - (alpha + beta))

    all three strictly positive inside the support.  The linear factors
    are evaluated exactly in rational arithmetic before the final
    rounding, so cancellation near the endpoints costs nothing.
    Raises ValueError outside the open support.
    """
    if not isinstance(u, (int, float)) or isinstance(u, bool) or not math.isfinite(u):
        raise ValueError("u must be a finite real number")
    k = u_chain_coeffs(n)
    lo, hi = u_chain_support(n)
    uf = Fraction(float(u))
    if not lo < uf < hi:
        raise ValueError(f"u = {u!r} lies outside the open support ({lo}, {hi})")
    s = -1 if n % 2 else 1
    lin = s * (k.beta * uf - k.alpha)
    q1 = s * (k.beta - (k.alpha + k.beta) * uf)
    q2 = s * ((k.alpha + 2 * k.beta) * uf - (k.alpha + k.beta))
    return 1.0 / (math.pi * float(lin) * math.sqrt(float(q1 * q2)))


def sample_v_chain(n: int, seed: RngSeed, m: int) -> tuple[np.ndarray, int]:
    """m Monte Carlo draws of the n-th standard chain variable.

    Starts from standard Cauchy draws and applies 1/(1 + v) n times.
    Exact pole hits (a value landing on -1) poison that path with NaN;
    poisoned paths are dropped and counted in the second return value.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError("m must be a positive integer")
    v = sample(STANDARD, seed, m)
    with np.errstate(invalid="ignore"):
        for _ in range(n):
            den = 1.0 + v
            den[den == 0.0] = np.nan
            v = 1.0 / den
    ok = np.isfinite(v)
    return v[ok], int(m - ok.sum())


def _just_inside(edge: Fraction, toward_larger: bool) -> float:
    # Nearest double strictly inside the open interval at this endpoint.
    f = float(edge)
    ef = Fraction(f)
    if toward_larger:
        return f if ef > edge else np.nextafter(f, np.inf)
    return f if ef < edge else np.nextafter(f, -np.inf)


def sample_u_chain(n: int, seed: RngSeed, m: int) -> np.ndarray:
    """m Monte Carlo draws of the n-th squared-seed variable.

    Starts from u = 1/(1 + c**2) with c standard Cauchy (no poles are
    possible) and applies 1/(1 + u) a further n - 1 times.  Floating
    rounding can push an iterate onto or just past an exact support
    endpoint; results are clamped to the nearest doubles strictly
    inside, so every returned value lies in the open support.
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("n must be a positive integer")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise ValueError("m must be a positive integer")
    c = sample(STANDARD, seed, m)
    u = 1.0 / (1.0 + c * c)
    for _ in range(n - 1):
        u = 1.0 / (1.0 + u)
    lo, hi = u_chain_support(n)
    return np.clip(u, _just_inside(lo, True), _just_inside(hi, False))


def _golden_dps(n: int) -> int:
    # The gap shrinks like phi**-(4n+1); keep ~30 guard digits.
    return max(30, int(0.209 * (4 * n + 1)) + 30)


def golden_gap(n: int) -> float:
    """|b_n - (phi - 1)| for the standard chain, evaluated in arbitrary
    precision and rounded once at the end.

    Underflows to 0.0 only when the true gap drops below the smallest
    positive double (around n = 900).
    """
    pair = v_chain_params(n)
    with mp.workdps(_golden_dps(n)):
        b = mp.mpf(pair.b.numerator) / mp.mpf(pair.b.denominator)
        return float(abs(b - (mp.sqrt(5) - 1) / 2))


def golden_gap_within_bound(n: int) -> bool:
    """Whether |b_n - (phi - 1)| < phi**(2 - 4n), decided in arbitrary
    precision so deep chains do not lose the comparison to underflow."""
    pair = v_chain_params(n)
    with mp.workdps(_golden_dps(n)):
        phi = (1 + mp.sqrt(5)) / 2
        b = mp.mpf(pair.b.numerator) / mp.mpf(pair.b.denominator)
        return bool(abs(b - (phi - 1)) < phi ** (2 - 4 * n))
