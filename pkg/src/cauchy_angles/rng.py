"""Seeded random number plumbing.

Everything stochastic in this package flows through a counter-based
Philox generator keyed by a (seed, stream) pair, so results are
reproducible across platforms and independent sub-streams can be split
off without coordination.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1
_GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    # Standard splitmix64 finalizer; bijective on 64-bit ints.
    x = (x + _GOLDEN_GAMMA) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


@dataclass(frozen=True)
class RngSeed:
    """Key for a reproducible generator: master seed plus stream index.

    Both fields must fit in an unsigned 64-bit word.
    """

    seed: int
    stream: int = 0

    def __post_init__(self) -> None:
        for name in ("seed", "stream"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValueError(f"{name} must be an integer")
            if not 0 <= v <= _MASK64:
                raise ValueError(f"{name} must be in [0, 2**64)")

    def child(self, index: int) -> "RngSeed":
        """Derive the index-th sub-stream seed.

        The stream word is mixed through splitmix64 so that child
        streams of nearby indices (and of nearby parent streams) do not
        collide with each other or with the parent.
        """
        if not isinstance(index, int) or isinstance(index, bool) or index < 0:
            raise ValueError("index must be a nonnegative integer")
        mixed = _splitmix64(self.stream ^ (((index + 1) * _GOLDEN_GAMMA) & _MASK64))
        return RngSeed(self.seed, mixed)


def generator(seed: RngSeed) -> np.random.Generator:
    """Philox generator keyed directly by (seed, stream)."""
    key = np.array([seed.seed, seed.stream], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def open_uniform(gen: np.random.Generator, size) -> np.ndarray:
    """Uniform draws strictly inside (0, 1).

    Values are (k + 1/2) / 2**52 for k in [0, 2**52), all exactly
    representable, so neither endpoint can ever be returned and
    tan(pi * (u - 1/2)) stays finite.
    """
    k = gen.integers(0, 1 << 52, size=size, dtype=np.int64)
    return (k + 0.5) * 2.0**-52
