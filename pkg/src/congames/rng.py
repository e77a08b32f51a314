"""Seeded random-number streams.

All stochastic operations in this package accept a ``rng`` argument that may
be an integer seed, an :class:`RngSpec`, or a ready ``numpy.random.Generator``.
Identical (seed, stream) pairs always reproduce identical sample sequences.
Distinct stream ids give statistically independent streams, which is how
world sampling, adversary-weight sampling, and strategy randomization are
kept disjoint so that common-random-number comparisons are possible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

# Reserved stream ids for the three independent sources of randomness.
WORLD_STREAM = 0
OMEGA_STREAM = 1
ACTION_A_STREAM = 2
ACTION_B_STREAM = 3


@dataclass(frozen=True)
class RngSpec:
    """A reproducible stream: 64-bit seed plus a stream id."""

    seed: int
    stream: int = 0

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.stream,))
        return np.random.default_rng(ss)

    def with_stream(self, stream: int) -> "RngSpec":
        return RngSpec(self.seed, stream)


def as_generator(rng) -> np.random.Generator:
    """Coerce an int seed, RngSpec, or Generator into a Generator."""
    if isinstance(rng, np.random.Generator):
        return rng
    if isinstance(rng, RngSpec):
        return rng.generator()
    if isinstance(rng, (int, np.integer)):
        return RngSpec(int(rng)).generator()
    raise TypeError(f"cannot interpret {rng!r} as a random generator")


def substreams(rng, count: int) -> list[np.random.Generator]:
    """Derive `count` disjoint child generators deterministically."""
    return as_generator(rng).spawn(count)
